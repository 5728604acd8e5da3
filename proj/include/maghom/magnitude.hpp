#pragma once

#include "maghom/graph.hpp"
#include "maghom/integer.hpp"

#include <string>
#include <vector>

namespace maghom {

/// Power series in q with exact rational coefficients, truncated after
/// `order()` terms.
class PowerSeries {
 public:
  PowerSeries() = default;
  explicit PowerSeries(std::size_t order) : coefficients_(order) {}
  explicit PowerSeries(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients)) {}

  std::size_t order() const { return coefficients_.size(); }
  const Rational& operator[](std::size_t i) const { return coefficients_.at(i); }
  Rational& operator[](std::size_t i) { return coefficients_.at(i); }
  const std::vector<Rational>& coefficients() const { return coefficients_; }

  bool has_integer_coefficients() const;
  /// Coefficients as integers; throws ConsistencyError if any is not integral.
  std::vector<Integer> integer_coefficients() const;

  PowerSeries truncated(std::size_t order) const;
  /// Multiplicative inverse; the constant term must be nonzero.
  PowerSeries inverse() const;

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.coefficients_ == b.coefficients_; }

  /// "16 - 96q + 432q^2 + O(q^3)".
  std::string to_string() const;

 private:
  std::vector<Rational> coefficients_;
};

/// numerator / denominator with integer polynomial coefficients (index = power).
struct RationalFunction {
  std::vector<Integer> numerator;
  std::vector<Integer> denominator;

  /// Long division; requires denominator[0] != 0.
  PowerSeries expand(std::size_t order) const;
  std::string to_string() const;

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;
};

inline constexpr std::size_t kDefaultSeriesOrder = 8;

/// Sum of the entries of Z^{-1}, Z_{uv} = q^{d(u,v)}, via the Neumann series of
/// Z = I + N truncated to `order` terms.
PowerSeries magnitude_series(const Graph& g, std::size_t order = kDefaultSeriesOrder);
PowerSeries magnitude_series(const DistanceMatrix& d, std::size_t order = kDefaultSeriesOrder);

/// |V| / sum_x q^{d(a,x)}. Requires every vertex to have the same distance
/// profile; throws PreconditionError naming two vertices that differ.
RationalFunction speyer_magnitude(const Graph& g, Vertex basepoint = 0);

/// Number of generators of MC_{k,l}: sequences with distinct consecutive
/// vertices and length l.
Integer generator_count(const DistanceMatrix& d, int k, int l);

/// sum_k (-1)^k |I_{k,l}|.
Integer chain_euler(const Graph& g, int l);
Integer chain_euler(const DistanceMatrix& d, int l);

}  // namespace maghom
