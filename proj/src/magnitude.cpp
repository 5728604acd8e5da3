#include "maghom/magnitude.hpp"

#include "maghom/error.hpp"

#include <sstream>

namespace maghom {

namespace {

std::string term(const Rational& c, std::size_t power, bool first) {
  std::ostringstream out;
  Rational magnitude = c < 0 ? Rational(-c) : c;
  if (!first) out << (c < 0 ? " - " : " + ");
  else if (c < 0) out << "-";
  const bool unit = magnitude == 1;
  if (!unit || power == 0) out << magnitude.str();
  if (power >= 1) out << "q";
  if (power >= 2) out << "^" << power;
  return out.str();
}

std::string polynomial_string(const std::vector<Integer>& coefficients) {
  std::string out;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (coefficients[i] == 0) continue;
    out += term(Rational(coefficients[i]), i, out.empty());
  }
  return out.empty() ? "0" : out;
}

}  // namespace

bool PowerSeries::has_integer_coefficients() const {
  for (const auto& c : coefficients_)
    if (boost::multiprecision::denominator(c) != 1) return false;
  return true;
}

std::vector<Integer> PowerSeries::integer_coefficients() const {
  std::vector<Integer> out;
  out.reserve(coefficients_.size());
  for (const auto& c : coefficients_) {
    if (boost::multiprecision::denominator(c) != 1) {
      throw ConsistencyError("series coefficient " + c.str() + " is not an integer");
    }
    out.push_back(boost::multiprecision::numerator(c));
  }
  return out;
}

PowerSeries PowerSeries::truncated(std::size_t order) const {
  std::vector<Rational> c(order);
  for (std::size_t i = 0; i < std::min(order, coefficients_.size()); ++i) c[i] = coefficients_[i];
  return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::inverse() const {
  if (coefficients_.empty() || coefficients_[0] == 0) {
    throw PreconditionError("power series with zero constant term is not invertible");
  }
  const std::size_t n = order();
  std::vector<Rational> inv(n);
  inv[0] = 1 / coefficients_[0];
  for (std::size_t i = 1; i < n; ++i) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= i; ++j) acc += coefficients_[j] * inv[i - j];
    inv[i] = -acc * inv[0];
  }
  return PowerSeries(std::move(inv));
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  PowerSeries out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] + b[i];
  return out;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  PowerSeries out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] - b[i];
  return out;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  PowerSeries out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j) out[i + j] += a[i] * b[j];
  return out;
}

std::string PowerSeries::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    if (coefficients_[i] == 0) continue;
    out += term(coefficients_[i], i, out.empty());
  }
  if (out.empty()) out = "0";
  out += " + O(q";
  if (order() != 1) out += "^" + std::to_string(order());
  return out + ")";
}

PowerSeries RationalFunction::expand(std::size_t order) const {
  if (denominator.empty() || denominator[0] == 0) {
    throw PreconditionError("denominator has zero constant term");
  }
  std::vector<Rational> num(order), den(order);
  for (std::size_t i = 0; i < order; ++i) {
    if (i < numerator.size()) num[i] = Rational(numerator[i]);
    if (i < denominator.size()) den[i] = Rational(denominator[i]);
  }
  std::vector<Rational> quotient(order);
  for (std::size_t i = 0; i < order; ++i) {
    Rational rest = num[i];
    for (std::size_t j = 1; j <= i; ++j) rest -= den[j] * quotient[i - j];
    quotient[i] = rest / den[0];
  }
  return PowerSeries(std::move(quotient));
}

std::string RationalFunction::to_string() const {
  return "(" + polynomial_string(numerator) + ")/(" + polynomial_string(denominator) + ")";
}

PowerSeries magnitude_series(const Graph& g, std::size_t order) { return magnitude_series(apsp(g), order); }

PowerSeries magnitude_series(const DistanceMatrix& d, std::size_t order) {
  if (order == 0) throw UsageError("series order must be at least 1");
  const std::size_t n = d.size();
  // term[v][p]: coefficient of q^p in ((-N)^i 1)_v.
  std::vector<std::vector<Integer>> term(n, std::vector<Integer>(order, 0));
  for (auto& row : term) row[0] = 1;
  std::vector<Integer> total(order, 0);
  for (std::size_t i = 0; i < order; ++i) {
    for (const auto& row : term)
      for (std::size_t p = 0; p < order; ++p) total[p] += row[p];
    if (i + 1 == order) break;
    std::vector<std::vector<Integer>> next(n, std::vector<Integer>(order, 0));
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) {
        if (u == v) continue;
        const auto shift = static_cast<std::size_t>(d(static_cast<Vertex>(u), static_cast<Vertex>(v)));
        for (std::size_t p = 0; p + shift < order; ++p) next[u][p + shift] -= term[v][p];
      }
    }
    term = std::move(next);
  }
  std::vector<Rational> coefficients(total.begin(), total.end());
  return PowerSeries(std::move(coefficients));
}

RationalFunction speyer_magnitude(const Graph& g, Vertex basepoint) {
  const DistanceMatrix d = apsp(g);
  const auto n = static_cast<Vertex>(g.vertex_count());
  if (basepoint < 0 || basepoint >= n) throw UsageError("basepoint out of range");
  const std::vector<int> reference = d.profile(basepoint);
  for (Vertex v = 0; v < n; ++v) {
    if (d.profile(v) != reference) {
      throw PreconditionError("distance profiles of vertices " + g.label(basepoint) + " and " + g.label(v) +
                              " differ");
    }
  }
  RationalFunction f;
  f.numerator = {Integer(n)};
  f.denominator.assign(static_cast<std::size_t>(d.diameter()) + 1, 0);
  for (int dist : reference) f.denominator[static_cast<std::size_t>(dist)] += 1;
  return f;
}

Integer generator_count(const DistanceMatrix& d, int k, int l) {
  if (k < 0 || l < 0) return 0;
  const std::size_t n = d.size();
  const auto len = static_cast<std::size_t>(l);
  // ways[length][v]: sequences with the current number of steps ending at v.
  std::vector<std::vector<Integer>> ways(len + 1, std::vector<Integer>(n, 0));
  for (std::size_t v = 0; v < n; ++v) ways[0][v] = 1;
  for (int step = 0; step < k; ++step) {
    std::vector<std::vector<Integer>> next(len + 1, std::vector<Integer>(n, 0));
    for (std::size_t used = 0; used <= len; ++used) {
      for (std::size_t v = 0; v < n; ++v) {
        if (ways[used][v] == 0) continue;
        for (std::size_t w = 0; w < n; ++w) {
          if (w == v) continue;
          const auto total = used + static_cast<std::size_t>(d(static_cast<Vertex>(v), static_cast<Vertex>(w)));
          if (total <= len) next[total][w] += ways[used][v];
        }
      }
    }
    ways = std::move(next);
  }
  Integer count = 0;
  for (const auto& c : ways[len]) count += c;
  return count;
}

Integer chain_euler(const Graph& g, int l) { return chain_euler(apsp(g), l); }

Integer chain_euler(const DistanceMatrix& d, int l) {
  Integer sum = 0;
  for (int k = 0; k <= l; ++k) {
    Integer c = generator_count(d, k, l);
    if (k % 2 == 0) sum += c;
    else sum -= c;
  }
  return sum;
}

}  // namespace maghom
