#include "maghom/table.hpp"

#include "maghom/error.hpp"
#include "maghom/rules.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <iomanip>
#include <sstream>
#include <thread>

namespace maghom {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

struct Method {
  bool morse = false;
  std::string rule;
};

Method parse_method(std::string_view method) {
  if (method == "naive") return {};
  constexpr std::string_view prefix = "morse:";
  if (method.starts_with(prefix) && method.size() > prefix.size())
    return {true, std::string(method.substr(prefix.size()))};
  throw UsageError("unknown method '" + std::string(method) + "' (expected naive or morse:<rule>)");
}

std::vector<HomologyGroup> slice_homology(const DistanceMatrix& d, int l, const MatchingRule* rule,
                                          const TableOptions& options, SliceStats& stats) {
  auto t0 = Clock::now();
  auto slice = magnitude_slice(d, l, options.cap);
  stats.l = l;
  stats.full_dims = slice.complex.dims;
  stats.build_seconds = seconds_since(t0);
  if (!rule) {
    stats.reduced_dims = stats.full_dims;
    auto t1 = Clock::now();
    auto h = complex_homology(slice.complex);
    stats.homology_seconds = seconds_since(t1);
    stats.zero_differentials = std::all_of(slice.complex.differentials.begin(), slice.complex.differentials.end(),
                                           [](const SparseIntegerMatrix& m) { return m.is_zero(); });
    return h;
  }
  auto t1 = Clock::now();
  auto matching = generate_matching(*rule, slice);
  if (auto v = validate_matching(slice.complex, matching); !v)
    throw ConsistencyError("rule " + rule->name + " at l=" + std::to_string(l) + ": " + v.message);
  if (auto w = check_acyclic(slice.complex, matching))
    throw PreconditionError("rule " + rule->name + " is not Morse at l=" + std::to_string(l) + ": " +
                            format_witness(slice, *w));
  auto reduced = reduce(slice.complex, matching);
  stats.reduce_seconds = seconds_since(t1);
  stats.reduced_dims = reduced.complex.dims;
  stats.zero_differentials = std::all_of(reduced.complex.differentials.begin(), reduced.complex.differentials.end(),
                                         [](const SparseIntegerMatrix& m) { return m.is_zero(); });
  auto t2 = Clock::now();
  auto h = complex_homology(reduced.complex);
  stats.homology_seconds = seconds_since(t2);
  if (options.cross_check && h != complex_homology(slice.complex))
    throw ConsistencyError("reduced complex disagrees with the full complex at l=" + std::to_string(l));
  return h;
}

}  // namespace

const HomologyGroup& HomologyTable::at(int k, int l) const {
  if (!contains(k, l))
    throw UsageError("MH_{" + std::to_string(k) + "," + std::to_string(l) + "} outside the table");
  return rows[static_cast<std::size_t>(l)][static_cast<std::size_t>(k)];
}

std::size_t HomologyTable::rank(int k, int l) const { return contains(k, l) ? at(k, l).rank : 0; }

bool HomologyTable::torsion_free() const {
  for (const auto& row : rows)
    for (const auto& h : row)
      if (!h.torsion.empty()) return false;
  return true;
}

Integer HomologyTable::euler_characteristic(int l) const {
  Integer sum = 0;
  for (int k = 0; k <= l; ++k) {
    Integer r = rank(k, l);
    sum += k % 2 == 0 ? r : Integer(-r);
  }
  return sum;
}

HomologyTable mh_table(const Graph& g, int lmax, const TableOptions& options, std::vector<SliceStats>* stats) {
  if (lmax < 0) throw UsageError("lmax must be non-negative");
  if (options.cap < 1) throw UsageError("generator cap must be at least 1");
  const Method method = parse_method(options.method);
  g.require_connected();
  const auto d = apsp(g);
  std::optional<MatchingRule> rule;
  if (method.morse) rule = make_rule(method.rule, g);

  const auto slices = static_cast<std::size_t>(lmax) + 1;
  std::vector<std::vector<HomologyGroup>> rows(slices);
  std::vector<SliceStats> slice_stats(slices);
  std::vector<std::exception_ptr> errors(slices);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t l; (l = next.fetch_add(1)) < slices;) {
      try {
        rows[l] = slice_homology(d, static_cast<int>(l), rule ? &*rule : nullptr, options, slice_stats[l]);
      } catch (...) {
        errors[l] = std::current_exception();
      }
    }
  };
  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, slices));
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(work);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  HomologyTable t;
  t.graph = g.name();
  t.method = options.method;
  t.lmax = lmax;
  t.rows = std::move(rows);
  for (int l = 0; l <= lmax; ++l) t.rows[static_cast<std::size_t>(l)].resize(static_cast<std::size_t>(l) + 1);
  if (stats) *stats = std::move(slice_stats);
  return t;
}

HomologyTable mh_table(const Graph& g, int lmax, std::string_view method) {
  TableOptions options;
  options.method = std::string(method);
  return mh_table(g, lmax, options);
}

std::string table_to_json(const HomologyTable& t) {
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (int l = 0; l <= t.lmax; ++l)
    for (int k = 0; k <= l; ++k) {
      const auto& h = t.at(k, l);
      nlohmann::ordered_json torsion = nlohmann::ordered_json::array();
      for (const auto& f : h.torsion) {
        if (fits_int64(f))
          torsion.push_back(static_cast<std::int64_t>(f));
        else
          torsion.push_back(f.str());
      }
      entries.push_back({{"k", k}, {"l", l}, {"rank", h.rank}, {"torsion", torsion}});
    }
  nlohmann::ordered_json j;
  j["graph"] = t.graph;
  j["method"] = t.method;
  j["lmax"] = t.lmax;
  j["entries"] = std::move(entries);
  return j.dump(2);
}

HomologyTable table_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed table JSON: ") + e.what());
  }
  try {
    HomologyTable t;
    t.graph = j.at("graph").get<std::string>();
    t.method = j.at("method").get<std::string>();
    int lmax = -1;
    for (const auto& e : j.at("entries")) lmax = std::max(lmax, e.at("l").get<int>());
    if (j.contains("lmax")) lmax = j["lmax"].get<int>();
    t.lmax = lmax;
    t.rows.resize(static_cast<std::size_t>(lmax + 1));
    for (int l = 0; l <= lmax; ++l) t.rows[static_cast<std::size_t>(l)].resize(static_cast<std::size_t>(l) + 1);
    for (const auto& e : j.at("entries")) {
      const int k = e.at("k").get<int>(), l = e.at("l").get<int>();
      if (!t.contains(k, l)) throw UsageError("entry outside 0 <= k <= l <= lmax");
      auto& h = t.rows[static_cast<std::size_t>(l)][static_cast<std::size_t>(k)];
      h.rank = e.at("rank").get<std::size_t>();
      for (const auto& f : e.at("torsion"))
        h.torsion.push_back(f.is_string() ? Integer(f.get<std::string>()) : Integer(f.get<std::int64_t>()));
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed table JSON: ") + e.what());
  }
}

std::string format_group(const HomologyGroup& h) {
  if (h.is_zero()) return ".";
  std::string s = std::to_string(h.rank);
  for (const auto& f : h.torsion) s += "+Z/" + f.str();
  return s;
}

std::string format_table_pretty(const HomologyTable& t) {
  std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(t.lmax + 1));
  std::size_t width = std::to_string(t.lmax).size();
  for (int l = 0; l <= t.lmax; ++l)
    for (int k = 0; k <= l; ++k) {
      cells[static_cast<std::size_t>(l)].push_back(format_group(t.at(k, l)));
      width = std::max(width, cells[static_cast<std::size_t>(l)].back().size());
    }
  std::ostringstream out;
  out << t.graph << "  [" << t.method << "]\n";
  out << std::setw(4) << "l\\k";
  for (int k = 0; k <= t.lmax; ++k) out << ' ' << std::setw(static_cast<int>(width)) << k;
  out << '\n';
  for (int l = 0; l <= t.lmax; ++l) {
    out << std::setw(4) << l;
    for (const auto& c : cells[static_cast<std::size_t>(l)]) out << ' ' << std::setw(static_cast<int>(width)) << c;
    out << '\n';
  }
  return out.str();
}

std::string format_table_csv(const HomologyTable& t) {
  std::ostringstream out;
  out << "k,l,rank,torsion\n";
  for (int l = 0; l <= t.lmax; ++l)
    for (int k = 0; k <= l; ++k) {
      const auto& h = t.at(k, l);
      out << k << ',' << l << ',' << h.rank << ',';
      for (std::size_t i = 0; i < h.torsion.size(); ++i) out << (i ? " " : "") << h.torsion[i].str();
      out << '\n';
    }
  return out.str();
}

}  // namespace maghom
