#include <doctest.h>

#include "maghom/analysis.hpp"
#include "maghom/error.hpp"

using namespace maghom;

TEST_CASE("diagonality reports") {
  auto c5 = diagonal_check(cycle_graph(5), 3);
  CHECK_FALSE(c5.diagonal);
  CHECK(c5.k == 2);
  CHECK(c5.l == 3);
  CHECK(c5.rank == 10);
  CHECK(c5.verdict() == "counterexample MH_{2,3} rank 10");
  auto p4 = diagonal_check(path_graph(4), 4);
  CHECK(p4.diagonal);
  CHECK(p4.verdict() == "diagonal up to l=4");
  CHECK(diagonal_check(icosahedron(), 3).diagonal);
}

TEST_CASE("Morse rule checks") {
  CHECK(check_morse_rule(tree_rule(path_graph(4)), path_graph(4), 3).empty());
  auto msg = check_morse_rule(nonmorse6_rule(), nonmorse6(), 3);
  CHECK(msg.find("cycle at l=3") == 0);
}

TEST_CASE("theorem suites") {
  SuiteOptions quick;
  quick.lmax = 3;
  std::size_t streamed = 0;
  for (const char* name : {"trees", "odd", "even", "pawful"}) {
    auto report = verify_theorems(name, quick, [&](const CheckLine&) { ++streamed; });
    CHECK(report.passed());
    CHECK_FALSE(report.checks.empty());
    for (const auto& c : report.checks)
      if (!c.passed) MESSAGE(c.description << ": " << c.detail);
  }
  CHECK(streamed > 0);
  CHECK_THROWS_AS(verify_theorems("lemmas"), UsageError);
}

TEST_CASE("reference tables") {
  const auto& refs = reference_tables();
  REQUIRE(refs.size() == 4);
  for (const auto& r : refs)
    for (int l = 0; l <= r.max_l(); ++l) CHECK(r.ranks[static_cast<std::size_t>(l)].size() == static_cast<std::size_t>(l) + 1);
  auto t = mh_table(refs[2].graph, 2, "naive");
  CHECK(compare_with_reference(t, refs[2]).empty());
  t.rows[2][2].rank = 61;
  auto diff = compare_with_reference(t, refs[2]);
  REQUIRE(diff.size() == 1);
  CHECK(diff[0] == "MH_{2,2}: computed 61, reference 60");
}
