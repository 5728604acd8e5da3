#include <doctest.h>

#include "maghom/chain.hpp"
#include "maghom/error.hpp"
#include "maghom/magnitude.hpp"

#include <sstream>

using namespace maghom;

TEST_CASE("length_ell") {
  auto p3 = apsp(path_graph(3));
  CHECK(length_ell(std::vector<Vertex>{1}, p3) == 0);
  CHECK(length_ell(std::vector<Vertex>{0, 1, 2}, p3) == 2);
  CHECK(length_ell(std::vector<Vertex>{0, 2, 0}, apsp(cycle_graph(5))) == 4);
}

TEST_CASE("generator enumeration") {
  auto rook = apsp(rook44());
  CHECK(enumerate_generators(rook, 0, 0).size() == 16);
  CHECK(enumerate_generators(rook, 1, 1).size() == 96);
  CHECK(enumerate_generators(rook, 3, 2).empty());
  CHECK(enumerate_generators(rook, 1, 0).empty());
  for (const Graph& g : {cycle_graph(5), nonmorse6(), icosahedron()}) {
    auto d = apsp(g);
    for (int l = 0; l <= 4; ++l)
      for (int k = 0; k <= l + 1; ++k) {
        IndexSet s = enumerate_generators(d, k, l);
        CHECK(Integer(s.size()) == generator_count(d, k, l));
        for (std::size_t i = 0; i < s.size(); ++i) {
          CHECK(length_ell(s[i], d) == l);
          if (i) CHECK(s.sequence(i - 1) < s.sequence(i));
          CHECK(s.find(s[i]) == i);
        }
      }
  }
  CHECK_THROWS_AS(enumerate_generators(rook, 4, 4, 100), GeneratorCapExceeded);
}

TEST_CASE("boundary matrices") {
  auto p3 = apsp(path_graph(3));
  IndexSet top = enumerate_generators(p3, 2, 2);
  IndexSet bottom = enumerate_generators(p3, 1, 2);
  auto d = boundary_matrix(p3, top, bottom);
  auto col = *top.find(std::vector<Vertex>{0, 1, 2});
  auto row = *bottom.find(std::vector<Vertex>{0, 2});
  CHECK(d.at(static_cast<int>(row), static_cast<int>(col)) == -1);
  CHECK(d.column(col).size() == 1);
  CHECK(d.column(*top.find(std::vector<Vertex>{1, 0, 1})).empty());

  for (const Graph& g : {cycle_graph(5), cycle_graph(6), complement(cycle_graph(6)), nonmorse6()}) {
    auto dist = apsp(g);
    for (int l = 1; l <= 4; ++l)
      for (int k = 2; k <= l; ++k) {
        auto a = boundary_matrix(g, k, l);
        auto b = boundary_matrix(g, k + 1, l);
        CHECK((a * b).is_zero());
        for (std::size_t c = 0; c < b.cols(); ++c) {
          CHECK(b.column(c).size() <= static_cast<std::size_t>(k));
          for (const auto& e : b.column(c)) CHECK((e.value == 1 || e.value == -1));
        }
      }
  }
}

TEST_CASE("matrix dump format") {
  std::ostringstream out;
  write_matrix_dump(out, 2, 2, boundary_matrix(path_graph(3), 2, 2));
  CHECK(out.str() == "2 2 2 6\n0 1 -1\n1 4 -1\n");
}
