#include "maghom/error.hpp"
#include "maghom/graph.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace maghom {

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  long long n = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;
    auto bad = [&](const std::string& what) {
      return InvalidGraph("edge list line " + std::to_string(line_no) + ": " + what);
    };
    if (n < 0) {
      if (first != "n" || !(fields >> n) || n < 1) throw bad("expected header 'n <count>'");
      continue;
    }
    long long u = 0, v = 0;
    try {
      u = std::stoll(first);
    } catch (const std::exception&) {
      throw bad("expected 'u v'");
    }
    if (!(fields >> v)) throw bad("expected 'u v'");
    std::string extra;
    if (fields >> extra) throw bad("unexpected trailing field '" + extra + "'");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (n < 0) throw InvalidGraph("edge list is missing the 'n <count>' header");
  return build_graph(static_cast<std::size_t>(n), edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open edge list '" + path + "'");
  Graph g = read_edge_list(in);
  g.set_name(path);
  return g;
}

void write_edge_list(std::ostream& out, const Graph& g) {
  if (!g.name().empty()) out << "# " << g.name() << '\n';
  out << "n " << g.vertex_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace maghom
