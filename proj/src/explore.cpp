#include "shadow/explore.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "shadow/canonical.hpp"
#include "shadow/stf.hpp"

namespace shadow {

std::string MoveGraph::str() const {
  std::ostringstream out;
  out << "graph nodes " << nodes.size() << " arcs " << arcs.size() << " truncated " << (truncated ? "yes" : "no")
      << "\n";
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    const Node& n = nodes[k];
    out << "node " << k << " depth " << n.depth << " vertices " << n.vertices << " chi " << n.chi << "\n";
    std::istringstream lines(n.form);
    for (std::string line; std::getline(lines, line);) out << "  " << line << "\n";
  }
  for (const Arc& a : arcs) out << "arc " << a.from << " -> " << a.to << " " << a.kind.name() << " " << a.anchor << "\n";
  return out.str();
}

MoveGraph explore(const Shadow& s, const std::vector<MoveKind>& allowed, const ExploreLimits& limits) {
  MoveGraph graph;
  std::map<std::string, int> index;
  auto add_node = [&](const Shadow& rep, std::string form, int depth) {
    const int id = static_cast<int>(graph.nodes.size());
    graph.nodes.push_back({form, depth, rep.poly.num_vertices(), euler_characteristic(rep.poly)});
    index.emplace(std::move(form), id);
    return id;
  };
  add_node(s, canonical_form(s), 0);
  std::vector<int> frontier{0};
  for (int depth = 0; depth < limits.max_depth && !frontier.empty(); ++depth) {
    std::sort(frontier.begin(), frontier.end(),
              [&](int a, int b) { return graph.nodes[a].form < graph.nodes[b].form; });
    std::vector<int> next;
    for (int from : frontier) {
      const std::string form = graph.nodes[from].form;
      const Shadow rep = load_shadow(form);
      for (const MoveKind& kind : allowed) {
        if (!kind.supported() || rep.poly.num_vertices() + kind.vertex_delta() > limits.max_vertices) continue;
        for (const MoveSite& site : enumerate_sites(rep, kind)) {
          MoveResult result = apply_move(rep, site, &form);
          std::string child = canonical_form(result.shadow);
          auto it = index.find(child);
          int to;
          if (it != index.end()) {
            to = it->second;
          } else if (graph.nodes.size() >= limits.budget) {
            graph.truncated = true;
            continue;
          } else {
            to = add_node(result.shadow, std::move(child), depth + 1);
            next.push_back(to);
          }
          graph.arcs.push_back({from, to, kind, site.anchor});
        }
      }
    }
    frontier = std::move(next);
  }
  return graph;
}

std::vector<MoveKind> parse_move_list(std::string_view text) {
  if (text == "equivalences") return equivalence_kinds();
  if (text == "all") return all_move_kinds();
  std::vector<MoveKind> out;
  if (text == "none" || text.empty()) return out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string_view token = text.substr(start, comma - start);
    const auto kind = MoveKind::parse(token);
    if (!kind) throw std::invalid_argument("unknown move kind '" + std::string(token) + "'");
    if (std::find(out.begin(), out.end(), *kind) == out.end()) out.push_back(*kind);
    start = comma + 1;
  }
  return out;
}

}  // namespace shadow
