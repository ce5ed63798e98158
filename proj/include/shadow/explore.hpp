#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "shadow/moves.hpp"

namespace shadow {

struct ExploreLimits {
  int max_vertices = 4;
  int max_depth = 2;
  /// Largest number of nodes kept; reaching it sets MoveGraph::truncated.
  std::size_t budget = 20000;
};

/// Reachability graph over canonical classes. Node 0 is the input class;
/// the rest are numbered in discovery order.
struct MoveGraph {
  struct Node {
    std::string form;
    int depth = 0;
    int vertices = 0;
    int chi = 0;
  };
  struct Arc {
    int from = 0;
    int to = 0;
    MoveKind kind;
    std::string anchor;
  };
  std::vector<Node> nodes;
  std::vector<Arc> arcs;
  bool truncated = false;

  std::string str() const;
};

/// Breadth-first closure of apply_move over the allowed kinds. Each frontier
/// is expanded in lexicographic order of canonical forms; sites are taken on
/// the representative parsed from the canonical form.
MoveGraph explore(const Shadow& s, const std::vector<MoveKind>& allowed, const ExploreLimits& limits);

/// Comma separated kind names, or `equivalences`, `all`, `none`.
std::vector<MoveKind> parse_move_list(std::string_view text);

}  // namespace shadow
