#pragma once

#include <array>
#include <string>
#include <vector>

#include "shadow/polyhedron.hpp"

namespace shadow {

/// Lax: on every edge and circle the three induced orientations are not all
/// equal. Strict: additionally every vertex has two incoming and two outgoing
/// edges under the majority orientation of each edge.
enum class BranchingMode { Lax, Strict };

/// Sign per region relative to its reference orientation.
using Branching = std::vector<int>;

/// Direction of each wing arc in its region's reference orientation, indexed
/// [edge][slot] and [circle][slot].
struct ArcReference {
  std::vector<std::array<int, 3>> edge;
  std::vector<std::array<int, 3>> circle;
  std::vector<std::array<int, 3>> edge_region;
  std::vector<std::array<int, 3>> circle_region;
};

ArcReference arc_reference(const Polyhedron& p);

bool all_orientable(const Polyhedron& p);

/// Throws std::domain_error when a region is non-orientable.
std::array<int, 3> induced_edge_orientations(const Polyhedron& p, const Branching& b, int edge);
std::array<int, 3> induced_circle_orientations(const Polyhedron& p, const Branching& b, int circle);

bool is_branching(const Polyhedron& p, const Branching& b, BranchingMode mode);

/// Every satisfying assignment, sorted with + before - region by region.
std::vector<Branching> find_branchings(const Polyhedron& p, BranchingMode mode = BranchingMode::Lax);

std::string branching_table(const Polyhedron& p, const Branching& b);

}  // namespace shadow
