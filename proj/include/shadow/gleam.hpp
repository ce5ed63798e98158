#pragma once

#include <vector>

#include "shadow/halfint.hpp"
#include "shadow/polyhedron.hpp"

namespace shadow {

/// Gleam per region, indexed like Polyhedron::regions().
using GleamAssignment = std::vector<HalfInt>;

/// Z/2 holonomy of the side choice around one oriented circuit.
int circuit_holonomy(const Polyhedron& p, const std::vector<ArcState>& arcs);

/// Sum over the region's boundary circuits of their holonomies, mod 2.
int mod2_gleam(const Polyhedron& p, int region);
std::vector<int> mod2_gleams(const Polyhedron& p);

/// Passes iff each gleam is non-integer exactly when its mod-2 gleam is 1.
ValidationReport check_parity(const Polyhedron& p, const GleamAssignment& g);

HalfInt total_gleam(const GleamAssignment& g);

/// A polyhedron together with its gleams.
struct Shadow {
  Polyhedron poly;
  GleamAssignment gleams;
  std::string name = "shadow";
};

}  // namespace shadow
