#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "shadow/gleam.hpp"
#include "shadow/polyhedron.hpp"

namespace shadow {

/// Relabeling of every combinatorial element of a polyhedron. Read either as
/// a map into canonical labels or, for Isomorphism, into a second polyhedron.
struct Relabeling {
  std::vector<int> vertex;
  /// half_edge[v][h]: image of half-edge h of vertex v.
  std::vector<std::array<int, 4>> half_edge;
  std::vector<int> edge;
  /// -1 when the image edge runs against the source edge's orientation.
  std::vector<int> edge_flip;
  std::vector<std::array<int, 3>> edge_slot;
  std::vector<int> circle;
  std::vector<int> circle_flip;
  std::vector<std::array<int, 3>> circle_slot;
  std::vector<int> region;

  ArcState map(const ArcState& s) const;
  std::string str(const Polyhedron& from, const Polyhedron& to) const;
};

using Isomorphism = Relabeling;

struct CanonicalLabeling {
  /// .stf text of the relabeled polyhedron named `canonical`.
  std::string form;
  Relabeling labeling;
};

/// Minimises the serialized form over all labelings produced by rooted
/// traversals of the singular components. Gleams are part of the form when
/// given.
CanonicalLabeling canonical_labeling(const Polyhedron& p, const GleamAssignment* gleams);

std::string canonical_form(const Shadow& s);
std::string canonical_form(const Polyhedron& p, const GleamAssignment& g);

std::optional<Isomorphism> isomorphic(const Shadow& p, const Shadow& q, bool respect_gleams);

/// Applies a relabeling to produce the image document; ids follow `v<n>`,
/// `e<n>`, `c<n>`, `r<n>` and regions keep their own order.
PolyhedronData relabeled(const Polyhedron& p, const Relabeling& map);

}  // namespace shadow
