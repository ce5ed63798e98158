#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "shadow/gleam.hpp"
#include "shadow/polyhedron.hpp"
#include "shadow/smith.hpp"

namespace shadow {

enum class Coefficients { Integers, Z2 };

/// Finitely generated abelian group Z^rank + sum of Z/t.
struct GroupDescriptor {
  int rank = 0;
  std::vector<BigInt> torsion;

  std::string str(Coefficients ring) const;
  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

struct Homology {
  Coefficients ring = Coefficients::Integers;
  std::array<GroupDescriptor, 3> groups;

  friend bool operator==(const Homology&, const Homology&) = default;
};

/// Cellular chain complex of P: vertices and circle base points, edges,
/// circles, region spokes and handle loops, one 2-cell per region.
struct ChainComplex {
  int cells0 = 0, cells1 = 0, cells2 = 0;
  IntMatrix d1;  // cells0 x cells1
  IntMatrix d2;  // cells1 x cells2
  bool integral = true;
};

ChainComplex chain_complex(const Polyhedron& p);
Homology homology(const Polyhedron& p);

struct HandleStatistics {
  int zero = 0;
  int one = 0;
  int two = 0;
  /// Empty singular set: the disc-bundle description applies.
  bool disc_bundle = false;
};

HandleStatistics handle_statistics(const Polyhedron& p);

/// Attaching framing of a region with boundary; throws std::domain_error for
/// closed regions.
std::int64_t framing(const Polyhedron& p, const GleamAssignment& g, int region);

int euler_char_M(const Polyhedron& p);

struct TunnelAnnotation {
  int three_handles = 0;
  int four_handles = 0;
  int closed_chi = 0;
  std::string note;
};

struct ThickeningReport {
  HandleStatistics handles;
  /// (region id, framing) for regions with boundary.
  std::vector<std::pair<std::string, std::int64_t>> framings;
  /// (region id, base surface, Euler number) for closed regions.
  struct Bundle {
    std::string region;
    std::string base;
    HalfInt euler;
  };
  std::vector<Bundle> bundles;
  int euler_char = 0;
  Homology homology;
  /// Gleam when P is a single closed sphere region.
  std::optional<HalfInt> sphere_gleam;
  std::optional<TunnelAnnotation> tunnel;

  /// Deterministic `key: value` lines sorted by key.
  std::string str() const;
};

ThickeningReport thicken(const Shadow& s);
ThickeningReport tunnel_annotation(ThickeningReport report, int three_handles, int four_handles);

}  // namespace shadow
