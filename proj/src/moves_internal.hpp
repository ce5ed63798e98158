#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "shadow/moves.hpp"

namespace shadow::detail {

[[noreturn]] void stale(const std::string& message);

/// Mutable copy of a shadow; dead elements are dropped by finish().
class Work {
 public:
  explicit Work(const Shadow& s);

  const Polyhedron& old() const { return old_; }
  PolyhedronData d;
  GleamAssignment g;

  std::string fresh(const std::string& prefix);
  int add_vertex();
  int add_edge(const Attachment& a, const Attachment& b);
  int add_circle(const std::array<int, 3>& monodromy);
  int add_region(Region r, HalfInt gleam);

  void kill_vertex(int v) { vertex_dead_[v] = 1; }
  void kill_edge(int e) { edge_dead_[e] = 1; }
  void kill_circle(int c) { circle_dead_[c] = 1; }
  void kill_region(int r) { region_dead_[r] = 1; }

  /// Compacts, validates and checks parity; throws MoveError on failure.
  Shadow finish(const std::string& name, bool check_parity = true) const;

 private:
  const Polyhedron& old_;
  std::set<std::string> ids_;
  std::vector<char> vertex_dead_, edge_dead_, circle_dead_, region_dead_;
};

using ArcMap = std::function<std::optional<ArcState>(const ArcState&)>;

/// First arc along the old boundary circuit, from its seed, that the map
/// sends to the new polyhedron.
ArcState first_mapped(const Polyhedron& old, int region, int entry, const ArcMap& map);

/// Reseeds every live region of `w` whose seeds the map does not send
/// directly, walking its old circuit.
void reseed(Work& w, const ArcMap& map, const std::vector<int>& skip_regions = {});

std::vector<std::string> split(std::string_view text, char sep);
int parse_digit(std::string_view text, int hi);
int region_of_wing(const Polyhedron& p, int vertex, int i, int j);
void require_parity_ok(const Shadow& s);

struct Outcome {
  Shadow shadow;
  std::optional<MoveSite> inverse_site;
};

std::vector<std::string> sites_one_two(const Shadow& s);
Outcome apply_one_two(const Shadow& s, const std::string& anchor);
std::vector<std::string> sites_one_two_inverse(const Shadow& s);
Outcome apply_one_two_inverse(const Shadow& s, const std::string& anchor);

std::vector<std::string> sites_zero_two(const Shadow& s);
Outcome apply_zero_two(const Shadow& s, const std::string& anchor);
std::vector<std::string> sites_zero_two_inverse(const Shadow& s);
Outcome apply_zero_two_inverse(const Shadow& s, const std::string& anchor);

std::vector<std::string> sites_two_three(const Shadow& s);
Outcome apply_two_three(const Shadow& s, const std::string& anchor);
std::vector<std::string> sites_two_three_inverse(const Shadow& s);
Outcome apply_two_three_inverse(const Shadow& s, const std::string& anchor);

}  // namespace shadow::detail
