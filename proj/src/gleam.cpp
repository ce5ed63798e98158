#include "shadow/gleam.hpp"

#include <stdexcept>

namespace shadow {

namespace {

// Slot of the next arc that continues the side sheet `side` past the end of
// arc `from`, where `to` is the arc that follows `from` in the circuit.
int transport_side(const Polyhedron& p, const ArcState& from, const ArcState& to, int side) {
  if (from.kind == ArcKind::Circle) {
    const auto& mono = p.circles()[from.index].monodromy;
    if (from.dir > 0) return mono[side];
    for (int k = 0; k < 3; ++k)
      if (mono[k] == side) return k;
    throw std::logic_error("bad monodromy");
  }
  // At the vertex the region runs through wing {i,j}; the wing {k,l} opposite
  // to it touches the region only at the vertex and is dropped, so the side
  // at {i,k} continues to {j,k}.
  const Attachment& at = p.edges()[from.index].ends[from.dir > 0 ? 1 : 0];
  const int k = at.wings[side];
  const Attachment& nat = p.edges()[to.index].ends[to.dir > 0 ? 0 : 1];
  for (int t = 0; t < 3; ++t)
    if (nat.wings[t] == k) return t;
  throw std::logic_error("side transport lost the side sheet");
}

}  // namespace

int circuit_holonomy(const Polyhedron& p, const std::vector<ArcState>& arcs) {
  const int first_side = arcs.front().slot == 0 ? 1 : 0;
  int side = first_side;
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    const ArcState& from = arcs[k];
    const ArcState& to = arcs[(k + 1) % arcs.size()];
    side = transport_side(p, from, to, side);
  }
  return side == first_side ? 0 : 1;
}

int mod2_gleam(const Polyhedron& p, int region) {
  if (region < 0 || region >= p.num_regions()) throw std::out_of_range("unknown region");
  int total = 0;
  for (const auto& entry : p.boundary(region)) total ^= circuit_holonomy(p, p.circuits()[entry.circuit].arcs);
  return total;
}

std::vector<int> mod2_gleams(const Polyhedron& p) {
  std::vector<int> out(p.num_regions());
  for (int r = 0; r < p.num_regions(); ++r) out[r] = mod2_gleam(p, r);
  return out;
}

ValidationReport check_parity(const Polyhedron& p, const GleamAssignment& g) {
  ValidationReport report;
  if (static_cast<int>(g.size()) != p.num_regions()) {
    report.violations.push_back({"gleam count", "expected one gleam per region"});
    return report;
  }
  for (int r = 0; r < p.num_regions(); ++r) {
    const int m = mod2_gleam(p, r);
    if (g[r].parity() != m) {
      report.violations.push_back({"parity", p.regions()[r].id + " has gleam " + g[r].str() +
                                                 " but mod-2 gleam " + std::to_string(m)});
    }
  }
  return report;
}

HalfInt total_gleam(const GleamAssignment& g) {
  HalfInt sum;
  for (HalfInt x : g) sum += x;
  return sum;
}

}  // namespace shadow
