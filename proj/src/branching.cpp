#include "shadow/branching.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace shadow {

ArcReference arc_reference(const Polyhedron& p) {
  ArcReference ref;
  ref.edge.assign(p.num_edges(), {0, 0, 0});
  ref.circle.assign(p.num_circles(), {0, 0, 0});
  ref.edge_region.assign(p.num_edges(), {-1, -1, -1});
  ref.circle_region.assign(p.num_circles(), {-1, -1, -1});
  for (int r = 0; r < p.num_regions(); ++r) {
    for (std::size_t k = 0; k < p.regions()[r].boundary.size(); ++k) {
      for (const ArcState& s : p.oriented_circuit(r, static_cast<int>(k))) {
        if (s.kind == ArcKind::Edge) {
          ref.edge[s.index][s.slot] = s.dir;
          ref.edge_region[s.index][s.slot] = r;
        } else {
          ref.circle[s.index][s.slot] = s.dir;
          ref.circle_region[s.index][s.slot] = r;
        }
      }
    }
  }
  return ref;
}

bool all_orientable(const Polyhedron& p) {
  return std::all_of(p.regions().begin(), p.regions().end(), [](const Region& r) { return r.orientable; });
}

namespace {

void require_orientable(const Polyhedron& p) {
  if (!all_orientable(p)) throw std::domain_error("branching undefined: polyhedron has a non-orientable region");
}

bool not_all_equal(const std::array<int, 3>& s) { return !(s[0] == s[1] && s[1] == s[2]); }

bool vertices_balanced(const Polyhedron& p, const ArcReference& ref, const Branching& b) {
  std::vector<int> out_count(p.num_vertices(), 0);
  for (int e = 0; e < p.num_edges(); ++e) {
    int sum = 0;
    for (int s = 0; s < 3; ++s) sum += b[ref.edge_region[e][s]] * ref.edge[e][s];
    const int major = sum > 0 ? 1 : -1;
    ++out_count[p.edges()[e].ends[major > 0 ? 0 : 1].vertex];
  }
  return std::all_of(out_count.begin(), out_count.end(), [](int c) { return c == 2; });
}

}  // namespace

std::array<int, 3> induced_edge_orientations(const Polyhedron& p, const Branching& b, int edge) {
  require_orientable(p);
  const ArcReference ref = arc_reference(p);
  std::array<int, 3> out{};
  for (int s = 0; s < 3; ++s) out[s] = b[ref.edge_region[edge][s]] * ref.edge[edge][s];
  return out;
}

std::array<int, 3> induced_circle_orientations(const Polyhedron& p, const Branching& b, int circle) {
  require_orientable(p);
  const ArcReference ref = arc_reference(p);
  std::array<int, 3> out{};
  for (int s = 0; s < 3; ++s) out[s] = b[ref.circle_region[circle][s]] * ref.circle[circle][s];
  return out;
}

bool is_branching(const Polyhedron& p, const Branching& b, BranchingMode mode) {
  if (!all_orientable(p)) return false;
  const ArcReference ref = arc_reference(p);
  for (int e = 0; e < p.num_edges(); ++e) {
    std::array<int, 3> s{};
    for (int k = 0; k < 3; ++k) s[k] = b[ref.edge_region[e][k]] * ref.edge[e][k];
    if (!not_all_equal(s)) return false;
  }
  for (int c = 0; c < p.num_circles(); ++c) {
    std::array<int, 3> s{};
    for (int k = 0; k < 3; ++k) s[k] = b[ref.circle_region[c][k]] * ref.circle[c][k];
    if (!not_all_equal(s)) return false;
  }
  return mode == BranchingMode::Lax || vertices_balanced(p, ref, b);
}

std::vector<Branching> find_branchings(const Polyhedron& p, BranchingMode mode) {
  std::vector<Branching> out;
  if (!all_orientable(p)) return out;
  const ArcReference ref = arc_reference(p);
  const int nr = p.num_regions();

  struct Constraint {
    std::array<int, 3> region;
    std::array<int, 3> dir;
  };
  std::vector<Constraint> constraints;
  for (int e = 0; e < p.num_edges(); ++e) constraints.push_back({ref.edge_region[e], ref.edge[e]});
  for (int c = 0; c < p.num_circles(); ++c) constraints.push_back({ref.circle_region[c], ref.circle[c]});

  std::vector<int> degree(nr, 0);
  for (const auto& c : constraints)
    for (int r : c.region) ++degree[r];
  std::vector<int> order(nr);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return degree[a] > degree[b]; });
  std::vector<int> rank(nr);
  for (int k = 0; k < nr; ++k) rank[order[k]] = k;

  // Each constraint is checked once its last region is assigned.
  std::vector<std::vector<int>> due(nr);
  for (std::size_t k = 0; k < constraints.size(); ++k) {
    int last = 0;
    for (int r : constraints[k].region) last = std::max(last, rank[r]);
    due[last].push_back(static_cast<int>(k));
  }

  Branching b(nr, 0);
  std::function<void(int)> assign = [&](int depth) {
    if (depth == nr) {
      if (mode == BranchingMode::Lax || vertices_balanced(p, ref, b)) out.push_back(b);
      return;
    }
    const int r = order[depth];
    for (int sign : {1, -1}) {
      b[r] = sign;
      bool ok = true;
      for (int k : due[depth]) {
        const Constraint& c = constraints[k];
        std::array<int, 3> s{};
        for (int j = 0; j < 3; ++j) s[j] = b[c.region[j]] * c.dir[j];
        if (!not_all_equal(s)) {
          ok = false;
          break;
        }
      }
      if (ok) assign(depth + 1);
    }
    b[r] = 0;
  };
  assign(0);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::string branching_table(const Polyhedron& p, const Branching& b) {
  std::string out;
  for (int r = 0; r < p.num_regions(); ++r)
    out += p.regions()[r].id + " " + (b[r] > 0 ? "+" : "-") + "\n";
  return out;
}

}  // namespace shadow
