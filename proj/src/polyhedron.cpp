#include "shadow/polyhedron.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

namespace shadow {

bool state_less(const ArcState& a, const ArcState& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  if (a.index != b.index) return a.index < b.index;
  if (a.slot != b.slot) return a.slot < b.slot;
  return a.dir > b.dir;
}

bool ValidationReport::has(const std::string& code) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.code == code; });
}

std::string ValidationReport::str() const {
  if (ok()) return "pass\n";
  std::ostringstream out;
  for (const auto& v : violations) out << v.code << ": " << v.detail << "\n";
  return out.str();
}

InvalidPolyhedron::InvalidPolyhedron(ValidationReport report)
    : std::runtime_error("invalid polyhedron: " + report.str()), report_(std::move(report)) {}

namespace {

using OwnerTable = std::vector<std::array<std::pair<int, int>, 4>>;

bool wing_map_ok(const Attachment& a) {
  std::array<bool, 4> seen{};
  for (int j : a.wings) {
    if (j < 0 || j > 3 || j == a.half_edge || seen[j]) return false;
    seen[j] = true;
  }
  return true;
}

bool is_permutation3(const std::array<int, 3>& p) {
  std::array<bool, 3> seen{};
  for (int x : p) {
    if (x < 0 || x > 2 || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

// Owner table plus structural violations of the singular set.
OwnerTable build_owners(const PolyhedronData& d, ValidationReport& report) {
  OwnerTable owners(d.vertices.size());
  std::vector<std::array<int, 4>> count(d.vertices.size(), std::array<int, 4>{});
  for (auto& row : owners) row.fill({-1, -1});
  for (std::size_t e = 0; e < d.edges.size(); ++e) {
    for (int end = 0; end < 2; ++end) {
      const Attachment& a = d.edges[e].ends[end];
      if (a.vertex < 0 || a.vertex >= static_cast<int>(d.vertices.size()) || a.half_edge < 0 ||
          a.half_edge > 3) {
        report.violations.push_back({"bad attachment", d.edges[e].id});
        continue;
      }
      if (!wing_map_ok(a)) {
        report.violations.push_back(
            {"non-bijective wing map", d.edges[e].id + " end " + std::to_string(end)});
      }
      if (++count[a.vertex][a.half_edge] == 1) owners[a.vertex][a.half_edge] = {static_cast<int>(e), end};
    }
  }
  for (std::size_t v = 0; v < d.vertices.size(); ++v) {
    for (int h = 0; h < 4; ++h) {
      std::string where = d.vertices[v].id + "." + std::to_string(h);
      if (count[v][h] == 0) report.violations.push_back({"dangling half-edge", where});
      if (count[v][h] > 1) report.violations.push_back({"double-claimed half-edge", where});
    }
  }
  for (const auto& c : d.circles) {
    if (!is_permutation3(c.monodromy)) report.violations.push_back({"bad monodromy", c.id});
  }
  return owners;
}

std::array<int, 3> inverse3(const std::array<int, 3>& p) {
  std::array<int, 3> inv{};
  for (int k = 0; k < 3; ++k) inv[p[k]] = k;
  return inv;
}

ArcState step(const PolyhedronData& d, const OwnerTable& owners, const ArcState& s) {
  if (s.kind == ArcKind::Circle) {
    const auto& mono = d.circles[s.index].monodromy;
    int slot = s.dir > 0 ? mono[s.slot] : inverse3(mono)[s.slot];
    return {ArcKind::Circle, s.index, slot, s.dir};
  }
  const Attachment& at = d.edges[s.index].ends[s.dir > 0 ? 1 : 0];
  const int i = at.half_edge;
  const int j = at.wings[s.slot];
  auto [next_edge, next_end] = owners[at.vertex][j];
  if (next_edge < 0) throw std::logic_error("tracing reached a dangling half-edge");
  const Attachment& nat = d.edges[next_edge].ends[next_end];
  for (int k = 0; k < 3; ++k) {
    if (nat.wings[k] == i) return {ArcKind::Edge, next_edge, k, next_end == 0 ? 1 : -1};
  }
  throw std::logic_error("tracing found no matching wing");
}

std::vector<Circuit> trace_with(const PolyhedronData& d, const OwnerTable& owners) {
  std::vector<ArcState> all;
  for (std::size_t e = 0; e < d.edges.size(); ++e)
    for (int s = 0; s < 3; ++s)
      for (int dir : {1, -1}) all.push_back({ArcKind::Edge, static_cast<int>(e), s, dir});
  for (std::size_t c = 0; c < d.circles.size(); ++c)
    for (int s = 0; s < 3; ++s)
      for (int dir : {1, -1}) all.push_back({ArcKind::Circle, static_cast<int>(c), s, dir});
  auto key = [&](const ArcState& s) {
    std::size_t base = s.kind == ArcKind::Edge ? 0 : d.edges.size() * 6;
    return base + static_cast<std::size_t>(s.index) * 6 + s.slot * 2 + (s.dir > 0 ? 0 : 1);
  };
  std::vector<bool> seen(all.size(), false);
  std::vector<Circuit> out;
  // `all` is already sorted by state_less, so the first unseen state of a
  // circuit (in either direction) is its least state.
  for (const ArcState& start : all) {
    if (seen[key(start)]) continue;
    Circuit c;
    ArcState cur = start;
    do {
      if (seen[key(cur)]) throw std::logic_error("circuits overlap");
      seen[key(cur)] = true;
      seen[key(cur.reversed())] = true;
      c.arcs.push_back(cur);
      cur = step(d, owners, cur);
      if (c.arcs.size() > all.size()) throw std::logic_error("tracing does not close");
    } while (!(cur == start));
    out.push_back(std::move(c));
  }
  return out;
}

std::string state_name(const PolyhedronData& d, const ArcState& s, bool with_dir) {
  std::string name = s.kind == ArcKind::Edge ? d.edges[s.index].id : d.circles[s.index].id;
  name += "." + std::to_string(s.slot);
  if (with_dir) name += s.dir > 0 ? "+" : "-";
  return name;
}

bool seed_in_range(const PolyhedronData& d, const ArcState& s) {
  const std::size_t n = s.kind == ArcKind::Edge ? d.edges.size() : d.circles.size();
  return s.index >= 0 && static_cast<std::size_t>(s.index) < n && s.slot >= 0 && s.slot < 3 &&
         (s.dir == 1 || s.dir == -1);
}

}  // namespace

std::vector<Circuit> trace_circuits(const PolyhedronData& data) {
  ValidationReport report;
  OwnerTable owners = build_owners(data, report);
  if (!report.ok()) throw std::logic_error("trace_circuits on invalid singular set");
  auto circuits = trace_with(data, owners);
  for (auto& c : circuits) c.id = state_name(data, c.arcs.front(), true);
  return circuits;
}

ValidationReport validate(const PolyhedronData& d) {
  ValidationReport report;
  {
    std::set<std::string> ids;
    auto check = [&](const std::string& id) {
      if (!ids.insert(id).second) report.violations.push_back({"duplicate identifier", id});
    };
    for (const auto& v : d.vertices) check(v.id);
    for (const auto& e : d.edges) check(e.id);
    for (const auto& c : d.circles) check(c.id);
    for (const auto& r : d.regions) check(r.id);
  }
  OwnerTable owners = build_owners(d, report);
  for (const auto& r : d.regions) {
    if (r.genus < 0) report.violations.push_back({"bad region topology", r.id + ": negative genus"});
    if (!r.orientable && r.genus < 1)
      report.violations.push_back({"bad region topology", r.id + ": crosscap number must be >= 1"});
    for (const auto& s : r.boundary) {
      if (!seed_in_range(d, s))
        report.violations.push_back({"region/circuit mismatch", r.id + ": seed out of range"});
    }
  }
  if (!report.ok()) return report;

  std::vector<Circuit> circuits;
  try {
    circuits = trace_with(d, owners);
  } catch (const std::logic_error& err) {
    report.violations.push_back({"tracing failure", err.what()});
    return report;
  }
  std::map<std::tuple<int, int, int>, int> circuit_of;
  for (std::size_t c = 0; c < circuits.size(); ++c)
    for (const auto& a : circuits[c].arcs)
      circuit_of[{static_cast<int>(a.kind), a.index, a.slot}] = static_cast<int>(c);
  std::vector<int> claims(circuits.size(), 0);
  for (const auto& r : d.regions) {
    for (const auto& s : r.boundary) ++claims[circuit_of.at({static_cast<int>(s.kind), s.index, s.slot})];
  }
  for (std::size_t c = 0; c < circuits.size(); ++c) {
    std::string name = state_name(d, circuits[c].arcs.front(), true);
    if (claims[c] == 0) report.violations.push_back({"unclaimed circuit", name});
    if (claims[c] > 1) report.violations.push_back({"doubly-claimed circuit", name});
  }
  return report;
}

Polyhedron::Polyhedron(PolyhedronData data) : data_(std::move(data)) {
  ValidationReport report = validate(data_);
  if (!report.ok()) throw InvalidPolyhedron(std::move(report));
  ValidationReport scratch;
  half_edge_owner_ = build_owners(data_, scratch);
  circuits_ = trace_with(data_, half_edge_owner_);
  edge_circuit_.assign(data_.edges.size(), {});
  edge_pos_ = edge_dir_ = edge_circuit_;
  circle_circuit_.assign(data_.circles.size(), {});
  circle_pos_ = circle_dir_ = circle_circuit_;
  for (std::size_t c = 0; c < circuits_.size(); ++c) {
    circuits_[c].id = state_name(data_, circuits_[c].arcs.front(), true);
    for (std::size_t k = 0; k < circuits_[c].arcs.size(); ++k) {
      const ArcState& a = circuits_[c].arcs[k];
      auto& cc = a.kind == ArcKind::Edge ? edge_circuit_ : circle_circuit_;
      auto& pp = a.kind == ArcKind::Edge ? edge_pos_ : circle_pos_;
      auto& dd = a.kind == ArcKind::Edge ? edge_dir_ : circle_dir_;
      cc[a.index][a.slot] = static_cast<int>(c);
      pp[a.index][a.slot] = static_cast<int>(k);
      dd[a.index][a.slot] = a.dir;
    }
  }
  circuit_region_.assign(circuits_.size(), -1);
  region_boundary_.resize(data_.regions.size());
  for (std::size_t r = 0; r < data_.regions.size(); ++r) {
    for (const auto& s : data_.regions[r].boundary) {
      int c = circuit_of(s.kind, s.index, s.slot);
      circuit_region_[c] = static_cast<int>(r);
      region_boundary_[r].push_back({c, s.dir * circuit_direction(s.kind, s.index, s.slot)});
    }
  }
}

int Polyhedron::circuit_of(ArcKind kind, int index, int slot) const {
  return kind == ArcKind::Edge ? edge_circuit_[index][slot] : circle_circuit_[index][slot];
}

int Polyhedron::position_in_circuit(ArcKind kind, int index, int slot) const {
  return kind == ArcKind::Edge ? edge_pos_[index][slot] : circle_pos_[index][slot];
}

int Polyhedron::circuit_direction(ArcKind kind, int index, int slot) const {
  return kind == ArcKind::Edge ? edge_dir_[index][slot] : circle_dir_[index][slot];
}

std::vector<ArcState> Polyhedron::oriented_circuit(int region, int entry) const {
  const ArcState seed = data_.regions[region].boundary[entry];
  std::vector<ArcState> out;
  ArcState cur = seed;
  do {
    out.push_back(cur);
    cur = next(cur);
  } while (!(cur == seed));
  return out;
}

ArcState Polyhedron::next(const ArcState& s) const { return step(data_, half_edge_owner_, s); }

namespace {
template <typename T>
int find_id(const std::vector<T>& items, const std::string& id) {
  for (std::size_t k = 0; k < items.size(); ++k)
    if (items[k].id == id) return static_cast<int>(k);
  return -1;
}
}  // namespace

int Polyhedron::find_vertex(const std::string& id) const { return find_id(data_.vertices, id); }
int Polyhedron::find_edge(const std::string& id) const { return find_id(data_.edges, id); }
int Polyhedron::find_circle(const std::string& id) const { return find_id(data_.circles, id); }
int Polyhedron::find_region(const std::string& id) const { return find_id(data_.regions, id); }

std::string Polyhedron::arc_name(const ArcState& s, bool with_dir) const {
  return state_name(data_, s, with_dir);
}

int euler_characteristic(const Polyhedron& p) {
  int chi = p.num_vertices() - p.num_edges();
  for (const auto& r : p.regions()) chi += r.euler_characteristic();
  return chi;
}

int singular_components(const Polyhedron& p) {
  std::vector<int> parent(p.num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int comps = p.num_vertices();
  for (const auto& e : p.edges()) {
    int a = find(e.ends[0].vertex), b = find(e.ends[1].vertex);
    if (a != b) {
      parent[a] = b;
      --comps;
    }
  }
  return comps + p.num_circles();
}

bool is_standard(const Polyhedron& p) {
  if (p.num_vertices() == 0 || p.num_circles() > 0) return false;
  if (singular_components(p) != 1) return false;
  return std::all_of(p.regions().begin(), p.regions().end(),
                     [](const Region& r) { return r.is_disc(); });
}

int shadow_complexity_count(const Polyhedron& p) { return p.num_vertices(); }

}  // namespace shadow
