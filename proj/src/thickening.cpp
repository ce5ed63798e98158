#include "shadow/thickening.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace shadow {

std::string GroupDescriptor::str(Coefficients ring) const {
  const std::string base = ring == Coefficients::Integers ? "Z" : "Z2";
  std::vector<std::string> terms;
  if (rank == 1) terms.push_back(base);
  if (rank > 1) terms.push_back(base + "^" + std::to_string(rank));
  for (const auto& t : torsion) terms.push_back("Z/" + t.str());
  if (terms.empty()) return "0";
  std::string out = terms.front();
  for (std::size_t k = 1; k < terms.size(); ++k) out += " + " + terms[k];
  return out;
}

namespace {

bool needs_extra_cells(const Region& r) { return !r.is_disc(); }

int handle_loops(const Region& r) { return r.orientable ? 2 * r.genus : r.genus; }

}  // namespace

ChainComplex chain_complex(const Polyhedron& p) {
  ChainComplex cc;
  const int nv = p.num_vertices(), ne = p.num_edges(), nc = p.num_circles(), nr = p.num_regions();
  cc.cells0 = nv + nc;
  cc.cells1 = ne + nc;
  cc.cells2 = nr;
  std::vector<int> centre(nr, -1), first_spoke(nr, -1), first_loop(nr, -1);
  for (int r = 0; r < nr; ++r) {
    const Region& reg = p.regions()[r];
    if (!reg.orientable) cc.integral = false;
    if (!needs_extra_cells(reg)) continue;
    centre[r] = cc.cells0++;
    first_spoke[r] = cc.cells1;
    cc.cells1 += static_cast<int>(reg.boundary.size());
    first_loop[r] = cc.cells1;
    cc.cells1 += handle_loops(reg);
  }
  cc.d1.assign(cc.cells0, std::vector<BigInt>(cc.cells1));
  cc.d2.assign(cc.cells1, std::vector<BigInt>(cc.cells2));
  for (int e = 0; e < ne; ++e) {
    cc.d1[p.edges()[e].ends[1].vertex][e] += 1;
    cc.d1[p.edges()[e].ends[0].vertex][e] -= 1;
  }
  for (int r = 0; r < nr; ++r) {
    const Region& reg = p.regions()[r];
    for (std::size_t k = 0; k < reg.boundary.size(); ++k) {
      const std::vector<ArcState> arcs = p.oriented_circuit(r, static_cast<int>(k));
      for (const ArcState& s : arcs) {
        const int cell = s.kind == ArcKind::Edge ? s.index : ne + s.index;
        cc.d2[cell][r] += s.dir;
      }
      if (centre[r] >= 0) {
        const ArcState& s0 = arcs.front();
        int base;
        if (s0.kind == ArcKind::Circle) base = nv + s0.index;
        else base = p.edges()[s0.index].ends[s0.dir > 0 ? 0 : 1].vertex;
        const int spoke = first_spoke[r] + static_cast<int>(k);
        cc.d1[base][spoke] += 1;
        cc.d1[centre[r]][spoke] -= 1;
      }
    }
    if (!reg.orientable)
      for (int a = 0; a < reg.genus; ++a) cc.d2[first_loop[r] + a][r] += 2;
  }
  return cc;
}

Homology homology(const Polyhedron& p) {
  const ChainComplex cc = chain_complex(p);
  Homology h;
  if (cc.integral) {
    h.ring = Coefficients::Integers;
    const auto inv1 = smith_invariants(cc.d1);
    const auto inv2 = smith_invariants(cc.d2);
    const int r1 = static_cast<int>(inv1.size()), r2 = static_cast<int>(inv2.size());
    h.groups[0].rank = cc.cells0 - r1;
    h.groups[1].rank = cc.cells1 - r1 - r2;
    h.groups[2].rank = cc.cells2 - r2;
    for (const auto& t : inv1)
      if (t > 1) h.groups[0].torsion.push_back(t);
    for (const auto& t : inv2)
      if (t > 1) h.groups[1].torsion.push_back(t);
  } else {
    h.ring = Coefficients::Z2;
    const int r1 = rank_mod2(cc.d1), r2 = rank_mod2(cc.d2);
    h.groups[0].rank = cc.cells0 - r1;
    h.groups[1].rank = cc.cells1 - r1 - r2;
    h.groups[2].rank = cc.cells2 - r2;
  }
  return h;
}

HandleStatistics handle_statistics(const Polyhedron& p) {
  HandleStatistics hs;
  const bool empty_singular = p.num_vertices() == 0 && p.num_circles() == 0;
  if (!empty_singular) {
    const int comps = singular_components(p);
    hs.zero = comps;
    hs.one = p.num_edges() - p.num_vertices() + comps;
  }
  hs.disc_bundle = empty_singular;
  for (const auto& r : p.regions()) {
    if (r.closed()) {
      hs.zero += 1;
      hs.one += handle_loops(r);
    }
    hs.two += 1;
  }
  return hs;
}

std::int64_t framing(const Polyhedron& p, const GleamAssignment& g, int region) {
  if (region < 0 || region >= p.num_regions()) throw std::out_of_range("unknown region");
  if (p.regions()[region].closed())
    throw std::domain_error("region " + p.regions()[region].id +
                            " is closed: no attaching circle, its gleam is the normal bundle Euler number");
  HalfInt value = g[region];
  if (mod2_gleam(p, region) == 1) value -= kHalf;
  if (!value.is_integer()) throw std::domain_error("gleam parity violation in region " + p.regions()[region].id);
  return value.twice_value() / 2;
}

int euler_char_M(const Polyhedron& p) { return euler_characteristic(p); }

namespace {

std::string surface_name(const Region& r) {
  if (!r.orientable) return r.genus == 1 ? "RP2" : "N" + std::to_string(r.genus);
  if (r.genus == 0) return "S2";
  if (r.genus == 1) return "T2";
  return "S" + std::to_string(r.genus);
}

}  // namespace

ThickeningReport thicken(const Shadow& s) {
  const Polyhedron& p = s.poly;
  ThickeningReport rep;
  rep.handles = handle_statistics(p);
  for (int r = 0; r < p.num_regions(); ++r) {
    const Region& reg = p.regions()[r];
    if (reg.closed()) rep.bundles.push_back({reg.id, surface_name(reg), s.gleams[r]});
    else rep.framings.emplace_back(reg.id, framing(p, s.gleams, r));
  }
  rep.euler_char = euler_char_M(p);
  rep.homology = homology(p);
  if (p.num_vertices() == 0 && p.num_circles() == 0 && p.num_regions() == 1 && p.regions()[0].orientable &&
      p.regions()[0].genus == 0)
    rep.sphere_gleam = s.gleams[0];
  return rep;
}

ThickeningReport tunnel_annotation(ThickeningReport report, int three_handles, int four_handles) {
  if (three_handles < 0 || four_handles < 0) throw std::invalid_argument("handle counts must be non-negative");
  if (three_handles == 0 && four_handles == 0) return report;
  TunnelAnnotation t;
  t.three_handles = three_handles;
  t.four_handles = four_handles;
  t.closed_chi = report.euler_char - three_handles + four_handles;
  t.note = "closed manifold candidate, closability not verified";
  if (report.sphere_gleam && three_handles == 0 && four_handles == 1) {
    if (*report.sphere_gleam == HalfInt::integer(-1)) t.note = "CP2 candidate";
    if (*report.sphere_gleam == HalfInt::integer(1)) t.note = "CP2-bar candidate";
  }
  report.tunnel = t;
  return report;
}

std::string ThickeningReport::str() const {
  std::vector<std::pair<std::string, std::string>> kv;
  kv.emplace_back("chi_M", std::to_string(euler_char));
  kv.emplace_back("coefficients", homology.ring == Coefficients::Integers ? "Z" : "Z2");
  for (const auto& b : bundles) {
    kv.emplace_back("disc_bundle." + b.region, "base " + b.base + " euler " + b.euler.str());
    kv.emplace_back("framing." + b.region, b.euler.str() + " (normal bundle Euler number)");
  }
  for (const auto& [id, f] : framings) kv.emplace_back("framing." + id, std::to_string(f));
  kv.emplace_back("handles.disc_bundle", handles.disc_bundle ? "yes" : "no");
  kv.emplace_back("handles.one", std::to_string(handles.one));
  kv.emplace_back("handles.two", std::to_string(handles.two));
  kv.emplace_back("handles.zero", std::to_string(handles.zero));
  for (int k = 0; k < 3; ++k) kv.emplace_back("homology.H" + std::to_string(k), homology.groups[k].str(homology.ring));
  if (tunnel) {
    kv.emplace_back("tunnel.closed_chi", std::to_string(tunnel->closed_chi));
    kv.emplace_back("tunnel.four_handles", std::to_string(tunnel->four_handles));
    kv.emplace_back("tunnel.note", tunnel->note);
    kv.emplace_back("tunnel.three_handles", std::to_string(tunnel->three_handles));
  }
  std::stable_sort(kv.begin(), kv.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::ostringstream out;
  for (const auto& [k, v] : kv) out << k << ": " << v << "\n";
  return out.str();
}

}  // namespace shadow
