#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "moves_internal.hpp"

namespace shadow::detail {

namespace {

int vertex_by_id(const Polyhedron& p, const std::string& id) {
  const int v = p.find_vertex(id);
  if (v < 0) stale("unknown vertex '" + id + "'");
  return v;
}

int edge_by_id(const Polyhedron& p, const std::string& id) {
  const int e = p.find_edge(id);
  if (e < 0) stale("unknown edge '" + id + "'");
  return e;
}

int region_id(const Polyhedron& p, const std::string& id) {
  const int r = p.find_region(id);
  if (r < 0) stale("unknown region '" + id + "'");
  return r;
}

int sign_of(const std::string& text) {
  if (text == "+") return 1;
  if (text == "-") return -1;
  stale("expected sign + or -");
}

int slot_with_wing(const Attachment& a, int wing) {
  for (int s = 0; s < 3; ++s)
    if (a.wings[s] == wing) return s;
  throw MoveError(MoveError::Kind::Internal, "wing lookup failed");
}

// The single boundary circuit of a disc region.
const std::vector<ArcState>& disc_circuit(const Polyhedron& p, int r) {
  return p.circuits()[p.boundary(r)[0].circuit].arcs;
}

ArcMap drop_edges(std::vector<int> edges) {
  return [edges = std::move(edges)](const ArcState& a) -> std::optional<ArcState> {
    if (a.kind == ArcKind::Edge && std::find(edges.begin(), edges.end(), a.index) != edges.end())
      return std::nullopt;
    return a;
  };
}

// ---- OneTwo ----

struct OneTwoSplit {
  int vertex;
  std::array<int, 4> roles;  // half-edges i, j, k, l
  int sign;
};

OneTwoSplit parse_one_two(const Shadow& s, const std::string& anchor) {
  const auto parts = split(anchor, ':');
  if (parts.size() != 3 || parts[1].size() != 2) stale("expected <vertex>:<i><j>:<+|->");
  OneTwoSplit m{};
  m.vertex = vertex_by_id(s.poly, parts[0]);
  const int i = parse_digit(parts[1].substr(0, 1), 3), j = parse_digit(parts[1].substr(1, 1), 3);
  if (i == j) stale("wing needs two distinct half-edges");
  std::vector<int> rest;
  for (int x = 0; x < 4; ++x)
    if (x != i && x != j) rest.push_back(x);
  m.roles = {i, j, rest[0], rest[1]};
  m.sign = sign_of(parts[2]);
  return m;
}

}  // namespace

std::vector<std::string> sites_one_two(const Shadow& s) {
  std::vector<std::string> out;
  for (const auto& v : s.poly.vertices())
    for (int j = 1; j < 4; ++j)
      for (const char* sign : {"+", "-"}) out.push_back(v.id + ":0" + std::to_string(j) + ":" + sign);
  return out;
}

Outcome apply_one_two(const Shadow& s, const std::string& anchor) {
  const OneTwoSplit m = parse_one_two(s, anchor);
  const Polyhedron& p = s.poly;
  const auto [i, j, k, l] = m.roles;
  Work w(s);
  w.kill_vertex(m.vertex);
  const int v1 = w.add_vertex(), v2 = w.add_vertex();
  auto role = [&](int x) { return static_cast<int>(std::find(m.roles.begin(), m.roles.end(), x) - m.roles.begin()); };
  // New half-edge index of old wing {x,y} seen from x.
  auto target = [&](int x, int y) {
    const int rx = role(x), ry = role(y);
    if (rx / 2 == ry / 2) return ry % 2;
    return (rx % 2) == (ry % 2) ? 2 : 3;
  };
  for (int e = 0; e < p.num_edges(); ++e)
    for (int end = 0; end < 2; ++end) {
      const Attachment& a = p.edges()[e].ends[end];
      if (a.vertex != m.vertex) continue;
      Attachment n;
      n.vertex = role(a.half_edge) < 2 ? v1 : v2;
      n.half_edge = role(a.half_edge) % 2;
      for (int t = 0; t < 3; ++t) n.wings[t] = target(a.half_edge, a.wings[t]);
      w.d.edges[e].ends[end] = n;
    }
  const int g = w.add_edge({v1, 2, {3, 0, 1}}, {v2, 2, {3, 0, 1}});
  w.add_edge({v1, 3, {2, 0, 1}}, {v2, 3, {2, 1, 0}});
  const HalfInt t = HalfInt::from_twice(m.sign);
  Region disc;
  disc.boundary = {{ArcKind::Edge, g, 0, 1}};
  const int d = w.add_region(disc, t);
  w.g[region_of_wing(p, m.vertex, i, j)] += t;
  w.g[region_of_wing(p, m.vertex, k, l)] += t;
  for (int x : {i, j})
    for (int y : {k, l}) w.g[region_of_wing(p, m.vertex, x, y)] -= t;
  return {w.finish(s.name), MoveSite{{MoveType::OneTwo, true}, w.d.regions[d].id}};
}

namespace {

struct OneTwoMerge {
  int disc, g, h, v1, v2;
  HalfInt t;
  std::array<int, 2> hg, hh;            // half-edges of g and h at v1, v2
  std::array<std::array<int, 2>, 2> outer;  // outer half-edges at v1, v2
};

// Half-edge at the far vertex reached from outer half-edge o at side x
// through edge `edge`.
int partner(const Polyhedron& p, int edge, int vertex, int o) {
  const Edge& e = p.edges()[edge];
  const int here = e.ends[0].vertex == vertex ? 0 : 1;
  return e.ends[1 - here].wings[slot_with_wing(e.ends[here], o)];
}

OneTwoMerge match_one_two_inverse(const Shadow& s, const std::string& anchor) {
  const Polyhedron& p = s.poly;
  OneTwoMerge m{};
  m.disc = region_id(p, anchor);
  if (!p.regions()[m.disc].is_disc()) stale("region is not a disc");
  m.t = s.gleams[m.disc];
  if (m.t.twice_value() != 1 && m.t.twice_value() != -1) stale("disc gleam is not +1/2 or -1/2");
  const auto& arcs = disc_circuit(p, m.disc);
  if (arcs.size() != 2 || arcs[0].kind != ArcKind::Edge || arcs[1].kind != ArcKind::Edge || arcs[0].index == arcs[1].index)
    stale("region is not a digon over two edges");
  m.g = arcs[0].index;
  m.h = arcs[1].index;
  const Edge& g = p.edges()[m.g];
  const Edge& h = p.edges()[m.h];
  m.v1 = std::min(g.ends[0].vertex, g.ends[1].vertex);
  m.v2 = std::max(g.ends[0].vertex, g.ends[1].vertex);
  if (m.v1 == m.v2) stale("digon edge is a loop");
  if (std::min(h.ends[0].vertex, h.ends[1].vertex) != m.v1 || std::max(h.ends[0].vertex, h.ends[1].vertex) != m.v2)
    stale("digon edges do not join the same vertices");
  for (int x = 0; x < 2; ++x) {
    const int v = x == 0 ? m.v1 : m.v2;
    m.hg[x] = g.ends[g.ends[0].vertex == v ? 0 : 1].half_edge;
    m.hh[x] = h.ends[h.ends[0].vertex == v ? 0 : 1].half_edge;
    int n = 0;
    for (int y = 0; y < 4; ++y)
      if (y != m.hg[x] && y != m.hh[x]) m.outer[x][n++] = y;
  }
  const int i = m.outer[0][0];
  if (partner(p, m.g, m.v1, i) == partner(p, m.h, m.v1, i)) stale("digon is not twisted");
  return m;
}

}  // namespace

std::vector<std::string> sites_one_two_inverse(const Shadow& s) {
  std::vector<std::string> out;
  for (const auto& r : s.poly.regions()) {
    try {
      match_one_two_inverse(s, r.id);
      out.push_back(r.id);
    } catch (const MoveError&) {
    }
  }
  return out;
}

Outcome apply_one_two_inverse(const Shadow& s, const std::string& anchor) {
  const OneTwoMerge m = match_one_two_inverse(s, anchor);
  const Polyhedron& p = s.poly;
  const int i = m.outer[0][0], j = m.outer[0][1];
  const int k = partner(p, m.g, m.v1, i), l = partner(p, m.g, m.v1, j);
  Work w(s);
  w.kill_vertex(m.v1);
  w.kill_vertex(m.v2);
  w.kill_edge(m.g);
  w.kill_edge(m.h);
  w.kill_region(m.disc);
  const int v = w.add_vertex();
  auto index = [&](int side, int y) {
    if (side == 0) return y == i ? 0 : 1;
    return y == k ? 2 : 3;
  };
  for (int e = 0; e < p.num_edges(); ++e) {
    if (e == m.g || e == m.h) continue;
    for (int end = 0; end < 2; ++end) {
      const Attachment& a = p.edges()[e].ends[end];
      if (a.vertex != m.v1 && a.vertex != m.v2) continue;
      const int side = a.vertex == m.v1 ? 0 : 1;
      Attachment n;
      n.vertex = v;
      n.half_edge = index(side, a.half_edge);
      for (int t = 0; t < 3; ++t) {
        const int y = a.wings[t];
        if (y == m.hg[side]) n.wings[t] = index(1 - side, partner(p, m.g, a.vertex, a.half_edge));
        else if (y == m.hh[side]) n.wings[t] = index(1 - side, partner(p, m.h, a.vertex, a.half_edge));
        else n.wings[t] = index(side, y);
      }
      w.d.edges[e].ends[end] = n;
    }
  }
  w.g[region_of_wing(p, m.v1, i, j)] -= m.t;
  w.g[region_of_wing(p, m.v2, k, l)] -= m.t;
  for (int x : {i, j})
    for (int y : {m.hg[0], m.hh[0]}) w.g[region_of_wing(p, m.v1, x, y)] += m.t;
  reseed(w, drop_edges({m.g, m.h}), {m.disc});
  const std::string sign = m.t.twice_value() > 0 ? "+" : "-";
  return {w.finish(s.name), MoveSite{{MoveType::OneTwo, false}, w.d.vertices[v].id + ":01:" + sign}};
}

// ---- ZeroTwo ----

namespace {

struct ZeroTwoSite {
  int l, a, v, h;
  int m, b, w, r;
  int region;
  int yl, ym;
};

ZeroTwoSite match_zero_two(const Shadow& s, const std::string& anchor) {
  const Polyhedron& p = s.poly;
  const auto parts = split(anchor, ':');
  if (parts.size() != 2) stale("expected <l>.<a>.<v>:<m>.<b>.<w>");
  const auto lp = split(parts[0], '.'), mp = split(parts[1], '.');
  if (lp.size() != 3 || mp.size() != 3) stale("expected <l>.<a>.<v>:<m>.<b>.<w>");
  ZeroTwoSite z{};
  z.l = edge_by_id(p, lp[0]);
  z.a = parse_digit(lp[1], 2);
  z.v = parse_digit(lp[2], 2);
  z.m = edge_by_id(p, mp[0]);
  z.b = parse_digit(mp[1], 2);
  z.w = parse_digit(mp[2], 2);
  if (z.l == z.m) stale("the two edges coincide");
  if (z.a == z.v || z.b == z.w) stale("wall slot equals the cut region slot");
  z.h = 3 - z.a - z.v;
  z.r = 3 - z.b - z.w;
  z.region = p.region_of_arc(ArcKind::Edge, z.l, z.a);
  if (p.region_of_arc(ArcKind::Edge, z.m, z.b) != z.region) stale("the two arcs lie on different regions");
  if (!p.regions()[z.region].is_disc()) stale("region " + p.regions()[z.region].id + " is not a disc");
  for (const ArcState& st : p.oriented_circuit(z.region, 0)) {
    if (st.kind != ArcKind::Edge) continue;
    if (st.index == z.l && st.slot == z.a) z.yl = -st.dir;
    if (st.index == z.m && st.slot == z.b) z.ym = st.dir;
  }
  return z;
}

std::array<int, 3> wings_of(int s0, int w0, int s1, int w1, int s2, int w2) {
  std::array<int, 3> out{};
  out[s0] = w0;
  out[s1] = w1;
  out[s2] = w2;
  return out;
}

}  // namespace

std::vector<std::string> sites_zero_two(const Shadow& s) {
  const Polyhedron& p = s.poly;
  std::vector<std::string> out;
  for (int r = 0; r < p.num_regions(); ++r) {
    if (!p.regions()[r].is_disc()) continue;
    const auto& arcs = disc_circuit(p, r);
    for (const ArcState& x : arcs)
      for (const ArcState& y : arcs) {
        if (x.kind != ArcKind::Edge || y.kind != ArcKind::Edge || x.index == y.index) continue;
        for (int v = 0; v < 3; ++v)
          for (int w = 0; w < 3; ++w) {
            if (v == x.slot || w == y.slot) continue;
            out.push_back(p.edges()[x.index].id + "." + std::to_string(x.slot) + "." + std::to_string(v) + ":" +
                          p.edges()[y.index].id + "." + std::to_string(y.slot) + "." + std::to_string(w));
          }
      }
  }
  return out;
}

Outcome apply_zero_two(const Shadow& s, const std::string& anchor) {
  const ZeroTwoSite z = match_zero_two(s, anchor);
  const Polyhedron& p = s.poly;
  const Edge L = p.edges()[z.l], M = p.edges()[z.m];
  Work w(s);
  const int p1 = w.add_vertex(), p2 = w.add_vertex();
  const auto l_outer = wings_of(z.a, 2, z.v, 1, z.h, 3);
  const auto l_mid = wings_of(z.a, 2, z.v, 0, z.h, 3);
  const auto m_outer = wings_of(z.b, 0, z.r, 1, z.w, 3);
  const auto m_mid = wings_of(z.b, 0, z.r, 1, z.w, 2);
  const Attachment l_start = L.ends[z.yl > 0 ? 0 : 1], l_end = L.ends[z.yl > 0 ? 1 : 0];
  const Attachment m_start = M.ends[z.ym > 0 ? 0 : 1], m_end = M.ends[z.ym > 0 ? 1 : 0];
  w.d.edges[z.l].ends = {l_start, Attachment{p1, 0, l_outer}};
  const int lmid = w.add_edge({p1, 1, l_mid}, {p2, 1, l_mid});
  const int lhi = w.add_edge({p2, 0, l_outer}, l_end);
  w.d.edges[z.m].ends = {m_start, Attachment{p1, 2, m_outer}};
  w.add_edge({p1, 3, m_mid}, {p2, 3, m_mid});
  w.add_edge({p2, 2, m_outer}, m_end);
  for (int r = 0; r < p.num_regions(); ++r)
    for (ArcState& st : w.d.regions[r].boundary) {
      if (st.kind != ArcKind::Edge) continue;
      if (st.index == z.l) st.dir *= z.yl;
      if (st.index == z.m) st.dir *= z.ym;
    }
  const HalfInt total = s.gleams[z.region];
  w.d.regions[z.region].boundary = {{ArcKind::Edge, z.l, z.a, -1}};
  w.g[z.region] = HalfInt{};
  Region upper;
  upper.boundary = {{ArcKind::Edge, lhi, z.a, -1}};
  const int mu = w.add_region(upper, HalfInt{});
  Region lune;
  lune.boundary = {{ArcKind::Edge, lmid, z.h, 1}};
  const int ln = w.add_region(lune, HalfInt{});
  Shadow out = w.finish(s.name, false);
  const HalfInt lower = mod2_gleam(out.poly, z.region) ? kHalf : HalfInt{};
  out.gleams[z.region] = lower;
  out.gleams[mu] = total - lower;
  const ValidationReport parity = check_parity(out.poly, out.gleams);
  if (!parity.ok()) throw MoveError(MoveError::Kind::Parity, "gleam transfer broke the parity law: " + parity.str());
  return {std::move(out), MoveSite{{MoveType::ZeroTwo, true}, w.d.regions[ln].id}};
}

namespace {

struct ZeroTwoMerge {
  int lune, e1, e2, p1, p2;
  int x, y, z, w, xp, yp, zp, wp;
  int A, B, C, D;
  int lower, upper;
};

const Attachment& end_at_vertex(const Edge& e, int vertex) { return e.ends[e.ends[0].vertex == vertex ? 0 : 1]; }

ZeroTwoMerge match_zero_two_inverse(const Shadow& s, const std::string& anchor) {
  const Polyhedron& p = s.poly;
  ZeroTwoMerge m{};
  m.lune = region_id(p, anchor);
  if (!p.regions()[m.lune].is_disc() || s.gleams[m.lune] != HalfInt{}) stale("region is not a zero-gleam disc");
  const auto& arcs = disc_circuit(p, m.lune);
  if (arcs.size() != 2 || arcs[0].kind != ArcKind::Edge || arcs[1].kind != ArcKind::Edge || arcs[0].index == arcs[1].index)
    stale("region is not a lune over two edges");
  const int first = arcs[0].index < arcs[1].index ? 0 : 1;
  m.e1 = arcs[first].index;
  m.e2 = arcs[1 - first].index;
  const int lune_slot = arcs[first].slot;
  const Edge& e1 = p.edges()[m.e1];
  const Edge& e2 = p.edges()[m.e2];
  m.p1 = std::min(e1.ends[0].vertex, e1.ends[1].vertex);
  m.p2 = std::max(e1.ends[0].vertex, e1.ends[1].vertex);
  if (m.p1 == m.p2) stale("lune edge is a loop");
  if (std::min(e2.ends[0].vertex, e2.ends[1].vertex) != m.p1 || std::max(e2.ends[0].vertex, e2.ends[1].vertex) != m.p2)
    stale("lune edges do not join the same vertices");
  const Attachment& e1a = end_at_vertex(e1, m.p1);
  const Attachment& e1b = end_at_vertex(e1, m.p2);
  const Attachment& e2a = end_at_vertex(e2, m.p1);
  const Attachment& e2b = end_at_vertex(e2, m.p2);
  m.x = e1a.half_edge, m.xp = e1b.half_edge, m.y = e2a.half_edge, m.yp = e2b.half_edge;
  const int sigma = lune_slot == 0 ? 1 : 0;
  m.z = e1a.wings[sigma];
  m.zp = e1b.wings[sigma];
  m.w = 6 - m.x - m.y - m.z;
  m.wp = 6 - m.xp - m.yp - m.zp;
  if (e2b.wings[slot_with_wing(e2a, m.z)] != m.zp) stale("lune edges cross the walls inconsistently");
  m.lower = region_of_wing(p, m.p1, m.z, m.w);
  m.upper = region_of_wing(p, m.p2, m.zp, m.wp);
  if (m.lower == m.upper) stale("the two halves of the cut region coincide");
  if (!p.regions()[m.lower].is_disc() || !p.regions()[m.upper].is_disc()) stale("cut region halves are not discs");
  m.A = p.end_at(m.p1, m.z).first;
  m.B = p.end_at(m.p2, m.zp).first;
  m.C = p.end_at(m.p1, m.w).first;
  m.D = p.end_at(m.p2, m.wp).first;
  const std::array<int, 4> outer{m.A, m.B, m.C, m.D};
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      if (outer[a] == outer[b]) stale("outer edges are not distinct");
  return m;
}

// Joins edges `near` (at p1 half-edge h1) and `far` (at p2 half-edge h2) into
// one edge kept at index `near`; `prime` maps p1 half-edges to p2 ones.
struct Joined {
  std::array<int, 3> far_slot_of;  // slot of `far` matching each slot of `near`
  int near_flip, far_flip;
};

Joined join(Work& w, const Polyhedron& p, int near, int p1, int h1, int far, int p2, int h2,
            const std::array<int, 4>& prime) {
  const Edge& a = p.edges()[near];
  const Edge& b = p.edges()[far];
  const int an = a.ends[0].vertex == p1 && a.ends[0].half_edge == h1 ? 0 : 1;
  const int bn = b.ends[0].vertex == p2 && b.ends[0].half_edge == h2 ? 0 : 1;
  Joined j{};
  Attachment tail = b.ends[1 - bn];
  for (int s = 0; s < 3; ++s) {
    j.far_slot_of[s] = slot_with_wing(b.ends[bn], prime[a.ends[an].wings[s]]);
    tail.wings[s] = b.ends[1 - bn].wings[j.far_slot_of[s]];
  }
  w.d.edges[near].ends = {a.ends[1 - an], tail};
  j.near_flip = an == 1 ? 1 : -1;
  j.far_flip = bn == 0 ? 1 : -1;
  return j;
}

}  // namespace

std::vector<std::string> sites_zero_two_inverse(const Shadow& s) {
  std::vector<std::string> out;
  for (const auto& r : s.poly.regions()) {
    try {
      match_zero_two_inverse(s, r.id);
      out.push_back(r.id);
    } catch (const MoveError&) {
    }
  }
  return out;
}

Outcome apply_zero_two_inverse(const Shadow& s, const std::string& anchor) {
  const ZeroTwoMerge m = match_zero_two_inverse(s, anchor);
  const Polyhedron& p = s.poly;
  Work w(s);
  std::array<int, 4> prime{};
  prime[m.x] = m.xp, prime[m.y] = m.yp, prime[m.z] = m.zp, prime[m.w] = m.wp;
  const Joined jl = join(w, p, m.A, m.p1, m.z, m.B, m.p2, m.zp, prime);
  const Joined jm = join(w, p, m.C, m.p1, m.w, m.D, m.p2, m.wp, prime);
  for (int v : {m.p1, m.p2}) w.kill_vertex(v);
  for (int e : {m.e1, m.e2, m.B, m.D}) w.kill_edge(e);
  w.kill_region(m.lune);
  w.kill_region(m.upper);
  w.g[m.lower] += s.gleams[m.upper];
  const ArcMap map = [&](const ArcState& a) -> std::optional<ArcState> {
    if (a.kind != ArcKind::Edge) return a;
    if (a.index == m.e1 || a.index == m.e2) return std::nullopt;
    for (const auto& [near, far, j] : {std::tuple{m.A, m.B, jl}, std::tuple{m.C, m.D, jm}}) {
      if (a.index == near) return ArcState{ArcKind::Edge, near, a.slot, a.dir * j.near_flip};
      if (a.index == far) {
        const int s = static_cast<int>(std::find(j.far_slot_of.begin(), j.far_slot_of.end(), a.slot) - j.far_slot_of.begin());
        return ArcState{ArcKind::Edge, near, s, a.dir * j.far_flip};
      }
    }
    return a;
  };
  reseed(w, map, {m.lune, m.upper});
  const Edge& A = p.edges()[m.A];
  const Edge& C = p.edges()[m.C];
  const Attachment& an = end_at_vertex(A, m.p1);
  const Attachment& cn = end_at_vertex(C, m.p1);
  const std::string fwd = A.id + "." + std::to_string(slot_with_wing(an, m.w)) + "." +
                          std::to_string(slot_with_wing(an, m.x)) + ":" + C.id + "." +
                          std::to_string(slot_with_wing(cn, m.z)) + "." + std::to_string(slot_with_wing(cn, m.y));
  return {w.finish(s.name), MoveSite{{MoveType::ZeroTwo, false}, fwd}};
}

// ---- TwoThree ----
//
// Letters a, b, c name the slots of the sliding edge and the half-edges they
// lead to; d and e name the edge itself at its start and end vertex. Vertex
// T_X of the triangle carries the four letters other than X.

namespace {

constexpr int kD = 3, kE = 4;

int rank_in(int x, int letter) { return letter < x ? letter : letter - 1; }

int third(int x, int y) { return 3 - x - y; }

}  // namespace

std::vector<std::string> sites_two_three(const Shadow& s) {
  std::vector<std::string> out;
  for (const auto& e : s.poly.edges())
    if (e.ends[0].vertex != e.ends[1].vertex) out.push_back(e.id);
  return out;
}

Outcome apply_two_three(const Shadow& s, const std::string& anchor) {
  const Polyhedron& p = s.poly;
  const int e = edge_by_id(p, anchor);
  const Edge& edge = p.edges()[e];
  if (edge.ends[0].vertex == edge.ends[1].vertex) stale("edge is a loop");
  std::array<std::array<int, 4>, 2> letter{};
  for (int side = 0; side < 2; ++side) {
    const Attachment& at = edge.ends[side];
    letter[side][at.half_edge] = side == 0 ? kD : kE;
    for (int t = 0; t < 3; ++t) letter[side][at.wings[t]] = t;
  }
  Work w(s);
  w.kill_edge(e);
  w.kill_vertex(edge.ends[0].vertex);
  w.kill_vertex(edge.ends[1].vertex);
  std::array<int, 3> tv{};
  for (int x = 0; x < 3; ++x) tv[x] = w.add_vertex();
  for (int f = 0; f < p.num_edges(); ++f) {
    if (f == e) continue;
    for (int end = 0; end < 2; ++end) {
      const Attachment& a = p.edges()[f].ends[end];
      int side = -1;
      if (a.vertex == edge.ends[0].vertex) side = 0;
      if (a.vertex == edge.ends[1].vertex) side = 1;
      if (side < 0) continue;
      const int x = letter[side][a.half_edge];
      Attachment n;
      n.vertex = tv[x];
      n.half_edge = rank_in(x, side == 0 ? kE : kD);
      for (int t = 0; t < 3; ++t) n.wings[t] = rank_in(x, letter[side][a.wings[t]]);
      w.d.edges[f].ends[end] = n;
    }
  }
  int first = -1;
  for (int x = 0; x < 3; ++x) {
    const int y = x == 0 ? 1 : 0, z = x == 2 ? 1 : 2;
    auto internal = [&](int at, int other) {
      return Attachment{tv[at], rank_in(at, other), {rank_in(at, x), rank_in(at, kE), rank_in(at, kD)}};
    };
    const int f = w.add_edge(internal(y, z), internal(z, y));
    if (x == 0) first = f;
  }
  Region triangle;
  triangle.boundary = {{ArcKind::Edge, first, 0, 1}};
  const int r = w.add_region(triangle, HalfInt{});
  reseed(w, drop_edges({e}));
  return {w.finish(s.name), MoveSite{{MoveType::TwoThree, true}, w.d.regions[r].id}};
}

namespace {

struct TwoThreeMatch {
  int triangle;
  std::array<int, 3> vertex;  // T_a, T_b, T_c
  std::array<int, 3> edge;    // f_a, f_b, f_c
  // name[X][h]: letter of half-edge h at T_X.
  std::array<std::array<int, 4>, 3> name;
};

TwoThreeMatch match_two_three_inverse(const Shadow& s, const std::string& anchor) {
  const Polyhedron& p = s.poly;
  TwoThreeMatch m{};
  m.triangle = region_id(p, anchor);
  if (!p.regions()[m.triangle].is_disc() || s.gleams[m.triangle] != HalfInt{}) stale("region is not a zero-gleam disc");
  const auto& arcs = disc_circuit(p, m.triangle);
  if (arcs.size() != 3) stale("region is not a triangle");
  std::vector<int> vs;
  for (const ArcState& a : arcs) {
    if (a.kind != ArcKind::Edge) stale("triangle runs along a circle");
    const Edge& e = p.edges()[a.index];
    if (e.ends[0].vertex == e.ends[1].vertex) stale("triangle edge is a loop");
    vs.push_back(e.ends[0].vertex);
    vs.push_back(e.ends[1].vertex);
  }
  if (arcs[0].index == arcs[1].index || arcs[1].index == arcs[2].index || arcs[0].index == arcs[2].index)
    stale("triangle edges are not distinct");
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  if (vs.size() != 3) stale("triangle vertices are not distinct");
  std::copy(vs.begin(), vs.end(), m.vertex.begin());
  auto pos = [&](int v) { return static_cast<int>(std::find(vs.begin(), vs.end(), v) - vs.begin()); };
  m.edge.fill(-1);
  for (const ArcState& a : arcs) {
    const Edge& e = p.edges()[a.index];
    const int x = third(pos(e.ends[0].vertex), pos(e.ends[1].vertex));
    if (m.edge[x] >= 0) stale("triangle edges repeat a side");
    m.edge[x] = a.index;
  }
  for (auto& row : m.name) row.fill(-1);
  for (int x = 0; x < 3; ++x)
    for (int wdx = 0; wdx < 3; ++wdx) {
      if (wdx == x) continue;
      const Edge& e = p.edges()[m.edge[wdx]];
      m.name[x][end_at_vertex(e, m.vertex[x]).half_edge] = third(x, wdx);
    }
  // Propagate the start-side letter around the triangle.
  int outer = -1;
  for (int h = 0; h < 4; ++h)
    if (m.name[0][h] < 0) {
      outer = h;
      break;
    }
  int h = outer;
  for (int x = 0; x < 3; ++x) {
    const int next = (x + 1) % 3;
    m.name[x][h] = kE;
    const Edge& e = p.edges()[m.edge[third(x, next)]];
    const Attachment& here = end_at_vertex(e, m.vertex[x]);
    h = end_at_vertex(e, m.vertex[next]).wings[slot_with_wing(here, h)];
    if (m.name[next][h] >= 0 && !(next == 0 && h == outer)) stale("triangle sides are twisted");
  }
  if (h != outer) stale("triangle sides are twisted");
  for (auto& row : m.name)
    for (int& n : row)
      if (n < 0) n = kD;
  return m;
}

}  // namespace

std::vector<std::string> sites_two_three_inverse(const Shadow& s) {
  std::vector<std::string> out;
  for (const auto& r : s.poly.regions()) {
    try {
      match_two_three_inverse(s, r.id);
      out.push_back(r.id);
    } catch (const MoveError&) {
    }
  }
  return out;
}

Outcome apply_two_three_inverse(const Shadow& s, const std::string& anchor) {
  const TwoThreeMatch m = match_two_three_inverse(s, anchor);
  const Polyhedron& p = s.poly;
  Work w(s);
  for (int v : m.vertex) w.kill_vertex(v);
  for (int e : m.edge) w.kill_edge(e);
  w.kill_region(m.triangle);
  const int a = w.add_vertex(), b = w.add_vertex();
  for (int f = 0; f < p.num_edges(); ++f) {
    if (std::find(m.edge.begin(), m.edge.end(), f) != m.edge.end()) continue;
    for (int end = 0; end < 2; ++end) {
      const Attachment& at = p.edges()[f].ends[end];
      const int x = static_cast<int>(std::find(m.vertex.begin(), m.vertex.end(), at.vertex) - m.vertex.begin());
      if (x == 3) continue;
      const bool start = m.name[x][at.half_edge] == kE;
      Attachment n;
      n.vertex = start ? a : b;
      n.half_edge = x;
      for (int t = 0; t < 3; ++t) {
        const int l = m.name[x][at.wings[t]];
        n.wings[t] = l >= kD ? 3 : l;
      }
      w.d.edges[f].ends[end] = n;
    }
  }
  const int e = w.add_edge({a, 3, {0, 1, 2}}, {b, 3, {0, 1, 2}});
  reseed(w, drop_edges({m.edge[0], m.edge[1], m.edge[2]}), {m.triangle});
  return {w.finish(s.name), MoveSite{{MoveType::TwoThree, false}, w.d.edges[e].id}};
}

}  // namespace shadow::detail
