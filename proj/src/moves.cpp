#include "shadow/moves.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "moves_internal.hpp"
#include "shadow/canonical.hpp"

namespace shadow {

namespace {

constexpr std::array<std::pair<MoveType, const char*>, 7> kNames{{
    {MoveType::OneTwo, "onetwo"},
    {MoveType::ZeroTwo, "zerotwo"},
    {MoveType::TwoThree, "twothree"},
    {MoveType::Bubble0, "bubble0"},
    {MoveType::BubblePlus, "bubble+"},
    {MoveType::BubbleMinus, "bubble-"},
    {MoveType::Trading, "trading"},
}};

}  // namespace

std::string MoveKind::name() const {
  for (const auto& [t, n] : kNames)
    if (t == type) return std::string(n) + (inverse ? "-inv" : "");
  return "?";
}

std::optional<MoveKind> MoveKind::parse(std::string_view text) {
  MoveKind k;
  if (text.size() > 4 && text.substr(text.size() - 4) == "-inv") {
    k.inverse = true;
    text.remove_suffix(4);
  }
  for (const auto& [t, n] : kNames)
    if (text == n) {
      k.type = t;
      return k;
    }
  return std::nullopt;
}

int MoveKind::vertex_delta() const {
  int d = 0;
  switch (type) {
    case MoveType::OneTwo: d = 1; break;
    case MoveType::ZeroTwo: d = 2; break;
    case MoveType::TwoThree: d = 1; break;
    default: d = 0;
  }
  return inverse ? -d : d;
}

bool MoveKind::supported() const {
  return !(inverse && (type == MoveType::BubblePlus || type == MoveType::BubbleMinus));
}

const std::vector<MoveKind>& all_move_kinds() {
  static const std::vector<MoveKind> kinds = {
      {MoveType::OneTwo, false},  {MoveType::OneTwo, true},     {MoveType::ZeroTwo, false},
      {MoveType::ZeroTwo, true},  {MoveType::TwoThree, false},  {MoveType::TwoThree, true},
      {MoveType::Bubble0, false}, {MoveType::Bubble0, true},    {MoveType::BubblePlus, false},
      {MoveType::BubbleMinus, false}, {MoveType::Trading, false}, {MoveType::Trading, true},
  };
  return kinds;
}

const std::vector<MoveKind>& equivalence_kinds() {
  static const std::vector<MoveKind> kinds = {
      {MoveType::OneTwo, false},  {MoveType::OneTwo, true},   {MoveType::ZeroTwo, false},
      {MoveType::ZeroTwo, true},  {MoveType::TwoThree, false}, {MoveType::TwoThree, true},
  };
  return kinds;
}

MoveError::MoveError(Kind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}

namespace detail {

void stale(const std::string& message) { throw MoveError(MoveError::Kind::Stale, "stale site: " + message); }

Work::Work(const Shadow& s) : d(s.poly.data()), g(s.gleams), old_(s.poly) {
  for (const auto& v : d.vertices) ids_.insert(v.id);
  for (const auto& e : d.edges) ids_.insert(e.id);
  for (const auto& c : d.circles) ids_.insert(c.id);
  for (const auto& r : d.regions) ids_.insert(r.id);
  vertex_dead_.assign(d.vertices.size(), 0);
  edge_dead_.assign(d.edges.size(), 0);
  circle_dead_.assign(d.circles.size(), 0);
  region_dead_.assign(d.regions.size(), 0);
}

std::string Work::fresh(const std::string& prefix) {
  for (int n = 0;; ++n) {
    std::string id = prefix + std::to_string(n);
    if (ids_.insert(id).second) return id;
  }
}

int Work::add_vertex() {
  d.vertices.push_back({fresh("v")});
  vertex_dead_.push_back(0);
  return static_cast<int>(d.vertices.size()) - 1;
}

int Work::add_edge(const Attachment& a, const Attachment& b) {
  Edge e;
  e.id = fresh("e");
  e.ends = {a, b};
  d.edges.push_back(e);
  edge_dead_.push_back(0);
  return static_cast<int>(d.edges.size()) - 1;
}

int Work::add_circle(const std::array<int, 3>& monodromy) {
  d.circles.push_back({fresh("c"), monodromy});
  circle_dead_.push_back(0);
  return static_cast<int>(d.circles.size()) - 1;
}

int Work::add_region(Region r, HalfInt gleam) {
  r.id = fresh("r");
  d.regions.push_back(std::move(r));
  g.push_back(gleam);
  region_dead_.push_back(0);
  return static_cast<int>(d.regions.size()) - 1;
}

Shadow Work::finish(const std::string& name, bool check_parity) const {
  auto index_map = [](const std::vector<char>& dead) {
    std::vector<int> m(dead.size(), -1);
    int n = 0;
    for (std::size_t k = 0; k < dead.size(); ++k)
      if (!dead[k]) m[k] = n++;
    return m;
  };
  const auto vm = index_map(vertex_dead_), em = index_map(edge_dead_), cm = index_map(circle_dead_),
             rm = index_map(region_dead_);
  PolyhedronData out;
  GleamAssignment gl;
  for (std::size_t v = 0; v < d.vertices.size(); ++v)
    if (vm[v] >= 0) out.vertices.push_back(d.vertices[v]);
  for (std::size_t e = 0; e < d.edges.size(); ++e) {
    if (em[e] < 0) continue;
    Edge ne = d.edges[e];
    for (auto& a : ne.ends) {
      if (vm[a.vertex] < 0) throw MoveError(MoveError::Kind::Internal, "edge " + ne.id + " attached to a removed vertex");
      a.vertex = vm[a.vertex];
    }
    out.edges.push_back(ne);
  }
  for (std::size_t c = 0; c < d.circles.size(); ++c)
    if (cm[c] >= 0) out.circles.push_back(d.circles[c]);
  for (std::size_t r = 0; r < d.regions.size(); ++r) {
    if (rm[r] < 0) continue;
    Region nr = d.regions[r];
    for (auto& s : nr.boundary) {
      const int idx = s.kind == ArcKind::Edge ? em[s.index] : cm[s.index];
      if (idx < 0) throw MoveError(MoveError::Kind::Internal, "region " + nr.id + " seeded on a removed arc");
      s.index = idx;
    }
    out.regions.push_back(std::move(nr));
    gl.push_back(g[r]);
  }
  ValidationReport report = validate(out);
  if (!report.ok()) throw MoveError(MoveError::Kind::Internal, "rewrite produced an invalid polyhedron: " + report.str());
  Shadow result{Polyhedron(std::move(out)), std::move(gl), name};
  if (check_parity) {
    ValidationReport parity = shadow::check_parity(result.poly, result.gleams);
    if (!parity.ok())
      throw MoveError(MoveError::Kind::Parity, "gleam transfer broke the parity law: " + parity.str());
  }
  return result;
}

ArcState first_mapped(const Polyhedron& old, int region, int entry, const ArcMap& map) {
  for (const ArcState& s : old.oriented_circuit(region, entry))
    if (auto m = map(s)) return *m;
  throw MoveError(MoveError::Kind::Internal, "boundary circuit of " + old.regions()[region].id + " vanished");
}

void reseed(Work& w, const ArcMap& map, const std::vector<int>& skip_regions) {
  const Polyhedron& old = w.old();
  for (int r = 0; r < old.num_regions(); ++r) {
    if (std::find(skip_regions.begin(), skip_regions.end(), r) != skip_regions.end()) continue;
    auto& boundary = w.d.regions[r].boundary;
    for (std::size_t k = 0; k < boundary.size(); ++k) boundary[k] = first_mapped(old, r, static_cast<int>(k), map);
  }
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t k = text.find(sep, start);
    out.emplace_back(text.substr(start, k == std::string_view::npos ? std::string_view::npos : k - start));
    if (k == std::string_view::npos) break;
    start = k + 1;
  }
  return out;
}

int parse_digit(std::string_view text, int hi) {
  if (text.size() != 1 || text[0] < '0' || text[0] > '0' + hi) stale("expected a digit 0.." + std::to_string(hi));
  return text[0] - '0';
}

int region_of_wing(const Polyhedron& p, int vertex, int i, int j) {
  const auto [e, end] = p.end_at(vertex, i);
  const Attachment& a = p.edges()[e].ends[end];
  for (int s = 0; s < 3; ++s)
    if (a.wings[s] == j) return p.region_of_arc(ArcKind::Edge, e, s);
  throw MoveError(MoveError::Kind::Internal, "wing lookup failed");
}

void require_parity_ok(const Shadow& s) {
  ValidationReport parity = check_parity(s.poly, s.gleams);
  if (!parity.ok()) throw MoveError(MoveError::Kind::Precondition, "input violates the parity law: " + parity.str());
}

}  // namespace detail

namespace {

using namespace detail;

int region_by_id(const Polyhedron& p, const std::string& id) {
  const int r = p.find_region(id);
  if (r < 0) stale("unknown region '" + id + "'");
  return r;
}

int circle_by_id(const Polyhedron& p, const std::string& id) {
  const int c = p.find_circle(id);
  if (c < 0) stale("unknown circle '" + id + "'");
  return c;
}

bool identity_monodromy(const Circle& c) { return c.monodromy == std::array<int, 3>{0, 1, 2}; }

bool all_integer(const GleamAssignment& g) {
  return std::all_of(g.begin(), g.end(), [](HalfInt x) { return x.is_integer(); });
}

bool is_annulus(const Region& r) { return r.genus == 0 && r.orientable && r.boundary.size() == 2; }

// Boundary entry of region r whose circuit is `circuit`, or -1.
int entry_of_circuit(const Polyhedron& p, int r, int circuit) {
  const auto& b = p.boundary(r);
  for (std::size_t k = 0; k < b.size(); ++k)
    if (b[k].circuit == circuit) return static_cast<int>(k);
  return -1;
}

// True when region s is a sheet along some arc of the circuit.
bool touches(const Polyhedron& p, int s, int circuit) {
  for (const ArcState& a : p.circuits()[circuit].arcs)
    for (int t = 0; t < 3; ++t)
      if (t != a.slot && p.region_of_arc(a.kind, a.index, t) == s) return true;
  return false;
}

ArcMap identity_except_circle(int circle) {
  return [circle](const ArcState& a) -> std::optional<ArcState> {
    if (a.kind == ArcKind::Circle && a.index == circle) return std::nullopt;
    return a;
  };
}

// ---- Bubble ----

Outcome apply_bubble(const Shadow& s, MoveType type, const std::string& anchor) {
  const int r = region_by_id(s.poly, anchor);
  Work w(s);
  const int c = w.add_circle({0, 1, 2});
  w.d.regions[r].boundary.push_back({ArcKind::Circle, c, 0, 1});
  Region inner;
  inner.boundary = {{ArcKind::Circle, c, 1, 1}};
  w.add_region(inner, HalfInt{});
  Region cap;
  cap.boundary = {{ArcKind::Circle, c, 2, 1}};
  HalfInt gleam{};
  if (type == MoveType::BubblePlus) gleam = HalfInt::integer(1);
  if (type == MoveType::BubbleMinus) gleam = HalfInt::integer(-1);
  w.add_region(cap, gleam);
  Outcome out{w.finish(s.name), std::nullopt};
  if (type == MoveType::Bubble0)
    out.inverse_site = MoveSite{{MoveType::Bubble0, true}, w.d.circles[c].id + ".0"};
  return out;
}

struct BubbleMatch {
  int circle, kept, disc1, disc2;
};

BubbleMatch match_bubble_inverse(const Shadow& s, const std::string& anchor) {
  const auto parts = split(anchor, '.');
  if (parts.size() != 2) stale("expected <circle>.<slot>");
  const Polyhedron& p = s.poly;
  const int c = circle_by_id(p, parts[0]);
  const int k = parse_digit(parts[1], 2);
  if (!identity_monodromy(p.circles()[c])) stale("circle monodromy is not the identity");
  const int s1 = (k + 1) % 3, s2 = (k + 2) % 3;
  BubbleMatch m{c, p.region_of_arc(ArcKind::Circle, c, k), p.region_of_arc(ArcKind::Circle, c, s1),
                p.region_of_arc(ArcKind::Circle, c, s2)};
  if (m.disc1 == m.disc2 || m.disc1 == m.kept || m.disc2 == m.kept) stale("bubble regions are not distinct");
  for (int d : {m.disc1, m.disc2}) {
    if (!p.regions()[d].is_disc()) stale("bubble region " + p.regions()[d].id + " is not a disc");
    if (s.gleams[d] != HalfInt{}) stale("bubble disc " + p.regions()[d].id + " has nonzero gleam");
  }
  return m;
}

Outcome apply_bubble_inverse(const Shadow& s, const std::string& anchor) {
  const BubbleMatch m = match_bubble_inverse(s, anchor);
  const Polyhedron& p = s.poly;
  Work w(s);
  w.kill_circle(m.circle);
  w.kill_region(m.disc1);
  w.kill_region(m.disc2);
  const ArcMap map = identity_except_circle(m.circle);
  reseed(w, map, {m.kept, m.disc1, m.disc2});
  const int circuit = p.circuit_of(ArcKind::Circle, m.circle, std::stoi(split(anchor, '.')[1]));
  std::vector<ArcState> boundary;
  for (std::size_t k = 0; k < p.regions()[m.kept].boundary.size(); ++k)
    if (p.boundary(m.kept)[k].circuit != circuit) boundary.push_back(first_mapped(p, m.kept, static_cast<int>(k), map));
  w.d.regions[m.kept].boundary = boundary;
  return {w.finish(s.name), MoveSite{{MoveType::Bubble0, false}, p.regions()[m.kept].id}};
}

std::vector<std::string> sites_bubble_inverse(const Shadow& s) {
  std::vector<std::string> out;
  for (const auto& c : s.poly.circles())
    for (int k = 0; k < 3; ++k) {
      const std::string anchor = c.id + "." + std::to_string(k);
      try {
        match_bubble_inverse(s, anchor);
        out.push_back(anchor);
      } catch (const MoveError&) {
      }
    }
  return out;
}

// ---- Trading ----

struct TradingMatch {
  int circle, cut_slot, cap_slot, other_slot;
  int cut, cap, other, strip;
};

TradingMatch match_trading(const Shadow& s, const std::string& anchor) {
  const auto parts = split(anchor, ':');
  if (parts.size() != 2) stale("expected <circle>.<cut slot>.<cap slot>:<strip>");
  const auto head = split(parts[0], '.');
  if (head.size() != 3) stale("expected <circle>.<cut slot>.<cap slot>");
  const Polyhedron& p = s.poly;
  TradingMatch m{};
  m.circle = circle_by_id(p, head[0]);
  m.cut_slot = parse_digit(head[1], 2);
  m.cap_slot = parse_digit(head[2], 2);
  if (m.cut_slot == m.cap_slot) stale("cut and cap slots coincide");
  m.other_slot = 3 - m.cut_slot - m.cap_slot;
  if (!identity_monodromy(p.circles()[m.circle])) stale("circle monodromy is not the identity");
  if (!all_integer(s.gleams)) stale("trading needs an integer shadowed polyhedron");
  m.cut = p.region_of_arc(ArcKind::Circle, m.circle, m.cut_slot);
  m.cap = p.region_of_arc(ArcKind::Circle, m.circle, m.cap_slot);
  m.other = p.region_of_arc(ArcKind::Circle, m.circle, m.other_slot);
  if (m.cut == m.cap || m.cut == m.other || m.cap == m.other) stale("bridge regions are not distinct");
  if (!p.regions()[m.cut].is_disc() || s.gleams[m.cut] != HalfInt{}) stale("cutting region is not a zero-gleam disc");
  for (int r : {m.cap, m.other})
    if (!is_annulus(p.regions()[r]) || s.gleams[r] != HalfInt{})
      stale("cylinder region " + p.regions()[r].id + " is not a zero-gleam annulus");
  m.strip = region_by_id(p, parts[1]);
  if (m.strip == m.cut || m.strip == m.cap || m.strip == m.other) stale("strip is part of the bridge");
  for (int r : {m.cap, m.other}) {
    const int here = p.circuit_of(ArcKind::Circle, m.circle, r == m.cap ? m.cap_slot : m.other_slot);
    const int end = p.boundary(r)[0].circuit == here ? p.boundary(r)[1].circuit : p.boundary(r)[0].circuit;
    if (!touches(p, m.strip, end)) stale("strip does not reach both cylinder ends");
  }
  return m;
}

Outcome apply_trading(const Shadow& s, const std::string& anchor) {
  const TradingMatch m = match_trading(s, anchor);
  const Polyhedron& p = s.poly;
  Work w(s);
  const int here = p.circuit_of(ArcKind::Circle, m.circle, m.cap_slot);
  const int entry = entry_of_circuit(p, m.cap, here);
  const int flag = p.regions()[m.cap].boundary[entry].dir;
  auto& b = w.d.regions[m.cap].boundary;
  b.erase(b.begin() + entry);
  Region little;
  little.boundary = {{ArcKind::Circle, m.circle, m.cap_slot, 1}};
  w.add_region(little, HalfInt{});
  const std::string inv = p.circles()[m.circle].id + "." + std::to_string(m.cap_slot) + ":" +
                          p.regions()[m.cap].id + ":" + p.regions()[m.strip].id + ":" + (flag > 0 ? "+" : "-");
  return {w.finish(s.name), MoveSite{{MoveType::Trading, true}, inv}};
}

std::vector<std::string> sites_trading(const Shadow& s) {
  std::vector<std::string> out;
  for (const auto& c : s.poly.circles())
    for (int z = 0; z < 3; ++z)
      for (int cap = 0; cap < 3; ++cap) {
        if (cap == z) continue;
        for (const auto& r : s.poly.regions()) {
          const std::string anchor = c.id + "." + std::to_string(z) + "." + std::to_string(cap) + ":" + r.id;
          try {
            match_trading(s, anchor);
            out.push_back(anchor);
          } catch (const MoveError&) {
          }
        }
      }
  return out;
}

struct TradingInverseMatch {
  int circle, little_slot, inner_slot;
  int little, inner, annulus, cap, strip, flag;
};

TradingInverseMatch match_trading_inverse(const Shadow& s, const std::string& anchor) {
  const auto parts = split(anchor, ':');
  if (parts.size() != 4) stale("expected <circle>.<slot>:<cap>:<strip>:<+|->");
  const auto head = split(parts[0], '.');
  if (head.size() != 2) stale("expected <circle>.<slot>");
  const Polyhedron& p = s.poly;
  TradingInverseMatch m{};
  m.circle = circle_by_id(p, head[0]);
  m.little_slot = parse_digit(head[1], 2);
  if (parts[3] != "+" && parts[3] != "-") stale("expected orientation flag + or -");
  m.flag = parts[3] == "+" ? 1 : -1;
  if (!identity_monodromy(p.circles()[m.circle])) stale("circle monodromy is not the identity");
  if (!all_integer(s.gleams)) stale("trading needs an integer shadowed polyhedron");
  m.little = p.region_of_arc(ArcKind::Circle, m.circle, m.little_slot);
  if (!p.regions()[m.little].is_disc() || s.gleams[m.little] != HalfInt{}) stale("little region is not a zero-gleam disc");
  const int s1 = (m.little_slot + 1) % 3, s2 = (m.little_slot + 2) % 3;
  const int r1 = p.region_of_arc(ArcKind::Circle, m.circle, s1);
  const int r2 = p.region_of_arc(ArcKind::Circle, m.circle, s2);
  if (r1 == r2 || r1 == m.little || r2 == m.little) stale("regions at the circle are not distinct");
  auto zero_disc = [&](int r) { return p.regions()[r].is_disc() && s.gleams[r] == HalfInt{}; };
  auto zero_annulus = [&](int r) { return is_annulus(p.regions()[r]) && s.gleams[r] == HalfInt{}; };
  if (zero_disc(r1) && zero_annulus(r2)) {
    m.inner = r1, m.annulus = r2, m.inner_slot = s1;
  } else if (zero_disc(r2) && zero_annulus(r1)) {
    m.inner = r2, m.annulus = r1, m.inner_slot = s2;
  } else {
    stale("circle does not carry a zero-gleam disc and a zero-gleam annulus");
  }
  m.cap = region_by_id(p, parts[1]);
  if (m.cap == m.little || m.cap == m.inner || m.cap == m.annulus) stale("cap region is part of the circle");
  if (!zero_disc(m.cap)) stale("cap region is not a zero-gleam disc");
  m.strip = region_by_id(p, parts[2]);
  if (m.strip == m.cap || m.strip == m.little || m.strip == m.inner || m.strip == m.annulus)
    stale("strip is part of the capped configuration");
  const int annulus_here = p.circuit_of(ArcKind::Circle, m.circle, m.annulus == r1 ? s1 : s2);
  const int far = p.boundary(m.annulus)[0].circuit == annulus_here ? p.boundary(m.annulus)[1].circuit
                                                                    : p.boundary(m.annulus)[0].circuit;
  if (!touches(p, m.strip, p.boundary(m.cap)[0].circuit) || !touches(p, m.strip, far))
    stale("strip does not reach both caps");
  return m;
}

Outcome apply_trading_inverse(const Shadow& s, const std::string& anchor) {
  const TradingInverseMatch m = match_trading_inverse(s, anchor);
  const Polyhedron& p = s.poly;
  Work w(s);
  w.kill_region(m.little);
  w.d.regions[m.cap].boundary.push_back({ArcKind::Circle, m.circle, m.little_slot, m.flag});
  const std::string fwd = p.circles()[m.circle].id + "." + std::to_string(m.inner_slot) + "." +
                          std::to_string(m.little_slot) + ":" + p.regions()[m.strip].id;
  return {w.finish(s.name), MoveSite{{MoveType::Trading, false}, fwd}};
}

std::vector<std::string> sites_trading_inverse(const Shadow& s) {
  std::vector<std::string> out;
  for (const auto& c : s.poly.circles())
    for (int l = 0; l < 3; ++l)
      for (const auto& cap : s.poly.regions())
        for (const auto& strip : s.poly.regions())
          for (const char* flag : {"+", "-"}) {
            const std::string anchor = c.id + "." + std::to_string(l) + ":" + cap.id + ":" + strip.id + ":" + flag;
            try {
              match_trading_inverse(s, anchor);
              out.push_back(anchor);
            } catch (const MoveError&) {
            }
          }
  return out;
}

}  // namespace

std::vector<MoveSite> enumerate_sites(const Shadow& s, MoveKind kind) {
  std::vector<std::string> anchors;
  switch (kind.type) {
    case MoveType::OneTwo:
      anchors = kind.inverse ? sites_one_two_inverse(s) : sites_one_two(s);
      break;
    case MoveType::ZeroTwo:
      anchors = kind.inverse ? sites_zero_two_inverse(s) : sites_zero_two(s);
      break;
    case MoveType::TwoThree:
      anchors = kind.inverse ? sites_two_three_inverse(s) : sites_two_three(s);
      break;
    case MoveType::Bubble0:
    case MoveType::BubblePlus:
    case MoveType::BubbleMinus:
      if (!kind.inverse) {
        for (const auto& r : s.poly.regions()) anchors.push_back(r.id);
      } else if (kind.type == MoveType::Bubble0) {
        anchors = sites_bubble_inverse(s);
      }
      break;
    case MoveType::Trading:
      anchors = kind.inverse ? sites_trading_inverse(s) : sites_trading(s);
      break;
  }
  std::vector<MoveSite> out;
  out.reserve(anchors.size());
  for (auto& a : anchors) out.push_back({kind, std::move(a)});
  return out;
}

MoveResult apply_move(const Shadow& s, const MoveSite& site, const std::string* parent_form) {
  if (!site.kind.supported())
    throw MoveError(MoveError::Kind::Unsupported, site.kind.name() + " is not supported");
  require_parity_ok(s);
  Outcome out = [&]() -> Outcome {
    const bool inv = site.kind.inverse;
    switch (site.kind.type) {
      case MoveType::OneTwo:
        return inv ? apply_one_two_inverse(s, site.anchor) : apply_one_two(s, site.anchor);
      case MoveType::ZeroTwo:
        return inv ? apply_zero_two_inverse(s, site.anchor) : apply_zero_two(s, site.anchor);
      case MoveType::TwoThree:
        return inv ? apply_two_three_inverse(s, site.anchor) : apply_two_three(s, site.anchor);
      case MoveType::Bubble0:
      case MoveType::BubblePlus:
      case MoveType::BubbleMinus:
        return inv ? apply_bubble_inverse(s, site.anchor) : apply_bubble(s, site.kind.type, site.anchor);
      case MoveType::Trading:
        return inv ? apply_trading_inverse(s, site.anchor) : apply_trading(s, site.anchor);
    }
    throw MoveError(MoveError::Kind::Internal, "unknown move kind");
  }();
  MoveResult result{std::move(out.shadow), {site, parent_form ? *parent_form : canonical_form(s)}, out.inverse_site};
  return result;
}

}  // namespace shadow
