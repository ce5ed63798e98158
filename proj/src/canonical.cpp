#include "shadow/canonical.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "shadow/stf.hpp"

namespace shadow {

ArcState Relabeling::map(const ArcState& s) const {
  if (s.kind == ArcKind::Edge)
    return {ArcKind::Edge, edge[s.index], edge_slot[s.index][s.slot], s.dir * edge_flip[s.index]};
  return {ArcKind::Circle, circle[s.index], circle_slot[s.index][s.slot], s.dir * circle_flip[s.index]};
}

std::string Relabeling::str(const Polyhedron& from, const Polyhedron& to) const {
  std::ostringstream out;
  for (int v = 0; v < from.num_vertices(); ++v) {
    out << "vertex " << from.vertices()[v].id << " -> " << to.vertices()[vertex[v]].id << " half-edges 0123 -> ";
    for (int h = 0; h < 4; ++h) out << half_edge[v][h];
    out << "\n";
  }
  for (int e = 0; e < from.num_edges(); ++e) {
    out << "edge " << from.edges()[e].id << " -> " << to.edges()[edge[e]].id
        << (edge_flip[e] < 0 ? " reversed" : " same") << " slots 012 -> ";
    for (int s = 0; s < 3; ++s) out << edge_slot[e][s];
    out << "\n";
  }
  for (int c = 0; c < from.num_circles(); ++c) {
    out << "circle " << from.circles()[c].id << " -> " << to.circles()[circle[c]].id
        << (circle_flip[c] < 0 ? " reversed" : " same") << " slots 012 -> ";
    for (int s = 0; s < 3; ++s) out << circle_slot[c][s];
    out << "\n";
  }
  for (int r = 0; r < from.num_regions(); ++r)
    out << "region " << from.regions()[r].id << " -> " << to.regions()[region[r]].id << "\n";
  return out.str();
}

PolyhedronData relabeled(const Polyhedron& p, const Relabeling& map) {
  PolyhedronData out;
  out.vertices.resize(p.num_vertices());
  for (int v = 0; v < p.num_vertices(); ++v) out.vertices[map.vertex[v]].id = "v" + std::to_string(map.vertex[v]);
  out.edges.resize(p.num_edges());
  for (int e = 0; e < p.num_edges(); ++e) {
    const Edge& old = p.edges()[e];
    Edge& ne = out.edges[map.edge[e]];
    ne.id = "e" + std::to_string(map.edge[e]);
    for (int k = 0; k < 2; ++k) {
      const Attachment& a = old.ends[map.edge_flip[e] > 0 ? k : 1 - k];
      Attachment& b = ne.ends[k];
      b.vertex = map.vertex[a.vertex];
      b.half_edge = map.half_edge[a.vertex][a.half_edge];
      for (int s = 0; s < 3; ++s) b.wings[map.edge_slot[e][s]] = map.half_edge[a.vertex][a.wings[s]];
    }
  }
  out.circles.resize(p.num_circles());
  for (int c = 0; c < p.num_circles(); ++c) {
    const auto& mu = p.circles()[c].monodromy;
    std::array<int, 3> inv{};
    for (int s = 0; s < 3; ++s) inv[mu[s]] = s;
    const auto& sigma = map.circle_slot[c];
    Circle& nc = out.circles[map.circle[c]];
    nc.id = "c" + std::to_string(map.circle[c]);
    for (int s = 0; s < 3; ++s) nc.monodromy[sigma[s]] = sigma[map.circle_flip[c] > 0 ? mu[s] : inv[s]];
  }
  out.regions.resize(p.num_regions());
  for (int r = 0; r < p.num_regions(); ++r) {
    const Region& old = p.regions()[r];
    Region& nr = out.regions[map.region[r]];
    nr = old;
    nr.id = "r" + std::to_string(map.region[r]);
    for (auto& s : nr.boundary) s = map.map(s);
  }
  return out;
}

namespace {

constexpr std::array<std::array<int, 4>, 24> kPerm4 = [] {
  std::array<std::array<int, 4>, 24> out{};
  std::array<int, 4> p{0, 1, 2, 3};
  int k = 0;
  do out[k++] = p;
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}();

constexpr std::array<std::array<int, 3>, 6> kPerm3 = [] {
  std::array<std::array<int, 3>, 6> out{};
  std::array<int, 3> p{0, 1, 2};
  int k = 0;
  do out[k++] = p;
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}();

std::string triple_str(const std::array<int, 3>& t) {
  return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
}

std::string seed_name(const ArcState& s) {
  return (s.kind == ArcKind::Edge ? "e" : "c") + std::to_string(s.index) + "." + std::to_string(s.slot) +
         (s.dir > 0 ? "+" : "-");
}

/// Labeling of one vertex component produced by a rooted traversal.
struct ComponentLabel {
  std::vector<int> vertices;  // traversal order
  std::vector<std::array<int, 4>> half_edge;  // indexed by position in `vertices`
  std::vector<int> edges;  // discovery order
  std::vector<int> flip;
  std::vector<std::array<int, 3>> slot;
  std::string text;
};

struct CircleLabel {
  int flip = 1;
  std::array<int, 3> slot{};
};

class Labeler {
 public:
  Labeler(const Polyhedron& p, const GleamAssignment* gleams) : p_(p), gleams_(gleams) {}

  CanonicalLabeling run();

 private:
  const Polyhedron& p_;
  const GleamAssignment* gleams_;

  struct Group {
    std::string text;
    std::vector<std::vector<ComponentLabel>> members;  // per member: optimal labels
  };
  struct CircleGroup {
    std::string text;
    std::vector<int> circles;
    std::vector<std::vector<CircleLabel>> options;
    /// Members with equal signatures are exchanged by an automorphism.
    std::vector<std::string> signature;
  };

  std::vector<Group> groups_;
  std::vector<CircleGroup> circle_groups_;

  ComponentLabel traverse(int root, const std::array<int, 4>& sigma, int component_size) const;
  void build_groups();
  void refine_circles();
  std::string region_attributes(int r) const;
  std::string region_text(const Relabeling& map, std::vector<int>& order) const;
};

ComponentLabel Labeler::traverse(int root, const std::array<int, 4>& sigma, int component_size) const {
  ComponentLabel out;
  std::vector<int> local(p_.num_vertices(), -1);
  std::vector<char> edge_seen(p_.num_edges(), 0);
  out.vertices.reserve(component_size);
  local[root] = 0;
  out.vertices.push_back(root);
  out.half_edge.push_back(sigma);
  std::ostringstream text;
  for (std::size_t qi = 0; qi < out.vertices.size(); ++qi) {
    const int v = out.vertices[qi];
    std::array<int, 4> inverse{};
    for (int h = 0; h < 4; ++h) inverse[out.half_edge[qi][h]] = h;
    for (int label = 0; label < 4; ++label) {
      const int h = inverse[label];
      const auto [e, end] = p_.end_at(v, h);
      if (edge_seen[e]) continue;
      edge_seen[e] = 1;
      const Attachment& a = p_.edges()[e].ends[end];
      const Attachment& b = p_.edges()[e].ends[1 - end];
      std::array<int, 3> order{0, 1, 2};
      std::sort(order.begin(), order.end(), [&](int x, int y) {
        return out.half_edge[qi][a.wings[x]] < out.half_edge[qi][a.wings[y]];
      });
      std::array<int, 3> slot{};
      for (int k = 0; k < 3; ++k) slot[order[k]] = k;
      const int w = b.vertex;
      if (local[w] < 0) {
        local[w] = static_cast<int>(out.vertices.size());
        out.vertices.push_back(w);
        std::array<int, 4> hl{};
        hl[b.half_edge] = 0;
        for (int s = 0; s < 3; ++s) hl[b.wings[s]] = slot[s] + 1;
        out.half_edge.push_back(hl);
      }
      out.edges.push_back(e);
      out.flip.push_back(end == 0 ? 1 : -1);
      out.slot.push_back(slot);
      const int lw = local[w];
      std::array<int, 3> wa{}, wb{};
      for (int s = 0; s < 3; ++s) {
        wa[slot[s]] = out.half_edge[qi][a.wings[s]];
        wb[slot[s]] = out.half_edge[lw][b.wings[s]];
      }
      text << qi << "." << label << triple_str(wa) << lw << "." << out.half_edge[lw][b.half_edge]
           << triple_str(wb) << ";";
    }
  }
  out.text = text.str();
  return out;
}

}  // namespace

namespace {

void Labeler::build_groups() {
  const int nv = p_.num_vertices();
  std::vector<int> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const auto& e : p_.edges()) parent[find(e.ends[0].vertex)] = find(e.ends[1].vertex);
  std::map<int, std::vector<int>> comps;
  for (int v = 0; v < nv; ++v) comps[find(v)].push_back(v);

  std::map<std::string, Group> by_text;
  for (const auto& [rep, verts] : comps) {
    std::vector<ComponentLabel> best;
    for (int root : verts) {
      for (const auto& sigma : kPerm4) {
        ComponentLabel c = traverse(root, sigma, static_cast<int>(verts.size()));
        if (best.empty() || c.text < best.front().text) {
          best.clear();
          best.push_back(std::move(c));
        } else if (c.text == best.front().text) {
          best.push_back(std::move(c));
        }
      }
    }
    Group& g = by_text[best.front().text];
    g.text = best.front().text;
    g.members.push_back(std::move(best));
  }
  for (auto& [text, g] : by_text) groups_.push_back(std::move(g));

  std::map<std::string, CircleGroup> circles_by_text;
  for (int c = 0; c < p_.num_circles(); ++c) {
    const auto& mu = p_.circles()[c].monodromy;
    std::array<int, 3> inv{};
    for (int s = 0; s < 3; ++s) inv[mu[s]] = s;
    std::string best_text;
    std::vector<CircleLabel> best;
    for (int flip : {1, -1}) {
      for (const auto& sigma : kPerm3) {
        std::array<int, 3> image{};
        for (int s = 0; s < 3; ++s) image[sigma[s]] = sigma[flip > 0 ? mu[s] : inv[s]];
        const std::string text = triple_str(image);
        if (best.empty() || text < best_text) {
          best.clear();
          best_text = text;
        }
        if (text == best_text) best.push_back({flip, sigma});
      }
    }
    CircleGroup& g = circles_by_text[best_text];
    g.text = best_text;
    g.circles.push_back(c);
    g.options.push_back(std::move(best));
  }
  for (auto& [text, g] : circles_by_text) circle_groups_.push_back(std::move(g));
  refine_circles();
}

std::string Labeler::region_attributes(int r) const {
  const Region& reg = p_.regions()[r];
  return "genus " + std::to_string(reg.genus) + (reg.orientable ? " o" : " n") + " gleam " +
         (gleams_ ? (*gleams_)[r].str() : std::string("*")) + " circuits " + std::to_string(reg.boundary.size());
}

// Keeps the circle options whose local picture is least, and records a
// signature per circle so that exchangeable circles are placed only once.
void Labeler::refine_circles() {
  const int nc = p_.num_circles();
  std::vector<std::vector<std::pair<int, std::vector<ArcState>>>> circuits(nc);
  std::vector<int> owner(p_.num_regions(), -1);
  for (int r = 0; r < p_.num_regions(); ++r) {
    for (std::size_t k = 0; k < p_.regions()[r].boundary.size(); ++k) {
      std::vector<ArcState> arcs = p_.oriented_circuit(r, static_cast<int>(k));
      const int c = arcs.front().kind == ArcKind::Circle ? arcs.front().index : -1;
      owner[r] = k == 0 ? c : (owner[r] == c ? c : -1);
      if (c >= 0) circuits[c].push_back({r, std::move(arcs)});
    }
  }
  auto local_key = [&](int c, const CircleLabel& opt, bool with_identity) {
    std::map<int, std::vector<std::string>> by_region;
    for (const auto& [r, arcs] : circuits[c]) {
      if (with_identity) {
        ArcState least{};
        bool first = true;
        for (const ArcState& s : arcs) {
          const ArcState m{ArcKind::Circle, 0, opt.slot[s.slot], s.dir * opt.flip};
          if (first || state_less(m, least)) least = m;
          first = false;
        }
        by_region[r].push_back(seed_name(least));
      } else {
        std::string slots;
        std::vector<int> mapped;
        for (const ArcState& s : arcs) mapped.push_back(opt.slot[s.slot]);
        std::sort(mapped.begin(), mapped.end());
        for (int m : mapped) slots += std::to_string(m);
        by_region[r].push_back(slots);
      }
    }
    std::vector<std::string> entries;
    for (auto& [r, list] : by_region) {
      std::sort(list.begin(), list.end());
      std::string entry = owner[r] == c ? "own " + region_attributes(r) : "shared " + region_attributes(r);
      if (with_identity && owner[r] != c) entry += " id " + std::to_string(r);
      if (with_identity && owner[r] == c) {
        // The region lies on this circle only, so its orientation is free.
        if (!p_.regions()[r].orientable || list.front().back() == '-') {
          for (auto& x : list) x.back() = p_.regions()[r].orientable ? (x.back() == '+' ? '-' : '+') : '*';
          std::sort(list.begin(), list.end());
        }
      }
      for (const auto& x : list) entry += " " + x;
      entries.push_back(std::move(entry));
    }
    std::sort(entries.begin(), entries.end());
    std::string out;
    for (const auto& e : entries) out += e + ";";
    return out;
  };
  for (auto& group : circle_groups_) {
    group.signature.resize(group.circles.size());
    for (std::size_t m = 0; m < group.circles.size(); ++m) {
      const int c = group.circles[m];
      auto& options = group.options[m];
      std::vector<std::string> keys;
      for (const auto& opt : options) keys.push_back(local_key(c, opt, false));
      const std::string least = *std::min_element(keys.begin(), keys.end());
      // Options with equal local pictures differ by a symmetry of the circle.
      std::vector<CircleLabel> kept;
      std::vector<std::string> pictures;
      for (std::size_t k = 0; k < options.size(); ++k) {
        if (keys[k] != least) continue;
        std::string picture = local_key(c, options[k], true);
        if (std::find(pictures.begin(), pictures.end(), picture) != pictures.end()) continue;
        pictures.push_back(std::move(picture));
        kept.push_back(options[k]);
      }
      options = std::move(kept);
      group.signature[m] = least + "|" + *std::min_element(pictures.begin(), pictures.end());
    }
  }

  // Split groups by the colours of neighbouring circles until stable.
  std::vector<std::string> colour(nc);
  for (const auto& group : circle_groups_)
    for (std::size_t m = 0; m < group.circles.size(); ++m)
      colour[group.circles[m]] = group.text + " " + group.signature[m].substr(0, group.signature[m].find('|'));
  std::size_t classes = 0;
  for (int round = 0; round <= nc; ++round) {
    std::vector<std::string> next(nc);
    for (int c = 0; c < nc; ++c) {
      std::vector<std::string> around;
      for (const auto& [r, arcs] : circuits[c]) {
        std::vector<std::string> others;
        for (std::size_t k = 0; k < p_.regions()[r].boundary.size(); ++k) {
          const ArcState& seed = p_.regions()[r].boundary[k];
          others.push_back(seed.kind == ArcKind::Circle ? colour[seed.index] : "edge");
        }
        std::sort(others.begin(), others.end());
        std::string entry;
        for (const auto& o : others) entry += o + ",";
        around.push_back(std::move(entry));
      }
      std::sort(around.begin(), around.end());
      next[c] = colour[c];
      for (const auto& a : around) next[c] += "{" + a + "}";
    }
    // Compress to keep the colours short.
    std::vector<std::string> distinct = next;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int c = 0; c < nc; ++c)
      next[c] = "k" + std::to_string(std::lower_bound(distinct.begin(), distinct.end(), next[c]) - distinct.begin());
    colour = std::move(next);
    if (distinct.size() == classes) break;
    classes = distinct.size();
  }
  std::map<std::string, CircleGroup> regrouped;
  for (auto& group : circle_groups_) {
    for (std::size_t m = 0; m < group.circles.size(); ++m) {
      CircleGroup& g = regrouped[colour[group.circles[m]]];
      g.text = group.text;
      g.circles.push_back(group.circles[m]);
      g.options.push_back(std::move(group.options[m]));
      g.signature.push_back(std::move(group.signature[m]));
    }
  }
  circle_groups_.clear();
  for (auto& [key, g] : regrouped) circle_groups_.push_back(std::move(g));
}

// Canonical seeds of a region given its boundary circuits in reference direction.
std::vector<ArcState> canonical_seeds(const Region& r, const std::vector<std::vector<ArcState>>& circuits) {
  auto least = [](const std::vector<ArcState>& arcs, int sign) {
    ArcState best = arcs.front();
    best.dir *= sign;
    for (ArcState s : arcs) {
      s.dir *= sign;
      if (state_less(s, best)) best = s;
    }
    return best;
  };
  auto sorted = [](std::vector<ArcState> v) {
    std::sort(v.begin(), v.end(), state_less);
    return v;
  };
  std::vector<ArcState> forward, backward;
  for (const auto& arcs : circuits) {
    ArcState f = least(arcs, 1), b = least(arcs, -1);
    if (!r.orientable) {
      forward.push_back(state_less(f, b) ? f : b);
    } else {
      forward.push_back(f);
      backward.push_back(b);
    }
  }
  forward = sorted(forward);
  if (!r.orientable) return forward;
  backward = sorted(backward);
  return std::lexicographical_compare(backward.begin(), backward.end(), forward.begin(), forward.end(), state_less)
             ? backward
             : forward;
}

std::string Labeler::region_text(const Relabeling& map, std::vector<int>& order) const {
  const int nr = p_.num_regions();
  std::vector<std::string> keys(nr);
  for (int r = 0; r < nr; ++r) {
    const Region& reg = p_.regions()[r];
    std::vector<std::vector<ArcState>> circuits;
    for (std::size_t k = 0; k < reg.boundary.size(); ++k) {
      std::vector<ArcState> arcs = p_.oriented_circuit(r, static_cast<int>(k));
      for (auto& s : arcs) s = map.map(s);
      circuits.push_back(std::move(arcs));
    }
    std::string key = "genus " + std::to_string(reg.genus) + " orientable " + (reg.orientable ? "yes" : "no") +
                      " gleam " + (gleams_ ? (*gleams_)[r].str() : std::string("*")) + " boundary";
    for (const auto& s : canonical_seeds(reg, circuits)) key += " " + seed_name(s);
    keys[r] = std::move(key);
  }
  order.resize(nr);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return keys[a] < keys[b]; });
  std::string text;
  for (int r : order) text += keys[r] + "\n";
  return text;
}

}  // namespace

namespace {

CanonicalLabeling Labeler::run() {
  build_groups();
  Relabeling cur;
  cur.vertex.assign(p_.num_vertices(), -1);
  cur.half_edge.assign(p_.num_vertices(), {});
  cur.edge.assign(p_.num_edges(), -1);
  cur.edge_flip.assign(p_.num_edges(), 1);
  cur.edge_slot.assign(p_.num_edges(), {});
  cur.circle.assign(p_.num_circles(), -1);
  cur.circle_flip.assign(p_.num_circles(), 1);
  cur.circle_slot.assign(p_.num_circles(), {});
  cur.region.assign(p_.num_regions(), -1);

  struct Position {
    int group;
    int vertex_offset;
    int edge_offset;
  };
  std::vector<Position> positions;
  int vo = 0, eo = 0;
  for (std::size_t g = 0; g < groups_.size(); ++g) {
    const ComponentLabel& sample = groups_[g].members.front().front();
    for (std::size_t k = 0; k < groups_[g].members.size(); ++k) {
      positions.push_back({static_cast<int>(g), vo, eo});
      vo += static_cast<int>(sample.vertices.size());
      eo += static_cast<int>(sample.edges.size());
    }
  }
  std::vector<std::pair<int, int>> circle_positions;  // (group, label)
  {
    int co = 0;
    for (std::size_t g = 0; g < circle_groups_.size(); ++g)
      for (std::size_t k = 0; k < circle_groups_[g].circles.size(); ++k) circle_positions.push_back({static_cast<int>(g), co++});
  }

  std::vector<std::vector<char>> used(groups_.size());
  for (std::size_t g = 0; g < groups_.size(); ++g) used[g].assign(groups_[g].members.size(), 0);
  std::vector<std::vector<char>> circle_used(circle_groups_.size());
  for (std::size_t g = 0; g < circle_groups_.size(); ++g) circle_used[g].assign(circle_groups_[g].circles.size(), 0);

  std::string best_text;
  Relabeling best;
  bool have_best = false;

  std::function<void(std::size_t)> place_circles = [&](std::size_t pos) {
    if (pos == circle_positions.size()) {
      std::vector<int> order;
      std::string text = region_text(cur, order);
      if (!have_best || text < best_text) {
        have_best = true;
        best_text = std::move(text);
        best = cur;
        for (std::size_t k = 0; k < order.size(); ++k) best.region[order[k]] = static_cast<int>(k);
      }
      return;
    }
    const auto [g, label] = circle_positions[pos];
    const CircleGroup& group = circle_groups_[g];
    std::vector<const std::string*> tried;
    for (std::size_t m = 0; m < group.circles.size(); ++m) {
      if (circle_used[g][m]) continue;
      const std::string* sig = &group.signature[m];
      if (std::any_of(tried.begin(), tried.end(), [&](const std::string* t) { return *t == *sig; })) continue;
      tried.push_back(sig);
      circle_used[g][m] = 1;
      const int c = group.circles[m];
      for (const CircleLabel& opt : group.options[m]) {
        cur.circle[c] = label;
        cur.circle_flip[c] = opt.flip;
        cur.circle_slot[c] = opt.slot;
        place_circles(pos + 1);
      }
      circle_used[g][m] = 0;
    }
  };

  std::function<void(std::size_t)> place = [&](std::size_t pos) {
    if (pos == positions.size()) {
      place_circles(0);
      return;
    }
    const Position& at = positions[pos];
    const Group& group = groups_[at.group];
    for (std::size_t m = 0; m < group.members.size(); ++m) {
      if (used[at.group][m]) continue;
      used[at.group][m] = 1;
      for (const ComponentLabel& opt : group.members[m]) {
        for (std::size_t k = 0; k < opt.vertices.size(); ++k) {
          cur.vertex[opt.vertices[k]] = at.vertex_offset + static_cast<int>(k);
          cur.half_edge[opt.vertices[k]] = opt.half_edge[k];
        }
        for (std::size_t k = 0; k < opt.edges.size(); ++k) {
          cur.edge[opt.edges[k]] = at.edge_offset + static_cast<int>(k);
          cur.edge_flip[opt.edges[k]] = opt.flip[k];
          cur.edge_slot[opt.edges[k]] = opt.slot[k];
        }
        place(pos + 1);
      }
      used[at.group][m] = 0;
    }
  };
  place(0);

  ShadowDocument doc;
  doc.name = "canonical";
  doc.data = relabeled(p_, best);
  doc.gleams.assign(p_.num_regions(), HalfInt{});
  for (int r = 0; r < p_.num_regions(); ++r) {
    const Region& reg = p_.regions()[r];
    std::vector<std::vector<ArcState>> circuits;
    for (std::size_t k = 0; k < reg.boundary.size(); ++k) {
      std::vector<ArcState> arcs = p_.oriented_circuit(r, static_cast<int>(k));
      for (auto& s : arcs) s = best.map(s);
      circuits.push_back(std::move(arcs));
    }
    doc.data.regions[best.region[r]].boundary = canonical_seeds(reg, circuits);
    if (gleams_) doc.gleams[best.region[r]] = (*gleams_)[r];
  }
  return {serialize_stf(doc), std::move(best)};
}

}  // namespace

CanonicalLabeling canonical_labeling(const Polyhedron& p, const GleamAssignment* gleams) {
  return Labeler(p, gleams).run();
}

std::string canonical_form(const Shadow& s) { return canonical_labeling(s.poly, &s.gleams).form; }

std::string canonical_form(const Polyhedron& p, const GleamAssignment& g) { return canonical_labeling(p, &g).form; }

std::optional<Isomorphism> isomorphic(const Shadow& p, const Shadow& q, bool respect_gleams) {
  if (p.poly.num_vertices() != q.poly.num_vertices() || p.poly.num_edges() != q.poly.num_edges() ||
      p.poly.num_circles() != q.poly.num_circles() || p.poly.num_regions() != q.poly.num_regions())
    return std::nullopt;
  if (euler_characteristic(p.poly) != euler_characteristic(q.poly)) return std::nullopt;
  const CanonicalLabeling a = canonical_labeling(p.poly, respect_gleams ? &p.gleams : nullptr);
  const CanonicalLabeling b = canonical_labeling(q.poly, respect_gleams ? &q.gleams : nullptr);
  if (a.form != b.form) return std::nullopt;

  const Relabeling& la = a.labeling;
  const Relabeling& lb = b.labeling;
  auto invert = [](const std::vector<int>& v) {
    std::vector<int> out(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) out[v[k]] = static_cast<int>(k);
    return out;
  };
  const auto qv = invert(lb.vertex), qe = invert(lb.edge), qc = invert(lb.circle), qr = invert(lb.region);

  Isomorphism iso;
  const int nv = p.poly.num_vertices(), ne = p.poly.num_edges(), nc = p.poly.num_circles();
  iso.vertex.resize(nv);
  iso.half_edge.resize(nv);
  for (int v = 0; v < nv; ++v) {
    const int w = qv[la.vertex[v]];
    iso.vertex[v] = w;
    for (int h = 0; h < 4; ++h)
      for (int h2 = 0; h2 < 4; ++h2)
        if (lb.half_edge[w][h2] == la.half_edge[v][h]) iso.half_edge[v][h] = h2;
  }
  iso.edge.resize(ne);
  iso.edge_flip.resize(ne);
  iso.edge_slot.resize(ne);
  for (int e = 0; e < ne; ++e) {
    const int f = qe[la.edge[e]];
    iso.edge[e] = f;
    iso.edge_flip[e] = la.edge_flip[e] * lb.edge_flip[f];
    for (int s = 0; s < 3; ++s)
      for (int s2 = 0; s2 < 3; ++s2)
        if (lb.edge_slot[f][s2] == la.edge_slot[e][s]) iso.edge_slot[e][s] = s2;
  }
  iso.circle.resize(nc);
  iso.circle_flip.resize(nc);
  iso.circle_slot.resize(nc);
  for (int c = 0; c < nc; ++c) {
    const int d = qc[la.circle[c]];
    iso.circle[c] = d;
    iso.circle_flip[c] = la.circle_flip[c] * lb.circle_flip[d];
    for (int s = 0; s < 3; ++s)
      for (int s2 = 0; s2 < 3; ++s2)
        if (lb.circle_slot[d][s2] == la.circle_slot[c][s]) iso.circle_slot[c][s] = s2;
  }
  iso.region.resize(p.poly.num_regions());
  for (int r = 0; r < p.poly.num_regions(); ++r) iso.region[r] = qr[la.region[r]];
  return iso;
}

}  // namespace shadow
