#include "support.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "shadow/moves.hpp"
#include "shadow/stf.hpp"

namespace shadow::testing {

std::string example_path(const std::string& name) { return std::string(SHADOW_EXAMPLES_DIR) + "/" + name + ".stf"; }

Shadow example(const std::string& name) { return read_shadow_file(example_path(name)); }

const std::vector<std::string>& corpus_names() {
  static const std::vector<std::string> names = {"two_circles", "two_circles_relabelled", "sphere_disc", "cp2_sphere",
                                                 "mobius",      "projective_plane",       "trading_bridge"};
  return names;
}

namespace {

// Attachments around a vertex, by identifiers.
std::string vertex_picture(const Shadow& s, int v) {
  std::string out;
  for (int h = 0; h < 4; ++h) {
    const auto [e, end] = s.poly.end_at(v, h);
    const Edge& edge = s.poly.edges()[e];
    out += edge.id + "/" + std::to_string(end);
    for (const Attachment& a : edge.ends) {
      out += " " + s.poly.vertices()[a.vertex].id + "." + std::to_string(a.half_edge);
      for (int w : a.wings) out += std::to_string(w);
    }
    out += ";";
  }
  return out;
}

std::vector<int> shuffled(int n, std::mt19937& rng) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  std::shuffle(v.begin(), v.end(), rng);
  return v;
}

template <std::size_t N>
std::array<int, N> shuffled_array(std::mt19937& rng) {
  std::array<int, N> a{};
  std::iota(a.begin(), a.end(), 0);
  std::shuffle(a.begin(), a.end(), rng);
  return a;
}

std::array<int, 3> inverse3(const std::array<int, 3>& p) {
  std::array<int, 3> q{};
  for (int k = 0; k < 3; ++k) q[p[k]] = k;
  return q;
}

}  // namespace

Shadow random_relabel(const Shadow& s, std::mt19937& rng) {
  const PolyhedronData& d = s.poly.data();
  const int nv = static_cast<int>(d.vertices.size()), ne = static_cast<int>(d.edges.size());
  const int nc = static_cast<int>(d.circles.size()), nr = static_cast<int>(d.regions.size());
  const auto vnew = shuffled(nv, rng), enew = shuffled(ne, rng), cnew = shuffled(nc, rng), rnew = shuffled(nr, rng);
  std::bernoulli_distribution coin(0.5);
  std::vector<std::array<int, 4>> hp(nv);
  for (auto& h : hp) h = shuffled_array<4>(rng);
  std::vector<std::array<int, 3>> es(ne), cs(nc);
  std::vector<int> ef(ne), cf(nc);
  for (int e = 0; e < ne; ++e) es[e] = shuffled_array<3>(rng), ef[e] = coin(rng);
  for (int c = 0; c < nc; ++c) cs[c] = shuffled_array<3>(rng), cf[c] = coin(rng);

  PolyhedronData out;
  out.vertices.resize(nv);
  out.edges.resize(ne);
  out.circles.resize(nc);
  out.regions.resize(nr);
  for (int v = 0; v < nv; ++v) out.vertices[vnew[v]].id = "p" + std::to_string(vnew[v]);
  for (int e = 0; e < ne; ++e) {
    Edge n;
    n.id = "k" + std::to_string(enew[e]);
    for (int end = 0; end < 2; ++end) {
      const Attachment& a = d.edges[e].ends[ef[e] ? 1 - end : end];
      Attachment b;
      b.vertex = vnew[a.vertex];
      b.half_edge = hp[a.vertex][a.half_edge];
      for (int t = 0; t < 3; ++t) b.wings[es[e][t]] = hp[a.vertex][a.wings[t]];
      n.ends[end] = b;
    }
    out.edges[enew[e]] = n;
  }
  for (int c = 0; c < nc; ++c) {
    const auto mono = cf[c] ? inverse3(d.circles[c].monodromy) : d.circles[c].monodromy;
    Circle n;
    n.id = "o" + std::to_string(cnew[c]);
    for (int t = 0; t < 3; ++t) n.monodromy[cs[c][t]] = cs[c][mono[t]];
    out.circles[cnew[c]] = n;
  }
  GleamAssignment g(nr);
  for (int r = 0; r < nr; ++r) {
    const Region& old = d.regions[r];
    Region n;
    n.id = "z" + std::to_string(rnew[r]);
    n.genus = old.genus;
    n.orientable = old.orientable;
    const bool flip_all = old.orientable && coin(rng);
    for (int k = 0; k < static_cast<int>(old.boundary.size()); ++k) {
      const auto arcs = s.poly.oriented_circuit(r, k);
      ArcState a = arcs[std::uniform_int_distribution<int>(0, static_cast<int>(arcs.size()) - 1)(rng)];
      if (flip_all || (!old.orientable && coin(rng))) a = a.reversed();
      if (a.kind == ArcKind::Edge) {
        n.boundary.push_back({ArcKind::Edge, enew[a.index], es[a.index][a.slot], ef[a.index] ? -a.dir : a.dir});
      } else {
        n.boundary.push_back({ArcKind::Circle, cnew[a.index], cs[a.index][a.slot], cf[a.index] ? -a.dir : a.dir});
      }
    }
    std::shuffle(n.boundary.begin(), n.boundary.end(), rng);
    out.regions[rnew[r]] = n;
    g[rnew[r]] = s.gleams[r];
  }
  return {Polyhedron(std::move(out)), std::move(g), s.name + "_relabelled"};
}

std::vector<int> oracle_mod2(const Polyhedron& p) {
  const PolyhedronData& d = p.data();
  std::vector<int> out(p.num_regions(), 0);
  for (int r = 0; r < p.num_regions(); ++r)
    for (int k = 0; k < static_cast<int>(d.regions[r].boundary.size()); ++k) {
      const auto arcs = p.oriented_circuit(r, k);
      const int start_side = arcs[0].slot == 0 ? 1 : 0;
      int side = start_side;
      for (std::size_t i = 0; i < arcs.size(); ++i) {
        const ArcState& cur = arcs[i];
        const ArcState& nxt = arcs[(i + 1) % arcs.size()];
        if (cur.kind == ArcKind::Circle) {
          const auto& mono = d.circles[cur.index].monodromy;
          side = cur.dir > 0 ? mono[side] : inverse3(mono)[side];
          continue;
        }
        const Attachment& at = d.edges[cur.index].ends[cur.dir > 0 ? 1 : 0];
        const int toward = at.wings[side];
        const Attachment& nat = d.edges[nxt.index].ends[nxt.dir > 0 ? 0 : 1];
        for (int t = 0; t < 3; ++t)
          if (nat.wings[t] == toward) side = t;
      }
      out[r] ^= side != start_side ? 1 : 0;
    }
  return out;
}

namespace {

using Mat = std::vector<std::vector<long long>>;

long long det_bareiss(Mat a) {
  const int n = static_cast<int>(a.size());
  long long sign = 1, prev = 1;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) std::swap(a[piv], a[k]), sign = -sign;
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        const __int128 num = static_cast<__int128>(a[i][j]) * a[k][k] - static_cast<__int128>(a[i][k]) * a[k][j];
        a[i][j] = static_cast<long long>(num / prev);
      }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

// Calls f on every k-subset of 0..n-1 until f returns false.
template <typename F>
bool for_subsets(int n, int k, F&& f) {
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (!f(idx)) return false;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return true;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<long long> oracle_invariant_factors(const IntMatrix& m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  Mat a(rows, std::vector<long long>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) a[i][j] = static_cast<long long>(m[i][j]);
  std::vector<long long> factors;
  long long prev = 1;
  for (int k = 1; k <= std::min(rows, cols); ++k) {
    long long g = 0;
    for_subsets(rows, k, [&](const std::vector<int>& rs) {
      return for_subsets(cols, k, [&](const std::vector<int>& cs) {
        Mat minor(k, std::vector<long long>(k));
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) minor[i][j] = a[rs[i]][cs[j]];
        g = std::gcd(g, std::llabs(det_bareiss(minor)));
        return g != 1;
      });
    });
    if (g == 0) break;
    factors.push_back(g / prev);
    prev = g;
  }
  return factors;
}

int oracle_rank_mod2(const IntMatrix& m) {
  std::vector<std::vector<int>> a;
  for (const auto& row : m) {
    std::vector<int> r;
    for (const auto& x : row) r.push_back(static_cast<int>(static_cast<long long>(x) & 1));
    a.push_back(r);
  }
  int rank = 0;
  const int cols = a.empty() ? 0 : static_cast<int>(a[0].size());
  for (int c = 0; c < cols && rank < static_cast<int>(a.size()); ++c) {
    int piv = rank;
    while (piv < static_cast<int>(a.size()) && a[piv][c] == 0) ++piv;
    if (piv == static_cast<int>(a.size())) continue;
    std::swap(a[piv], a[rank]);
    for (int i = 0; i < static_cast<int>(a.size()); ++i)
      if (i != rank && a[i][c])
        for (int j = 0; j < cols; ++j) a[i][j] ^= a[rank][j];
    ++rank;
  }
  return rank;
}

std::vector<Branching> oracle_branchings(const Polyhedron& p, BranchingMode mode) {
  const PolyhedronData& d = p.data();
  for (const auto& r : d.regions)
    if (!r.orientable) return {};
  const int nr = p.num_regions();
  std::vector<std::array<int, 3>> edir(p.num_edges()), ereg(p.num_edges()), cdir(p.num_circles()), creg(p.num_circles());
  for (int r = 0; r < nr; ++r)
    for (int k = 0; k < static_cast<int>(d.regions[r].boundary.size()); ++k)
      for (const ArcState& a : p.oriented_circuit(r, k)) {
        auto& dir = a.kind == ArcKind::Edge ? edir : cdir;
        auto& reg = a.kind == ArcKind::Edge ? ereg : creg;
        dir[a.index][a.slot] = a.dir;
        reg[a.index][a.slot] = r;
      }
  std::vector<Branching> out;
  for (long long mask = 0; mask < (1LL << nr); ++mask) {
    Branching b(nr);
    for (int r = 0; r < nr; ++r) b[r] = (mask >> r) & 1 ? -1 : 1;
    auto not_all_equal = [&](const std::array<int, 3>& dir, const std::array<int, 3>& reg) {
      const int s0 = b[reg[0]] * dir[0], s1 = b[reg[1]] * dir[1], s2 = b[reg[2]] * dir[2];
      return !(s0 == s1 && s1 == s2);
    };
    bool ok = true;
    for (int e = 0; ok && e < p.num_edges(); ++e) ok = not_all_equal(edir[e], ereg[e]);
    for (int c = 0; ok && c < p.num_circles(); ++c) ok = not_all_equal(cdir[c], creg[c]);
    if (ok && mode == BranchingMode::Strict) {
      std::vector<int> outgoing(p.num_vertices(), 0);
      for (int e = 0; e < p.num_edges(); ++e) {
        int sum = 0;
        for (int s = 0; s < 3; ++s) sum += b[ereg[e][s]] * edir[e][s];
        const int major = sum > 0 ? 1 : -1;
        ++outgoing[d.edges[e].ends[major > 0 ? 0 : 1].vertex];
      }
      for (int v = 0; ok && v < p.num_vertices(); ++v) ok = outgoing[v] == 2;
    }
    if (ok) out.push_back(b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

class IsoSearch {
 public:
  IsoSearch(const Shadow& a, const Shadow& b, bool gleams) : a_(a), b_(b), gleams_(gleams) {}

  bool run() {
    const Polyhedron &P = a_.poly, &Q = b_.poly;
    if (P.num_vertices() != Q.num_vertices() || P.num_edges() != Q.num_edges() ||
        P.num_circles() != Q.num_circles() || P.num_regions() != Q.num_regions())
      return false;
    std::array<int, 4> perm{0, 1, 2, 3};
    do perms_.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));
    std::vector<char> seen(P.num_vertices(), 0);
    for (int s = 0; s < P.num_vertices(); ++s) {
      if (seen[s]) continue;
      std::vector<int> queue{s};
      seen[s] = 1;
      for (std::size_t k = 0; k < queue.size(); ++k) {
        order_.push_back(queue[k]);
        for (int h = 0; h < 4; ++h) {
          const auto [e, end] = P.end_at(queue[k], h);
          const int u = P.edges()[e].ends[1 - end].vertex;
          if (!seen[u]) seen[u] = 1, queue.push_back(u);
        }
      }
    }
    phi_.assign(P.num_vertices(), -1);
    pi_.assign(P.num_vertices(), {});
    used_.assign(Q.num_vertices(), 0);
    return assign(0);
  }

 private:
  bool assign(std::size_t idx) {
    if (idx == order_.size()) return match_edges();
    const int v = order_[idx];
    for (int w = 0; w < b_.poly.num_vertices(); ++w) {
      if (used_[w]) continue;
      for (const auto& pi : perms_) {
        phi_[v] = w;
        pi_[v] = pi;
        if (consistent(v)) {
          used_[w] = 1;
          if (assign(idx + 1)) return true;
          used_[w] = 0;
        }
        phi_[v] = -1;
      }
    }
    return false;
  }

  bool consistent(int v) const {
    const Polyhedron &P = a_.poly, &Q = b_.poly;
    for (int h = 0; h < 4; ++h) {
      const auto [e, end] = P.end_at(v, h);
      const Attachment& near = P.edges()[e].ends[end];
      const Attachment& far = P.edges()[e].ends[1 - end];
      if (phi_[far.vertex] < 0) continue;
      const auto [f, fend] = Q.end_at(phi_[v], pi_[v][h]);
      const Attachment& qnear = Q.edges()[f].ends[fend];
      const Attachment& qfar = Q.edges()[f].ends[1 - fend];
      if (qfar.vertex != phi_[far.vertex] || qfar.half_edge != pi_[far.vertex][far.half_edge]) return false;
      for (int s = 0; s < 3; ++s) {
        int t = 0;
        while (qnear.wings[t] != pi_[v][near.wings[s]]) ++t;
        if (qfar.wings[t] != pi_[far.vertex][far.wings[s]]) return false;
      }
    }
    return true;
  }

  bool match_edges() {
    const Polyhedron &P = a_.poly, &Q = b_.poly;
    arc_.clear();
    for (int e = 0; e < P.num_edges(); ++e) {
      const Attachment& near = P.edges()[e].ends[0];
      const auto [f, fend] = Q.end_at(phi_[near.vertex], pi_[near.vertex][near.half_edge]);
      for (int s = 0; s < 3; ++s) {
        int t = 0;
        while (Q.edges()[f].ends[fend].wings[t] != pi_[near.vertex][near.wings[s]]) ++t;
        arc_.push_back({P.region_of_arc(ArcKind::Edge, e, s), Q.region_of_arc(ArcKind::Edge, f, t)});
      }
    }
    circle_used_.assign(Q.num_circles(), 0);
    return partial_ok() && match_circles(0);
  }

  bool match_circles(int c) {
    const Polyhedron &P = a_.poly, &Q = b_.poly;
    if (c == P.num_circles()) return match_regions();
    const auto& mono = P.circles()[c].monodromy;
    for (int q = 0; q < Q.num_circles(); ++q) {
      if (circle_used_[q]) continue;
      for (int flip = 0; flip < 2; ++flip) {
        const auto qmono = flip ? inverse3(Q.circles()[q].monodromy) : Q.circles()[q].monodromy;
        std::array<int, 3> tau{0, 1, 2};
        do {
          bool ok = true;
          for (int s = 0; s < 3; ++s) ok = ok && qmono[tau[s]] == tau[mono[s]];
          if (!ok) continue;
          circle_used_[q] = 1;
          for (int s = 0; s < 3; ++s)
            arc_.push_back({P.region_of_arc(ArcKind::Circle, c, s), Q.region_of_arc(ArcKind::Circle, q, tau[s])});
          if (partial_ok() && match_circles(c + 1)) return true;
          arc_.resize(arc_.size() - 3);
          circle_used_[q] = 0;
        } while (std::next_permutation(tau.begin(), tau.end()));
      }
    }
    return false;
  }

  bool same_region(int r, int q) const {
    const Region &x = a_.poly.regions()[r], &y = b_.poly.regions()[q];
    if (x.genus != y.genus || x.orientable != y.orientable || x.boundary.size() != y.boundary.size()) return false;
    return !gleams_ || a_.gleams[r] == b_.gleams[q];
  }

  // The region correspondence forced so far is a partial bijection of like regions.
  bool partial_ok() const {
    std::vector<int> image(a_.poly.num_regions(), -1), preimage(b_.poly.num_regions(), -1);
    for (const auto& [r, q] : arc_) {
      if ((image[r] >= 0 && image[r] != q) || (preimage[q] >= 0 && preimage[q] != r)) return false;
      if (!same_region(r, q)) return false;
      image[r] = q;
      preimage[q] = r;
    }
    return true;
  }

  bool match_regions() const {
    const Polyhedron &P = a_.poly, &Q = b_.poly;
    std::vector<int> image(P.num_regions(), -1), preimage(Q.num_regions(), -1);
    for (const auto& [r, q] : arc_) {
      if ((image[r] >= 0 && image[r] != q) || (preimage[q] >= 0 && preimage[q] != r)) return false;
      image[r] = q;
      preimage[q] = r;
    }
    std::vector<std::tuple<int, bool, HalfInt>> closed_p, closed_q;
    for (int r = 0; r < P.num_regions(); ++r) {
      if (image[r] >= 0) {
        if (!same_region(r, image[r])) return false;
      } else {
        closed_p.emplace_back(P.regions()[r].genus, P.regions()[r].orientable, gleams_ ? a_.gleams[r] : HalfInt{});
      }
    }
    for (int q = 0; q < Q.num_regions(); ++q)
      if (preimage[q] < 0)
        closed_q.emplace_back(Q.regions()[q].genus, Q.regions()[q].orientable, gleams_ ? b_.gleams[q] : HalfInt{});
    std::sort(closed_p.begin(), closed_p.end());
    std::sort(closed_q.begin(), closed_q.end());
    return closed_p == closed_q;
  }

  const Shadow &a_, &b_;
  bool gleams_;
  std::vector<std::array<int, 4>> perms_;
  std::vector<int> order_, phi_, used_, circle_used_;
  std::vector<std::array<int, 4>> pi_;
  std::vector<std::pair<int, int>> arc_;
};

}  // namespace

bool brute_isomorphic(const Shadow& a, const Shadow& b, bool respect_gleams) {
  return IsoSearch(a, b, respect_gleams).run();
}

std::map<std::string, std::vector<std::string>> region_pictures(const Shadow& s) {
  std::map<std::string, std::vector<std::string>> out;
  for (int r = 0; r < s.poly.num_regions(); ++r) {
    std::vector<std::string> arcs;
    for (std::size_t k = 0; k < s.poly.regions()[r].boundary.size(); ++k)
      for (const ArcState& a : s.poly.oriented_circuit(r, static_cast<int>(k))) {
        if (a.kind == ArcKind::Circle) {
          arcs.push_back(s.poly.circles()[a.index].id + "." + std::to_string(a.slot));
          continue;
        }
        const Edge& e = s.poly.edges()[a.index];
        arcs.push_back(e.id + "." + std::to_string(a.slot) + " " + vertex_picture(s, e.ends[0].vertex) + " " +
                       vertex_picture(s, e.ends[1].vertex));
      }
    std::sort(arcs.begin(), arcs.end());
    out[s.poly.regions()[r].id] = arcs;
  }
  return out;
}

GleamAssignment random_valid_gleams(const Polyhedron& p, std::mt19937& rng) {
  const auto mod2 = oracle_mod2(p);
  std::uniform_int_distribution<int> shift(-3, 3);
  GleamAssignment g;
  for (int m : mod2) g.push_back(HalfInt::from_twice(2 * shift(rng) + m));
  return g;
}

Shadow random_shadow(std::mt19937& rng, int moves) {
  static const std::vector<std::string> starts = {"two_circles", "sphere_disc", "cp2_sphere", "mobius", "trading_bridge"};
  Shadow s = example(starts[std::uniform_int_distribution<std::size_t>(0, starts.size() - 1)(rng)]);
  std::vector<MoveKind> kinds;
  for (const char* name : {"twothree", "zerotwo", "onetwo", "bubble0", "twothree-inv", "zerotwo-inv", "onetwo-inv",
                           "bubble0-inv"})
    kinds.push_back(*MoveKind::parse(name));
  for (int step = 0; step < moves; ++step) {
    std::shuffle(kinds.begin(), kinds.end(), rng);
    for (const MoveKind& kind : kinds) {
      if (s.poly.num_vertices() + kind.vertex_delta() > 6) continue;
      const auto sites = enumerate_sites(s, kind);
      if (sites.empty()) continue;
      const auto& site = sites[std::uniform_int_distribution<std::size_t>(0, sites.size() - 1)(rng)];
      s = apply_move(s, site).shadow;
      break;
    }
  }
  s.gleams = random_valid_gleams(s.poly, rng);
  s = random_relabel(s, rng);
  s.name = "random";
  return s;
}

}  // namespace shadow::testing
