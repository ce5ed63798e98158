#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "shadow/thickening.hpp"
#include "support.hpp"

using namespace shadow;
using namespace shadow::testing;

namespace {

HalfInt half(int twice) { return HalfInt::from_twice(twice); }

// Homology from oracle invariant factors of the boundary matrices.
Homology oracle_homology(const ChainComplex& cc) {
  Homology h;
  if (cc.integral) {
    const auto f1 = oracle_invariant_factors(cc.d1);
    const auto f2 = oracle_invariant_factors(cc.d2);
    const int r1 = static_cast<int>(f1.size()), r2 = static_cast<int>(f2.size());
    h.groups[0].rank = cc.cells0 - r1;
    h.groups[1].rank = cc.cells1 - r1 - r2;
    h.groups[2].rank = cc.cells2 - r2;
    for (long long t : f1)
      if (t > 1) h.groups[0].torsion.push_back(t);
    for (long long t : f2)
      if (t > 1) h.groups[1].torsion.push_back(t);
  } else {
    h.ring = Coefficients::Z2;
    const int r1 = oracle_rank_mod2(cc.d1), r2 = oracle_rank_mod2(cc.d2);
    h.groups[0].rank = cc.cells0 - r1;
    h.groups[1].rank = cc.cells1 - r1 - r2;
    h.groups[2].rank = cc.cells2 - r2;
  }
  return h;
}

bool composes_to_zero(const ChainComplex& cc, bool mod2) {
  for (int i = 0; i < cc.cells0; ++i)
    for (int k = 0; k < cc.cells2; ++k) {
      BigInt sum = 0;
      for (int j = 0; j < cc.cells1; ++j) sum += cc.d1[i][j] * cc.d2[j][k];
      if (mod2 ? sum % 2 != 0 : sum != 0) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("handle statistics of the worked examples") {
  const auto two = handle_statistics(example("two_circles").poly);
  CHECK(two.zero == 1);
  CHECK(two.one == 3);
  CHECK(two.two == 6);
  CHECK_FALSE(two.disc_bundle);
  const auto sd = handle_statistics(example("sphere_disc").poly);
  CHECK(sd.zero == 1);
  CHECK(sd.one == 1);
  CHECK(sd.two == 3);
  const auto cp2 = handle_statistics(example("cp2_sphere").poly);
  CHECK(cp2.zero == 1);
  CHECK(cp2.one == 0);
  CHECK(cp2.two == 1);
  CHECK(cp2.disc_bundle);
}

TEST_CASE("handle counts match the Euler characteristic on standard polyhedra") {
  for (const auto& name : corpus_names()) {
    const Shadow s = example(name);
    if (!is_standard(s.poly)) continue;
    const auto h = handle_statistics(s.poly);
    CHECK_MESSAGE(h.zero - h.one + h.two == euler_characteristic(s.poly), name);
  }
}

TEST_CASE("framings") {
  const Shadow cp2 = example("cp2_sphere");
  CHECK_THROWS_AS(framing(cp2.poly, cp2.gleams, 0), std::domain_error);
  const Shadow sd = example("sphere_disc");
  CHECK(framing(sd.poly, {half(-2), half(0), half(0)}, 0) == -1);
  CHECK(framing(sd.poly, {half(0), half(0), half(0)}, 2) == 0);
  const Shadow m = example("mobius");
  CHECK(mod2_gleam(m.poly, 0) == 1);
  CHECK(framing(m.poly, {half(3), half(0)}, 0) == 1);
  CHECK(framing(m.poly, {half(1), half(0)}, 0) == 0);
  CHECK(framing(m.poly, {half(-1), half(0)}, 0) == -1);
}

TEST_CASE("framing is integral for every accepted gleam assignment") {
  std::mt19937 rng(29);
  for (const auto& name : corpus_names()) {
    const Shadow s = example(name);
    for (int trial = 0; trial < 50; ++trial) {
      const GleamAssignment g = random_valid_gleams(s.poly, rng);
      REQUIRE(check_parity(s.poly, g).ok());
      for (int r = 0; r < s.poly.num_regions(); ++r) {
        if (s.poly.regions()[r].closed()) continue;
        const std::int64_t f = framing(s.poly, g, r);
        CHECK(HalfInt::integer(f) + (mod2_gleam(s.poly, r) ? kHalf : HalfInt{}) == g[r]);
      }
    }
  }
}

TEST_CASE("disc bundle report of S2 with gleam -1") {
  const ThickeningReport rep = thicken(example("cp2_sphere"));
  CHECK(rep.euler_char == 2);
  REQUIRE(rep.bundles.size() == 1);
  CHECK(rep.bundles[0].base == "S2");
  CHECK(rep.bundles[0].euler == HalfInt::integer(-1));
  CHECK(rep.handles.disc_bundle);
  const ThickeningReport closed = tunnel_annotation(rep, 0, 1);
  REQUIRE(closed.tunnel.has_value());
  CHECK(closed.tunnel->closed_chi == 3);
  CHECK(closed.tunnel->note == "CP2 candidate");
  CHECK_FALSE(tunnel_annotation(rep, 0, 0).tunnel.has_value());
  CHECK(tunnel_annotation(thicken(example("two_circles")), 1, 1).tunnel->closed_chi == 4);
  CHECK_THROWS(tunnel_annotation(rep, -1, 0));
}

TEST_CASE("homology of the worked examples") {
  const Homology s2 = homology(example("cp2_sphere").poly);
  CHECK(s2.ring == Coefficients::Integers);
  CHECK(s2.groups[0] == GroupDescriptor{1, {}});
  CHECK(s2.groups[1] == GroupDescriptor{0, {}});
  CHECK(s2.groups[2] == GroupDescriptor{1, {}});
  const Homology sd = homology(example("sphere_disc").poly);
  CHECK(sd.groups[0] == GroupDescriptor{1, {}});
  CHECK(sd.groups[1] == GroupDescriptor{0, {}});
  CHECK(sd.groups[2] == GroupDescriptor{2, {}});
  const Homology rp2 = homology(example("projective_plane").poly);
  CHECK(rp2.ring == Coefficients::Z2);
  CHECK(rp2.groups[1].rank == 1);
}

TEST_CASE("homology agrees with the determinantal oracle") {
  auto check = [](const Shadow& s) {
    const ChainComplex cc = chain_complex(s.poly);
    CHECK(composes_to_zero(cc, !cc.integral));
    const Homology h = homology(s.poly);
    // Gcds of all minors are exponential in the matrix size.
    if (cc.cells0 <= 12 && cc.cells1 <= 12 && cc.cells2 <= 12) CHECK(h == oracle_homology(cc));
    const int chi = h.groups[0].rank - h.groups[1].rank + h.groups[2].rank;
    CHECK(chi == euler_characteristic(s.poly));
    CHECK(euler_char_M(s.poly) == chi);
  };
  for (const auto& name : corpus_names()) check(example(name));
  std::mt19937 rng(31);
  for (int trial = 0; trial < 60; ++trial) check(random_shadow(rng, 3));
}

TEST_CASE("report lines are sorted by key") {
  const std::string text = thicken(example("two_circles")).str();
  std::vector<std::string> keys;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t end = text.find('\n', start);
    const std::string line = text.substr(start, end - start);
    keys.push_back(line.substr(0, line.find(':')));
    start = end + 1;
  }
  CHECK(std::is_sorted(keys.begin(), keys.end()));
  CHECK(text.find("handles.one: 3\n") != std::string::npos);
  CHECK(text.find("chi_M: 4\n") != std::string::npos);
}
