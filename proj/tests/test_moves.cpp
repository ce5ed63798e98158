#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "shadow/canonical.hpp"
#include "shadow/moves.hpp"
#include "shadow/thickening.hpp"
#include "support.hpp"

using namespace shadow;
using namespace shadow::testing;

namespace {

MoveKind kind(const char* name) { return *MoveKind::parse(name); }

int mod2_by_id(const Shadow& s, const std::string& id) { return mod2_gleam(s.poly, s.poly.find_region(id)); }

void check_equivalence_sites(const Shadow& s, const std::string& label) {
  const int chi = euler_characteristic(s.poly);
  const Homology h = homology(s.poly);
  const auto before = region_pictures(s);
  for (const char* name : {"onetwo", "zerotwo", "twothree", "onetwo-inv", "zerotwo-inv", "twothree-inv"}) {
    for (const MoveSite& site : enumerate_sites(s, kind(name))) {
      CAPTURE(label);
      CAPTURE(site.str());
      const MoveResult out = apply_move(s, site);
      CHECK(euler_characteristic(out.shadow.poly) == chi);
      CHECK(homology(out.shadow.poly) == h);
      CHECK(check_parity(out.shadow.poly, out.shadow.gleams).ok());
      CHECK(out.shadow.poly.num_vertices() == s.poly.num_vertices() + site.kind.vertex_delta());
      for (const auto& [id, arcs] : region_pictures(out.shadow)) {
        const auto it = before.find(id);
        if (it != before.end() && it->second == arcs) CHECK(mod2_by_id(out.shadow, id) == mod2_by_id(s, id));
      }
      REQUIRE(out.inverse_site.has_value());
      const MoveResult back = apply_move(out.shadow, *out.inverse_site);
      CHECK(isomorphic(s, back.shadow, true).has_value());
    }
  }
}

}  // namespace

TEST_CASE("kind names parse and print") {
  for (const MoveKind& k : all_move_kinds()) CHECK(MoveKind::parse(k.name()) == k);
  CHECK_FALSE(MoveKind::parse("threetwo").has_value());
  CHECK_FALSE(kind("bubble+").inverse);
  CHECK_FALSE(MoveKind{MoveType::BubblePlus, true}.supported());
  CHECK(equivalence_kinds().size() == 6);
}

TEST_CASE("site counts on two circles") {
  const Shadow s = example("two_circles");
  CHECK(enumerate_sites(s, kind("onetwo")).size() == 12);
  CHECK(enumerate_sites(s, kind("zerotwo")).size() == 48);
  CHECK(enumerate_sites(s, kind("twothree")).size() == 4);
  CHECK(enumerate_sites(s, kind("bubble0")).size() == 6);
  CHECK(enumerate_sites(s, kind("trading")).empty());
  CHECK(enumerate_sites(s, kind("onetwo-inv")).empty());
}

TEST_CASE("sites are listed in a fixed order") {
  const Shadow s = example("two_circles");
  std::mt19937 rng(2);
  for (const char* name : {"onetwo", "zerotwo", "twothree"}) {
    const auto a = enumerate_sites(s, kind(name));
    CHECK(a == enumerate_sites(s, kind(name)));
    // A relabelled copy has as many sites.
    CHECK(enumerate_sites(random_relabel(s, rng), kind(name)).size() == a.size());
  }
}

TEST_CASE("equivalence moves keep the invariants and round-trip on the corpus") {
  for (const auto& name : corpus_names()) {
    const Shadow s = example(name);
    if (s.poly.num_vertices() > 6) continue;
    check_equivalence_sites(s, name);
  }
}

TEST_CASE("equivalence moves on shadows with vertices") {
  const Shadow s = example("two_circles");
  for (const char* name : {"onetwo", "twothree"}) {
    for (const MoveSite& site : enumerate_sites(s, kind(name))) check_equivalence_sites(apply_move(s, site).shadow, site.str());
  }
}

TEST_CASE("bubbles add one to the Euler characteristic") {
  for (const auto& name : corpus_names()) {
    const Shadow s = example(name);
    for (const char* k : {"bubble0", "bubble+", "bubble-"}) {
      for (const MoveSite& site : enumerate_sites(s, kind(k))) {
        CAPTURE(site.str());
        const MoveResult out = apply_move(s, site);
        CHECK(euler_characteristic(out.shadow.poly) == euler_characteristic(s.poly) + 1);
        CHECK(out.shadow.poly.num_circles() == s.poly.num_circles() + 1);
        CHECK(check_parity(out.shadow.poly, out.shadow.gleams).ok());
        if (site.kind.type == MoveType::Bubble0) {
          REQUIRE(out.inverse_site.has_value());
          CHECK(isomorphic(s, apply_move(out.shadow, *out.inverse_site).shadow, true).has_value());
        } else {
          CHECK_FALSE(out.inverse_site.has_value());
        }
      }
    }
  }
}

TEST_CASE("bubble on S2 with gleam -1") {
  const Shadow s = example("cp2_sphere");
  const MoveResult out = apply_move(s, {kind("bubble0"), "r0"});
  CHECK(euler_characteristic(out.shadow.poly) == 3);
  CHECK(out.shadow.poly.num_regions() == 3);
  CHECK(total_gleam(out.shadow.gleams) == total_gleam(s.gleams));
  CHECK(enumerate_sites(out.shadow, kind("bubble0-inv")).size() >= 1);
}

TEST_CASE("trading adds two to the Euler characteristic") {
  const Shadow s = example("trading_bridge");
  const auto sites = enumerate_sites(s, kind("trading"));
  REQUIRE_FALSE(sites.empty());
  for (const MoveSite& site : sites) {
    CAPTURE(site.str());
    const MoveResult out = apply_move(s, site);
    CHECK(euler_characteristic(out.shadow.poly) == euler_characteristic(s.poly) + 2);
    CHECK(check_parity(out.shadow.poly, out.shadow.gleams).ok());
    REQUIRE(out.inverse_site.has_value());
    const auto inverse_sites = enumerate_sites(out.shadow, kind("trading-inv"));
    CHECK(std::find(inverse_sites.begin(), inverse_sites.end(), *out.inverse_site) != inverse_sites.end());
    const MoveResult back = apply_move(out.shadow, *out.inverse_site);
    CHECK(euler_characteristic(back.shadow.poly) == euler_characteristic(s.poly));
    CHECK(isomorphic(s, back.shadow, true).has_value());
  }
}

TEST_CASE("errors") {
  const Shadow s = example("two_circles");
  auto kind_of = [&](const Shadow& x, const MoveSite& site) {
    try {
      apply_move(x, site);
    } catch (const MoveError& e) {
      return e.kind();
    }
    FAIL("no error");
    return MoveError::Kind::Internal;
  };
  CHECK(kind_of(s, {kind("twothree"), "nope"}) == MoveError::Kind::Stale);
  CHECK(kind_of(s, {kind("onetwo-inv"), "D1"}) == MoveError::Kind::Stale);
  CHECK(kind_of(s, {MoveKind{MoveType::BubblePlus, true}, "D1"}) == MoveError::Kind::Unsupported);
  Shadow odd = s;
  odd.gleams[0] = odd.gleams[0] + kHalf;
  CHECK(kind_of(odd, {kind("bubble0"), "D1"}) == MoveError::Kind::Precondition);
}

TEST_CASE("provenance and purity") {
  const Shadow s = example("two_circles");
  const std::string before = canonical_form(s);
  const MoveSite site = enumerate_sites(s, kind("twothree")).front();
  const MoveResult out = apply_move(s, site);
  CHECK(out.provenance.site == site);
  CHECK(out.provenance.parent_form == before);
  CHECK(canonical_form(s) == before);
  const std::string given = "given";
  CHECK(apply_move(s, site, &given).provenance.parent_form == "given");
}

TEST_CASE("random walks stay valid and reversible") {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 20; ++trial) {
    const Shadow s = random_shadow(rng, 3);
    for (const char* name : {"onetwo", "zerotwo", "twothree", "bubble0"}) {
      const auto sites = enumerate_sites(s, kind(name));
      if (sites.empty()) continue;
      const MoveSite& site = sites[std::uniform_int_distribution<std::size_t>(0, sites.size() - 1)(rng)];
      CAPTURE(site.str());
      const MoveResult out = apply_move(s, site);
      REQUIRE(out.inverse_site.has_value());
      CHECK(isomorphic(s, apply_move(out.shadow, *out.inverse_site).shadow, true).has_value());
    }
  }
}
