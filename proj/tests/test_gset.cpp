#include "doctest.h"

#include <random>

#include "tambara/error.hpp"
#include "tambara/gset.hpp"

using namespace tambara;

namespace {

Subgroup subgroup_of_order(const GroupPtr& g, int n) {
  for (auto h : g->lattice().subgroups)
    if (h.order() == n) return h;
  FAIL("no subgroup");
  return {};
}

int count_fixed_orbits(const GSet& x) {
  int n = 0;
  for (const auto& o : orbit_decompose(x)) n += o.points.size() == 1;
  return n;
}

GSet random_gset(const GroupPtr& g, std::mt19937& rng, int max_orbits) {
  const auto& lat = g->lattice();
  std::vector<GSet> parts;
  int k = std::uniform_int_distribution<int>(0, max_orbits)(rng);
  for (int i = 0; i < k; ++i) {
    auto h = lat.subgroups[std::uniform_int_distribution<int>(0, lat.size() - 1)(rng)];
    parts.push_back(orbit(g, h));
  }
  return parts.empty() ? GSet::empty(g) : coproduct(parts).set;
}

GMap random_gmap(const GSet& a, const GSet& b, std::mt19937& rng) {
  auto maps = all_gmaps(a, b);
  REQUIRE(!maps.empty());
  return maps[std::uniform_int_distribution<std::size_t>(0, maps.size() - 1)(rng)];
}

}  // namespace

TEST_CASE("orbits") {
  auto c2 = cyclic(2);
  CHECK(orbit(c2, c2->whole()).size() == 1);
  auto free2 = orbit(c2, c2->trivial());
  CHECK(free2.size() == 2);
  CHECK(free2.act(1, 0) == 1);
  auto c4 = cyclic(4);
  auto half = orbit(c4, subgroup_of_order(c4, 2));
  CHECK(half.size() == 2);
  CHECK(half.stabilizer(0) == subgroup_of_order(c4, 2));
  CHECK(half.stabilizer(1) == subgroup_of_order(c4, 2));
}

TEST_CASE("orbit decomposition") {
  auto c2 = cyclic(2);
  CHECK(orbit_decompose(orbit(c2, c2->trivial())).size() == 1);
  CHECK(orbit_decompose(GSet::empty(c2)).empty());
  // 2 fixed points and one free orbit
  GSet x = GSet::from_generators(c2, 4, {{1, {0, 2, 1, 3}}});
  auto orbits = orbit_decompose(x);
  CHECK(orbits.size() == 3);
  CHECK(orbits[0].stabilizer == c2->trivial());
  CHECK(orbits[0].representative == 1);
}

TEST_CASE("coproduct and product") {
  auto c2 = cyclic(2);
  auto free2 = orbit(c2, c2->trivial());
  auto pt = point(c2);
  CHECK(is_isomorphic(coproduct(free2, GSet::empty(c2)).set, free2));
  CHECK(orbit_type(coproduct(pt, pt).set) == OrbitType{{1, 2}});
  CHECK(orbit_type(coproduct(free2, pt).set) == OrbitType{{0, 1}, {1, 1}});
  CHECK(orbit_type(product(free2, free2).set) == OrbitType{{0, 2}});
}

TEST_CASE("pullbacks") {
  auto c2 = cyclic(2);
  auto free2 = orbit(c2, c2->trivial());
  auto pi = GMap::to_point(free2);
  auto pb = pullback(pi, pi);
  CHECK(pb.set.size() == 4);
  CHECK(orbit_type(pb.set) == OrbitType{{0, 2}});
  auto x = coproduct(free2, point(c2)).set;
  auto along_pt = pullback(GMap::to_point(x), GMap::identity(point(c2)));
  CHECK(is_isomorphic(along_pt.set, x));
  auto id_pb = pullback(GMap::identity(point(c2)), GMap::to_point(x));
  CHECK(is_isomorphic(id_pb.set, x));
}

TEST_CASE("pullback universal property on random cones") {
  std::mt19937 rng(7);
  for (auto g : {cyclic(2), cyclic(4), symmetric(3)}) {
    for (int trial = 0; trial < 20; ++trial) {
      auto c = random_gset(g, rng, 2);
      if (c.size() == 0) continue;
      auto a = random_gset(g, rng, 2);
      auto b = random_gset(g, rng, 2);
      if (all_gmaps(a, c).empty() || all_gmaps(b, c).empty()) continue;
      auto f = random_gmap(a, c, rng);
      auto h = random_gmap(b, c, rng);
      auto pb = pullback(f, h);
      auto z = random_gset(g, rng, 2);
      int cones = 0;
      for (const auto& p : all_gmaps(z, a))
        for (const auto& q : all_gmaps(z, b)) {
          if (compose(f, p) != compose(h, q)) continue;
          ++cones;
          auto m = pb.mediate(p, q);
          CHECK(compose(pb.first, m) == p);
          CHECK(compose(pb.second, m) == q);
          int hits = 0;
          for (const auto& cand : all_gmaps(z, pb.set))
            hits += compose(pb.first, cand) == p && compose(pb.second, cand) == q;
          CHECK(hits == 1);
        }
      (void)cones;
    }
  }
}

TEST_CASE("dependent products") {
  auto c2 = cyclic(2);
  auto free2 = orbit(c2, c2->trivial());
  {
    auto a = coproduct(free2, free2).set;
    auto ed = dependent_product(GMap::identity(a), GMap::identity(a));
    CHECK(is_isomorphic(ed.pi, a));
  }
  {
    auto h = fold(free2);
    auto ed = dependent_product(h, GMap::to_point(free2));
    CHECK(ed.pi.size() == 4);
    CHECK(count_fixed_orbits(ed.pi) == 2);
    CHECK(orbit_decompose(ed.pi).size() == 3);
  }
  {
    auto c4 = cyclic(4);
    auto free4 = orbit(c4, c4->trivial());
    auto ed = dependent_product(fold(free4), GMap::to_point(free4));
    CHECK(ed.pi.size() == 16);
    auto orbits = orbit_decompose(ed.pi);
    std::vector<int> sizes;
    for (const auto& o : orbits) sizes.push_back(static_cast<int>(o.points.size()));
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<int>{1, 1, 2, 4, 4, 4});
  }
  {
    // empty fibre of h kills every section over that base point
    auto h = GMap::from_empty(free2);
    auto ed = dependent_product(h, GMap::to_point(free2));
    CHECK(ed.pi.size() == 0);
  }
}

TEST_CASE("exponential diagram is a pullback and evaluation is fibrewise") {
  auto c2 = cyclic(2);
  auto free2 = orbit(c2, c2->trivial());
  auto ed = dependent_product(fold(free2), GMap::to_point(free2));
  for (int p = 0; p < ed.pullback.size(); ++p) CHECK(ed.h(ed.eval(p)) == ed.to_x(p));
  auto pb = pullback(ed.g, ed.h_prime);
  CHECK(pb.set.size() == ed.pullback.size());
  CHECK(compose(ed.g, ed.to_x) == compose(ed.h_prime, ed.g_prime));
}

TEST_CASE("dependent product adjunction counts") {
  std::mt19937 rng(11);
  for (auto g : {cyclic(2), cyclic(4), klein4(), symmetric(3), cyclic(8)}) {
    for (int trial = 0; trial < 8; ++trial) {
      auto y = random_gset(g, rng, 1);
      if (y.size() == 0) continue;
      auto x = random_gset(g, rng, 2);
      auto a = random_gset(g, rng, 2);
      auto b = random_gset(g, rng, 1);
      if (all_gmaps(x, y).empty() || all_gmaps(a, x).empty() || all_gmaps(b, y).empty()) continue;
      auto gm = random_gmap(x, y, rng);
      auto hm = random_gmap(a, x, rng);
      auto bm = random_gmap(b, y, rng);
      auto ed = dependent_product(hm, gm);
      int left = 0;
      for (const auto& phi : all_gmaps(b, ed.pi)) left += compose(ed.h_prime, phi) == bm;
      auto pb = pullback(gm, bm);
      int right = 0;
      for (const auto& psi : all_gmaps(pb.set, a)) right += compose(hm, psi) == pb.first;
      CHECK(left == right);
    }
  }
}

TEST_CASE("induce, restrict, coinduce") {
  auto c2 = cyclic(2);
  auto e = c2->trivial();
  auto ind = induce(c2, e, point(c2->embed(e).group));
  CHECK(is_isomorphic(ind.set, orbit(c2, e)));

  auto c4 = cyclic(4);
  auto h = subgroup_of_order(c4, 2);
  auto r = restrict(orbit(c4, c4->trivial()), h);
  CHECK(r.size() == 4);
  CHECK(orbit_type(r) == OrbitType{{0, 2}});

  auto co = coinduce(c2, e, GSet::trivial(c2->embed(e).group, 2));
  CHECK(co.set.size() == 4);
  CHECK(count_fixed_orbits(co.set) == 2);
  CHECK(orbit_decompose(co.set).size() == 3);
}

TEST_CASE("units and counits") {
  for (auto g : {cyclic(4), symmetric(3), klein4()}) {
    const auto& lat = g->lattice();
    for (auto h : lat.subgroups) {
      for (const auto& t : gsets_up_to(g, 4)) {
        auto eps = induce_counit(t, h);
        CHECK(eps.is_surjective());
        auto c = coinduce(g, h, restrict(t, h));
        auto eta = coinduce_unit(t, h, c);
        auto counit = coinduce_counit(c);
        CHECK(compose(counit, restrict_map(eta, h)) == GMap::identity(restrict(t, h)));
      }
    }
  }
}

TEST_CASE("sieve factorization") {
  auto c4 = cyclic(4);
  auto h = subgroup_of_order(c4, 2);
  const auto& eh = c4->embed(h);
  auto s = orbit(eh.group, eh.group->trivial());
  auto ind = induce(c4, h, s);
  {
    auto sf = sieve_factorization(GMap::identity(ind.set), ind);
    CHECK(is_isomorphic(sf.t, s));
  }
  {
    auto tp = orbit(c4, c4->trivial());
    for (const auto& f : all_gmaps(tp, ind.set)) {
      auto sf = sieve_factorization(f, ind);
      CHECK(is_isomorphic(sf.t, s));
      // f o iso = Ind(to_base) in Ind S coordinates
      auto lhs = compose(f, sf.iso);
      auto rhs = induce_map(c4, h, sf.to_base);
      CHECK(lhs.fn == rhs.fn);
    }
  }
  auto c2 = cyclic(2);
  auto e = c2->trivial();
  auto ind_pt = induce(c2, e, point(c2->embed(e).group));
  for (const auto& f : all_gmaps(orbit(c2, e), ind_pt.set)) CHECK(sieve_factorization(f, ind_pt).t.size() == 1);
}

TEST_CASE("canonical forms") {
  auto c2 = cyclic(2);
  auto a = GSet::from_generators(c2, 3, {{1, {0, 2, 1}}});
  auto b = GSet::from_generators(c2, 3, {{1, {1, 0, 2}}});
  auto w = find_isomorphism(a, b);
  REQUIRE(w.has_value());
  CHECK(w->is_bijective());
  CHECK(is_isomorphic(a, a));
  auto id = find_isomorphism(a, a);
  CHECK_FALSE(is_isomorphic(orbit(c2, c2->trivial()), GSet::trivial(c2, 2)));
  auto ca = canonicalize(a);
  CHECK(canonicalize(ca.set).set == ca.set);
  CHECK(canonicalize(b).set == ca.set);
}

TEST_CASE("gsets up to a bound") {
  CHECK(gsets_up_to(cyclic(2), 2).size() == 4);  // empty, pt, 2pt, C2/e
  CHECK(gsets_up_to(cyclic(1), 3).size() == 4);
}

TEST_CASE("validation") {
  auto c2 = cyclic(2);
  CHECK_THROWS_AS(GSet(c2, 2, {0, 1, 0, 0}), ValidationError);
  auto free2 = orbit(c2, c2->trivial());
  CHECK_THROWS_AS(GMap(free2, free2, {0, 0}), ValidationError);
  CHECK_THROWS_AS(GMap(point(c2), free2, {0}), ValidationError);
}
