#include "doctest.h"

#include <random>

#include "tambara/error.hpp"
#include "tambara/model.hpp"

using namespace tambara;

namespace {

Value scaled(const TambaraModel& m, const GSet& x, const Value& v, int k) {
  Value out = m.zero(x);
  for (int i = 0; i < k; ++i) out = m.add(x, out, v);
  return out;
}

// a few maps between small G-sets, including non-surjective and fold maps
std::vector<GMap> sample_maps(const GroupPtr& g) {
  std::vector<GMap> out;
  auto sets = gsets_up_to(g, 4);
  for (const auto& a : sets) {
    if (a.size() == 0 || a.size() > 4) continue;
    for (const auto& b : sets) {
      if (b.size() == 0 || b.size() > 2) continue;
      auto maps = all_gmaps(a, b, 64);
      for (std::size_t i = 0; i < maps.size() && i < 3; ++i) out.push_back(maps[i]);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("fixed-point model with trivial action") {
  auto g = cyclic(2);
  FixedPointModel m(GRing::zmod(g, 6), ExponentPredicate::all(g));
  auto pt = point(g);
  auto free = orbit(g, g->trivial());
  auto pi = GMap::to_point(free);
  CHECK(m.elements(pt)->size() == 6);
  for (int a = 0; a < 6; ++a) {
    auto v = m.from_representatives(free, {a});
    CHECK(m.transfer(pi, v).c[0] == (2 * a) % 6);
    CHECK(m.norm(pi, v).c[0] == (a * a) % 6);
  }
}

TEST_CASE("fixed-point model with the swap action") {
  auto g = cyclic(2);
  FixedPointModel m(GRing::regular(g, 3), ExponentPredicate::all(g));
  auto pt = point(g);
  auto free = orbit(g, g->trivial());
  auto pi = GMap::to_point(free);
  auto v = m.from_representatives(free, {1 * 3 + 2});
  CHECK(v.c[1] == 2 * 3 + 1);
  CHECK(m.transfer(pi, v).c[0] == 0);
  CHECK(m.norm(pi, v).c[0] == 2 * 3 + 2);
  CHECK(m.elements(pt)->size() == 3);
  CHECK(m.elements(free)->size() == 9);
}

TEST_CASE("burnside model over C2") {
  auto g = cyclic(2);
  BurnsideModel m(g, ExponentPredicate::all(g));
  auto pt = point(g);
  auto free = orbit(g, g->trivial());
  auto pi = GMap::to_point(free);
  CHECK(m.basis(pt).size() == 2);
  CHECK(m.basis(free).size() == 1);
  auto t = m.transfer(pi, m.one(free));
  CHECK(t == m.from_gset(GMap::to_point(free)));
  CHECK(m.mul(pt, t, t) == m.add(pt, t, t));
  auto two = scaled(m, free, m.one(free), 2);
  auto n = m.norm(pi, two);
  CHECK(n == m.add(pt, scaled(m, pt, m.one(pt), 2), t));
  CHECK(m.norm_effective(pi, two) == n);
  CHECK(m.format(pt, n) == "2*[G/G] + [G/e]");
  CHECK(m.restrict(pi, t) == two);
}

TEST_CASE("burnside modulus must be coprime to the group order") {
  auto g = cyclic(2);
  CHECK_THROWS_AS(BurnsideModel(g, ExponentPredicate::all(g), 8), ValidationError);
  BurnsideModel m(g, ExponentPredicate::all(g), 9);
  CHECK(m.elements(point(g))->size() == 81);
}

TEST_CASE("norms via marks agree with dependent products") {
  std::mt19937 rng(7);
  for (auto g : {cyclic(2), cyclic(4), symmetric(3), klein4()}) {
    BurnsideModel m(g, ExponentPredicate::all(g));
    for (const auto& f : sample_maps(g)) {
      for (int trial = 0; trial < 3; ++trial) {
        Value v = m.zero(f.source);
        for (auto& c : v.c) c = std::uniform_int_distribution<int>(0, 2)(rng);
        CHECK(m.norm(f, v) == m.norm_effective(f, v));
      }
    }
  }
}

TEST_CASE("marks are multiplicative and invertible") {
  std::mt19937 rng(11);
  for (auto g : {cyclic(4), symmetric(3)}) {
    BurnsideModel m(g, ExponentPredicate::all(g));
    for (const auto& x : gsets_up_to(g, 4)) {
      for (int trial = 0; trial < 3; ++trial) {
        auto a = m.random_element(x, rng);
        auto b = m.random_element(x, rng);
        auto ma = m.marks(x, a), mb = m.marks(x, b), mab = m.marks(x, m.mul(x, a, b));
        for (std::size_t i = 0; i < ma.size(); ++i) CHECK(mab[i] == ma[i] * mb[i]);
        CHECK(m.from_marks(x, ma) == a);
      }
    }
  }
}

TEST_CASE("ring axioms hold along maps") {
  std::mt19937 rng(5);
  auto g = symmetric(3);
  std::vector<ModelPtr> models{std::make_shared<BurnsideModel>(g, ExponentPredicate::all(g)),
                               std::make_shared<BurnsideModel>(g, ExponentPredicate::all(g), 5),
                               std::make_shared<FixedPointModel>(GRing::zmod(g, 6), ExponentPredicate::all(g))};
  for (const auto& m : models) {
    for (const auto& f : sample_maps(g)) {
      auto a = m->random_element(f.source, rng), a2 = m->random_element(f.source, rng);
      auto b = m->random_element(f.target, rng);
      // Frobenius
      CHECK(m->transfer(f, m->mul(f.source, a, m->restrict(f, b))) == m->mul(f.target, m->transfer(f, a), b));
      CHECK(m->norm(f, m->mul(f.source, a, a2)) == m->mul(f.target, m->norm(f, a), m->norm(f, a2)));
      CHECK(m->restrict(f, m->mul(f.target, b, b)) ==
            m->mul(f.source, m->restrict(f, b), m->restrict(f, b)));
      CHECK(m->norm(f, m->one(f.source)) == m->one(f.target));
    }
  }
}

TEST_CASE("norms respect the exponent predicate") {
  auto g = cyclic(2);
  BurnsideModel m(g, ExponentPredicate::from_indexing(IndexingSystem::trivial(g)));
  auto free = orbit(g, g->trivial());
  auto pi = GMap::to_point(free);
  CHECK_THROWS_AS(m.norm(pi, m.one(free)), NormUnavailable);
  try {
    m.norm(pi, m.one(free));
  } catch (const NormUnavailable& e) {
    CHECK(std::string(e.what()).find("(G, e)") != std::string::npos);
  }
  CHECK(m.norm(GMap::identity(free), m.one(free)) == m.one(free));
}

TEST_CASE("coinduced model") {
  auto g = cyclic(2);
  const auto& emb = g->embed(g->trivial());
  auto base = std::make_shared<FixedPointModel>(GRing::zmod(emb.group, 4), ExponentPredicate::all(emb.group));
  CoInducedModel m(base, g, g->trivial());
  auto pt = point(g);
  auto free = orbit(g, g->trivial());
  auto pi = GMap::to_point(free);
  CHECK(m.elements(pt)->size() == 4);
  CHECK(m.elements(free)->size() == 16);
  Value v{{1, 3}};
  CHECK(m.norm(pi, v) == Value{{3}});
  CHECK(m.transfer(pi, v) == Value{{0}});
  for (const auto& x : gsets_up_to(g, 4)) {
    auto r = restrict(x, g->trivial());
    CHECK(m.elements(x)->size() == base->elements(r)->size());
  }
}

TEST_CASE("restriction to the whole group and the point shift are trivial") {
  std::mt19937 rng(1);
  auto g = cyclic(4);
  auto base = std::make_shared<FixedPointModel>(GRing::zmod(g, 3), ExponentPredicate::all(g));
  RestrictedModel whole(base, g->whole());
  ProductShiftModel shifted(base, point(g));
  for (const auto& f : sample_maps(g)) {
    auto v = base->random_element(f.source, rng);
    CHECK(shifted.norm(f, v) == base->norm(f, v));
    CHECK(shifted.transfer(f, v) == base->transfer(f, v));
    CHECK(whole.elements(f.source)->size() == base->elements(f.source)->size());
  }
}

TEST_CASE("restricted burnside over a subgroup") {
  auto g = cyclic(4);
  auto h = g->lattice().subgroups[1];
  REQUIRE(h.order() == 2);
  auto base = std::make_shared<BurnsideModel>(g, ExponentPredicate::all(g));
  RestrictedModel m(base, h);
  auto sub = m.group();
  BurnsideModel direct(sub, ExponentPredicate::all(sub));
  auto pt = point(sub);
  auto free = orbit(sub, sub->trivial());
  auto pi = GMap::to_point(free);
  auto two = scaled(m, free, m.one(free), 2);
  // same numbers of basis elements, and the norm is 2 + t in both
  auto n = m.norm(pi, two);
  auto nd = direct.norm(pi, scaled(direct, free, direct.one(free), 2));
  CHECK(n.c.size() == nd.c.size());
  CHECK(m.format(pt, n).find("2*") != std::string::npos);
}

TEST_CASE("eval of a bispan") {
  auto g = cyclic(2);
  FixedPointModel m(GRing::zmod(g, 6), ExponentPredicate::all(g));
  auto free = orbit(g, g->trivial());
  auto pi = GMap::to_point(free);
  auto pt = point(g);
  // T_pi N_id R_pi : a -> 2a
  Bispan b(pi, GMap::identity(free), pi);
  for (int a = 0; a < 6; ++a) CHECK(eval(m, b, Value{{a}}).c[0] == (2 * a) % 6);
  CHECK(eval(m, Bispan::norm(pi), Value{{2, 2}}).c[0] == 4);
  (void)pt;
}
