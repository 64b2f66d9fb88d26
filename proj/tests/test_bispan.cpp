#include "doctest.h"

#include <numeric>
#include <random>

#include "tambara/bispan.hpp"
#include "tambara/error.hpp"

using namespace tambara;

namespace {

struct C2Setup {
  GroupPtr g = cyclic(2);
  GSet pt = point(g);
  GSet free = orbit(g, g->trivial());
  GMap pi = GMap::to_point(free);
  ExponentPredicate all = ExponentPredicate::all(g);

  HomClass x() const { return HomClass::of(Bispan::identity(pt)); }
  // tr(1): X <- 0 -> C2/e -> pt
  HomClass t() const { return HomClass::of(Bispan(GMap::from_empty(pt), GMap::from_empty(free), pi)); }
  HomClass nx() const { return HomClass::of(compose_raw(Bispan::restriction(pi), Bispan::norm(pi), all)); }
};

}  // namespace

TEST_CASE("generators along identities") {
  C2Setup c;
  auto id = GMap::identity(c.free);
  auto cls = HomClass::of(Bispan::identity(c.free));
  CHECK(HomClass::of(Bispan::restriction(id)) == cls);
  CHECK(HomClass::of(Bispan::norm(id)) == cls);
  CHECK(HomClass::of(Bispan::transfer(id)) == cls);
}

TEST_CASE("composition with identity") {
  C2Setup c;
  auto p = c.nx().representative();
  CHECK(HomClass::of(compose(p, Bispan::identity(c.pt), c.all)) == c.nx());
  CHECK(HomClass::of(compose(Bispan::identity(c.pt), p, c.all)) == c.nx());
}

TEST_CASE("norm of a sum has three summands") {
  C2Setup c;
  auto two = coproduct(c.free, c.free).set;
  auto sum = Bispan::transfer(fold(c.free));
  auto n = Bispan::norm(c.pi);
  auto comp = HomClass::of(compose_raw(sum, n, c.all));
  CHECK(decompose(comp).size() == 3);
  auto t = comp.representative().t();
  CHECK(orbit_type(t) == OrbitType{{0, 1}, {1, 2}});
  (void)two;
}

TEST_CASE("free C2 Tambara relations") {
  C2Setup c;
  auto t = c.t();
  CHECK(multiply(t, t, c.all) == add(t, t));
  auto x = c.x();
  auto x2 = multiply(x, x, c.all);
  CHECK(multiply(t, c.nx(), c.all) == multiply(t, x2, c.all));
  CHECK_FALSE(c.nx() == x2);
  // underlying: R_pi o nx = (R_pi)^2
  auto rx = HomClass::of(Bispan::restriction(c.pi));
  CHECK(HomClass::of(compose_raw(c.nx().representative(), Bispan::restriction(c.pi), c.all)) ==
        multiply(rx, rx, c.all));
}

TEST_CASE("units") {
  C2Setup c;
  auto t = c.t();
  auto zero = zero_class(c.pt, c.pt);
  CHECK(add(t, zero) == t);
  auto one = unit_class(c.pt, c.pt);
  CHECK(multiply(t, one, c.all) == t);
  CHECK(multiply(c.nx(), one, c.all) == c.nx());
}

TEST_CASE("virtual homs") {
  C2Setup c;
  auto v = VirtualHom::from(c.t());
  CHECK((v - v).empty());
  auto a = VirtualHom::from(c.nx());
  CHECK((a + v) - v == a);
  CHECK(group_complete({{c.t(), 2}, {c.nx(), 1}, {c.t(), -2}}) == a);
}

TEST_CASE("exponent escape on a user predicate") {
  C2Setup c;
  // only identities of pt and C2/e plus pi; the norm-of-sum rewrite needs more
  auto user = ExponentPredicate::user_table(c.g, {GMap::identity(c.pt), GMap::identity(c.free), c.pi,
                                                  GMap::identity(coproduct(c.free, c.free).set)},
                                            4);
  auto sum = Bispan::transfer(fold(c.free));
  CHECK_THROWS_AS(compose_raw(sum, Bispan::norm(c.pi), user), ExponentEscape);
  auto triv = ExponentPredicate::from_indexing(IndexingSystem::trivial(c.g));
  CHECK_THROWS_AS(compose_raw(Bispan::identity(c.free), Bispan::norm(c.pi), triv), ExponentEscape);
}

TEST_CASE("shape errors") {
  C2Setup c;
  CHECK_THROWS_AS(compose_raw(Bispan::identity(c.pt), Bispan::identity(c.free), c.all), ShapeError);
}

TEST_CASE("hom enumeration") {
  auto e = cyclic(1);
  auto pt = point(e);
  CHECK(enumerate_hom(pt, pt, ExponentPredicate::all(e), 1, 1).size() == 3);
  C2Setup c;
  CHECK(enumerate_hom(c.pt, c.free, c.all, 0, 0).size() == 1);
  auto triv = enumerate_hom(c.pt, c.pt, ExponentPredicate::from_indexing(IndexingSystem::trivial(c.g)), 2, 2);
  auto comp = enumerate_hom(c.pt, c.pt, ExponentPredicate::from_indexing(IndexingSystem::complete(c.g)), 2, 2);
  CHECK(triv.size() < comp.size());
  for (const auto& h : triv) CHECK(std::find(comp.begin(), comp.end(), h) != comp.end());
  CHECK(std::find(comp.begin(), comp.end(), c.nx()) != comp.end());
  CHECK(std::find(triv.begin(), triv.end(), c.nx()) == triv.end());
}

TEST_CASE("canonical form is a complete invariant on relabelled bispans") {
  std::mt19937 rng(3);
  for (auto g : {cyclic(2), cyclic(4), symmetric(3)}) {
    auto all = ExponentPredicate::all(g);
    auto x = coproduct(point(g), orbit(g, g->lattice().subgroups[1])).set;
    auto y = point(g);
    auto classes = enumerate_hom(x, y, all, 4, 3);
    CHECK(!classes.empty());
    for (std::size_t i = 0; i < classes.size(); ++i) {
      auto rep = classes[i].representative();
      // relabel S and T by random isomorphisms
      auto permute = [&](const GSet& s) {
        std::vector<int> perm(s.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<int> act(s.action_table().size());
        for (int a = 0; a < g->order(); ++a)
          for (int p = 0; p < s.size(); ++p) act[a * s.size() + perm[p]] = perm[s.act(a, p)];
        GSet ps(g, s.size(), std::move(act));
        return std::pair{ps, GMap(s, ps, perm)};
      };
      auto [s2, sigma] = permute(rep.s());
      auto [t2, tau] = permute(rep.t());
      Bispan moved(compose(rep.f, inverse(sigma)), compose(tau, compose(rep.g, inverse(sigma))),
                   compose(rep.h, inverse(tau)));
      CHECK(HomClass::of(moved) == classes[i]);
      for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(classes[j] == classes[i]);
    }
  }
}
