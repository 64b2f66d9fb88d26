#include "doctest.h"

#include "tambara/error.hpp"
#include "tambara/transport.hpp"

using namespace tambara;

TEST_CASE("induced identity bispan") {
  auto c2 = cyclic(2);
  auto e = c2->trivial();
  auto pt_e = point(c2->embed(e).group);
  auto b = induce_bispan(c2, e, Bispan::identity(pt_e));
  CHECK(HomClass::of(b) == HomClass::of(Bispan::identity(orbit(c2, e))));
}

TEST_CASE("transport along the whole group is the identity") {
  auto c4 = cyclic(4);
  auto all = ExponentPredicate::all(c4);
  auto x = point(c4);
  auto y = orbit(c4, c4->lattice().subgroups[1]);
  auto ind = induce(c4, c4->whole(), y);
  for (const auto& c : enumerate_hom(x, y, all, 2, 2)) {
    auto fwd = transport_forward(x, c4->whole(), c.representative());
    CHECK(HomClass::of(fwd) == c);
    CHECK(HomClass::of(transport_inverse(c.representative(), ind)) == c);
  }
}

TEST_CASE("transport bijections") {
  auto c2 = cyclic(2);
  for (const auto& sys : enumerate_indexing_systems(c2).systems) {
    auto e = c2->trivial();
    auto rep = verify_transport(point(c2), e, point(c2->embed(e).group), sys, 2, 2);
    CHECK(rep.ok);
    CHECK(rep.h_classes > 0);
  }
  auto c4 = cyclic(4);
  auto mid = c4->lattice().subgroups[1];
  const auto& emb = c4->embed(mid);
  for (const auto& sys : enumerate_indexing_systems(c4).systems) {
    auto rep = verify_transport(point(c4), mid, point(emb.group), sys, 2, 2);
    CHECK(rep.ok);
    for (const auto& f : rep.failures) MESSAGE(f);
    auto rep2 = verify_transport(point(c4), mid, orbit(emb.group, emb.group->trivial()), sys, 2, 2);
    CHECK(rep2.ok);
  }
}

TEST_CASE("inverse transport needs an induced target") {
  auto c2 = cyclic(2);
  auto e = c2->trivial();
  auto ind = induce(c2, e, point(c2->embed(e).group));
  CHECK_THROWS_AS(transport_inverse(Bispan::identity(point(c2)), ind), ShapeError);
}
