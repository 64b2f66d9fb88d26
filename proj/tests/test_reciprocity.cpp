#include "doctest.h"

#include "tambara/error.hpp"
#include "tambara/reciprocity.hpp"

using namespace tambara;

namespace {

Subgroup order_sub(const GroupPtr& g, int order) {
  for (auto s : g->lattice().subgroups)
    if (s.order() == order) return s;
  throw std::logic_error("no subgroup of that order");
}

}  // namespace

TEST_CASE("sum formula summand counts") {
  auto c2 = cyclic(2);
  auto f2 = reciprocity_sum(IndexingSystem::complete(c2), c2->trivial(), c2->whole());
  CHECK(f2.summands.size() == 3);
  CHECK(orbit_type(f2.lhs.t()) == reciprocity_oracle(c2, ReciprocityFormula::Kind::Sum, c2->trivial(), c2->whole()));
  auto c4 = cyclic(4);
  auto f4 = reciprocity_sum(IndexingSystem::complete(c4), c4->trivial(), c4->whole());
  CHECK(f4.summands.size() == 6);
  CHECK(orbit_type(f4.lhs.t()) == reciprocity_oracle(c4, ReciprocityFormula::Kind::Sum, c4->trivial(), c4->whole()));
  auto same = reciprocity_sum(IndexingSystem::complete(c4), c4->whole(), c4->whole());
  CHECK(same.summands.size() == 2);  // N(a + b) = a + b along the identity
}

TEST_CASE("sum formula along an identity") {
  auto c2 = cyclic(2);
  auto f = reciprocity_sum(IndexingSystem::trivial(c2), c2->trivial(), c2->trivial());
  // a + b with no cross term: two summands, one per inclusion
  CHECK(f.summands.size() == 2);
}

TEST_CASE("formulas do not depend on the indexing system") {
  auto c4 = cyclic(4);
  auto h = order_sub(c4, 2);
  auto poset = enumerate_indexing_systems(c4);
  std::vector<HomClass> reference;
  for (const auto& sys : poset.systems) {
    if (!sys.admissible(h, c4->trivial())) continue;
    auto f = reciprocity_sum(sys, c4->trivial(), h);
    if (reference.empty()) reference = f.summands;
    CHECK(f.summands == reference);
  }
  CHECK(!reference.empty());
}

TEST_CASE("inadmissible norm") {
  auto c2 = cyclic(2);
  CHECK_THROWS_AS(reciprocity_sum(IndexingSystem::trivial(c2), c2->trivial(), c2->whole()), NormUnavailable);
  CHECK_THROWS_AS(reciprocity_transfer(IndexingSystem::trivial(c2), c2->trivial(), c2->trivial()), NormUnavailable);
}

TEST_CASE("transfer formula orbit types") {
  for (auto g : {cyclic(4), symmetric(3)}) {
    const auto& lat = g->lattice();
    for (int hi = 0; hi < lat.size(); ++hi)
      for (int ki = 0; ki < lat.size(); ++ki) {
        auto h = lat.subgroups[hi], k = lat.subgroups[ki];
        if (!h.is_subset_of(k)) continue;
        auto f = reciprocity_transfer(IndexingSystem::complete(g), h, k);
        CHECK(orbit_type(f.lhs.t()) == reciprocity_oracle(g, ReciprocityFormula::Kind::Transfer, h, k));
      }
  }
}

TEST_CASE("reciprocity in fixed-point models") {
  auto c2 = cyclic(2);
  auto sys = IndexingSystem::complete(c2);
  FixedPointModel z6(GRing::zmod(c2, 6), ExponentPredicate::from_indexing(sys));
  auto f = reciprocity_sum(sys, c2->trivial(), c2->whole());
  auto rep = verify_reciprocity(z6, f, 2);
  CHECK(rep.ok);
  CHECK(rep.cases == 36);
  FixedPointModel swap(GRing::regular(c2, 3), ExponentPredicate::from_indexing(sys));
  CHECK(verify_reciprocity(swap, f).ok);
  CHECK(verify_reciprocity(swap, reciprocity_transfer(sys, c2->trivial(), c2->trivial())).ok);
}

TEST_CASE("reciprocity in the burnside model") {
  auto c2 = cyclic(2);
  auto sys = IndexingSystem::complete(c2);
  BurnsideModel b(c2, ExponentPredicate::from_indexing(sys));
  auto rep = verify_reciprocity(b, reciprocity_sum(sys, c2->trivial(), c2->whole()));
  CHECK(rep.summary() == "OK (4 cases)");
  auto c4 = cyclic(4);
  auto sys4 = IndexingSystem::complete(c4);
  auto h = order_sub(c4, 2);
  BurnsideModel b4(c4, ExponentPredicate::from_indexing(sys4), 3);
  CHECK(verify_reciprocity(b4, reciprocity_transfer(sys4, c4->trivial(), h)).ok);
  FixedPointModel z6(GRing::zmod(c4, 6), ExponentPredicate::from_indexing(sys4));
  CHECK(verify_reciprocity(z6, reciprocity_transfer(sys4, c4->trivial(), h)).ok);
  CHECK(verify_reciprocity(z6, reciprocity_sum(sys4, c4->trivial(), c4->whole())).ok);
}
