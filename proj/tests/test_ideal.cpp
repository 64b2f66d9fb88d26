#include "doctest.h"

#include "tambara/ideal.hpp"

using namespace tambara;

TEST_CASE("zero and whole ideals") {
  auto c2 = cyclic(2);
  BurnsideModel m(c2, ExponentPredicate::all(c2), 3);
  CHECK(is_O_ideal(m, zero_ideal(m)).ok);
  CHECK(is_O_ideal(m, whole_ideal(m)).ok);
}

TEST_CASE("family ideal over C2") {
  auto c2 = cyclic(2);
  const int e = c2->lattice().index_of(c2->trivial());
  BurnsideModel triv(c2, ExponentPredicate::from_indexing(IndexingSystem::trivial(c2)), 9);
  auto j = family_ideal(triv, {e});
  CHECK(j.subsets[0].size() + j.subsets[1].size() == 9 + 9);
  CHECK(is_O_ideal(triv, j).ok);
  BurnsideModel comp(c2, ExponentPredicate::from_indexing(IndexingSystem::complete(c2)), 9);
  auto rep = is_O_ideal(comp, family_ideal(comp, {e}));
  CHECK_FALSE(rep.ok);
  CHECK(rep.condition == "norm");
  CHECK(rep.witness.find("[G/G]") != std::string::npos);
}

TEST_CASE("a non-ideal subset") {
  auto c2 = cyclic(2);
  FixedPointModel m(GRing::zmod(c2, 6), ExponentPredicate::all(c2));
  auto j = zero_ideal(m);
  j.subsets[0].insert(Value{{3}});
  auto rep = is_O_ideal(m, j);
  CHECK_FALSE(rep.ok);
}
