#include "doctest.h"

#include <chrono>

#include "tambara/error.hpp"
#include "tambara/subcategory.hpp"

using namespace tambara;

TEST_CASE("properties of indexing-system exponents") {
  for (auto g : {cyclic(2), cyclic(4)})
    for (const auto& sys : enumerate_indexing_systems(g).systems) {
      auto rep = subcategory_properties(ExponentPredicate::from_indexing(sys));
      CHECK(rep.wide);
      CHECK(rep.pullback_stable);
      CHECK(rep.composition_closed);
      CHECK(rep.coproduct_complete());
      CHECK(rep.all_monos);
    }
}

TEST_CASE("builtin exponent classes") {
  auto g = cyclic(2);
  auto epi = subcategory_properties(ExponentPredicate::epi(g));
  CHECK(epi.wide);
  CHECK(epi.pullback_stable);
  CHECK(epi.sums_closed);
  CHECK_FALSE(epi.contains_initial);
  CHECK_FALSE(epi.coproduct_complete());
  auto iso = subcategory_properties(ExponentPredicate::iso(g));
  CHECK(iso.wide);
  CHECK(iso.pullback_stable);
  auto all = subcategory_properties(ExponentPredicate::all(g));
  CHECK(all.coproduct_complete());
  CHECK(all.all_monos);
}

TEST_CASE("indexing systems from exponent classes") {
  auto g = cyclic(4);
  CHECK(indexing_from_subcategory(ExponentPredicate::all(g)).system == IndexingSystem::complete(g));
  auto mono = indexing_from_subcategory(ExponentPredicate::mono(g));
  CHECK(mono.system == IndexingSystem::trivial(g));
  CHECK_FALSE(mono.exact);
  auto epi = indexing_from_subcategory(ExponentPredicate::epi(g));
  CHECK(epi.system == IndexingSystem::complete(g));
  CHECK_FALSE(epi.exact);
  for (const auto& sys : enumerate_indexing_systems(g).systems) {
    auto back = indexing_from_subcategory(ExponentPredicate::from_indexing(sys));
    CHECK(back.system == sys);
    CHECK(back.exact);
  }
}

TEST_CASE("non-pullback-stable user class is rejected") {
  auto g = cyclic(2);
  auto free = orbit(g, g->trivial());
  std::vector<GMap> arrows;
  for (const auto& x : gsets_up_to(g, 4)) arrows.push_back(GMap::identity(x));
  arrows.push_back(GMap::to_point(free));
  auto d = ExponentPredicate::user_table(g, arrows, 4);
  CHECK_THROWS_AS(indexing_from_subcategory(d, 4, 4), InvalidSubcategory);
}

TEST_CASE("round trips") {
  for (auto g : {cyclic(2), cyclic(4)}) {
    auto rep = round_trip_check(g);
    CHECK(rep.ok);
    CHECK(rep.order_preserved);
  }
  auto rep = round_trip_check(klein4());
  CHECK(rep.ok);
  CHECK(rep.systems == static_cast<int>(brute_force_indexing_systems(klein4()).size()));
}
