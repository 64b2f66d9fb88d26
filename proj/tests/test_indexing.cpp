#include "doctest.h"

#include "tambara/indexing.hpp"

using namespace tambara;

namespace {

int idx(const GroupPtr& g, int order) {
  const auto& lat = g->lattice();
  for (int i = 0; i < lat.size(); ++i)
    if (lat.subgroups[i].order() == order) return i;
  return -1;
}

}  // namespace

TEST_CASE("validate trivial and complete systems") {
  for (auto g : {cyclic(2), cyclic(4), klein4(), symmetric(3)}) {
    CHECK(validate(IndexingSystem::trivial(g)).ok);
    CHECK(validate(IndexingSystem::complete(g)).ok);
  }
}

TEST_CASE("restriction closure over cyclic 4") {
  auto c4 = cyclic(4);
  const int e = idx(c4, 1), c2 = idx(c4, 2), top = idx(c4, 4);
  IndexingSystem ok(c4, {{e, e}, {c2, c2}, {top, top}, {top, c2}});
  CHECK(validate(ok).ok);
  IndexingSystem bad(c4, {{e, e}, {c2, c2}, {top, top}, {top, e}});
  auto rep = validate(bad);
  CHECK_FALSE(rep.ok);
  CHECK(rep.axiom == "restriction");
  IndexingSystem no_trivial(c4, {{top, c2}});
  CHECK(validate(no_trivial).axiom == "trivial");
}

TEST_CASE("enumeration counts agree with the oracle") {
  struct Case {
    GroupPtr g;
    int expected;
  };
  for (auto [g, expected] : {Case{cyclic(2), 2}, Case{cyclic(3), 2}, Case{cyclic(4), 5}, Case{cyclic(8), 14},
                             Case{klein4(), -1}, Case{symmetric(3), -1}}) {
    auto poset = enumerate_indexing_systems(g);
    auto oracle = brute_force_indexing_systems(g);
    CHECK(poset.systems == oracle);
    if (expected > 0) CHECK(poset.systems.size() == static_cast<std::size_t>(expected));
    CHECK(poset.systems.front() == IndexingSystem::trivial(g));
    CHECK(poset.systems.back() == IndexingSystem::complete(g));
  }
}

TEST_CASE("parallel enumeration is deterministic") {
  auto g = symmetric(3);
  auto a = enumerate_indexing_systems(g, 1);
  auto b = enumerate_indexing_systems(g, 4);
  CHECK(a.systems == b.systems);
  CHECK(a.hasse == b.hasse);
}

TEST_CASE("maps in the category") {
  auto c2 = cyclic(2);
  auto free2 = orbit(c2, c2->trivial());
  auto pi = GMap::to_point(free2);
  CHECK(map_in_category(IndexingSystem::complete(c2), pi));
  CHECK_FALSE(map_in_category(IndexingSystem::trivial(c2), pi));
  for (auto g : {cyclic(2), cyclic(4)})
    for (const auto& sys : enumerate_indexing_systems(g).systems)
      for (const auto& t : gsets_up_to(g, 4)) CHECK(map_in_category(sys, fold(t)));
  auto c4 = cyclic(4);
  const auto& lat = c4->lattice();
  auto t = orbit(c4, lat.subgroups[idx(c4, 2)]);
  for (const auto& sys : enumerate_indexing_systems(c4).systems)
    for (int h = 0; h < lat.size(); ++h)
      if (sys.admissible(lat.size() - 1, h)) CHECK(map_in_category(sys, induce_counit(t, lat.subgroups[h])));
}

TEST_CASE("restricted systems") {
  auto c4 = cyclic(4);
  auto c2 = c4->lattice().subgroups[idx(c4, 2)];
  auto r = restrict_system(IndexingSystem::complete(c4), c2);
  CHECK(r == IndexingSystem::complete(c4->embed(c2).group));
  CHECK(validate(r).ok);
}
