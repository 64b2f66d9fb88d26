#include "doctest.h"

#include "tambara/error.hpp"
#include "tambara/group.hpp"

using namespace tambara;

TEST_CASE("cyclic group basics") {
  auto c4 = cyclic(4);
  CHECK(c4->order() == 4);
  CHECK(c4->identity() == 0);
  CHECK(c4->mul(1, 3) == 0);
  CHECK(c4->lattice().size() == 3);
  CHECK(cyclic(2)->lattice().size() == 2);
}

TEST_CASE("klein four from a product") {
  auto v = direct_product(cyclic(2), cyclic(2));
  CHECK(v->order() == 4);
  for (int g = 1; g < 4; ++g) CHECK(v->inv(g) == g);
  CHECK(v->lattice().size() == 5);
  CHECK(v->same_as(*klein4()));
}

TEST_CASE("symmetric group on three letters") {
  auto s3 = symmetric(3);
  CHECK(s3->order() == 6);
  CHECK(elements_of_order(*s3, 2).size() == 3);
  const auto& lat = s3->lattice();
  CHECK(lat.size() == 6);
  std::vector<int> by_order(7, 0);
  for (auto h : lat.subgroups) ++by_order[h.order()];
  CHECK(by_order[1] == 1);
  CHECK(by_order[2] == 3);
  CHECK(by_order[3] == 1);
  CHECK(by_order[6] == 1);
  CHECK(lat.classes.size() == 4);
}

TEST_CASE("subconjugacy") {
  auto s3 = symmetric(3);
  const auto& lat = s3->lattice();
  std::vector<Subgroup> twos;
  for (auto h : lat.subgroups)
    if (h.order() == 2) twos.push_back(h);
  REQUIRE(twos.size() == 3);
  CHECK(s3->is_subconjugate(twos[0], twos[1]));
  CHECK(s3->is_subconjugate(s3->trivial(), twos[2]));
  auto c4 = cyclic(4);
  Subgroup c2 = c4->generated_by(std::vector<int>{2});
  CHECK_FALSE(c4->is_subconjugate(c4->whole(), c2));
  // reflexive and transitive on the lattice
  for (auto a : lat.subgroups) {
    CHECK(s3->is_subconjugate(a, a));
    for (auto b : lat.subgroups)
      for (auto c : lat.subgroups)
        if (s3->is_subconjugate(a, b) && s3->is_subconjugate(b, c)) CHECK(s3->is_subconjugate(a, c));
  }
}

TEST_CASE("double cosets cover the group") {
  for (auto g : {cyclic(2), cyclic(4), cyclic(6), klein4(), symmetric(3), direct_product(cyclic(2), cyclic(4)),
                 cyclic(12)}) {
    const auto& lat = g->lattice();
    for (auto h : lat.subgroups)
      for (auto k : lat.subgroups) {
        int total = 0;
        for (int r : g->double_cosets(h, k)) {
          std::uint64_t m = 0;
          for (int a : h.elements())
            for (int b : k.elements()) m |= std::uint64_t{1} << g->mul(g->mul(a, r), b);
          total += std::popcount(m);
        }
        CHECK(total == g->order());
      }
  }
  auto s3 = symmetric(3);
  Subgroup a3{};
  for (auto h : s3->lattice().subgroups)
    if (h.order() == 3) a3 = h;
  Subgroup t{};
  for (auto h : s3->lattice().subgroups)
    if (h.order() == 2) t = h;
  CHECK(s3->double_cosets(t, a3).size() == 1);
  CHECK(cyclic(2)->double_cosets(cyclic(2)->trivial(), cyclic(2)->trivial()).size() == 2);
  CHECK(s3->double_cosets(s3->whole(), s3->whole()).size() == 1);
}

TEST_CASE("lattice is conjugation stable") {
  auto s4 = symmetric(4);
  const auto& lat = s4->lattice();
  CHECK(lat.size() == 30);
  for (auto h : lat.subgroups)
    for (int g = 0; g < s4->order(); ++g) {
      int j = lat.index_of(s4->conjugate(g, h));
      CHECK(lat.conj_class[j] == lat.conj_class[lat.index_of(h)]);
    }
}

TEST_CASE("table validation") {
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 1}}), ValidationError);
  CHECK_THROWS_AS(FiniteGroup::from_table({{1, 0}, {0, 1}}), ValidationError);
  // non-associative loop of order 5 with identity and inverses
  std::vector<std::vector<int>> loop = {
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  CHECK_THROWS_AS(FiniteGroup::from_table(loop), ValidationError);
  CHECK_THROWS_AS(cyclic(65), ResourceError);
}

TEST_CASE("subgroup embedding") {
  auto c4 = cyclic(4);
  Subgroup c2 = c4->generated_by(std::vector<int>{2});
  const auto& e = c4->embed(c2);
  CHECK(e.group->order() == 2);
  CHECK(e.to_parent == std::vector<int>{0, 2});
  CHECK(c4->embed(c4->whole()).group.get() == c4.get());
}
