#include "doctest.h"

#include <random>

#include "tambara/error.hpp"
#include "tambara/io.hpp"

using namespace tambara;

TEST_CASE("group references") {
  CHECK(parse_group_ref("cyclic:4")->order() == 4);
  CHECK(parse_group_ref("sym:3")->order() == 6);
  CHECK(same_group(parse_group_ref("klein4"), klein4()));
  auto p = parse_group_ref("product:cyclic:2xcyclic:3");
  CHECK(p->order() == 6);
  CHECK(same_group(parse_group_ref(p->name()), p));
  auto nested = direct_product(p, cyclic(2));
  CHECK(same_group(parse_group_ref(nested->name()), nested));
  auto sub = parse_group_ref("sub:0,2@cyclic:4");
  CHECK(sub->order() == 2);
  CHECK(same_group(parse_group_ref(sub->name()), sub));
  CHECK_THROWS_AS(parse_group_ref("cyclic:x"), ParseError);
  CHECK_THROWS_AS(parse_group_ref("nonsense"), ParseError);
  CHECK_THROWS_AS(parse_group_ref("sub:1@cyclic:4"), ParseError);
}

TEST_CASE("group file round trip") {
  auto g = symmetric(3);
  auto text = write_group(*g);
  CHECK(same_group(parse_group(text), g));
  CHECK_THROWS_AS(parse_group("group 2\n0 1\n1 1\n"), ValidationError);
  try {
    parse_group("group 2\n0 1\n1 x\n");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("subgroup syntax") {
  auto g = cyclic(4);
  CHECK(parse_subgroup(g, "e") == g->trivial());
  CHECK(parse_subgroup(g, "C4") == g->whole());
  CHECK(parse_subgroup(g, "C2").order() == 2);
  CHECK(parse_subgroup(g, "{0,2}") == parse_subgroup(g, "C2"));
  CHECK(parse_subgroup(g, "2") == parse_subgroup(g, "C2"));
  CHECK_THROWS_AS(parse_subgroup(g, "C3"), ParseError);
}

TEST_CASE("gset round trip") {
  for (auto g : {cyclic(4), symmetric(3), klein4()})
    for (const auto& x : gsets_up_to(g, 5)) CHECK(parse_gset(write_gset(x)) == x);
  auto full = parse_gset("gset cyclic:2 2\n0 1\n1 0\n");
  CHECK(full == orbit(cyclic(2), cyclic(2)->trivial()));
  CHECK_THROWS_AS(parse_gset("gset cyclic:2 2\n1 : 0 0\n"), ParseError);
}

TEST_CASE("bispan round trip") {
  for (auto g : {cyclic(2), symmetric(3)}) {
    auto pt = point(g);
    for (const auto& cls : enumerate_hom(pt, pt, ExponentPredicate::all(g), 3, 3)) {
      auto b = cls.representative();
      auto back = parse_bispan(write_bispan(b));
      CHECK(HomClass::of(back) == cls);
      CHECK(write_bispan(back) == write_bispan(b));
    }
  }
}

TEST_CASE("bispan parse errors") {
  const char* bad = "bispan\n"
                    "gset cyclic:2 1\n1 : 0\n"
                    "gset cyclic:2 1\n1 : 0\n"
                    "gset cyclic:2 1\n1 : 0\n"
                    "gset cyclic:2 1\n1 : 0\n"
                    "gmap S X\n0\n"
                    "gmap S Y\n0\n";
  try {
    parse_bispan(bad);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line() == 12);
  }
}

TEST_CASE("indexing round trip") {
  for (auto g : {cyclic(4), symmetric(3)})
    for (const auto& sys : enumerate_indexing_systems(g).systems) CHECK(parse_indexing(write_indexing(sys)) == sys);
  CHECK_THROWS_AS(parse_indexing("indexing cyclic:4\nadm 0,1,2,3 0\n"), ValidationError);
}

TEST_CASE("ring round trip") {
  auto g = cyclic(2);
  auto r = GRing::regular(g, 3);
  auto back = parse_ring(write_ring(r), g);
  CHECK(back.add_table() == r.add_table());
  CHECK(back.mul_table() == r.mul_table());
  CHECK(back.action() == r.action());
  CHECK_THROWS_AS(parse_ring("ring 2\n0 1\n1 0\n0 0\n0 0\n0 1\n0 1\n", g), ValidationError);
}

TEST_CASE("values") {
  CHECK(parse_value("1 3").c == std::vector<long long>{1, 3});
  CHECK(parse_value("(2, -1)").c == std::vector<long long>{2, -1});
  CHECK_THROWS_AS(parse_value("1 a"), ParseError);
}
