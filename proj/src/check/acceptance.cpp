#include "tambara/check/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

#include "tambara/check/oracles.hpp"
#include "tambara/error.hpp"
#include "tambara/ideal.hpp"
#include "tambara/reciprocity.hpp"
#include "tambara/subcategory.hpp"
#include "tambara/transport.hpp"

namespace tambara::check {

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail.str("");
      pass = false;
      detail << what << "; ";
    }
  }
};

Subgroup of_order(const GroupPtr& g, int n) {
  for (auto s : g->lattice().subgroups)
    if (s.order() == n) return s;
  throw ValidationError("no subgroup of order " + std::to_string(n));
}

std::string first(const std::vector<std::string>& v) { return v.empty() ? std::string() : v.front(); }

void classification(Outcome& out, int threads) {
  struct Case {
    GroupPtr g;
    long long expected;  // -1: oracle agreement only
  };
  std::vector<Case> cases{{cyclic(2), 2}, {cyclic(3), 2}, {cyclic(4), 5},
                          {klein4(), -1}, {cyclic(8), 14}, {symmetric(3), -1}};
  for (const auto& c : cases) {
    auto poset = enumerate_indexing_systems(c.g, threads);
    auto brute = brute_force_indexing_systems(c.g);
    const auto n = static_cast<long long>(poset.systems.size());
    out.require(poset.systems == brute, c.g->name() + ": enumerator and subset oracle disagree");
    if (c.expected >= 0) {
      out.require(n == c.expected, c.g->name() + ": " + std::to_string(n) + " systems, expected " +
                                       std::to_string(c.expected));
      out.require(n == cyclic_prime_power_count(c.g->order()), c.g->name() + ": Catalan count mismatch");
    }
    auto rt = round_trip_check(c.g, 8, 4, threads);
    out.require(rt.ok, c.g->name() + ": round trip fails: " + first(rt.mismatches));
    out.require(rt.order_preserved, c.g->name() + ": inclusion order not preserved");
    out.detail << c.g->name() << "=" << n << " ";
  }
}

void closure(Outcome& out, int) {
  int total = 0;
  for (auto g : {cyclic(4), symmetric(3)}) {
    auto systems = enumerate_indexing_systems(g).systems;
    for (std::size_t i = 0; i < systems.size(); ++i) {
      auto rep = composite_closure(systems[i], 1000, 100 + static_cast<unsigned>(i), g->order() == 6 ? 6 : 4);
      total += rep.cases;
      out.require(rep.failures.empty(), g->name() + ": " + first(rep.failures));
    }
    out.detail << g->name() << ": " << systems.size() << " systems ";
  }
  out.detail << total << " composites";
}

void functoriality_check(Outcome& out, int) {
  auto c2 = cyclic(2), c4 = cyclic(4), s3 = symmetric(3);
  std::vector<std::pair<std::string, std::shared_ptr<TambaraModel>>> models{
      {"C2 Z/6", std::make_shared<FixedPointModel>(GRing::zmod(c2, 6), ExponentPredicate::all(c2))},
      {"C2 Z/3xZ/3 swap", std::make_shared<FixedPointModel>(GRing::regular(c2, 3), ExponentPredicate::all(c2))},
      {"C4 Z/6", std::make_shared<FixedPointModel>(GRing::zmod(c4, 6), ExponentPredicate::all(c4))},
      {"S3 Z/6", std::make_shared<FixedPointModel>(GRing::zmod(s3, 6), ExponentPredicate::all(s3))}};
  int total = 0;
  for (std::size_t i = 0; i < models.size(); ++i) {
    const int points = models[i].second->group()->order() == 6 ? 6 : 4;
    auto rep = functoriality(*models[i].second, 250, 7 + static_cast<unsigned>(i), 3, points);
    total += rep.cases;
    out.require(rep.failures.empty(), models[i].first + ": " + first(rep.failures));
  }
  out.detail << total << " pairs";
}

void reciprocity(Outcome& out, int threads) {
  auto c2 = cyclic(2), c4 = cyclic(4);
  auto s2 = IndexingSystem::complete(c2), s4 = IndexingSystem::complete(c4);
  auto f2 = reciprocity_sum(s2, c2->trivial(), c2->whole());
  auto f4 = reciprocity_sum(s4, c4->trivial(), c4->whole());
  out.require(f2.summands.size() == 3, "e<=C2 sum formula has " + std::to_string(f2.summands.size()) + " summands");
  out.require(f4.summands.size() == 6, "e<=C4 sum formula has " + std::to_string(f4.summands.size()) + " summands");
  out.require(orbit_type(f2.lhs.t()) == reciprocity_oracle(c2, ReciprocityFormula::Kind::Sum, c2->trivial(), c2->whole()),
              "e<=C2 orbit type differs from Ind Map(K/H, 2)");
  out.require(orbit_type(f4.lhs.t()) == reciprocity_oracle(c4, ReciprocityFormula::Kind::Sum, c4->trivial(), c4->whole()),
              "e<=C4 orbit type differs from Ind Map(K/H, 2)");
  FixedPointModel z6(GRing::zmod(c2, 6), ExponentPredicate::from_indexing(s2));
  auto r1 = verify_reciprocity(z6, f2, threads);
  out.require(r1.ok && r1.cases == 36, "fixed-point Z/6: " + r1.summary());
  BurnsideModel b2(c2, ExponentPredicate::from_indexing(s2));
  auto r2 = verify_reciprocity(b2, f2, threads);
  out.require(r2.ok, "Burnside C2: " + r2.summary());
  auto c2in4 = of_order(c4, 2);
  auto ft = reciprocity_transfer(s4, c4->trivial(), c2in4);
  out.require(orbit_type(ft.lhs.t()) == reciprocity_oracle(c4, ReciprocityFormula::Kind::Transfer, c4->trivial(), c2in4),
              "e<=C2<=C4 orbit type differs from Map_K(G, K/H)");
  FixedPointModel z6c4(GRing::zmod(c4, 6), ExponentPredicate::from_indexing(s4));
  BurnsideModel b4(c4, ExponentPredicate::from_indexing(s4), 3);
  auto r3 = verify_reciprocity(z6c4, ft, threads);
  auto r4 = verify_reciprocity(b4, ft, threads);
  out.require(r3.ok, "transfer, fixed-point Z/6 over C4: " + r3.summary());
  out.require(r4.ok, "transfer, Burnside mod 3 over C4: " + r4.summary());
  out.detail << "summands 3/6, Z/6 " << r1.summary() << ", Burnside " << r2.summary() << ", transfer "
             << r3.summary() << " / " << r4.summary();
}

void projective(Outcome& out, int) {
  auto g = cyclic(2);
  auto all = ExponentPredicate::all(g);
  auto pt = point(g);
  auto free = orbit(g, g->trivial());
  auto pi = GMap::to_point(free);
  auto t = HomClass::of(Bispan(GMap::from_empty(pt), GMap::from_empty(free), pi));
  auto x = HomClass::of(Bispan::identity(pt));
  auto nx = HomClass::of(compose_raw(Bispan::restriction(pi), Bispan::norm(pi), all));
  auto x2 = multiply(x, x, all);
  out.require(multiply(t, t, all) == add(t, t), "t*t != t+t");
  out.require(multiply(t, nx, all) == multiply(t, x2, all), "t*nx != t*x^2");
  out.require(!(nx == x2), "nx collapsed to x^2");
  auto rx = HomClass::of(Bispan::restriction(pi));
  out.require(HomClass::of(compose_raw(nx.representative(), Bispan::restriction(pi), all)) == multiply(rx, rx, all),
              "R_pi o nx != x*x underneath");
  out.detail << "t^2 = 2t, t nx = t x^2, R(nx) = x^2";
}

void adjunction(Outcome& out, int) {
  auto c2 = cyclic(2), c4 = cyclic(4);
  int classes = 0;
  for (const auto& sys : enumerate_indexing_systems(c2).systems) {
    auto e = c2->trivial();
    auto rep = verify_transport(point(c2), e, point(c2->embed(e).group), sys, 2, 2);
    classes += rep.h_classes;
    out.require(rep.ok, "e<=C2: " + first(rep.failures));
  }
  auto mid = of_order(c4, 2);
  const auto& emb = c4->embed(mid);
  for (const auto& sys : enumerate_indexing_systems(c4).systems)
    for (const auto& y : {point(emb.group), orbit(emb.group, emb.group->trivial())}) {
      auto rep = verify_transport(point(c4), mid, y, sys, 2, 2);
      classes += rep.h_classes;
      out.require(rep.ok, "C2<=C4: " + first(rep.failures));
    }
  auto co2 = coinduction_oracle(c2, 4, 4);
  auto co4 = coinduction_oracle(c4, 2, 4);
  out.require(co2.empty(), "CoInd over C2: " + first(co2));
  out.require(co4.empty(), "CoInd over C4: " + first(co4));
  // C2 <= C4 coinduction against the definition M(i*T)
  auto base = std::make_shared<FixedPointModel>(GRing::regular(emb.group, 2), ExponentPredicate::all(emb.group));
  CoInducedModel co(base, c4, mid);
  for (const auto& t : gsets_up_to(c4, 4))
    out.require(*co.elements(t) == *base->elements(restrict(t, mid)), "CoInd_C2^C4 value differs at " + describe(t));
  out.detail << classes << " hom classes transported, CoInd checked on sets up to 4 points";
}

void norm_of_two(Outcome& out, int) {
  auto g = cyclic(2);
  BurnsideModel m(g, ExponentPredicate::all(g));
  auto pt = point(g);
  auto free = orbit(g, g->trivial());
  auto pi = GMap::to_point(free);
  auto two = m.add(free, m.one(free), m.one(free));
  auto n = m.norm(pi, two);
  auto expected = m.add(pt, m.add(pt, m.one(pt), m.one(pt)), m.transfer(pi, m.one(free)));
  out.require(n == expected, "N(2) = " + m.format(pt, n));
  // sections of C2/e + C2/e -> C2/e over pi
  auto u = fold(free);
  auto ed = dependent_product(u, pi);
  int fixed = 0, free_orbits = 0;
  for (const auto& o : orbit_decompose(ed.pi)) (o.stabilizer.order() == 2 ? fixed : free_orbits)++;
  out.require(fixed == 2 && free_orbits == 1, "dependent product has " + std::to_string(fixed) + " fixed and " +
                                                  std::to_string(free_orbits) + " free orbits");
  out.require(m.norm_effective(pi, two) == n, "dependent-product route disagrees with marks");
  out.detail << "N(2) = " << m.format(pt, n);
}

void structural(Outcome& out, int) {
  int systems = 0;
  for (auto g : {cyclic(2), cyclic(4), symmetric(3), klein4()})
    for (const auto& sys : enumerate_indexing_systems(g).systems) {
      auto rep = subcategory_properties(ExponentPredicate::from_indexing(sys), 8, 4);
      ++systems;
      out.require(rep.contains_initial && rep.contains_fold, g->name() + ": 0->* or *+*->* missing");
      out.require(rep.all_monos && rep.mono_implication_holds(), g->name() + ": a mono is not admitted");
    }
  int pairs = 0;
  for (auto g : {cyclic(2), cyclic(4)})
    for (const auto& sys : {IndexingSystem::trivial(g), IndexingSystem::complete(g)}) {
      auto d = ExponentPredicate::from_indexing(sys);
      auto rep = products_bijection(point(g), point(g), orbit(g, g->trivial()), d, 2, 2);
      pairs += rep.target_pairs;
      out.require(rep.ok, g->name() + " products: " + rep.witness);
    }
  int laws = 0;
  auto c2 = cyclic(2), c4 = cyclic(4), s3 = symmetric(3);
  std::vector<std::shared_ptr<TambaraModel>> models{
      std::make_shared<FixedPointModel>(GRing::zmod(c2, 6), ExponentPredicate::all(c2)),
      std::make_shared<FixedPointModel>(GRing::regular(c2, 3), ExponentPredicate::all(c2)),
      std::make_shared<BurnsideModel>(c4, ExponentPredicate::all(c4)),
      std::make_shared<FixedPointModel>(GRing::zmod(s3, 6), ExponentPredicate::all(s3)),
      std::make_shared<BurnsideModel>(s3, ExponentPredicate::all(s3), 5)};
  for (std::size_t i = 0; i < models.size(); ++i) {
    auto rep = ring_laws(*models[i], 100, 31 + static_cast<unsigned>(i));
    laws += rep.cases;
    out.require(rep.failures.empty(), models[i]->name() + ": " + first(rep.failures));
  }
  out.detail << systems << " systems mono-scanned, " << pairs << " product pairs, " << laws << " law cases";
}

void ideal(Outcome& out, int) {
  auto g = cyclic(2);
  const int e = g->lattice().index_of(g->trivial());
  BurnsideModel triv(g, ExponentPredicate::from_indexing(IndexingSystem::trivial(g)), 9);
  BurnsideModel comp(g, ExponentPredicate::from_indexing(IndexingSystem::complete(g)), 9);
  auto r1 = is_O_ideal(triv, family_ideal(triv, {e}));
  auto r2 = is_O_ideal(comp, family_ideal(comp, {e}));
  out.require(r1.ok, "trivial system: " + r1.summary());
  out.require(!r2.ok && !r2.witness.empty(), "complete system accepted the family ideal");
  out.detail << "trivial: ideal; complete: " << r2.summary();
}

const std::vector<std::pair<std::string, std::function<void(Outcome&, int)>>>& table() {
  static const std::vector<std::pair<std::string, std::function<void(Outcome&, int)>>> t{
      {"indexing classification", classification},
      {"composite closure", closure},
      {"functoriality", functoriality_check},
      {"reciprocity", reciprocity},
      {"free C2 identities", projective},
      {"adjunction transport", adjunction},
      {"Burnside norm of two", norm_of_two},
      {"structural predicates", structural},
      {"O-ideal discrimination", ideal}};
  return t;
}

}  // namespace

CriterionResult run_criterion(int id, int threads) {
  if (id < 1 || id > kCriteria) throw ValidationError("no acceptance criterion " + std::to_string(id));
  const auto& [title, fn] = table()[id - 1];
  CriterionResult r;
  r.id = id;
  r.title = title;
  auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    fn(out, threads);
  } catch (const std::exception& e) {
    out.pass = false;
    out.detail.str("");
    out.detail << "error: " << e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.pass = out.pass;
  r.detail = out.detail.str();
  while (!r.detail.empty() && (r.detail.back() == ' ' || r.detail.back() == ';')) r.detail.pop_back();
  return r;
}

std::vector<CriterionResult> run_acceptance(int threads) {
  std::vector<CriterionResult> out;
  for (int i = 1; i <= kCriteria; ++i) out.push_back(run_criterion(i, threads));
  return out;
}

std::string format_result(const CriterionResult& r) {
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.2f", r.seconds);
  return std::string(r.pass ? "PASS" : "FAIL") + " [" + std::to_string(r.id) + "] " + r.title + ": " + r.detail +
         " (" + secs + " s)";
}

}  // namespace tambara::check
