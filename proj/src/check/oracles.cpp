#include "tambara/check/oracles.hpp"

#include <map>
#include <set>

#include "tambara/check/random.hpp"
#include "tambara/error.hpp"

namespace tambara::check {

long long catalan(int n) {
  long long c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

long long cyclic_prime_power_count(int n) {
  if (n < 2) return n == 1 ? 1 : -1;
  int p = 2;
  while (n % p != 0) ++p;
  int k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  return n == 1 ? catalan(k + 1) : -1;
}

BijectionReport products_bijection(const GSet& x, const GSet& y1, const GSet& y2, const ExponentPredicate& d,
                                   int s_bound, int t_bound) {
  BijectionReport rep;
  auto c = coproduct(y1, y2);
  auto r1 = Bispan::restriction(c.injections[0]);
  auto r2 = Bispan::restriction(c.injections[1]);
  auto r1c = HomClass::of(r1), r2c = HomClass::of(r2);
  using Key = std::pair<std::vector<Component>, std::vector<Component>>;
  std::set<Key> image;
  auto source = enumerate_hom(x, c.set, d, s_bound, t_bound);
  rep.source_classes = static_cast<int>(source.size());
  for (const auto& cls : source) {
    Key p{compose(cls, r1c, d).components, compose(cls, r2c, d).components};
    if (!image.insert(p).second) {
      rep.ok = false;
      rep.witness = "two classes restrict to the same pair: " + describe(cls.representative());
      return rep;
    }
  }
  auto a = enumerate_hom(x, y1, d, s_bound, t_bound);
  auto b = enumerate_hom(x, y2, d, s_bound, t_bound);
  std::set<Key> expected;
  std::map<Key, std::pair<const HomClass*, const HomClass*>> named;
  for (const auto& u : a)
    for (const auto& v : b)
      if (u.s_size() + v.s_size() <= s_bound && u.t_size() + v.t_size() <= t_bound) {
        Key k{u.components, v.components};
        expected.insert(k);
        named[k] = {&u, &v};
      }
  rep.target_pairs = static_cast<int>(expected.size());
  if (expected != image) {
    rep.ok = false;
    for (const auto& p : expected)
      if (!image.count(p)) {
        rep.witness = "pair not hit: " + describe(*named[p].first) + " / " + describe(*named[p].second);
        return rep;
      }
    rep.witness = "image contains pairs outside the bounds";
  }
  return rep;
}

std::vector<std::string> coinduction_oracle(const GroupPtr& g, int n, int bound) {
  std::vector<std::string> failures;
  const auto& emb = g->embed(g->trivial());
  auto base = std::make_shared<FixedPointModel>(GRing::zmod(emb.group, n), ExponentPredicate::all(emb.group));
  CoInducedModel co(base, g, g->trivial());
  FixedPointModel fp(GRing::regular(g, n), ExponentPredicate::all(g));
  int order = g->order();
  int top = 1;
  for (int i = 1; i < order; ++i) top *= n;  // weight of r(0) in the element code
  auto at_identity = [&](const Value& v) {
    Value w;
    for (long long r : v.c) w.c.push_back(r / top);
    return w;
  };
  auto sets = gsets_up_to(g, bound);
  for (const auto& t : sets) {
    auto fe = *fp.elements(t);
    auto ce = *co.elements(t);
    std::set<Value> images;
    for (const auto& v : fe) images.insert(at_identity(v));
    if (images.size() != fe.size() || images != std::set<Value>(ce.begin(), ce.end()))
      failures.push_back("value sets differ at " + describe(t));
  }
  std::mt19937 rng(17);
  for (const auto& a : sets)
    for (const auto& b : sets)
      for (const auto& f : all_gmaps(a, b, 4096)) {
        auto fe = *fp.elements(a);
        for (int i = 0; i < 4 && !fe.empty(); ++i) {
          const auto& v = fe[std::uniform_int_distribution<std::size_t>(0, fe.size() - 1)(rng)];
          auto u = at_identity(v);
          if (co.transfer(f, u) != at_identity(fp.transfer(f, v)) || co.norm(f, u) != at_identity(fp.norm(f, v)))
            failures.push_back("transfer/norm differ along " + describe(f));
        }
        auto be = *fp.elements(b);
        for (const auto& v : be)
          if (co.restrict(f, at_identity(v)) != at_identity(fp.restrict(f, v))) {
            failures.push_back("restriction differs along " + describe(f));
            break;
          }
      }
  return failures;
}

LawReport ring_laws(const TambaraModel& m, int cases, unsigned seed, int max_points) {
  LawReport rep;
  std::mt19937 rng(seed);
  const auto& g = m.group();
  while (rep.cases < cases) {
    auto a = random_gset(g, 3, max_points, rng);
    auto b = random_gset(g, 2, max_points, rng);
    auto f = random_gmap(a, b, rng);
    if (!f || !m.exponents().contains(*f)) continue;
    ++rep.cases;
    auto x = m.random_element(a, rng), x2 = m.random_element(a, rng);
    auto y = m.random_element(b, rng);
    if (m.transfer(*f, m.mul(a, x, m.restrict(*f, y))) != m.mul(b, m.transfer(*f, x), y))
      rep.failures.push_back("Frobenius along " + describe(*f));
    if (m.norm(*f, m.mul(a, x, x2)) != m.mul(b, m.norm(*f, x), m.norm(*f, x2)))
      rep.failures.push_back("norm multiplicativity along " + describe(*f));
    if (m.norm(*f, m.one(a)) != m.one(b)) rep.failures.push_back("N(1) != 1 along " + describe(*f));
  }
  return rep;
}

LawReport functoriality(const TambaraModel& m, int pairs, unsigned seed, int elements_per_pair, int max_points) {
  LawReport rep;
  std::mt19937 rng(seed);
  const auto& g = m.group();
  auto systems = enumerate_indexing_systems(g).systems;
  for (int i = 0; i < pairs; ++i) {
    const auto& sys = systems[std::uniform_int_distribution<std::size_t>(0, systems.size() - 1)(rng)];
    auto d = ExponentPredicate::from_indexing(sys);
    auto x = random_gset(g, 2, max_points, rng, 1);
    auto y = random_gset(g, 2, max_points, rng, 1);
    auto z = random_gset(g, 2, max_points, rng, 1);
    auto p = random_bispan(x, y, d, rng, max_points);
    auto q = random_bispan(y, z, d, rng, max_points);
    auto c = compose(p, q, d);
    ++rep.cases;
    for (int k = 0; k < elements_per_pair; ++k) {
      auto v = m.random_element(x, rng);
      if (eval(m, c, v) != eval(m, q, eval(m, p, v))) {
        rep.failures.push_back("eval(q o p) differs for p = " + describe(p) + ", q = " + describe(q));
        break;
      }
    }
  }
  return rep;
}

LawReport composite_closure(const IndexingSystem& sys, int composites, unsigned seed, int max_points) {
  LawReport rep;
  std::mt19937 rng(seed);
  const auto& g = sys.group();
  auto d = ExponentPredicate::from_indexing(sys);
  for (int i = 0; i < composites; ++i) {
    auto x = random_gset(g, 2, max_points, rng, 1);
    auto y = random_gset(g, 2, max_points, rng, 1);
    auto z = random_gset(g, 2, max_points, rng, 1);
    auto p = random_bispan(x, y, d, rng, max_points);
    auto q = random_bispan(y, z, d, rng, max_points);
    ++rep.cases;
    try {
      auto c = compose_raw(p, q, d);
      if (!map_in_category(sys, c.g)) rep.failures.push_back("inadmissible exponent in " + describe(c));
    } catch (const ExponentEscape& e) {
      rep.failures.push_back(e.what());
    }
  }
  return rep;
}

}  // namespace tambara::check
