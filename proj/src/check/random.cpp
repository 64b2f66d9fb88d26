#include "tambara/check/random.hpp"

namespace tambara::check {

GSet random_gset(const GroupPtr& g, int max_orbits, int max_points, std::mt19937& rng, int min_orbits) {
  const auto& subs = g->lattice().subgroups;
  const int k = std::uniform_int_distribution<int>(min_orbits, max_orbits)(rng);
  std::vector<GSet> parts;
  int left = max_points;
  for (int i = 0; i < k; ++i) {
    std::vector<Subgroup> fit;
    for (auto s : subs)
      if (g->order() / s.order() <= left) fit.push_back(s);
    if (fit.empty()) break;
    auto s = fit[std::uniform_int_distribution<std::size_t>(0, fit.size() - 1)(rng)];
    parts.push_back(orbit(g, s));
    left -= parts.back().size();
  }
  if (parts.empty()) return GSet::empty(g);
  return coproduct(parts).set;
}

std::optional<GMap> random_gmap(const GSet& a, const GSet& b, std::mt19937& rng) {
  std::vector<int> fn(a.size(), -1);
  const auto& g = *a.group();
  for (const auto& o : orbit_decompose(a)) {
    auto targets = b.fixed_points(o.stabilizer);
    if (targets.empty()) return std::nullopt;
    const int q = targets[std::uniform_int_distribution<std::size_t>(0, targets.size() - 1)(rng)];
    for (int e = 0; e < g.order(); ++e) fn[a.act(e, o.representative)] = b.act(e, q);
  }
  return GMap(a, b, std::move(fn));
}

Bispan random_bispan(const GSet& x, const GSet& y, const ExponentPredicate& d, std::mt19937& rng, int max_points) {
  const auto& g = x.group();
  std::bernoulli_distribution empty(0.1);
  for (int attempt = 0; attempt < 50; ++attempt) {
    auto t = random_gset(g, 2, max_points, rng, empty(rng) ? 0 : 1);
    auto h = random_gmap(t, y, rng);
    if (!h) continue;
    auto s = random_gset(g, 3, max_points, rng, empty(rng) ? 0 : 1);
    auto gm = random_gmap(s, t, rng);
    if (!gm || !d.contains(*gm)) continue;
    auto f = random_gmap(s, x, rng);
    if (!f) continue;
    return Bispan(std::move(*f), std::move(*gm), std::move(*h));
  }
  return Bispan::zero(x, y);
}

}  // namespace tambara::check
