#include "tambara/subcategory.hpp"

#include <sstream>

#include "tambara/error.hpp"
#include "tambara/parallel.hpp"

namespace tambara {

namespace {

// Sub-G-set of b on the union of the chosen orbits, with its inclusion.
GMap orbit_inclusion(const GSet& b, const std::vector<OrbitInfo>& orbits, unsigned mask) {
  std::vector<int> pts;
  for (std::size_t i = 0; i < orbits.size(); ++i)
    if ((mask >> i) & 1U) pts.insert(pts.end(), orbits[i].points.begin(), orbits[i].points.end());
  std::sort(pts.begin(), pts.end());
  std::vector<int> local(b.size(), -1);
  for (std::size_t i = 0; i < pts.size(); ++i) local[pts[i]] = static_cast<int>(i);
  const int n = b.group()->order();
  const int m = static_cast<int>(pts.size());
  std::vector<int> act(static_cast<std::size_t>(n) * m);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < m; ++i) act[k * m + i] = local[b.act(k, pts[i])];
  return GMap(GSet(b.group(), m, std::move(act)), b, std::move(pts));
}

std::vector<GSet> orbits_of(const GroupPtr& g) {
  std::vector<GSet> out;
  const auto& lat = g->lattice();
  for (const auto& cls : lat.classes) out.push_back(orbit(g, lat.subgroups[cls.front()]));
  return out;
}

}  // namespace

std::string PropertyReport::summary() const {
  std::ostringstream os;
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  os << "wide: " << yn(wide) << " (objects <= " << bound << " points)\n"
     << "pullback stable: " << yn(pullback_stable) << " (maps between objects <= " << pair_bound
     << " points, pulled back along maps out of orbits)\n"
     << "closed under composition: " << yn(composition_closed) << " (objects <= " << pair_bound << " points)\n"
     << "contains 0 -> *: " << yn(contains_initial) << "\n"
     << "contains * + * -> *: " << yn(contains_fold) << "\n"
     << "closed under sums: " << yn(sums_closed) << "\n"
     << "closed under summands: " << yn(summands_closed) << "\n"
     << "coproduct complete: " << yn(coproduct_complete()) << "\n";
  if (contains_initial && contains_fold)
    os << "all monomorphisms present: " << yn(all_monos) << " (objects <= " << bound << " points)\n";
  for (const auto& w : witnesses) os << "witness: " << w << "\n";
  return os.str();
}

PropertyReport subcategory_properties(const ExponentPredicate& d, int bound, int pair_bound) {
  const GroupPtr& g = d.group();
  PropertyReport rep;
  rep.bound = bound;
  rep.pair_bound = pair_bound;
  auto big = gsets_up_to(g, bound);
  auto small = gsets_up_to(g, pair_bound);
  auto orbs = orbits_of(g);
  auto note = [&](bool& flag, const std::string& what) {
    if (flag) rep.witnesses.push_back(what);
    flag = false;
  };

  for (const auto& x : big)
    if (!d.contains(GMap::identity(x))) {
      note(rep.wide, "identity of " + describe(x) + " is missing");
      break;
    }

  GSet pt = point(g);
  if (!d.contains(GMap::from_empty(pt))) note(rep.contains_initial, "0 -> * is missing");
  if (!d.contains(fold(pt))) note(rep.contains_fold, "* + * -> * is missing");

  if (rep.contains_initial && rep.contains_fold) {
    for (const auto& b : big) {
      auto orbits = orbit_decompose(b);
      for (unsigned mask = 0; mask < (1U << orbits.size()) && rep.all_monos; ++mask) {
        auto inc = orbit_inclusion(b, orbits, mask);
        if (!d.contains(inc)) note(rep.all_monos, "monomorphism missing: " + describe(inc));
      }
      if (!rep.all_monos) break;
    }
  }

  // maps in D between small objects
  std::vector<GMap> members;
  for (const auto& a : small)
    for (const auto& b : small)
      for (auto& f : all_gmaps(a, b))
        if (d.contains(f)) members.push_back(std::move(f));

  for (const auto& f : members) {
    if (!rep.pullback_stable) break;
    for (const auto& o : orbs) {
      for (const auto& u : all_gmaps(o, f.target)) {
        auto pb = pullback(u, f);
        if (!d.contains(pb.first)) {
          note(rep.pullback_stable, "pullback of " + describe(f) + " along " + describe(u) + " is " + describe(pb.first));
          break;
        }
      }
      if (!rep.pullback_stable) break;
    }
  }

  for (const auto& f : members) {
    if (!rep.composition_closed) break;
    for (const auto& o : orbs)
      for (const auto& h : all_gmaps(f.target, o)) {
        if (!d.contains(h) || d.contains(compose(h, f))) continue;
        note(rep.composition_closed, "composite of " + describe(f) + " and " + describe(h));
        break;
      }
  }

  // sums and summands over maps into orbits
  std::vector<GMap> into_orbits;
  for (const auto& a : small)
    for (const auto& o : orbs)
      for (auto& f : all_gmaps(a, o)) into_orbits.push_back(std::move(f));
  for (std::size_t i = 0; i < into_orbits.size(); ++i)
    for (std::size_t j = i; j < into_orbits.size(); ++j) {
      const auto& f1 = into_orbits[i];
      const auto& f2 = into_orbits[j];
      const bool in1 = d.contains(f1);
      const bool in2 = d.contains(f2);
      const bool in_sum = d.contains(coproduct_map(f1, f2));
      if (in1 && in2 && !in_sum && rep.sums_closed)
        note(rep.sums_closed, "sum of " + describe(f1) + " and " + describe(f2) + " is missing");
      if (in_sum && !(in1 && in2) && rep.summands_closed)
        note(rep.summands_closed, "summand of " + describe(coproduct_map(f1, f2)) + " is missing");
    }
  return rep;
}

GMap orbit_projection(const GroupPtr& g, Subgroup k, Subgroup h) {
  if (!k.is_subset_of(h)) throw ShapeError("orbit_projection: K is not contained in H");
  auto src = orbit(g, k);
  auto tgt = orbit(g, h);
  auto label = coset_labels(*g, h);
  std::vector<int> fn;
  for (int r : g->left_coset_reps(k)) fn.push_back(label[r]);
  return GMap(src, tgt, std::move(fn));
}

ExtractedIndexing indexing_from_subcategory(const ExponentPredicate& d, int bound, int pair_bound) {
  auto rep = subcategory_properties(d, bound, pair_bound);
  if (!rep.wide || !rep.pullback_stable) {
    std::string msg = std::string("exponent class '") + d.name() + "' is not " + (!rep.wide ? "wide" : "pullback stable");
    if (!rep.witnesses.empty()) msg += ": " + rep.witnesses.front();
    throw InvalidSubcategory(msg);
  }
  const GroupPtr& g = d.group();
  const auto& lat = g->lattice();
  std::vector<std::pair<int, int>> pairs;
  for (auto [k, h] : lat.containment_pairs())
    if (d.contains(orbit_projection(g, lat.subgroups[k], lat.subgroups[h]))) pairs.emplace_back(h, k);
  IndexingSystem sys(g, pairs);
  auto v = validate(sys);
  if (!v.ok) throw InvalidSubcategory("extracted pairs fail the " + v.axiom + " axiom: " + v.witness);
  const bool exact = rep.coproduct_complete();
  return {std::move(sys), exact, std::move(rep)};
}

RoundTripReport round_trip_check(const GroupPtr& g, int bound, int pair_bound, int threads) {
  auto poset = enumerate_indexing_systems(g, threads);
  const int m = static_cast<int>(poset.systems.size());
  RoundTripReport rep;
  rep.systems = m;
  std::vector<std::string> errors(m);
  parallel_for(m, threads, [&](int i) {
    const auto& sys = poset.systems[i];
    try {
      auto back = indexing_from_subcategory(ExponentPredicate::from_indexing(sys), bound, pair_bound);
      if (!(back.system == sys)) errors[i] = "system " + std::to_string(i) + " came back as a different system";
      else if (!back.exact) errors[i] = "system " + std::to_string(i) + " is not coproduct complete";
    } catch (const Error& ex) {
      errors[i] = "system " + std::to_string(i) + ": " + ex.what();
    }
  });
  for (auto& e : errors)
    if (!e.empty()) {
      rep.ok = false;
      rep.mismatches.push_back(std::move(e));
    }
  // membership signatures over every map into an orbit
  std::vector<GMap> probes;
  auto sources = gsets_up_to(g, pair_bound);
  for (const auto& o : orbits_of(g))
    if (o.size() > pair_bound) sources.push_back(o);
  for (const auto& a : sources)
    for (const auto& o : orbits_of(g))
      for (auto& f : all_gmaps(a, o)) probes.push_back(std::move(f));
  std::vector<std::vector<char>> sig(m);
  for (int i = 0; i < m; ++i)
    for (const auto& f : probes) sig[i].push_back(map_in_category(poset.systems[i], f));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      bool maps_included = true;
      for (std::size_t p = 0; p < probes.size(); ++p)
        if (sig[a][p] && !sig[b][p]) maps_included = false;
      if (maps_included != poset.systems[a].is_subsystem_of(poset.systems[b])) {
        rep.order_preserved = false;
        rep.ok = false;
        rep.mismatches.push_back("inclusion mismatch between systems " + std::to_string(a) + " and " + std::to_string(b));
      }
    }
  return rep;
}

}  // namespace tambara
