#include "tambara/ideal.hpp"

#include <deque>

#include "tambara/error.hpp"

namespace tambara {

namespace {

std::vector<Value> all_values(const TambaraModel& m, const GSet& x) {
  auto e = m.elements(x);
  if (!e) throw ValidationError("ideal check: model '" + m.name() + "' does not have finite values");
  return *e;
}

int orbit_class(const SubMackeyData& j, const GSet& o) {
  const auto& lat = j.group->lattice();
  return lat.conj_class[lat.index_of(o.stabilizer(0))];
}

std::set<Value> additive_closure(const TambaraModel& m, const GSet& x, const std::set<Value>& gens) {
  std::set<Value> out{m.zero(x)};
  std::deque<Value> queue{m.zero(x)};
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    for (const auto& g : gens)
      for (const auto& w : {m.add(x, v, g), m.add(x, v, m.neg(x, g))})
        if (out.insert(w).second) queue.push_back(w);
  }
  return out;
}

}  // namespace

std::vector<GSet> canonical_orbits(const GroupPtr& g) {
  const auto& lat = g->lattice();
  std::vector<GSet> out;
  for (const auto& cls : lat.classes) out.push_back(orbit(g, lat.subgroups[cls.front()]));
  return out;
}

SubMackeyData zero_ideal(const TambaraModel& m) {
  SubMackeyData j{m.group(), canonical_orbits(m.group()), {}};
  for (const auto& o : j.orbits) j.subsets.push_back({m.zero(o)});
  return j;
}

SubMackeyData whole_ideal(const TambaraModel& m) {
  SubMackeyData j{m.group(), canonical_orbits(m.group()), {}};
  for (const auto& o : j.orbits) {
    auto v = all_values(m, o);
    j.subsets.emplace_back(v.begin(), v.end());
  }
  return j;
}

SubMackeyData family_ideal(const TambaraModel& m, const std::vector<int>& family) {
  const auto& g = m.group();
  const auto& lat = g->lattice();
  std::set<int> classes;
  for (int h : family) classes.insert(lat.conj_class[h]);
  SubMackeyData j{g, canonical_orbits(g), {}};
  for (const auto& target : j.orbits) {
    std::set<Value> gens;
    for (const auto& source : j.orbits) {
      if (!classes.count(orbit_class(j, source))) continue;
      auto elems = all_values(m, source);
      for (const auto& f : all_gmaps(source, target))
        for (const auto& a : elems) gens.insert(m.transfer(f, a));
    }
    j.subsets.push_back(additive_closure(m, target, gens));
  }
  return j;
}

std::string IdealReport::summary() const {
  if (ok) return "ideal (norms checked on " + bound + ")";
  return "not an ideal: " + condition + " fails at " + witness;
}

IdealReport is_O_ideal(const TambaraModel& m, const SubMackeyData& j) {
  IdealReport rep;
  rep.bound = "sets with at most 2 orbits mapping onto an orbit";
  if (!same_group(m.group(), j.group) || j.subsets.size() != j.orbits.size())
    throw ShapeError("ideal check: data does not match the model");
  auto fail = [&](std::string cond, std::string witness) {
    rep.ok = false;
    rep.condition = std::move(cond);
    rep.witness = std::move(witness);
    return rep;
  };
  const std::size_t n = j.orbits.size();
  for (std::size_t c = 0; c < n; ++c) {
    const auto& o = j.orbits[c];
    const auto& s = j.subsets[c];
    if (!s.count(m.zero(o))) return fail("contains zero", describe(o));
    for (const auto& a : s) {
      if (!s.count(m.neg(o, a))) return fail("negation", m.format(o, a) + " at " + describe(o));
      for (const auto& b : s)
        if (!s.count(m.add(o, a, b)))
          return fail("addition", m.format(o, a) + " + " + m.format(o, b) + " at " + describe(o));
    }
    for (const auto& r : all_values(m, o))
      for (const auto& a : s)
        if (!s.count(m.mul(o, r, a)))
          return fail("absorption", m.format(o, r) + " * " + m.format(o, a) + " at " + describe(o));
  }
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t d = 0; d < n; ++d)
      for (const auto& f : all_gmaps(j.orbits[c], j.orbits[d])) {
        for (const auto& a : j.subsets[c])
          if (!j.subsets[d].count(m.transfer(f, a)))
            return fail("transfer", "T along " + describe(f) + " of " + m.format(f.source, a));
        for (const auto& b : j.subsets[d])
          if (!j.subsets[c].count(m.restrict(f, b)))
            return fail("restriction", "R along " + describe(f) + " of " + m.format(f.target, b));
      }
  // test objects: single orbits first, then sums of two orbits
  std::vector<std::vector<std::size_t>> shapes;
  for (std::size_t c = 0; c < n; ++c) shapes.push_back({c});
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t c2 = c; c2 < n; ++c2) shapes.push_back({c, c2});
  for (const auto& idx : shapes) {
    std::vector<GSet> parts;
    for (std::size_t c : idx) parts.push_back(j.orbits[c]);
    auto cp = coproduct(parts);
    // J(X) is the product of the parts
    std::vector<std::vector<Value>> combos{{}};
    for (std::size_t c : idx) {
      std::vector<std::vector<Value>> next;
      for (const auto& prefix : combos)
        for (const auto& v : j.subsets[c]) {
          auto ext = prefix;
          ext.push_back(v);
          next.push_back(std::move(ext));
        }
      combos = std::move(next);
    }
    std::vector<Value> jx;
    for (const auto& combo : combos) jx.push_back(m.join(cp, combo));
    for (std::size_t d = 0; d < n; ++d)
      for (const auto& f : all_gmaps(cp.set, j.orbits[d])) {
        if (!f.is_surjective() || !m.exponents().contains(f)) continue;
        for (const auto& a : jx) {
          auto v = m.norm(f, a);
          if (!j.subsets[d].count(v))
            return fail("norm", "N along " + describe(f) + " of " + m.format(cp.set, a) + " = " +
                                    m.format(j.orbits[d], v) + ", outside J(" + describe(j.orbits[d]) + ")");
        }
      }
  }
  return rep;
}

}  // namespace tambara
