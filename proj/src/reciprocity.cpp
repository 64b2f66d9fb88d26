#include "tambara/reciprocity.hpp"

#include <sstream>

#include "tambara/error.hpp"
#include "tambara/parallel.hpp"
#include "tambara/subcategory.hpp"

namespace tambara {

namespace {

std::string pair_text(Subgroup h, Subgroup k) {
  std::ostringstream os;
  auto list = [&](Subgroup s) {
    os << "{";
    auto el = s.elements();
    for (std::size_t i = 0; i < el.size(); ++i) os << (i ? "," : "") << el[i];
    os << "}";
  };
  os << "(";
  list(h);
  os << ", ";
  list(k);
  os << ")";
  return os.str();
}

ReciprocityFormula build(const IndexingSystem& sys, ReciprocityFormula::Kind kind, GMap t, GMap n) {
  auto d = ExponentPredicate::from_indexing(sys);
  auto lhs = compose(Bispan::transfer(t), Bispan::norm(n), d);
  auto summands = decompose(HomClass::of(lhs));
  return {kind, std::move(t), std::move(n), std::move(lhs), std::move(summands)};
}

// K/H as a set over the embedded copy of K
GSet quotient_over(const GroupPtr& g, Subgroup h, Subgroup k) {
  const auto& emb = g->embed(k);
  return orbit(emb.group, emb.pull(h));
}

}  // namespace

ReciprocityFormula reciprocity_sum(const IndexingSystem& sys, Subgroup h, Subgroup k) {
  const auto& g = sys.group();
  if (!h.is_subset_of(k)) throw ShapeError("reciprocity: H is not contained in K");
  if (!sys.admissible(k, h)) throw NormUnavailable("reciprocity: orbit pair " + pair_text(k, h) + " is not admissible");
  auto oh = orbit(g, h);
  return build(sys, ReciprocityFormula::Kind::Sum, fold(oh), orbit_projection(g, h, k));
}

ReciprocityFormula reciprocity_transfer(const IndexingSystem& sys, Subgroup h, Subgroup k) {
  const auto& g = sys.group();
  if (!h.is_subset_of(k)) throw ShapeError("reciprocity: H is not contained in K");
  if (!sys.admissible(g->whole(), k))
    throw NormUnavailable("reciprocity: orbit pair " + pair_text(g->whole(), k) + " is not admissible");
  return build(sys, ReciprocityFormula::Kind::Transfer, orbit_projection(g, h, k), GMap::to_point(orbit(g, k)));
}

OrbitType reciprocity_oracle(const GroupPtr& g, ReciprocityFormula::Kind kind, Subgroup h, Subgroup k) {
  auto kh = quotient_over(g, h, k);
  if (kind == ReciprocityFormula::Kind::Transfer) return orbit_type(coinduce(g, k, kh).set);
  // subsets of K/H, acted on by translation
  const auto& kg = kh.group();
  const int n = kh.size();
  const int m = 1 << n;
  std::vector<int> act(static_cast<std::size_t>(kg->order()) * m);
  for (int a = 0; a < kg->order(); ++a)
    for (int s = 0; s < m; ++s) {
      int img = 0;
      for (int p = 0; p < n; ++p)
        if ((s >> p) & 1) img |= 1 << kh.act(a, p);
      act[a * m + s] = img;
    }
  return orbit_type(induce(g, k, GSet(kg, m, std::move(act))).set);
}

std::string ReciprocityReport::summary() const {
  if (ok) return "OK (" + std::to_string(cases) + " cases)";
  return "FAILED: " + witness;
}

ReciprocityReport verify_reciprocity(const TambaraModel& m, const ReciprocityFormula& formula, int threads) {
  if (!same_group(m.group(), formula.lhs.source().group()))
    throw ShapeError("verify_reciprocity: model and formula over different groups");
  const GSet& x = formula.lhs.source();
  std::vector<Value> inputs;
  std::vector<std::string> labels;
  if (formula.kind == ReciprocityFormula::Kind::Sum) {
    const GSet& part = formula.transfer_map.target;
    auto c = coproduct(part, part);
    auto elems = m.test_elements(part);
    for (const auto& a : elems)
      for (const auto& b : elems) {
        Value parts[2] = {a, b};
        inputs.push_back(m.join(c, parts));
        labels.push_back("a = " + m.format(part, a) + ", b = " + m.format(part, b));
      }
  } else {
    for (const auto& a : m.test_elements(x)) {
      inputs.push_back(a);
      labels.push_back("a = " + m.format(x, a));
    }
  }
  const GSet& y = formula.lhs.target();
  const int n = static_cast<int>(inputs.size());
  std::vector<std::string> failures(n);
  parallel_for(n, threads, [&](int i) {
    auto direct = m.norm(formula.norm_map, m.transfer(formula.transfer_map, inputs[i]));
    Value total = m.zero(y);
    for (const auto& s : formula.summands) total = m.add(y, total, eval(m, s.representative(), inputs[i]));
    if (total != direct)
      failures[i] = labels[i] + ": direct " + m.format(y, direct) + ", formula " + m.format(y, total);
  });
  ReciprocityReport rep;
  rep.cases = n;
  for (const auto& f : failures)
    if (!f.empty()) {
      rep.ok = false;
      rep.witness = f;
      break;
    }
  return rep;
}

}  // namespace tambara
