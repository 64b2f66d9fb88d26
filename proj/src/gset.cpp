#include "tambara/gset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "tambara/error.hpp"

namespace tambara {

namespace {

std::vector<Subgroup> compute_stabilizers(const FiniteGroup& g, int size, const std::vector<int>& act) {
  std::vector<Subgroup> stab(size);
  for (int k = 0; k < g.order(); ++k)
    for (int x = 0; x < size; ++x)
      if (act[k * size + x] == x) stab[x].mask |= std::uint64_t{1} << k;
  return stab;
}

void require_same_group(const GroupPtr& a, const GroupPtr& b, const char* where) {
  if (!same_group(a, b)) throw ShapeError(std::string(where) + ": G-sets over different groups");
}

}  // namespace

GSet::GSet(GroupPtr group, int size, std::vector<int> action) {
  if (!group) throw ValidationError("GSet: null group");
  if (size < 0) throw ValidationError("GSet: negative size");
  const int n = group->order();
  if (static_cast<long long>(action.size()) != static_cast<long long>(n) * size)
    throw ValidationError("GSet: action table has wrong size");
  for (int v : action)
    if (v < 0 || v >= size) throw ValidationError("GSet: action value out of range");
  for (int x = 0; x < size; ++x)
    if (action[x] != x)
      throw ValidationError("GSet: identity moves point " + std::to_string(x));
  // Checking products against generator-sized subsets would be cheaper,
  // but the full check keeps the error message exact.
  for (int g = 1; g < n; ++g)
    for (int h = 1; h < n; ++h) {
      const int gh = group->mul(g, h);
      for (int x = 0; x < size; ++x)
        if (action[g * size + action[h * size + x]] != action[gh * size + x]) {
          std::ostringstream os;
          os << "GSet: action is not compatible with multiplication at (g=" << g << ", h=" << h
             << ", x=" << x << ")";
          throw ValidationError(os.str());
        }
    }
  auto stab = compute_stabilizers(*group, size, action);
  data_ = std::make_shared<const Data>(Data{std::move(group), size, std::move(action), std::move(stab)});
}

GSet GSet::empty(GroupPtr group) { return GSet(std::move(group), 0, {}); }

GSet GSet::trivial(GroupPtr group, int size) {
  const int n = group->order();
  std::vector<int> act(static_cast<std::size_t>(n) * size);
  for (int g = 0; g < n; ++g)
    for (int x = 0; x < size; ++x) act[g * size + x] = x;
  return GSet(std::move(group), size, std::move(act));
}

GSet GSet::from_generators(GroupPtr group, int size,
                           const std::vector<std::pair<int, std::vector<int>>>& gens) {
  const int n = group->order();
  std::vector<std::vector<int>> perm(n);
  perm[0].resize(size);
  std::iota(perm[0].begin(), perm[0].end(), 0);
  std::vector<int> gen_elems;
  for (const auto& [g, p] : gens) {
    if (g < 0 || g >= n) throw ValidationError("GSet: generator element out of range");
    if (static_cast<int>(p.size()) != size)
      throw ValidationError("GSet: generator permutation for element " + std::to_string(g) +
                            " has wrong length");
    if (!perm[g].empty() && perm[g] != p)
      throw ValidationError("GSet: conflicting permutations for element " + std::to_string(g));
    perm[g] = p;
    gen_elems.push_back(g);
  }
  // Breadth-first closure: perm(a g) = perm(a) o perm(g).
  std::vector<int> frontier{0};
  std::vector<char> visited(n, 0);
  visited[0] = 1;
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int a : frontier)
      for (int g : gen_elems) {
        int ag = group->mul(a, g);
        std::vector<int> p(size);
        for (int x = 0; x < size; ++x) p[x] = perm[a][perm[g][x]];
        if (!visited[ag]) {
          visited[ag] = 1;
          next.push_back(ag);
        }
        if (perm[ag].empty()) {
          perm[ag] = std::move(p);
        } else if (perm[ag] != p) {
          throw ValidationError("GSet: generator permutations are inconsistent at element " +
                                std::to_string(ag));
        }
      }
    frontier = std::move(next);
  }
  std::vector<int> act(static_cast<std::size_t>(n) * size);
  for (int g = 0; g < n; ++g) {
    if (perm[g].empty())
      throw ValidationError("GSet: listed elements do not generate the group (missing element " +
                            std::to_string(g) + ")");
    std::copy(perm[g].begin(), perm[g].end(), act.begin() + static_cast<std::ptrdiff_t>(g) * size);
  }
  return GSet(std::move(group), size, std::move(act));
}

std::vector<int> GSet::orbit_of(int x) const {
  std::vector<int> pts;
  for (int g = 0; g < group()->order(); ++g) pts.push_back(act(g, x));
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

std::vector<int> GSet::fixed_points(Subgroup h) const {
  std::vector<int> out;
  for (int x = 0; x < size(); ++x)
    if (h.is_subset_of(stabilizer(x))) out.push_back(x);
  return out;
}

bool operator==(const GSet& a, const GSet& b) {
  if (a.data_ == b.data_) return true;
  return a.size() == b.size() && same_group(a.group(), b.group()) &&
         a.data_->action == b.data_->action;
}

GMap::GMap(GSet source_, GSet target_, std::vector<int> fn_)
    : source(std::move(source_)), target(std::move(target_)), fn(std::move(fn_)) {
  require_same_group(source.group(), target.group(), "GMap");
  if (static_cast<int>(fn.size()) != source.size()) throw ValidationError("GMap: wrong number of images");
  for (int v : fn)
    if (v < 0 || v >= target.size()) throw ValidationError("GMap: image out of range");
  for (int g = 1; g < source.group()->order(); ++g)
    for (int x = 0; x < source.size(); ++x)
      if (fn[source.act(g, x)] != target.act(g, fn[x])) {
        std::ostringstream os;
        os << "GMap: not equivariant at (g=" << g << ", x=" << x << ")";
        throw ValidationError(os.str());
      }
}

std::vector<int> GMap::fiber(int y) const {
  std::vector<int> out;
  for (int x = 0; x < source.size(); ++x)
    if (fn[x] == y) out.push_back(x);
  return out;
}

bool GMap::is_injective() const {
  std::vector<char> seen(target.size(), 0);
  for (int v : fn) {
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

bool GMap::is_surjective() const {
  std::vector<char> seen(target.size(), 0);
  for (int v : fn) seen[v] = 1;
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

GMap GMap::identity(const GSet& x) {
  std::vector<int> fn(x.size());
  std::iota(fn.begin(), fn.end(), 0);
  return GMap(x, x, std::move(fn));
}

GMap GMap::to_point(const GSet& x) { return GMap(x, point(x.group()), std::vector<int>(x.size(), 0)); }

GMap GMap::from_empty(const GSet& x) { return GMap(GSet::empty(x.group()), x, {}); }

GMap compose(const GMap& second, const GMap& first) {
  if (!(first.target == second.source)) throw ShapeError("compose: maps are not composable");
  std::vector<int> fn(first.source.size());
  for (int x = 0; x < first.source.size(); ++x) fn[x] = second.fn[first.fn[x]];
  return GMap(first.source, second.target, std::move(fn));
}

GMap inverse(const GMap& f) {
  if (!f.is_bijective()) throw ShapeError("inverse: map is not bijective");
  std::vector<int> fn(f.target.size());
  for (int x = 0; x < f.source.size(); ++x) fn[f.fn[x]] = x;
  return GMap(f.target, f.source, std::move(fn));
}

GSet point(const GroupPtr& g) { return GSet::trivial(g, 1); }

std::vector<int> coset_labels(const FiniteGroup& g, Subgroup h) {
  auto reps = g.left_coset_reps(h);
  std::vector<int> label(g.order(), -1);
  for (int i = 0; i < static_cast<int>(reps.size()); ++i)
    for (int a : h.elements()) label[g.mul(reps[i], a)] = i;
  return label;
}

GSet orbit(const GroupPtr& g, Subgroup h) {
  if (!g->is_subgroup(h.mask)) throw ValidationError("orbit: not a subgroup");
  auto reps = g->left_coset_reps(h);
  auto label = coset_labels(*g, h);
  const int m = static_cast<int>(reps.size());
  std::vector<int> act(static_cast<std::size_t>(g->order()) * m);
  for (int k = 0; k < g->order(); ++k)
    for (int i = 0; i < m; ++i) act[k * m + i] = label[g->mul(k, reps[i])];
  return GSet(g, m, std::move(act));
}

std::vector<OrbitInfo> orbit_decompose(const GSet& x) {
  const auto& lat = x.group()->lattice();
  std::vector<OrbitInfo> out;
  std::vector<char> seen(x.size(), 0);
  for (int p = 0; p < x.size(); ++p) {
    if (seen[p]) continue;
    OrbitInfo info;
    info.representative = p;
    info.stabilizer = x.stabilizer(p);
    info.conj_class = lat.conj_class[lat.index_of(info.stabilizer)];
    info.points = x.orbit_of(p);
    for (int q : info.points) seen[q] = 1;
    out.push_back(std::move(info));
  }
  std::stable_sort(out.begin(), out.end(), [](const OrbitInfo& a, const OrbitInfo& b) {
    return a.conj_class < b.conj_class;
  });
  return out;
}

OrbitType orbit_type(const GSet& x) {
  std::map<int, int> counts;
  for (const auto& o : orbit_decompose(x)) ++counts[o.conj_class];
  return {counts.begin(), counts.end()};
}

Coproduct coproduct(std::span<const GSet> parts) {
  if (parts.empty()) throw ShapeError("coproduct: need at least one part to fix the group");
  GroupPtr g = parts.front().group();
  int total = 0;
  std::vector<int> offsets;
  for (const auto& p : parts) {
    require_same_group(g, p.group(), "coproduct");
    offsets.push_back(total);
    total += p.size();
  }
  std::vector<int> act(static_cast<std::size_t>(g->order()) * total);
  for (int k = 0; k < g->order(); ++k)
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (int x = 0; x < parts[i].size(); ++x)
        act[k * total + offsets[i] + x] = offsets[i] + parts[i].act(k, x);
  GSet set(g, total, std::move(act));
  std::vector<GMap> inj;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::vector<int> fn(parts[i].size());
    std::iota(fn.begin(), fn.end(), offsets[i]);
    inj.emplace_back(parts[i], set, std::move(fn));
  }
  return {std::move(set), std::move(inj), std::move(offsets)};
}

Coproduct coproduct(const GSet& a, const GSet& b) {
  std::vector<GSet> parts{a, b};
  return coproduct(parts);
}

GMap coproduct_map(const GMap& f1, const GMap& f2) {
  auto src = coproduct(f1.source, f2.source);
  auto tgt = coproduct(f1.target, f2.target);
  std::vector<int> fn;
  for (int v : f1.fn) fn.push_back(v);
  for (int v : f2.fn) fn.push_back(v + f1.target.size());
  return GMap(src.set, tgt.set, std::move(fn));
}

GMap copair(const GMap& f1, const GMap& f2) {
  if (!(f1.target == f2.target)) throw ShapeError("copair: maps have different targets");
  auto src = coproduct(f1.source, f2.source);
  std::vector<int> fn = f1.fn;
  fn.insert(fn.end(), f2.fn.begin(), f2.fn.end());
  return GMap(src.set, f1.target, std::move(fn));
}

GMap fold(const GSet& x) {
  auto id = GMap::identity(x);
  return copair(id, id);
}

Product product(const GSet& a, const GSet& b) {
  require_same_group(a.group(), b.group(), "product");
  const int n = a.group()->order();
  const int m = a.size() * b.size();
  std::vector<int> act(static_cast<std::size_t>(n) * m);
  for (int k = 0; k < n; ++k)
    for (int x = 0; x < a.size(); ++x)
      for (int y = 0; y < b.size(); ++y) act[k * m + x * b.size() + y] = a.act(k, x) * b.size() + b.act(k, y);
  GSet set(a.group(), m, std::move(act));
  std::vector<int> p1(m), p2(m);
  for (int i = 0; i < m; ++i) {
    p1[i] = i / std::max(1, b.size());
    p2[i] = i % std::max(1, b.size());
  }
  return {set, GMap(set, a, std::move(p1)), GMap(set, b, std::move(p2))};
}

GMap product_map(const GMap& f1, const GMap& f2) {
  auto src = product(f1.source, f2.source);
  auto tgt = product(f1.target, f2.target);
  std::vector<int> fn(src.set.size());
  for (int x = 0; x < f1.source.size(); ++x)
    for (int y = 0; y < f2.source.size(); ++y)
      fn[x * f2.source.size() + y] = f1.fn[x] * f2.target.size() + f2.fn[y];
  return GMap(src.set, tgt.set, std::move(fn));
}

namespace {

struct PullbackIndex {
  std::vector<int> offset;        // per point of A
  std::vector<int> pos_in_fiber;  // per point of B: position inside g^-1(g(b))
};

}  // namespace

GMap Pullback::mediate(const GMap& p, const GMap& q) const {
  if (!(p.source == q.source)) throw ShapeError("mediate: cone legs have different sources");
  std::map<std::pair<int, int>, int> index;
  for (int i = 0; i < static_cast<int>(points.size()); ++i) index[points[i]] = i;
  std::vector<int> fn(p.source.size());
  for (int z = 0; z < p.source.size(); ++z) {
    auto it = index.find({p.fn[z], q.fn[z]});
    if (it == index.end()) throw ShapeError("mediate: cone does not commute");
    fn[z] = it->second;
  }
  return GMap(p.source, set, std::move(fn));
}

Pullback pullback(const GMap& f, const GMap& g) {
  if (!(f.target == g.target)) throw ShapeError("pullback: maps have different targets");
  const GSet& a = f.source;
  const GSet& b = g.source;
  std::vector<std::vector<int>> fibers(g.target.size());
  PullbackIndex idx;
  idx.pos_in_fiber.resize(b.size());
  for (int y = 0; y < b.size(); ++y) {
    idx.pos_in_fiber[y] = static_cast<int>(fibers[g.fn[y]].size());
    fibers[g.fn[y]].push_back(y);
  }
  std::vector<std::pair<int, int>> pts;
  idx.offset.resize(a.size());
  for (int x = 0; x < a.size(); ++x) {
    idx.offset[x] = static_cast<int>(pts.size());
    for (int y : fibers[f.fn[x]]) pts.emplace_back(x, y);
  }
  const int n = a.group()->order();
  const int m = static_cast<int>(pts.size());
  std::vector<int> act(static_cast<std::size_t>(n) * m);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < m; ++i) {
      auto [x, y] = pts[i];
      act[k * m + i] = idx.offset[a.act(k, x)] + idx.pos_in_fiber[b.act(k, y)];
    }
  GSet set(a.group(), m, std::move(act));
  std::vector<int> p1(m), p2(m);
  for (int i = 0; i < m; ++i) {
    p1[i] = pts[i].first;
    p2[i] = pts[i].second;
  }
  return {set, GMap(set, a, std::move(p1)), GMap(set, b, std::move(p2)), std::move(pts)};
}

ExponentialDiagram dependent_product(const GMap& h, const GMap& g, long long max_points) {
  if (!(h.target == g.source)) throw ShapeError("dependent_product: maps are not composable");
  const GSet& a = h.source;
  const GSet& x = g.source;
  const GSet& y = g.target;
  const FiniteGroup& grp = *a.group();

  std::vector<std::vector<int>> fib_x(y.size());  // g^-1(y)
  std::vector<int> pos_x(x.size());
  for (int p = 0; p < x.size(); ++p) {
    pos_x[p] = static_cast<int>(fib_x[g.fn[p]].size());
    fib_x[g.fn[p]].push_back(p);
  }
  std::vector<std::vector<int>> pre(x.size());  // h^-1(x)
  std::vector<int> pos_a(a.size());
  for (int p = 0; p < a.size(); ++p) {
    pos_a[p] = static_cast<int>(pre[h.fn[p]].size());
    pre[h.fn[p]].push_back(p);
  }

  std::vector<long long> offset(y.size() + 1, 0);
  for (int q = 0; q < y.size(); ++q) {
    long long count = 1;
    for (int p : fib_x[q]) {
      count *= static_cast<long long>(pre[p].size());
      if (count > max_points) break;
    }
    offset[q + 1] = offset[q] + count;
    if (offset[q + 1] > max_points)
      throw ResourceError("dependent_product: more than " + std::to_string(max_points) + " sections");
  }
  const int total = static_cast<int>(offset[y.size()]);

  // sections[i] = (y, digits) where digits[j] indexes pre[fib_x[y][j]].
  std::vector<std::pair<int, std::vector<int>>> digits(total);
  for (int q = 0; q < y.size(); ++q) {
    const auto& fib = fib_x[q];
    std::vector<int> d(fib.size(), 0);
    for (long long i = offset[q]; i < offset[q + 1]; ++i) {
      digits[i] = {q, d};
      for (int j = static_cast<int>(fib.size()) - 1; j >= 0; --j) {
        if (++d[j] < static_cast<int>(pre[fib[j]].size())) break;
        d[j] = 0;
      }
    }
  }
  auto index_of = [&](int q, const std::vector<int>& d) {
    long long idx = 0;
    const auto& fib = fib_x[q];
    for (std::size_t j = 0; j < fib.size(); ++j) idx = idx * static_cast<long long>(pre[fib[j]].size()) + d[j];
    return static_cast<int>(offset[q] + idx);
  };

  const int n = grp.order();
  std::vector<int> act(static_cast<std::size_t>(n) * total);
  for (int k = 0; k < n; ++k) {
    const int kinv = grp.inv(k);
    for (int i = 0; i < total; ++i) {
      const auto& [q, d] = digits[i];
      const int q2 = y.act(k, q);
      const auto& fib2 = fib_x[q2];
      std::vector<int> d2(fib2.size());
      for (std::size_t j = 0; j < fib2.size(); ++j) {
        const int src = x.act(kinv, fib2[j]);
        const int chosen = pre[src][d[pos_x[src]]];
        d2[j] = pos_a[a.act(k, chosen)];
      }
      act[k * total + i] = index_of(q2, d2);
    }
  }
  GSet pi(a.group(), total, std::move(act));
  std::vector<int> hp(total);
  for (int i = 0; i < total; ++i) hp[i] = digits[i].first;
  GMap h_prime(pi, y, std::move(hp));
  auto pb = pullback(g, h_prime);
  std::vector<int> ev(pb.set.size());
  for (int i = 0; i < pb.set.size(); ++i) {
    auto [px, ppi] = pb.points[i];
    ev[i] = pre[px][digits[ppi].second[pos_x[px]]];
  }
  GMap eval(pb.set, a, std::move(ev));

  std::vector<std::pair<int, std::vector<int>>> sections(total);
  for (int i = 0; i < total; ++i) {
    const auto& [q, d] = digits[i];
    std::vector<int> chosen(d.size());
    for (std::size_t j = 0; j < d.size(); ++j) chosen[j] = pre[fib_x[q][j]][d[j]];
    sections[i] = {q, std::move(chosen)};
  }
  return {h, g, pi, h_prime, pb.set, pb.first, pb.second, eval, std::move(sections)};
}

GMap Induced::unit() const {
  GSet target = restrict(set, subgroup);
  std::vector<int> fn(base.size());
  for (int x = 0; x < base.size(); ++x) fn[x] = point(0, x);
  return GMap(base, target, std::move(fn));
}

Induced induce(const GroupPtr& g, Subgroup h, const GSet& x) {
  const auto& emb = g->embed(h);
  require_same_group(emb.group, x.group(), "induce");
  auto reps = g->left_coset_reps(h);
  auto label = coset_labels(*g, h);
  const int m = static_cast<int>(reps.size());
  const int size = m * x.size();
  std::vector<int> act(static_cast<std::size_t>(g->order()) * size);
  for (int k = 0; k < g->order(); ++k)
    for (int i = 0; i < m; ++i) {
      const int kr = g->mul(k, reps[i]);
      const int j = label[kr];
      const int hk = emb.from_parent[g->mul(g->inv(reps[j]), kr)];
      for (int p = 0; p < x.size(); ++p) act[k * size + i * x.size() + p] = j * x.size() + x.act(hk, p);
    }
  return {GSet(g, size, std::move(act)), x, h, std::move(reps)};
}

GMap induce_map(const GroupPtr& g, Subgroup h, const GMap& f) {
  auto src = induce(g, h, f.source);
  auto tgt = induce(g, h, f.target);
  std::vector<int> fn(src.set.size());
  for (std::size_t i = 0; i < src.reps.size(); ++i)
    for (int p = 0; p < f.source.size(); ++p)
      fn[src.point(static_cast<int>(i), p)] = tgt.point(static_cast<int>(i), f.fn[p]);
  return GMap(src.set, tgt.set, std::move(fn));
}

GMap induce_adjoint(const Induced& ind, const GSet& y, const GMap& f) {
  if (!(f.source == ind.base)) throw ShapeError("induce_adjoint: map does not start at the base");
  std::vector<int> fn(ind.set.size());
  const auto& emb = y.group()->embed(ind.subgroup);
  for (std::size_t i = 0; i < ind.reps.size(); ++i)
    for (int p = 0; p < ind.base.size(); ++p)
      fn[ind.point(static_cast<int>(i), p)] = y.act(ind.reps[i], f.fn[p]);
  (void)emb;
  return GMap(ind.set, y, std::move(fn));
}

GSet restrict(const GSet& x, Subgroup h) {
  const auto& emb = x.group()->embed(h);
  const int m = h.order();
  std::vector<int> act(static_cast<std::size_t>(m) * x.size());
  for (int j = 0; j < m; ++j)
    for (int p = 0; p < x.size(); ++p) act[j * x.size() + p] = x.act(emb.to_parent[j], p);
  return GSet(emb.group, x.size(), std::move(act));
}

GMap restrict_map(const GMap& f, Subgroup h) {
  return GMap(restrict(f.source, h), restrict(f.target, h), f.fn);
}

GMap induce_counit(const GSet& t, Subgroup h) {
  auto ind = induce(t.group(), h, restrict(t, h));
  return induce_adjoint(ind, t, GMap::identity(ind.base));
}

int Coinduced::value_at(int pt, int a) const {
  const FiniteGroup& g = *set.group();
  const auto& emb = g.embed(subgroup);
  const int m = static_cast<int>(reps.size());
  // digit for coset i is the value at reps[i]; digit 0 most significant.
  int i = -1;
  int hk = -1;
  for (int j = 0; j < m && i < 0; ++j) {
    int cand = g.mul(a, g.inv(reps[j]));
    if (subgroup.contains(cand)) {
      i = j;
      hk = emb.from_parent[cand];
    }
  }
  int rem = pt;
  int digit = 0;
  for (int j = m - 1; j >= 0; --j) {
    if (j == i) digit = rem % base.size();
    rem /= base.size();
  }
  return base.act(hk, digit);
}

Coinduced coinduce(const GroupPtr& g, Subgroup h, const GSet& x) {
  const auto& emb = g->embed(h);
  require_same_group(emb.group, x.group(), "coinduce");
  auto reps = g->right_coset_reps(h);
  const int m = static_cast<int>(reps.size());
  long long size = 1;
  for (int i = 0; i < m; ++i) {
    size *= x.size();
    if (size > kDefaultMaxPoints) throw ResourceError("coinduce: too many points");
  }
  Coinduced out{GSet::empty(g), x, h, reps};
  if (size == 0) return out;
  // right coset index of each element
  std::vector<int> rlabel(g->order());
  for (int j = 0; j < m; ++j)
    for (int a : h.elements()) rlabel[g->mul(a, reps[j])] = j;
  auto decode = [&](int pt) {
    std::vector<int> d(m);
    for (int j = m - 1; j >= 0; --j) {
      d[j] = pt % x.size();
      pt /= x.size();
    }
    return d;
  };
  auto encode = [&](const std::vector<int>& d) {
    int v = 0;
    for (int j = 0; j < m; ++j) v = v * x.size() + d[j];
    return v;
  };
  auto value = [&](const std::vector<int>& d, int a) {
    const int j = rlabel[a];
    return x.act(emb.from_parent[g->mul(a, g->inv(reps[j]))], d[j]);
  };
  const int n = g->order();
  const int sz = static_cast<int>(size);
  std::vector<int> act(static_cast<std::size_t>(n) * sz);
  for (int pt = 0; pt < sz; ++pt) {
    auto d = decode(pt);
    for (int k = 0; k < n; ++k) {
      std::vector<int> d2(m);
      for (int j = 0; j < m; ++j) d2[j] = value(d, g->mul(reps[j], k));
      act[k * sz + pt] = encode(d2);
    }
  }
  out.set = GSet(g, sz, std::move(act));
  return out;
}

GMap coinduce_unit(const GSet& t, Subgroup h, const Coinduced& target) {
  const int m = static_cast<int>(target.reps.size());
  std::vector<int> fn(t.size());
  for (int p = 0; p < t.size(); ++p) {
    int v = 0;
    for (int j = 0; j < m; ++j) v = v * t.size() + t.act(target.reps[j], p);
    fn[p] = v;
  }
  (void)h;
  return GMap(t, target.set, std::move(fn));
}

GMap coinduce_counit(const Coinduced& c) {
  GSet src = restrict(c.set, c.subgroup);
  std::vector<int> fn(src.size());
  for (int p = 0; p < src.size(); ++p) fn[p] = c.value_at(p, 0);
  return GMap(src, c.base, std::move(fn));
}

SieveFactorization sieve_factorization(const GMap& f, const Induced& target) {
  if (!(f.target == target.set)) throw ShapeError("sieve_factorization: map does not land in the induced set");
  const Subgroup h = target.subgroup;
  GMap restricted = restrict_map(f, h);
  auto pb = pullback(target.unit(), restricted);
  Induced ind = induce(f.source.group(), h, pb.set);
  GMap iso = induce_adjoint(ind, f.source, pb.second);
  GMap iso_inv = inverse(iso);
  return {pb.set, pb.first, std::move(ind), std::move(iso), std::move(iso_inv)};
}

CanonicalGSet canonicalize(const GSet& x) {
  const GroupPtr& g = x.group();
  const auto& lat = g->lattice();
  auto orbits = orbit_decompose(x);
  std::vector<GSet> parts;
  for (const auto& o : orbits) parts.push_back(orbit(g, lat.subgroups[lat.classes[o.conj_class].front()]));
  std::vector<int> relabel(x.size(), -1);
  GSet set = parts.empty() ? GSet::empty(g) : coproduct(parts).set;
  int offset = 0;
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    const Subgroup k = lat.subgroups[lat.classes[orbits[i].conj_class].front()];
    int c = 0;
    while (!(g->conjugate(c, orbits[i].stabilizer) == k)) ++c;
    const int base = x.act(c, orbits[i].representative);  // stabilizer is exactly k
    auto label = coset_labels(*g, k);
    for (int a = 0; a < g->order(); ++a) relabel[x.act(a, base)] = offset + label[a];
    offset += parts[i].size();
  }
  return {set, GMap(x, set, std::move(relabel))};
}

std::optional<GMap> find_isomorphism(const GSet& x, const GSet& y) {
  if (!same_group(x.group(), y.group()) || x.size() != y.size()) return std::nullopt;
  if (orbit_type(x) != orbit_type(y)) return std::nullopt;
  auto cx = canonicalize(x);
  auto cy = canonicalize(y);
  return compose(inverse(cy.relabel), cx.relabel);
}

std::vector<GSet> gsets_up_to(const GroupPtr& g, int bound) {
  const auto& lat = g->lattice();
  const int nclasses = static_cast<int>(lat.classes.size());
  std::vector<GSet> orbits;
  std::vector<int> sizes;
  for (int c = 0; c < nclasses; ++c) {
    orbits.push_back(orbit(g, lat.subgroups[lat.classes[c].front()]));
    sizes.push_back(orbits.back().size());
  }
  std::vector<GSet> out;
  std::vector<int> chosen;
  auto rec = [&](auto&& self, int start, int remaining) -> void {
    std::vector<GSet> parts;
    for (int c : chosen) parts.push_back(orbits[c]);
    out.push_back(parts.empty() ? GSet::empty(g) : coproduct(parts).set);
    for (int c = start; c < nclasses; ++c)
      if (sizes[c] <= remaining) {
        chosen.push_back(c);
        self(self, c, remaining - sizes[c]);
        chosen.pop_back();
      }
  };
  rec(rec, 0, bound);
  return out;
}

std::vector<GMap> all_gmaps(const GSet& a, const GSet& b, long long limit) {
  auto orbits = orbit_decompose(a);
  std::vector<std::vector<int>> choices;
  long long total = 1;
  for (const auto& o : orbits) {
    choices.push_back(b.fixed_points(o.stabilizer));
    total *= static_cast<long long>(choices.back().size());
    if (total > limit) throw ResourceError("all_gmaps: too many maps");
  }
  std::vector<GMap> out;
  if (total == 0) return out;
  std::vector<int> idx(orbits.size(), 0);
  const int n = a.group()->order();
  while (true) {
    std::vector<int> fn(a.size());
    for (std::size_t i = 0; i < orbits.size(); ++i)
      for (int k = 0; k < n; ++k) fn[a.act(k, orbits[i].representative)] = b.act(k, choices[i][idx[i]]);
    out.emplace_back(a, b, std::move(fn));
    std::size_t i = 0;
    for (; i < idx.size(); ++i) {
      if (++idx[i] < static_cast<int>(choices[i].size())) break;
      idx[i] = 0;
    }
    if (i == idx.size()) break;
  }
  return out;
}

std::pair<int, int> orbit_code(const GSet& u, const std::vector<int>& u_map, int s, Subgroup h) {
  const FiniteGroup& g = *u.group();
  const auto& lat = g.lattice();
  const Subgroup l = u.stabilizer(s);
  int best_l = lat.size();
  int best_x = 0;
  for (int k : h.elements()) {
    const int li = lat.index_of(g.conjugate(k, l));
    const int xv = u_map[u.act(k, s)];
    if (li < best_l || (li == best_l && xv < best_x)) {
      best_l = li;
      best_x = xv;
    }
  }
  return {best_l, best_x};
}

std::string describe(const GSet& x) {
  std::ostringstream os;
  const auto& lat = x.group()->lattice();
  os << "GSet[" << x.size() << " pts; orbits:";
  for (const auto& [c, mult] : orbit_type(x)) {
    const Subgroup k = lat.subgroups[lat.classes[c].front()];
    os << " " << mult << "xG/{";
    auto el = k.elements();
    for (std::size_t i = 0; i < el.size(); ++i) os << (i ? "," : "") << el[i];
    os << "}";
  }
  os << "]";
  return os.str();
}

std::string describe(const GMap& f) {
  std::ostringstream os;
  os << describe(f.source) << " -> " << describe(f.target) << " [";
  for (std::size_t i = 0; i < f.fn.size(); ++i) os << (i ? " " : "") << f.fn[i];
  os << "]";
  return os.str();
}

}  // namespace tambara
