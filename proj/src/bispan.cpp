#include "tambara/bispan.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "tambara/error.hpp"

namespace tambara {

Bispan::Bispan(GMap f_, GMap g_, GMap h_) : f(std::move(f_)), g(std::move(g_)), h(std::move(h_)) {
  if (!(f.source == g.source)) throw ShapeError("bispan: f and g have different sources");
  if (!(g.target == h.source)) throw ShapeError("bispan: g does not land in the source of h");
}

Bispan Bispan::identity(const GSet& x) {
  auto id = GMap::identity(x);
  return {id, id, id};
}

Bispan Bispan::restriction(const GMap& f) {
  auto id = GMap::identity(f.source);
  return {f, id, id};
}

Bispan Bispan::norm(const GMap& g) { return {GMap::identity(g.source), g, GMap::identity(g.target)}; }

Bispan Bispan::transfer(const GMap& h) {
  auto id = GMap::identity(h.source);
  return {id, id, h};
}

Bispan Bispan::zero(const GSet& x, const GSet& y) {
  GSet e = GSet::empty(x.group());
  return {GMap::from_empty(x), GMap::identity(e), GMap::from_empty(y)};
}

Bispan Bispan::unit(const GSet& x, const GSet& y) {
  return {GMap::from_empty(x), GMap::from_empty(y), GMap::identity(y)};
}

HomClass HomClass::of(const Bispan& b) {
  const GSet& s = b.s();
  const GSet& t = b.t();
  const FiniteGroup& grp = *t.group();
  const auto& lat = grp.lattice();
  std::vector<std::vector<int>> fibers(t.size());
  for (int p = 0; p < s.size(); ++p) fibers[b.g(p)].push_back(p);

  HomClass out{b.source(), b.target(), {}};
  for (const auto& o : orbit_decompose(t)) {
    const int ki = lat.classes[o.conj_class].front();
    const Subgroup k = lat.subgroups[ki];
    auto kel = k.elements();
    std::optional<Component> best;
    for (int base : o.points) {
      if (!(t.stabilizer(base) == k)) continue;
      Component c{ki, b.h(base), {}};
      std::vector<char> seen(s.size(), 0);
      for (int p : fibers[base]) {
        if (seen[p]) continue;
        for (int a : kel) seen[s.act(a, p)] = 1;
        c.fiber.push_back(orbit_code(s, b.f.fn, p, k));
      }
      std::sort(c.fiber.begin(), c.fiber.end());
      if (!best || c < *best) best = std::move(c);
    }
    out.components.push_back(std::move(*best));
  }
  std::sort(out.components.begin(), out.components.end());
  return out;
}

Bispan build_bispan(const GSet& x, const GSet& y, const std::vector<Component>& components) {
  const GroupPtr& g = x.group();
  const auto& lat = g->lattice();
  std::vector<GSet> t_parts, s_parts;
  std::vector<int> f_fn, g_fn, h_fn;
  int t_offset = 0;
  for (const auto& c : components) {
    const Subgroup k = lat.subgroups[c.k];
    auto korbit = orbit(g, k);
    auto k_reps = g->left_coset_reps(k);
    auto k_label = coset_labels(*g, k);
    for (int r : k_reps) h_fn.push_back(y.act(r, c.y));
    for (auto [li, xv] : c.fiber) {
      const Subgroup l = lat.subgroups[li];
      s_parts.push_back(orbit(g, l));
      for (int r : g->left_coset_reps(l)) {
        g_fn.push_back(t_offset + k_label[r]);
        f_fn.push_back(x.act(r, xv));
      }
    }
    t_offset += korbit.size();
    t_parts.push_back(std::move(korbit));
  }
  GSet s = s_parts.empty() ? GSet::empty(g) : coproduct(s_parts).set;
  GSet t = t_parts.empty() ? GSet::empty(g) : coproduct(t_parts).set;
  return {GMap(s, x, std::move(f_fn)), GMap(s, t, std::move(g_fn)), GMap(t, y, std::move(h_fn))};
}

Bispan HomClass::representative() const { return build_bispan(x, y, components); }

int HomClass::t_size() const {
  const auto& g = *x.group();
  int n = 0;
  for (const auto& c : components) n += g.order() / g.lattice().subgroups[c.k].order();
  return n;
}

int HomClass::s_size() const {
  const auto& g = *x.group();
  int n = 0;
  for (const auto& c : components)
    for (auto [l, xv] : c.fiber) n += g.order() / g.lattice().subgroups[l].order();
  return n;
}

std::string HomClass::key() const {
  std::ostringstream os;
  for (const auto& c : components) {
    os << "(" << c.k << ":" << c.y << "|";
    for (auto [l, xv] : c.fiber) os << l << "." << xv << ",";
    os << ")";
  }
  return os.str();
}

std::string arrow_key(const GMap& g) {
  return HomClass::of(Bispan(GMap::to_point(g.source), g, GMap::to_point(g.target))).key();
}

namespace {

void require_in(const ExponentPredicate& d, const GMap& e, const std::string& what) {
  if (!d.contains(e)) throw ExponentEscape(what + " leaves exponent class '" + d.name() + "': " + describe(e));
}

}  // namespace

Bispan compose_raw(const Bispan& p, const Bispan& q, const ExponentPredicate& d, const ComposeOptions& opt) {
  if (!(p.target() == q.source())) throw ShapeError("compose: target of the first bispan is not the source of the second");
  require_in(d, p.g, "exponent of the first bispan");
  require_in(d, q.g, "exponent of the second bispan");
  // R_{f2} T_{h1} = T_{h1'} R_{f2'} over P1 = T1 x_Y S2
  auto p1 = pullback(p.h, q.f);
  // R_{f2'} N_{g1} = N_{g1'} R_{f2''} over P2 = S1 x_T1 P1
  auto p2 = pullback(p.g, p1.first);
  // N_{g2} T_{h1'} = T_{h'} N_{g'} R_{eval} via the exponential diagram
  auto ed = dependent_product(p1.second, q.g, opt.max_points);
  // R_{eval} N_{g1'} = N_{g1''} R_{ev'} over P4 = P2 x_P1 P3
  auto p4 = pullback(p2.second, ed.eval);
  GMap f = compose(p.f, compose(p2.first, p4.first));
  GMap g = compose(ed.g_prime, p4.second);
  GMap h = compose(q.h, ed.h_prime);
  if (!d.contains(g)) {
    if (!d.contains(p2.second))
      throw ExponentEscape("pullback of the first exponent along the restriction T1 x_Y S2 -> T1 leaves '" + d.name() +
                           "': " + describe(p2.second));
    if (!d.contains(ed.g_prime))
      throw ExponentEscape("exponential diagram of " + describe(p1.second) + " along " + describe(q.g) +
                           " produced an exponent outside '" + d.name() + "': " + describe(ed.g_prime));
    if (!d.contains(p4.second))
      throw ExponentEscape("pullback of the exponent along the evaluation map leaves '" + d.name() +
                           "': " + describe(p4.second));
    throw ExponentEscape("composite exponent leaves '" + d.name() + "': " + describe(g));
  }
  return {std::move(f), std::move(g), std::move(h)};
}

Bispan compose(const Bispan& p, const Bispan& q, const ExponentPredicate& d, const ComposeOptions& opt) {
  return HomClass::of(compose_raw(p, q, d, opt)).representative();
}

HomClass compose(const HomClass& p, const HomClass& q, const ExponentPredicate& d, const ComposeOptions& opt) {
  return HomClass::of(compose_raw(p.representative(), q.representative(), d, opt));
}

HomClass add(const HomClass& a, const HomClass& b) {
  if (!(a.x == b.x) || !(a.y == b.y)) throw ShapeError("add: classes live in different hom sets");
  HomClass out{a.x, a.y, a.components};
  out.components.insert(out.components.end(), b.components.begin(), b.components.end());
  std::sort(out.components.begin(), out.components.end());
  return out;
}

Bispan pairing(const Bispan& a, const Bispan& b) {
  if (!(a.source() == b.source())) throw ShapeError("pairing: bispans have different sources");
  return {copair(a.f, b.f), coproduct_map(a.g, b.g), coproduct_map(a.h, b.h)};
}

HomClass multiply(const HomClass& a, const HomClass& b, const ExponentPredicate& d) {
  if (!(a.x == b.x) || !(a.y == b.y)) throw ShapeError("multiply: classes live in different hom sets");
  auto pair = pairing(a.representative(), b.representative());
  auto nabla = Bispan::norm(fold(a.y));
  return HomClass::of(compose_raw(pair, nabla, d));
}

HomClass zero_class(const GSet& x, const GSet& y) { return {x, y, {}}; }

HomClass unit_class(const GSet& x, const GSet& y) { return HomClass::of(Bispan::unit(x, y)); }

std::vector<HomClass> decompose(const HomClass& p) {
  std::vector<HomClass> out;
  for (const auto& c : p.components) out.push_back({p.x, p.y, {c}});
  return out;
}

VirtualHom VirtualHom::zero(const GSet& x, const GSet& y) { return {x, y, {}}; }

VirtualHom VirtualHom::from(const HomClass& p, long long coeff) {
  VirtualHom v{p.x, p.y, {}};
  if (coeff == 0) return v;
  for (const auto& c : p.components) v.terms[c] += coeff;
  return v;
}

VirtualHom VirtualHom::operator+(const VirtualHom& o) const {
  if (!(x == o.x) || !(y == o.y)) throw ShapeError("virtual hom: different hom sets");
  VirtualHom out = *this;
  for (const auto& [c, n] : o.terms)
    if ((out.terms[c] += n) == 0) out.terms.erase(c);
  return out;
}

VirtualHom VirtualHom::operator-() const {
  VirtualHom out = *this;
  for (auto& [c, n] : out.terms) n = -n;
  return out;
}

VirtualHom VirtualHom::operator-(const VirtualHom& o) const { return *this + (-o); }

VirtualHom group_complete(const std::vector<std::pair<HomClass, long long>>& sums) {
  if (sums.empty()) throw ShapeError("group_complete: no terms to fix the hom set");
  VirtualHom v = VirtualHom::zero(sums.front().first.x, sums.front().first.y);
  for (const auto& [c, n] : sums) v = v + VirtualHom::from(c, n);
  return v;
}

namespace {

struct Weighted {
  Component c;
  int s;
  int t;
};

// Every multiset (nondecreasing index sequence) of items with total weights
// inside the bounds.
template <class Item, class Weight, class Emit>
void multisets(const std::vector<Item>& items, Weight weight, int s_bound, int t_bound, Emit emit) {
  std::vector<int> chosen;
  auto rec = [&](auto&& self, std::size_t start, int s_left, int t_left) -> void {
    emit(chosen);
    for (std::size_t i = start; i < items.size(); ++i) {
      auto [ws, wt] = weight(items[i]);
      if (ws <= s_left && wt <= t_left) {
        chosen.push_back(static_cast<int>(i));
        self(self, i, s_left - ws, t_left - wt);
        chosen.pop_back();
      }
    }
  };
  rec(rec, 0, s_bound, t_bound);
}

}  // namespace

std::vector<HomClass> enumerate_hom(const GSet& x, const GSet& y, const ExponentPredicate& d, int s_bound, int t_bound,
                                    long long limit) {
  const GroupPtr& g = x.group();
  const auto& lat = g->lattice();
  const int n = g->order();
  std::set<Component> comps;
  for (const auto& cls : lat.classes) {
    const int ki = cls.front();
    const Subgroup k = lat.subgroups[ki];
    const int tw = n / k.order();
    if (tw > t_bound) continue;
    auto kel = k.elements();
    // orbit codes (L, x) for K-orbits of points over X
    std::vector<std::pair<int, int>> codes;
    for (int li = 0; li < lat.size(); ++li) {
      const Subgroup l = lat.subgroups[li];
      if (!l.is_subset_of(k) || n / l.order() > s_bound) continue;
      bool least = true;
      for (int a : kel) least = least && lat.index_of(g->conjugate(a, l)) >= li;
      if (!least) continue;
      for (int xv : x.fixed_points(l)) {
        bool minimal = true;
        for (int a : kel)
          if (g->conjugate(a, l) == l && x.act(a, xv) < xv) minimal = false;
        if (minimal) codes.emplace_back(li, xv);
      }
    }
    std::vector<std::vector<std::pair<int, int>>> fibers;
    multisets(
        codes, [&](const std::pair<int, int>& c) { return std::pair{n / lat.subgroups[c.first].order(), 0}; }, s_bound,
        0, [&](const std::vector<int>& idx) {
          std::vector<std::pair<int, int>> fib;
          for (int i : idx) fib.push_back(codes[i]);
          fibers.push_back(std::move(fib));
          if (static_cast<long long>(fibers.size()) > limit) throw ResourceError("enumerate_hom: too many fibres");
        });
    for (int yv : y.fixed_points(k))
      for (const auto& fib : fibers) {
        Component raw{ki, yv, fib};
        comps.insert(HomClass::of(build_bispan(x, y, {raw})).components.front());
      }
  }
  std::vector<Weighted> items;
  for (const auto& c : comps) {
    HomClass one{x, y, {c}};
    items.push_back({c, one.s_size(), one.t_size()});
  }
  std::vector<HomClass> out;
  multisets(
      items, [](const Weighted& w) { return std::pair{w.s, w.t}; }, s_bound, t_bound, [&](const std::vector<int>& idx) {
        HomClass hc{x, y, {}};
        for (int i : idx) hc.components.push_back(items[i].c);
        if (d.contains(hc.representative().g)) out.push_back(std::move(hc));
        if (static_cast<long long>(out.size()) > limit) throw ResourceError("enumerate_hom: too many classes");
      });
  std::sort(out.begin(), out.end(), [](const HomClass& a, const HomClass& b) {
    if (a.t_size() != b.t_size()) return a.t_size() < b.t_size();
    if (a.s_size() != b.s_size()) return a.s_size() < b.s_size();
    return a.components < b.components;
  });
  return out;
}

std::string describe(const Bispan& b) {
  std::ostringstream os;
  os << "bispan X=" << describe(b.source()) << " S=" << describe(b.s()) << " T=" << describe(b.t())
     << " Y=" << describe(b.target());
  return os.str();
}

std::string describe(const HomClass& c) {
  const auto& lat = c.x.group()->lattice();
  std::ostringstream os;
  if (c.components.empty()) return "0";
  for (std::size_t i = 0; i < c.components.size(); ++i) {
    const auto& comp = c.components[i];
    os << (i ? " + " : "") << "[G/" << lat.subgroups[comp.k].order() << "@y" << comp.y << " <- {";
    for (std::size_t j = 0; j < comp.fiber.size(); ++j)
      os << (j ? "," : "") << "G/" << lat.subgroups[comp.fiber[j].first].order() << "@x" << comp.fiber[j].second;
    os << "}]";
  }
  return os.str();
}

}  // namespace tambara
