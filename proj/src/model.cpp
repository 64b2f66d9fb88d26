#include "tambara/model.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "tambara/error.hpp"

namespace tambara {

namespace {

constexpr long long kMaxElements = 1'000'000;

std::string subgroup_label(const FiniteGroup& g, Subgroup h) {
  if (h.order() == 1) return "e";
  if (h.order() == g.order()) return "G";
  std::ostringstream os;
  os << "{";
  auto el = h.elements();
  for (std::size_t i = 0; i < el.size(); ++i) os << (i ? "," : "") << el[i];
  os << "}";
  return os.str();
}

long long mod_inverse(long long a, long long n) {
  long long t = 0, new_t = 1, r = n, new_r = ((a % n) + n) % n;
  while (new_r != 0) {
    long long q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw ValidationError("burnside: " + std::to_string(a) + " is not invertible mod " + std::to_string(n));
  return ((t % n) + n) % n;
}

std::string plain_format(const Value& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.c.size(); ++i) os << (i ? ", " : "") << v.c[i];
  os << ")";
  return os.str();
}

}  // namespace

Value TambaraModel::norm(const GMap& f, const Value& v) const {
  if (!exponents().contains(f)) {
    std::string msg = "norm along " + describe(f) + " is not available in " + name();
    if (const auto& sys = exponents().indexing()) {
      if (auto s = first_inadmissible_point(*sys, f)) {
        std::ostringstream os;
        const auto& g = *group();
        os << ": orbit pair (H, K) = (" << subgroup_label(g, f.target.stabilizer(f(*s))) << ", "
           << subgroup_label(g, f.source.stabilizer(*s)) << ") is not admissible";
        msg += os.str();
      }
    }
    throw NormUnavailable(msg);
  }
  return norm_unchecked(f, v);
}

std::vector<Value> TambaraModel::test_elements(const GSet& x) const {
  if (auto all = elements(x)) return *all;
  std::mt19937 rng(12345);
  std::vector<Value> out;
  for (int i = 0; i < 16; ++i) out.push_back(random_element(x, rng));
  return out;
}

std::string TambaraModel::format(const GSet&, const Value& v) const { return plain_format(v); }

Value TambaraModel::join(const Coproduct& c, std::span<const Value> parts) const {
  if (parts.size() != c.injections.size()) throw ShapeError("join: wrong number of parts");
  Value out = zero(c.set);
  for (std::size_t i = 0; i < parts.size(); ++i) out = add(c.set, out, transfer(c.injections[i], parts[i]));
  return out;
}

Value eval(const TambaraModel& m, const Bispan& b, const Value& x) {
  return m.transfer(b.h, m.norm(b.g, m.restrict(b.f, x)));
}

// ---------------------------------------------------------------- fixed point

FixedPointModel::FixedPointModel(GRing ring, ExponentPredicate d) : TambaraModel(true), ring_(std::move(ring)), d_(std::move(d)) {
  if (!same_group(ring_.group(), d_.group())) throw ShapeError("fixed-point model: ring and exponents over different groups");
}

Value FixedPointModel::restrict(const GMap& f, const Value& v) const {
  Value out;
  out.c.resize(f.source.size());
  for (int a = 0; a < f.source.size(); ++a) out.c[a] = v.c[f(a)];
  return out;
}

Value FixedPointModel::transfer(const GMap& f, const Value& v) const {
  Value out;
  out.c.assign(f.target.size(), ring_.zero());
  for (int a = 0; a < f.source.size(); ++a) out.c[f(a)] = ring_.add(static_cast<int>(out.c[f(a)]), static_cast<int>(v.c[a]));
  return out;
}

Value FixedPointModel::norm_unchecked(const GMap& f, const Value& v) const {
  Value out;
  out.c.assign(f.target.size(), ring_.one());
  for (int a = 0; a < f.source.size(); ++a) out.c[f(a)] = ring_.mul(static_cast<int>(out.c[f(a)]), static_cast<int>(v.c[a]));
  return out;
}

Value FixedPointModel::zero(const GSet& x) const { return {std::vector<long long>(x.size(), ring_.zero())}; }
Value FixedPointModel::one(const GSet& x) const { return {std::vector<long long>(x.size(), ring_.one())}; }

Value FixedPointModel::add(const GSet& x, const Value& a, const Value& b) const {
  Value out;
  out.c.resize(x.size());
  for (int p = 0; p < x.size(); ++p) out.c[p] = ring_.add(static_cast<int>(a.c[p]), static_cast<int>(b.c[p]));
  return out;
}

Value FixedPointModel::mul(const GSet& x, const Value& a, const Value& b) const {
  Value out;
  out.c.resize(x.size());
  for (int p = 0; p < x.size(); ++p) out.c[p] = ring_.mul(static_cast<int>(a.c[p]), static_cast<int>(b.c[p]));
  return out;
}

Value FixedPointModel::neg(const GSet& x, const Value& a) const {
  Value out;
  out.c.resize(x.size());
  for (int p = 0; p < x.size(); ++p) out.c[p] = ring_.neg(static_cast<int>(a.c[p]));
  return out;
}

Value FixedPointModel::from_representatives(const GSet& x, const std::vector<int>& values) const {
  auto orbits = orbit_decompose(x);
  if (values.size() != orbits.size()) throw ShapeError("fixed-point model: one value per orbit expected");
  Value out;
  out.c.assign(x.size(), 0);
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    for (int g : orbits[i].stabilizer.elements())
      if (ring_.act(g, values[i]) != values[i])
        throw ValidationError("fixed-point model: value is not fixed by the stabilizer");
    for (int g = 0; g < x.group()->order(); ++g) out.c[x.act(g, orbits[i].representative)] = ring_.act(g, values[i]);
  }
  return out;
}

std::optional<std::vector<Value>> FixedPointModel::elements(const GSet& x) const {
  auto orbits = orbit_decompose(x);
  std::vector<std::vector<int>> choices;
  long long total = 1;
  for (const auto& o : orbits) {
    choices.push_back(ring_.fixed(o.stabilizer));
    total *= static_cast<long long>(choices.back().size());
    if (total > kMaxElements) throw ResourceError("fixed-point model: value set too large to enumerate");
  }
  std::vector<Value> out;
  std::vector<int> idx(orbits.size(), 0);
  while (true) {
    std::vector<int> vals(orbits.size());
    for (std::size_t i = 0; i < orbits.size(); ++i) vals[i] = choices[i][idx[i]];
    out.push_back(from_representatives(x, vals));
    std::size_t i = idx.size();
    while (i > 0) {
      --i;
      if (++idx[i] < static_cast<int>(choices[i].size())) break;
      idx[i] = 0;
      if (i == 0) return out;
    }
    if (idx.empty()) return out;
  }
}

Value FixedPointModel::random_element(const GSet& x, std::mt19937& rng) const {
  auto orbits = orbit_decompose(x);
  std::vector<int> vals;
  for (const auto& o : orbits) {
    auto fixed = ring_.fixed(o.stabilizer);
    vals.push_back(fixed[std::uniform_int_distribution<std::size_t>(0, fixed.size() - 1)(rng)]);
  }
  return from_representatives(x, vals);
}

std::string FixedPointModel::format(const GSet&, const Value& v) const { return plain_format(v); }

// ------------------------------------------------------------------ burnside

BurnsideModel::BurnsideModel(GroupPtr g, ExponentPredicate d, long long modulus)
    : TambaraModel(modulus != 0), g_(std::move(g)), d_(std::move(d)), modulus_(modulus) {
  if (!same_group(g_, d_.group())) throw ShapeError("burnside model: exponents over a different group");
  if (modulus < 0 || modulus == 1) throw ValidationError("burnside model: modulus must be 0 or at least 2");
  if (modulus > 0 && std::gcd(modulus, static_cast<long long>(g_->order())) != 1)
    throw ValidationError("burnside model: modulus " + std::to_string(modulus) +
                          " shares a factor with the group order, so norms do not descend");
}

std::string BurnsideModel::name() const {
  return modulus_ ? "burnside mod " + std::to_string(modulus_) : std::string("burnside");
}

long long BurnsideModel::reduce(long long a) const { return modulus_ ? ((a % modulus_) + modulus_) % modulus_ : a; }

std::vector<std::pair<int, int>> BurnsideModel::basis(const GSet& x) const {
  const auto& lat = g_->lattice();
  std::vector<std::pair<int, int>> out;
  for (const auto& cls : lat.classes) {
    const int li = cls.front();
    const Subgroup l = lat.subgroups[li];
    const Subgroup n = g_->normalizer(l);
    for (int xv : x.fixed_points(l)) {
      bool least = true;
      for (int a : n.elements()) least = least && x.act(a, xv) >= xv;
      if (least) out.emplace_back(li, xv);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int BurnsideModel::code_index(const GSet& x, std::pair<int, int> code) const {
  const auto& lat = g_->lattice();
  const Subgroup l = lat.subgroups[code.first];
  std::pair<int, int> best{lat.size(), 0};
  for (int a = 0; a < g_->order(); ++a) best = std::min(best, {lat.index_of(g_->conjugate(a, l)), x.act(a, code.second)});
  auto b = basis(x);
  auto it = std::lower_bound(b.begin(), b.end(), best);
  return static_cast<int>(it - b.begin());
}

GMap BurnsideModel::basis_gset(const GSet& x, std::pair<int, int> code) const {
  const Subgroup l = g_->lattice().subgroups[code.first];
  std::vector<int> fn;
  for (int r : g_->left_coset_reps(l)) fn.push_back(x.act(r, code.second));
  return GMap(orbit(g_, l), x, std::move(fn));
}

Value BurnsideModel::from_gset(const GMap& u) const {
  const GSet& x = u.target;
  auto b = basis(x);
  Value out{std::vector<long long>(b.size(), 0)};
  const auto& lat = g_->lattice();
  for (const auto& o : orbit_decompose(u.source)) {
    const int li = lat.index_of(o.stabilizer);
    out.c[code_index(x, {li, u(o.representative)})] += 1;
  }
  for (auto& c : out.c) c = reduce(c);
  return out;
}

std::vector<std::pair<int, int>> BurnsideModel::mark_index(const GSet& x) const {
  const auto& lat = g_->lattice();
  std::vector<std::pair<int, int>> out;
  for (int hi = 0; hi < lat.size(); ++hi)
    for (int xv : x.fixed_points(lat.subgroups[hi])) out.emplace_back(hi, xv);
  return out;
}

std::vector<long long> BurnsideModel::marks(const GSet& x, const Value& v) const {
  const auto& lat = g_->lattice();
  auto idx = mark_index(x);
  auto b = basis(x);
  std::vector<long long> m(idx.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (v.c[i] == 0) continue;
    const Subgroup l = lat.subgroups[b[i].first];
    for (int r : g_->left_coset_reps(l)) {
      const Subgroup stab = g_->conjugate(r, l);
      const int xv = x.act(r, b[i].second);
      for (int hi = 0; hi < lat.size(); ++hi)
        if (lat.subgroups[hi].is_subset_of(stab)) {
          auto it = std::lower_bound(idx.begin(), idx.end(), std::pair{hi, xv});
          m[it - idx.begin()] += v.c[i];
        }
    }
  }
  for (auto& e : m) e = reduce(e);
  return m;
}

Value BurnsideModel::from_marks(const GSet& x, const std::vector<long long>& m) const {
  const auto& lat = g_->lattice();
  auto idx = mark_index(x);
  auto b = basis(x);
  std::vector<int> order(b.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int p, int q) {
    return lat.subgroups[b[p].first].order() > lat.subgroups[b[q].first].order();
  });
  std::vector<long long> residual = m;
  Value out{std::vector<long long>(b.size(), 0)};
  for (int i : order) {
    Value unit{std::vector<long long>(b.size(), 0)};
    unit.c[i] = 1;
    auto um = marks(x, unit);
    const auto pos = std::lower_bound(idx.begin(), idx.end(), b[i]) - idx.begin();
    const long long self = um[pos];
    long long coeff;
    if (modulus_) {
      coeff = reduce(residual[pos] * mod_inverse(self, modulus_));
    } else {
      if (residual[pos] % self != 0) throw ValidationError("burnside: mark vector is not in the image of the mark map");
      coeff = residual[pos] / self;
    }
    out.c[i] = coeff;
    for (std::size_t j = 0; j < residual.size(); ++j) residual[j] = reduce(residual[j] - coeff * um[j]);
  }
  for (long long r : residual)
    if (r != 0) throw ValidationError("burnside: mark vector is not in the image of the mark map");
  return out;
}

Value BurnsideModel::restrict(const GMap& f, const Value& v) const {
  auto b = basis(f.target);
  Value out = zero(f.source);
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (v.c[i] == 0) continue;
    auto pb = pullback(f, basis_gset(f.target, b[i]));
    auto piece = from_gset(pb.first);
    for (std::size_t j = 0; j < out.c.size(); ++j) out.c[j] = reduce(out.c[j] + v.c[i] * piece.c[j]);
  }
  return out;
}

Value BurnsideModel::transfer(const GMap& f, const Value& v) const {
  auto b = basis(f.source);
  Value out = zero(f.target);
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (v.c[i] == 0) continue;
    auto& slot = out.c[code_index(f.target, {b[i].first, f(b[i].second)})];
    slot = reduce(slot + v.c[i]);
  }
  return out;
}

Value BurnsideModel::norm_unchecked(const GMap& f, const Value& v) const {
  const auto& lat = g_->lattice();
  auto src_idx = mark_index(f.source);
  auto src_marks = marks(f.source, v);
  auto tgt_idx = mark_index(f.target);
  std::vector<long long> out(tgt_idx.size(), 1);
  for (std::size_t i = 0; i < tgt_idx.size(); ++i) {
    auto [hi, bv] = tgt_idx[i];
    const Subgroup h = lat.subgroups[hi];
    auto hel = h.elements();
    std::vector<char> seen(f.source.size(), 0);
    for (int a : f.fiber(bv)) {
      if (seen[a]) continue;
      for (int k : hel) seen[f.source.act(k, a)] = 1;
      const int ki = lat.index_of(h.meet(f.source.stabilizer(a)));
      auto it = std::lower_bound(src_idx.begin(), src_idx.end(), std::pair{ki, a});
      out[i] = reduce(out[i] * src_marks[it - src_idx.begin()]);
    }
  }
  return from_marks(f.target, out);
}

Value BurnsideModel::norm_effective(const GMap& f, const Value& v) const {
  auto b = basis(f.source);
  std::vector<GSet> parts;
  std::vector<int> fn;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (v.c[i] < 0) throw ValidationError("burnside: norm_effective needs nonnegative coefficients");
    auto u = basis_gset(f.source, b[i]);
    for (long long k = 0; k < v.c[i]; ++k) {
      parts.push_back(u.source);
      fn.insert(fn.end(), u.fn.begin(), u.fn.end());
    }
  }
  GSet total = parts.empty() ? GSet::empty(g_) : coproduct(parts).set;
  auto ed = dependent_product(GMap(total, f.source, std::move(fn)), f);
  return from_gset(ed.h_prime);
}

Value BurnsideModel::zero(const GSet& x) const { return {std::vector<long long>(basis(x).size(), 0)}; }

Value BurnsideModel::one(const GSet& x) const { return from_gset(GMap::identity(x)); }

Value BurnsideModel::add(const GSet&, const Value& a, const Value& b) const {
  Value out = a;
  for (std::size_t i = 0; i < out.c.size(); ++i) out.c[i] = reduce(out.c[i] + b.c[i]);
  return out;
}

Value BurnsideModel::neg(const GSet&, const Value& a) const {
  Value out = a;
  for (auto& c : out.c) c = reduce(-c);
  return out;
}

Value BurnsideModel::mul(const GSet& x, const Value& a, const Value& b) const {
  auto bs = basis(x);
  Value out = zero(x);
  for (std::size_t i = 0; i < bs.size(); ++i) {
    if (a.c[i] == 0) continue;
    auto ui = basis_gset(x, bs[i]);
    for (std::size_t j = 0; j < bs.size(); ++j) {
      if (b.c[j] == 0) continue;
      auto pb = pullback(ui, basis_gset(x, bs[j]));
      auto piece = from_gset(compose(ui, pb.first));
      for (std::size_t k = 0; k < out.c.size(); ++k) out.c[k] = reduce(out.c[k] + a.c[i] * b.c[j] * piece.c[k]);
    }
  }
  return out;
}

std::optional<std::vector<Value>> BurnsideModel::elements(const GSet& x) const {
  if (!modulus_) return std::nullopt;
  const std::size_t dim = basis(x).size();
  long long total = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    total *= modulus_;
    if (total > kMaxElements) throw ResourceError("burnside model: value set too large to enumerate");
  }
  std::vector<Value> out;
  for (long long k = 0; k < total; ++k) {
    Value v{std::vector<long long>(dim)};
    long long r = k;
    for (std::size_t i = dim; i-- > 0;) {
      v.c[i] = r % modulus_;
      r /= modulus_;
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Value> BurnsideModel::test_elements(const GSet& x) const {
  if (modulus_) return *elements(x);
  const std::size_t dim = basis(x).size();
  if (dim > 20) throw ResourceError("burnside model: too many basis elements for the 0/1 test family");
  std::vector<Value> out;
  for (unsigned long mask = 0; mask < (1UL << dim); ++mask) {
    Value v{std::vector<long long>(dim)};
    for (std::size_t i = 0; i < dim; ++i) v.c[i] = static_cast<long long>((mask >> (dim - 1 - i)) & 1U);
    out.push_back(std::move(v));
  }
  return out;
}

Value BurnsideModel::random_element(const GSet& x, std::mt19937& rng) const {
  Value v = zero(x);
  for (auto& c : v.c)
    c = modulus_ ? std::uniform_int_distribution<long long>(0, modulus_ - 1)(rng)
                 : std::uniform_int_distribution<long long>(-2, 2)(rng);
  return v;
}

std::string BurnsideModel::format(const GSet& x, const Value& v) const {
  auto b = basis(x);
  const auto& lat = g_->lattice();
  std::vector<std::size_t> order(b.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t p, std::size_t q) {
    return lat.subgroups[b[p].first].order() > lat.subgroups[b[q].first].order();
  });
  std::ostringstream os;
  bool first = true;
  for (std::size_t i : order) {
    if (v.c[i] == 0) continue;
    long long c = v.c[i];
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    if (std::llabs(c) != 1) os << std::llabs(c) << "*";
    os << "[G/" << subgroup_label(*g_, lat.subgroups[b[i].first]);
    if (x.size() != 1) os << " @" << b[i].second;
    os << "]";
  }
  if (first) os << "0";
  if (modulus_) os << " (mod " << modulus_ << ")";
  return os.str();
}

// --------------------------------------------------------------- restricted

RestrictedModel::RestrictedModel(ModelPtr base, Subgroup h)
    : TambaraModel(base->finite()), base_(std::move(base)), h_(h), parent_(base_->group()),
      sub_(parent_->embed(h).group),
      d_(ExponentPredicate::derived(
          sub_,
          [b = base_, p = parent_, h](const GMap& f) { return b->exponents().contains(induce_map(p, h, f)); },
          "restricted " + base_->exponents().name())) {}

GSet RestrictedModel::up(const GSet& x) const { return induce(parent_, h_, x).set; }
GMap RestrictedModel::up(const GMap& f) const { return induce_map(parent_, h_, f); }

Value RestrictedModel::restrict(const GMap& f, const Value& v) const { return base_->restrict(up(f), v); }
Value RestrictedModel::transfer(const GMap& f, const Value& v) const { return base_->transfer(up(f), v); }
Value RestrictedModel::norm_unchecked(const GMap& f, const Value& v) const { return base_->norm(up(f), v); }
Value RestrictedModel::zero(const GSet& x) const { return base_->zero(up(x)); }
Value RestrictedModel::one(const GSet& x) const { return base_->one(up(x)); }
Value RestrictedModel::add(const GSet& x, const Value& a, const Value& b) const { return base_->add(up(x), a, b); }
Value RestrictedModel::mul(const GSet& x, const Value& a, const Value& b) const { return base_->mul(up(x), a, b); }
Value RestrictedModel::neg(const GSet& x, const Value& a) const { return base_->neg(up(x), a); }
std::optional<std::vector<Value>> RestrictedModel::elements(const GSet& x) const { return base_->elements(up(x)); }
std::vector<Value> RestrictedModel::test_elements(const GSet& x) const { return base_->test_elements(up(x)); }
Value RestrictedModel::random_element(const GSet& x, std::mt19937& rng) const { return base_->random_element(up(x), rng); }
std::string RestrictedModel::format(const GSet& x, const Value& v) const { return base_->format(up(x), v); }

// --------------------------------------------------------------- coinduced

CoInducedModel::CoInducedModel(ModelPtr base, GroupPtr g, Subgroup h)
    : TambaraModel(base->finite()), base_(std::move(base)), g_(std::move(g)), h_(h),
      d_(ExponentPredicate::derived(
          g_, [b = base_, h](const GMap& f) { return b->exponents().contains(restrict_map(f, h)); },
          "coinduced " + base_->exponents().name())) {
  if (!same_group(g_->embed(h).group, base_->group())) throw ShapeError("coinduced model: base model is not over H");
}

Value CoInducedModel::restrict(const GMap& f, const Value& v) const { return base_->restrict(restrict_map(f, h_), v); }
Value CoInducedModel::transfer(const GMap& f, const Value& v) const { return base_->transfer(restrict_map(f, h_), v); }
Value CoInducedModel::norm_unchecked(const GMap& f, const Value& v) const { return base_->norm(restrict_map(f, h_), v); }
Value CoInducedModel::zero(const GSet& x) const { return base_->zero(tambara::restrict(x, h_)); }
Value CoInducedModel::one(const GSet& x) const { return base_->one(tambara::restrict(x, h_)); }
Value CoInducedModel::add(const GSet& x, const Value& a, const Value& b) const {
  return base_->add(tambara::restrict(x, h_), a, b);
}
Value CoInducedModel::mul(const GSet& x, const Value& a, const Value& b) const {
  return base_->mul(tambara::restrict(x, h_), a, b);
}
Value CoInducedModel::neg(const GSet& x, const Value& a) const { return base_->neg(tambara::restrict(x, h_), a); }
std::optional<std::vector<Value>> CoInducedModel::elements(const GSet& x) const {
  return base_->elements(tambara::restrict(x, h_));
}
std::vector<Value> CoInducedModel::test_elements(const GSet& x) const {
  return base_->test_elements(tambara::restrict(x, h_));
}
Value CoInducedModel::random_element(const GSet& x, std::mt19937& rng) const {
  return base_->random_element(tambara::restrict(x, h_), rng);
}
std::string CoInducedModel::format(const GSet& x, const Value& v) const {
  return base_->format(tambara::restrict(x, h_), v);
}

// ------------------------------------------------------------ product shift

ProductShiftModel::ProductShiftModel(ModelPtr base, GSet t)
    : TambaraModel(base->finite()), base_(std::move(base)), t_(std::move(t)),
      d_(ExponentPredicate::derived(
          t_.group(),
          [b = base_, t = t_](const GMap& f) { return b->exponents().contains(product_map(GMap::identity(t), f)); },
          "shifted " + base_->exponents().name())) {
  if (!same_group(t_.group(), base_->group())) throw ShapeError("shift model: T over a different group");
}

Value ProductShiftModel::restrict(const GMap& f, const Value& v) const { return base_->restrict(shift(f), v); }
Value ProductShiftModel::transfer(const GMap& f, const Value& v) const { return base_->transfer(shift(f), v); }
Value ProductShiftModel::norm_unchecked(const GMap& f, const Value& v) const { return base_->norm(shift(f), v); }
Value ProductShiftModel::zero(const GSet& x) const { return base_->zero(shift(x)); }
Value ProductShiftModel::one(const GSet& x) const { return base_->one(shift(x)); }
Value ProductShiftModel::add(const GSet& x, const Value& a, const Value& b) const { return base_->add(shift(x), a, b); }
Value ProductShiftModel::mul(const GSet& x, const Value& a, const Value& b) const { return base_->mul(shift(x), a, b); }
Value ProductShiftModel::neg(const GSet& x, const Value& a) const { return base_->neg(shift(x), a); }
std::optional<std::vector<Value>> ProductShiftModel::elements(const GSet& x) const { return base_->elements(shift(x)); }
std::vector<Value> ProductShiftModel::test_elements(const GSet& x) const { return base_->test_elements(shift(x)); }
Value ProductShiftModel::random_element(const GSet& x, std::mt19937& rng) const {
  return base_->random_element(shift(x), rng);
}
std::string ProductShiftModel::format(const GSet& x, const Value& v) const { return base_->format(shift(x), v); }

}  // namespace tambara
