#include "tambara/ring.hpp"

#include <sstream>

#include "tambara/error.hpp"

namespace tambara {

GRing::GRing(GroupPtr group, int size, std::vector<int> add_table, std::vector<int> mul_table,
             std::vector<std::vector<int>> action, std::string name)
    : group_(std::move(group)), n_(size), add_(std::move(add_table)), mul_(std::move(mul_table)),
      action_(std::move(action)), name_(std::move(name)) {
  const int n = n_;
  if (n < 1) throw ValidationError("ring: empty element set");
  if (n > kMaxRingOrder) throw ResourceError("ring: order " + std::to_string(n) + " exceeds " + std::to_string(kMaxRingOrder));
  if (static_cast<int>(add_.size()) != n * n || static_cast<int>(mul_.size()) != n * n)
    throw ValidationError("ring: tables have the wrong size");
  for (int v : add_)
    if (v < 0 || v >= n) throw ValidationError("ring: addition value out of range");
  for (int v : mul_)
    if (v < 0 || v >= n) throw ValidationError("ring: multiplication value out of range");
  auto find_identity = [&](const std::vector<int>& t, const char* what) {
    for (int e = 0; e < n; ++e) {
      bool ok = true;
      for (int a = 0; a < n && ok; ++a) ok = t[e * n + a] == a && t[a * n + e] == a;
      if (ok) return e;
    }
    throw ValidationError(std::string("ring: no ") + what + " identity");
  };
  zero_ = find_identity(add_, "additive");
  one_ = find_identity(mul_, "multiplicative");
  neg_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (add(a, b) == zero_) neg_[a] = b;
  for (int a = 0; a < n; ++a)
    if (neg_[a] < 0) throw ValidationError("ring: element " + std::to_string(a) + " has no additive inverse");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (add(a, b) != add(b, a)) throw ValidationError("ring: addition is not commutative");
      if (mul(a, b) != mul(b, a)) throw ValidationError("ring: multiplication is not commutative");
      for (int c = 0; c < n; ++c) {
        std::ostringstream at;
        if (add(add(a, b), c) != add(a, add(b, c))) {
          at << "ring: addition is not associative at (" << a << ", " << b << ", " << c << ")";
          throw ValidationError(at.str());
        }
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
          at << "ring: multiplication is not associative at (" << a << ", " << b << ", " << c << ")";
          throw ValidationError(at.str());
        }
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) {
          at << "ring: distributivity fails at (" << a << ", " << b << ", " << c << ")";
          throw ValidationError(at.str());
        }
      }
    }
  const int order = group_->order();
  if (static_cast<int>(action_.size()) != order) throw ValidationError("ring: need one automorphism per group element");
  for (int g = 0; g < order; ++g) {
    const auto& s = action_[g];
    if (static_cast<int>(s.size()) != n) throw ValidationError("ring: automorphism " + std::to_string(g) + " has wrong length");
    std::vector<char> hit(n, 0);
    for (int v : s) {
      if (v < 0 || v >= n || hit[v]) throw ValidationError("ring: action of " + std::to_string(g) + " is not a bijection");
      hit[v] = 1;
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (s[add(a, b)] != add(s[a], s[b]) || s[mul(a, b)] != mul(s[a], s[b]))
          throw ValidationError("ring: action of " + std::to_string(g) + " is not a ring homomorphism");
    if (s[one_] != one_) throw ValidationError("ring: action of " + std::to_string(g) + " does not fix 1");
  }
  for (int a = 0; a < n; ++a)
    if (action_[0][a] != a) throw ValidationError("ring: identity element acts nontrivially");
  for (int g = 0; g < order; ++g)
    for (int h = 0; h < order; ++h)
      for (int a = 0; a < n; ++a)
        if (action_[group_->mul(g, h)][a] != action_[g][action_[h][a]])
          throw ValidationError("ring: action is not a homomorphism at (" + std::to_string(g) + ", " + std::to_string(h) + ")");
}

GRing GRing::zmod(GroupPtr group, int n) {
  std::vector<int> add(n * n), mul(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      add[a * n + b] = (a + b) % n;
      mul[a * n + b] = (a * b) % n;
    }
  std::vector<int> id(n);
  for (int a = 0; a < n; ++a) id[a] = a;
  std::vector<std::vector<int>> action(group->order(), id);
  return GRing(std::move(group), n, std::move(add), std::move(mul), std::move(action), "Z/" + std::to_string(n));
}

GRing GRing::regular(GroupPtr group, int n) {
  const int order = group->order();
  long long size = 1;
  for (int i = 0; i < order; ++i) {
    size *= n;
    if (size > kMaxRingOrder) throw ResourceError("ring: Map(G, Z/n) is too large");
  }
  const int m = static_cast<int>(size);
  // element index = sum_a r(a) n^(order-1-a)
  auto decode = [&](int v) {
    std::vector<int> r(order);
    for (int a = order - 1; a >= 0; --a) {
      r[a] = v % n;
      v /= n;
    }
    return r;
  };
  auto encode = [&](const std::vector<int>& r) {
    int v = 0;
    for (int a = 0; a < order; ++a) v = v * n + r[a];
    return v;
  };
  std::vector<int> add(m * m), mul(m * m);
  for (int x = 0; x < m; ++x) {
    auto rx = decode(x);
    for (int y = 0; y < m; ++y) {
      auto ry = decode(y);
      std::vector<int> s(order), p(order);
      for (int a = 0; a < order; ++a) {
        s[a] = (rx[a] + ry[a]) % n;
        p[a] = (rx[a] * ry[a]) % n;
      }
      add[x * m + y] = encode(s);
      mul[x * m + y] = encode(p);
    }
  }
  std::vector<std::vector<int>> action(order, std::vector<int>(m));
  for (int g = 0; g < order; ++g)
    for (int x = 0; x < m; ++x) {
      auto r = decode(x);
      std::vector<int> out(order);
      for (int a = 0; a < order; ++a) out[a] = r[group->mul(a, g)];
      action[g][x] = encode(out);
    }
  return GRing(group, m, std::move(add), std::move(mul), std::move(action),
               "Map(" + group->name() + ",Z/" + std::to_string(n) + ")");
}

std::vector<int> GRing::fixed(Subgroup h) const {
  std::vector<int> out;
  for (int r = 0; r < n_; ++r) {
    bool ok = true;
    for (int g : h.elements()) ok = ok && act(g, r) == r;
    if (ok) out.push_back(r);
  }
  return out;
}

}  // namespace tambara
