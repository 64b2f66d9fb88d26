#include "tambara/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "tambara/error.hpp"

namespace tambara {

std::vector<int> Subgroup::elements() const {
  std::vector<int> out;
  for (std::uint64_t m = mask; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

bool subgroup_less(Subgroup a, Subgroup b) {
  if (a.order() != b.order()) return a.order() < b.order();
  if (a.mask == b.mask) return false;
  // Equal sizes: the first differing element decides.
  std::uint64_t diff = a.mask ^ b.mask;
  int d = std::countr_zero(diff);
  return a.contains(d);
}

int SubgroupLattice::index_of(Subgroup h) const {
  auto it = index.find(h.mask);
  if (it == index.end()) throw ValidationError("not a subgroup of this group");
  return it->second;
}

std::vector<std::pair<int, int>> SubgroupLattice::containment_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j)
      if (contains(i, j)) out.emplace_back(i, j);
  return out;
}

Subgroup SubgroupEmbedding::push(Subgroup h) const {
  Subgroup out;
  for (int e : h.elements()) out.mask |= std::uint64_t{1} << to_parent[e];
  return out;
}

Subgroup SubgroupEmbedding::pull(Subgroup g) const {
  Subgroup out;
  for (int e : g.elements()) {
    if (from_parent[e] < 0) throw ShapeError("subgroup is not contained in the embedded subgroup");
    out.mask |= std::uint64_t{1} << from_parent[e];
  }
  return out;
}

FiniteGroup::FiniteGroup(Key, int order, std::vector<int> table, std::string name)
    : order_(order), table_(std::move(table)), inv_(order, -1), name_(std::move(name)) {
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b)
      if (mul(a, b) == 0) inv_[a] = b;
}

GroupPtr FiniteGroup::from_table(const std::vector<std::vector<int>>& rows, std::string name) {
  const int n = static_cast<int>(rows.size());
  if (n == 0) throw ValidationError("empty multiplication table");
  if (n > kMaxGroupOrder)
    throw ResourceError("group order " + std::to_string(n) + " exceeds bound " +
                        std::to_string(kMaxGroupOrder));
  std::vector<int> table;
  table.reserve(n * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw ValidationError("row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                            " entries, expected " + std::to_string(n));
    for (int v : rows[i]) {
      if (v < 0 || v >= n)
        throw ValidationError("entry " + std::to_string(v) + " in row " + std::to_string(i) +
                              " out of range");
      table.push_back(v);
    }
  }
  auto at = [&](int a, int b) { return table[a * n + b]; };
  for (int x = 0; x < n; ++x)
    if (at(0, x) != x || at(x, 0) != x)
      throw ValidationError("element 0 is not a two-sided identity: fails at (0, " +
                            std::to_string(x) + ")");
  for (int x = 0; x < n; ++x) {
    bool found = false;
    for (int y = 0; y < n && !found; ++y) found = at(x, y) == 0 && at(y, x) == 0;
    if (!found) throw ValidationError("element " + std::to_string(x) + " has no two-sided inverse");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (at(at(a, b), c) != at(a, at(b, c))) {
          std::ostringstream os;
          os << "multiplication is not associative at (" << a << ", " << b << ", " << c << ")";
          throw ValidationError(os.str());
        }
  if (name.empty()) name = "table:" + std::to_string(n);
  return std::make_shared<const FiniteGroup>(Key{}, n, std::move(table), std::move(name));
}

Subgroup FiniteGroup::conjugate(int g, Subgroup h) const {
  Subgroup out;
  for (int x : h.elements()) out.mask |= std::uint64_t{1} << conjugate(g, x);
  return out;
}

int FiniteGroup::element_order(int g) const {
  int k = 1;
  for (int x = g; x != 0; x = mul(x, g)) ++k;
  return k;
}

bool FiniteGroup::same_as(const FiniteGroup& other) const {
  return this == &other || (order_ == other.order_ && table_ == other.table_);
}

bool same_group(const GroupPtr& a, const GroupPtr& b) {
  return a == b || (a && b && a->same_as(*b));
}

Subgroup FiniteGroup::whole() const {
  return {order_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << order_) - 1};
}

Subgroup FiniteGroup::generated_by(std::span<const int> gens) const {
  std::uint64_t mask = 1;
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int a : frontier)
      for (int g : gens) {
        int p = mul(a, g);
        if (!((mask >> p) & 1U)) {
          mask |= std::uint64_t{1} << p;
          next.push_back(p);
        }
      }
    frontier = std::move(next);
  }
  return {mask};
}

bool FiniteGroup::is_subgroup(std::uint64_t mask) const {
  Subgroup h{mask};
  if (!h.contains(0)) return false;
  for (int a : h.elements()) {
    if (!h.contains(inv(a))) return false;
    for (int b : h.elements())
      if (!h.contains(mul(a, b))) return false;
  }
  return true;
}

const SubgroupLattice& FiniteGroup::lattice() const {
  std::call_once(lattice_once_, [this] {
    auto lat = std::make_unique<SubgroupLattice>();
    // Grow subgroups one generator at a time; every subgroup is reached
    // because each is generated by finitely many elements.
    std::unordered_map<std::uint64_t, std::vector<int>> gens;
    gens[1] = {};
    std::vector<std::uint64_t> queue{1};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      std::uint64_t s = queue[qi];
      std::vector<int> base = gens[s];
      for (int g = 1; g < order_; ++g) {
        if ((s >> g) & 1U) continue;
        std::vector<int> ext = base;
        ext.push_back(g);
        Subgroup t = generated_by(ext);
        if (gens.emplace(t.mask, ext).second) queue.push_back(t.mask);
      }
    }
    for (std::uint64_t m : queue) lat->subgroups.push_back({m});
    std::sort(lat->subgroups.begin(), lat->subgroups.end(), subgroup_less);
    for (int i = 0; i < lat->size(); ++i) lat->index[lat->subgroups[i].mask] = i;
    lat->conj_class.assign(lat->size(), -1);
    for (int i = 0; i < lat->size(); ++i) {
      if (lat->conj_class[i] >= 0) continue;
      int label = static_cast<int>(lat->classes.size());
      std::set<int> members;
      for (int g = 0; g < order_; ++g)
        members.insert(lat->index.at(conjugate(g, lat->subgroups[i]).mask));
      lat->classes.emplace_back(members.begin(), members.end());
      for (int m : members) lat->conj_class[m] = label;
    }
    lattice_ = std::move(lat);
  });
  return *lattice_;
}

const SubgroupLattice& subgroup_lattice(const FiniteGroup& g, int bound) {
  if (g.order() > bound)
    throw ResourceError("group order " + std::to_string(g.order()) + " exceeds lattice bound " +
                        std::to_string(bound));
  return g.lattice();
}

Subgroup FiniteGroup::normalizer(Subgroup h) const {
  Subgroup out;
  for (int g = 0; g < order_; ++g)
    if (conjugate(g, h) == h) out.mask |= std::uint64_t{1} << g;
  return out;
}

bool FiniteGroup::is_subconjugate(Subgroup k, Subgroup h) const {
  for (int g = 0; g < order_; ++g)
    if (conjugate(g, k).is_subset_of(h)) return true;
  return false;
}

std::vector<int> FiniteGroup::double_cosets(Subgroup h, Subgroup k) const {
  std::vector<int> reps;
  std::uint64_t covered = 0;
  for (int g = 0; g < order_; ++g) {
    if ((covered >> g) & 1U) continue;
    reps.push_back(g);
    for (int a : h.elements())
      for (int b : k.elements()) covered |= std::uint64_t{1} << mul(mul(a, g), b);
  }
  return reps;
}

std::vector<int> FiniteGroup::left_coset_reps(Subgroup h) const {
  std::vector<int> reps;
  std::uint64_t covered = 0;
  for (int g = 0; g < order_; ++g) {
    if ((covered >> g) & 1U) continue;
    reps.push_back(g);
    for (int a : h.elements()) covered |= std::uint64_t{1} << mul(g, a);
  }
  return reps;
}

std::vector<int> FiniteGroup::right_coset_reps(Subgroup h) const {
  std::vector<int> reps;
  std::uint64_t covered = 0;
  for (int g = 0; g < order_; ++g) {
    if ((covered >> g) & 1U) continue;
    reps.push_back(g);
    for (int a : h.elements()) covered |= std::uint64_t{1} << mul(a, g);
  }
  return reps;
}

const SubgroupEmbedding& FiniteGroup::embed(Subgroup h) const {
  std::lock_guard lock(embed_mutex_);
  auto it = embeddings_.find(h.mask);
  if (it != embeddings_.end()) return it->second;
  if (!is_subgroup(h.mask)) throw ValidationError("embed: not a subgroup");
  SubgroupEmbedding emb;
  emb.image = h;
  emb.to_parent = h.elements();
  emb.from_parent.assign(order_, -1);
  for (int i = 0; i < static_cast<int>(emb.to_parent.size()); ++i) emb.from_parent[emb.to_parent[i]] = i;
  if (h == whole()) {
    emb.group = shared_from_this();
  } else {
    const int m = h.order();
    std::vector<std::vector<int>> rows(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) rows[i][j] = emb.from_parent[mul(emb.to_parent[i], emb.to_parent[j])];
    std::ostringstream nm;
    nm << "sub:";
    for (int i = 0; i < m; ++i) nm << (i ? "," : "") << emb.to_parent[i];
    nm << "@" << name_;
    emb.group = from_table(rows, nm.str());
  }
  return embeddings_.emplace(h.mask, std::move(emb)).first->second;
}

GroupPtr cyclic(int n) {
  if (n < 1) throw ValidationError("cyclic group order must be positive");
  if (n > kMaxGroupOrder) throw ResourceError("cyclic group order exceeds bound");
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) rows[a][b] = (a + b) % n;
  return FiniteGroup::from_table(rows, "cyclic:" + std::to_string(n));
}

namespace {
std::string wrap_product_operand(const std::string& name) {
  return name.find('x') == std::string::npos ? name : "(" + name + ")";
}
}  // namespace

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b) {
  const int na = a->order();
  const int nb = b->order();
  if (na * nb > kMaxGroupOrder) throw ResourceError("direct product order exceeds bound");
  const int n = na * nb;
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      rows[x][y] = a->mul(x / nb, y / nb) * nb + b->mul(x % nb, y % nb);
  return FiniteGroup::from_table(
      rows, "product:" + wrap_product_operand(a->name()) + "x" + wrap_product_operand(b->name()));
}

GroupPtr symmetric(int n) {
  if (n < 1 || n > 4) throw ValidationError("symmetric(n) is supported for 1 <= n <= 4");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < static_cast<int>(perms.size()); ++i) index[perms[i]] = i;
  const int m = static_cast<int>(perms.size());
  std::vector<std::vector<int>> rows(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      std::vector<int> c(n);
      for (int i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
      rows[a][b] = index.at(c);
    }
  return FiniteGroup::from_table(rows, "sym:" + std::to_string(n));
}

GroupPtr klein4() {
  auto g = direct_product(cyclic(2), cyclic(2));
  return FiniteGroup::from_table(
      [&] {
        std::vector<std::vector<int>> rows(4, std::vector<int>(4));
        for (int a = 0; a < 4; ++a)
          for (int b = 0; b < 4; ++b) rows[a][b] = g->mul(a, b);
        return rows;
      }(),
      "klein4");
}

std::vector<int> elements_of_order(const FiniteGroup& g, int k) {
  std::vector<int> out;
  for (int x = 0; x < g.order(); ++x)
    if (g.element_order(x) == k) out.push_back(x);
  return out;
}

}  // namespace tambara
