#include "tambara/indexing.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "tambara/error.hpp"
#include "tambara/parallel.hpp"

namespace tambara {

namespace {

std::string fmt_subgroup(Subgroup h) {
  std::ostringstream os;
  os << "{";
  auto el = h.elements();
  for (std::size_t i = 0; i < el.size(); ++i) os << (i ? "," : "") << el[i];
  os << "}";
  return os.str();
}

// Adds every pair forced by the axioms until nothing changes.
void close_pairs(const FiniteGroup& g, std::vector<char>& adm) {
  const auto& lat = g.lattice();
  const int n = lat.size();
  for (int h = 0; h < n; ++h) adm[h * n + h] = 1;
  bool changed = true;
  auto add = [&](int h, int k) {
    if (!adm[h * n + k]) {
      adm[h * n + k] = 1;
      changed = true;
    }
  };
  while (changed) {
    changed = false;
    for (int h = 0; h < n; ++h)
      for (int k = 0; k < n; ++k) {
        if (!adm[h * n + k] || h == k) continue;
        const Subgroup hs = lat.subgroups[h];
        const Subgroup ks = lat.subgroups[k];
        for (int a = 0; a < g.order(); ++a)
          add(lat.index_of(g.conjugate(a, hs)), lat.index_of(g.conjugate(a, ks)));
        for (int j = 0; j < n; ++j)
          if (lat.subgroups[j].is_subset_of(hs)) add(j, lat.index_of(lat.subgroups[j].meet(ks)));
        for (int l = 0; l < n; ++l)
          if (adm[k * n + l]) add(h, l);
      }
  }
}

}  // namespace

IndexingSystem::IndexingSystem(GroupPtr group, const std::vector<std::pair<int, int>>& pairs)
    : group_(std::move(group)), n_(group_->lattice().size()), adm_(static_cast<std::size_t>(n_) * n_, 0) {
  const auto& lat = group_->lattice();
  for (auto [h, k] : pairs) {
    if (h < 0 || h >= n_ || k < 0 || k >= n_) throw ValidationError("indexing system: subgroup index out of range");
    if (!lat.contains(k, h))
      throw ValidationError("indexing system: " + fmt_subgroup(lat.subgroups[k]) + " is not contained in " +
                            fmt_subgroup(lat.subgroups[h]));
    adm_[h * n_ + k] = 1;
  }
}

IndexingSystem IndexingSystem::trivial(GroupPtr group) {
  const int n = group->lattice().size();
  std::vector<std::pair<int, int>> pairs;
  for (int h = 0; h < n; ++h) pairs.emplace_back(h, h);
  return IndexingSystem(std::move(group), pairs);
}

IndexingSystem IndexingSystem::complete(GroupPtr group) {
  auto pairs = group->lattice().containment_pairs();
  for (auto& p : pairs) std::swap(p.first, p.second);
  return IndexingSystem(std::move(group), pairs);
}

IndexingSystem IndexingSystem::closure(GroupPtr group, const std::vector<std::pair<int, int>>& seeds) {
  IndexingSystem sys(group, seeds);
  close_pairs(*group, sys.adm_);
  return sys;
}

bool IndexingSystem::admissible(Subgroup h, Subgroup k) const {
  const auto& lat = group_->lattice();
  return admissible(lat.index_of(h), lat.index_of(k));
}

std::vector<std::pair<int, int>> IndexingSystem::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int h = 0; h < n_; ++h)
    for (int k = 0; k < n_; ++k)
      if (admissible(h, k)) out.emplace_back(h, k);
  return out;
}

std::vector<std::pair<int, int>> IndexingSystem::nontrivial_pairs() const {
  auto all = pairs();
  std::erase_if(all, [](auto p) { return p.first == p.second; });
  return all;
}

bool IndexingSystem::is_subsystem_of(const IndexingSystem& other) const {
  for (std::size_t i = 0; i < adm_.size(); ++i)
    if (adm_[i] && !other.adm_[i]) return false;
  return true;
}

std::string IndexingSystem::describe() const {
  const auto& lat = group_->lattice();
  std::ostringstream os;
  os << "indexing " << group_->name() << "\n";
  for (auto [h, k] : nontrivial_pairs()) {
    os << "adm ";
    auto he = lat.subgroups[h].elements();
    auto ke = lat.subgroups[k].elements();
    for (std::size_t i = 0; i < he.size(); ++i) os << (i ? "," : "") << he[i];
    os << " ";
    for (std::size_t i = 0; i < ke.size(); ++i) os << (i ? "," : "") << ke[i];
    os << "\n";
  }
  return os.str();
}

ValidationReport validate(const IndexingSystem& sys) {
  const FiniteGroup& g = *sys.group();
  const auto& lat = g.lattice();
  const int n = lat.size();
  auto fail = [](std::string axiom, std::string witness) { return ValidationReport{false, std::move(axiom), std::move(witness)}; };
  for (int h = 0; h < n; ++h)
    if (!sys.admissible(h, h)) return fail("trivial", "H=" + fmt_subgroup(lat.subgroups[h]));
  for (auto [h, k] : sys.pairs()) {
    const Subgroup hs = lat.subgroups[h];
    const Subgroup ks = lat.subgroups[k];
    for (int a = 0; a < g.order(); ++a) {
      const Subgroup ch = g.conjugate(a, hs);
      const Subgroup ck = g.conjugate(a, ks);
      if (!sys.admissible(ch, ck))
        return fail("conjugation", "H=" + fmt_subgroup(hs) + " K=" + fmt_subgroup(ks) + " g=" + std::to_string(a));
    }
    for (int j = 0; j < n; ++j) {
      const Subgroup js = lat.subgroups[j];
      if (!js.is_subset_of(hs)) continue;
      for (int a : hs.elements()) {
        const Subgroup meet = js.meet(g.conjugate(a, ks));
        if (!sys.admissible(js, meet))
          return fail("restriction", "H=" + fmt_subgroup(hs) + " K=" + fmt_subgroup(ks) + " J=" + fmt_subgroup(js) +
                                         " requires (J, " + fmt_subgroup(meet) + ")");
      }
    }
    for (int l = 0; l < n; ++l)
      if (sys.admissible(k, l) && !sys.admissible(h, l))
        return fail("transitivity", "H=" + fmt_subgroup(hs) + " K=" + fmt_subgroup(ks) + " L=" +
                                        fmt_subgroup(lat.subgroups[l]));
  }
  return {};
}

namespace {

bool poset_order(const IndexingSystem& a, const IndexingSystem& b) {
  auto pa = a.pairs();
  auto pb = b.pairs();
  if (pa.size() != pb.size()) return pa.size() < pb.size();
  return pa < pb;
}

}  // namespace

IndexingPoset enumerate_indexing_systems(const GroupPtr& g, int threads) {
  const auto& lat = subgroup_lattice(*g);
  // one representative per conjugacy class of nontrivial pairs
  std::vector<std::pair<int, int>> seeds;
  {
    std::set<std::pair<int, int>> seen;
    for (auto [k, h] : lat.containment_pairs()) {
      if (h == k || seen.count({h, k})) continue;
      seeds.emplace_back(h, k);
      for (int a = 0; a < g->order(); ++a)
        seen.insert({lat.index_of(g->conjugate(a, lat.subgroups[h])), lat.index_of(g->conjugate(a, lat.subgroups[k]))});
    }
  }
  std::set<IndexingSystem> found;
  std::vector<IndexingSystem> frontier{IndexingSystem::trivial(g)};
  found.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<std::vector<IndexingSystem>> produced(frontier.size());
    parallel_for(static_cast<int>(frontier.size()), threads, [&](int i) {
      const auto& sys = frontier[i];
      for (auto [h, k] : seeds) {
        if (sys.admissible(h, k)) continue;
        auto ps = sys.pairs();
        ps.emplace_back(h, k);
        produced[i].push_back(IndexingSystem::closure(g, ps));
      }
    });
    std::vector<IndexingSystem> next;
    for (auto& batch : produced)
      for (auto& sys : batch)
        if (found.insert(sys).second) next.push_back(std::move(sys));
    frontier = std::move(next);
  }
  IndexingPoset poset;
  poset.systems.assign(found.begin(), found.end());
  std::sort(poset.systems.begin(), poset.systems.end(), poset_order);
  const int m = static_cast<int>(poset.systems.size());
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (a == b || !poset.systems[a].is_subsystem_of(poset.systems[b])) continue;
      bool covered = true;
      for (int c = 0; c < m && covered; ++c)
        if (c != a && c != b && poset.systems[a].is_subsystem_of(poset.systems[c]) &&
            poset.systems[c].is_subsystem_of(poset.systems[b]))
          covered = false;
      if (covered) poset.hasse.emplace_back(a, b);
    }
  return poset;
}

std::vector<IndexingSystem> brute_force_indexing_systems(const GroupPtr& g, int max_classes) {
  const auto& lat = subgroup_lattice(*g);
  std::vector<std::vector<std::pair<int, int>>> classes;
  std::set<std::pair<int, int>> seen;
  for (auto [k, h] : lat.containment_pairs()) {
    if (h == k || seen.count({h, k})) continue;
    std::set<std::pair<int, int>> cls;
    for (int a = 0; a < g->order(); ++a)
      cls.insert({lat.index_of(g->conjugate(a, lat.subgroups[h])), lat.index_of(g->conjugate(a, lat.subgroups[k]))});
    seen.insert(cls.begin(), cls.end());
    classes.emplace_back(cls.begin(), cls.end());
  }
  if (static_cast<int>(classes.size()) > max_classes)
    throw ResourceError("brute-force oracle: " + std::to_string(classes.size()) + " pair classes exceeds bound " +
                        std::to_string(max_classes));
  std::vector<IndexingSystem> out;
  const std::uint64_t subsets = std::uint64_t{1} << classes.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    std::vector<std::pair<int, int>> pairs;
    for (int h = 0; h < lat.size(); ++h) pairs.emplace_back(h, h);
    for (std::size_t c = 0; c < classes.size(); ++c)
      if ((mask >> c) & 1U) pairs.insert(pairs.end(), classes[c].begin(), classes[c].end());
    IndexingSystem sys(g, pairs);
    if (validate(sys).ok) out.push_back(std::move(sys));
  }
  std::sort(out.begin(), out.end(), poset_order);
  return out;
}

std::optional<int> first_inadmissible_point(const IndexingSystem& sys, const GMap& f) {
  if (!same_group(sys.group(), f.source.group())) throw ShapeError("map_in_category: map over a different group");
  for (int s = 0; s < f.source.size(); ++s)
    if (!sys.admissible(f.target.stabilizer(f(s)), f.source.stabilizer(s))) return s;
  return std::nullopt;
}

bool map_in_category(const IndexingSystem& sys, const GMap& f) { return !first_inadmissible_point(sys, f); }

IndexingSystem restrict_system(const IndexingSystem& sys, Subgroup h) {
  const auto& emb = sys.group()->embed(h);
  const auto& sub = emb.group->lattice();
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < sub.size(); ++a)
    for (int b = 0; b < sub.size(); ++b)
      if (sub.contains(b, a) && sys.admissible(emb.push(sub.subgroups[a]), emb.push(sub.subgroups[b])))
        pairs.emplace_back(a, b);
  return IndexingSystem(emb.group, pairs);
}

std::string poset_dot(const IndexingPoset& poset) {
  std::ostringstream os;
  os << "digraph indexing {\n  rankdir=BT;\n  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t i = 0; i < poset.systems.size(); ++i) {
    const auto& sys = poset.systems[i];
    const auto& lat = sys.group()->lattice();
    std::ostringstream label;
    auto pairs = sys.nontrivial_pairs();
    if (pairs.empty()) label << "trivial";
    for (std::size_t j = 0; j < pairs.size(); ++j)
      label << (j ? "\\n" : "") << fmt_subgroup(lat.subgroups[pairs[j].first]) << " > "
            << fmt_subgroup(lat.subgroups[pairs[j].second]);
    os << "  n" << i << " [label=\"" << label.str() << "\"];\n";
  }
  for (auto [a, b] : poset.hasse) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace tambara
