#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tambara/group.hpp"
#include "tambara/gset.hpp"

namespace tambara {

/// An indexing system, stored as its admissible orbit pairs: (H, K) with
/// K <= H means the H-set H/K is admissible. Pairs are lattice indices.
class IndexingSystem {
 public:
  /// Stores exactly the given pairs; use `validate` to check the axioms
  /// or `closure` to generate a valid system.
  IndexingSystem(GroupPtr group, const std::vector<std::pair<int, int>>& pairs);

  static IndexingSystem trivial(GroupPtr group);
  static IndexingSystem complete(GroupPtr group);
  /// Smallest valid system containing the seed pairs.
  static IndexingSystem closure(GroupPtr group, const std::vector<std::pair<int, int>>& seeds);

  const GroupPtr& group() const { return group_; }
  bool admissible(int h, int k) const { return adm_[h * n_ + k] != 0; }
  bool admissible(Subgroup h, Subgroup k) const;
  /// Admissible pairs in (H, K) index order.
  std::vector<std::pair<int, int>> pairs() const;
  /// Pairs with K strictly smaller than H.
  std::vector<std::pair<int, int>> nontrivial_pairs() const;
  bool is_subsystem_of(const IndexingSystem& other) const;
  std::string describe() const;

  friend bool operator==(const IndexingSystem& a, const IndexingSystem& b) {
    return a.adm_ == b.adm_ && same_group(a.group_, b.group_);
  }
  friend bool operator<(const IndexingSystem& a, const IndexingSystem& b) { return a.adm_ < b.adm_; }

 private:
  GroupPtr group_;
  int n_;
  std::vector<char> adm_;
};

struct ValidationReport {
  bool ok = true;
  std::string axiom;    // trivial | conjugation | restriction | transitivity
  std::string witness;  // the offending subgroups
};

ValidationReport validate(const IndexingSystem& sys);

struct IndexingPoset {
  std::vector<IndexingSystem> systems;  // ordered by size, then pair list
  std::vector<std::pair<int, int>> hasse;  // (smaller, larger) covering relations
};

/// All indexing systems by closure generation from the trivial one.
IndexingPoset enumerate_indexing_systems(const GroupPtr& g, int threads = 1);
/// Independent oracle: every subset of conjugacy classes of nontrivial
/// pairs, filtered by `validate`. ResourceError past 2^max_classes subsets.
std::vector<IndexingSystem> brute_force_indexing_systems(const GroupPtr& g, int max_classes = 22);

/// Whether f lies in Set^G_I: every orbit G_{f(s)} s is admissible.
bool map_in_category(const IndexingSystem& sys, const GMap& f);
/// First source point whose orbit is not admissible, if any.
std::optional<int> first_inadmissible_point(const IndexingSystem& sys, const GMap& f);

/// i*_H I as a system over the embedded group of H.
IndexingSystem restrict_system(const IndexingSystem& sys, Subgroup h);

/// Hasse diagram as DOT.
std::string poset_dot(const IndexingPoset& poset);

}  // namespace tambara
