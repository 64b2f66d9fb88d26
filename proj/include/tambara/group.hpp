#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace tambara {

/// Largest group order accepted anywhere in the library. Subgroups are
/// stored as 64-bit element masks, so this is also a representation limit.
inline constexpr int kMaxGroupOrder = 64;

/// A subgroup of a FiniteGroup, stored as the bitmask of its elements.
/// The owning group is implicit: a Subgroup is only meaningful together
/// with the group it was computed in.
struct Subgroup {
  std::uint64_t mask = 0;

  int order() const { return std::popcount(mask); }
  bool contains(int g) const { return (mask >> g) & 1U; }
  bool is_subset_of(Subgroup other) const { return (mask & ~other.mask) == 0; }
  Subgroup meet(Subgroup other) const { return {mask & other.mask}; }
  std::vector<int> elements() const;

  friend bool operator==(Subgroup, Subgroup) = default;
};

/// Total order on subgroups: by order, then lexicographically by sorted
/// element list. Every canonical choice in the library uses this order.
bool subgroup_less(Subgroup a, Subgroup b);

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// All subgroups of a group with conjugacy data.
struct SubgroupLattice {
  /// Sorted by `subgroup_less`; index 0 is the trivial subgroup and the
  /// last entry is the whole group.
  std::vector<Subgroup> subgroups;
  /// Subgroup index -> conjugacy class label. Labels are assigned in
  /// subgroup order, so the representative of each class (its first
  /// member) is the lexicographically least conjugate.
  std::vector<int> conj_class;
  std::vector<std::vector<int>> classes;
  std::unordered_map<std::uint64_t, int> index;

  int size() const { return static_cast<int>(subgroups.size()); }
  int index_of(Subgroup h) const;
  /// Index of the canonical conjugate of subgroup `i`.
  int representative(int i) const { return classes[conj_class[i]].front(); }
  bool contains(int i, int j) const { return subgroups[i].is_subset_of(subgroups[j]); }
  /// All pairs (i, j) with subgroup i contained in subgroup j.
  std::vector<std::pair<int, int>> containment_pairs() const;
};

/// Realizes a subgroup H <= G as a group in its own right. Elements of
/// `group` are the sorted elements of H, so element 0 is again the
/// identity.
struct SubgroupEmbedding {
  GroupPtr group;
  Subgroup image;
  std::vector<int> to_parent;
  std::vector<int> from_parent;  // -1 outside H

  /// Image in the parent of a subgroup of `group`.
  Subgroup push(Subgroup h) const;
  /// A subgroup of the parent contained in H, as a subgroup of `group`.
  Subgroup pull(Subgroup g) const;
};

/// A finite group given by its multiplication table. Element 0 is
/// always the identity. Immutable; lattice data is computed lazily and
/// cached behind a mutex.
class FiniteGroup : public std::enable_shared_from_this<FiniteGroup> {
 public:
  /// Validates and wraps a multiplication table. Throws ValidationError
  /// naming the first failing element or triple.
  static GroupPtr from_table(const std::vector<std::vector<int>>& rows, std::string name = {});

  int order() const { return order_; }
  int mul(int a, int b) const { return table_[a * order_ + b]; }
  int inv(int a) const { return inv_[a]; }
  static constexpr int identity() { return 0; }
  int conjugate(int g, int x) const { return mul(mul(g, x), inv(g)); }
  Subgroup conjugate(int g, Subgroup h) const;
  int element_order(int g) const;

  /// Reference string understood by the group parser (`cyclic:4`, ...).
  const std::string& name() const { return name_; }
  const std::vector<int>& table() const { return table_; }
  bool same_as(const FiniteGroup& other) const;

  Subgroup whole() const;
  Subgroup trivial() const { return {1}; }
  Subgroup generated_by(std::span<const int> gens) const;
  bool is_subgroup(std::uint64_t mask) const;

  const SubgroupLattice& lattice() const;
  Subgroup normalizer(Subgroup h) const;
  bool is_subconjugate(Subgroup k, Subgroup h) const;
  /// Least element of each H\G/K double coset, ascending.
  std::vector<int> double_cosets(Subgroup h, Subgroup k) const;
  /// Least element of each left coset gH, ascending.
  std::vector<int> left_coset_reps(Subgroup h) const;
  /// Least element of each right coset Hg, ascending.
  std::vector<int> right_coset_reps(Subgroup h) const;

  /// Cached group structure on a subgroup. The whole group embeds as
  /// itself (same pointer).
  const SubgroupEmbedding& embed(Subgroup h) const;

 private:
  struct Key {};

 public:
  FiniteGroup(Key, int order, std::vector<int> table, std::string name);

 private:
  int order_;
  std::vector<int> table_;
  std::vector<int> inv_;
  std::string name_;

  mutable std::once_flag lattice_once_;
  mutable std::unique_ptr<SubgroupLattice> lattice_;
  mutable std::mutex embed_mutex_;
  mutable std::map<std::uint64_t, SubgroupEmbedding> embeddings_;
};

bool same_group(const GroupPtr& a, const GroupPtr& b);

GroupPtr cyclic(int n);
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);
/// Symmetric group on n <= 4 letters; elements are the permutations in
/// lexicographic order, composed right-to-left.
GroupPtr symmetric(int n);
GroupPtr klein4();

/// Subgroup lattice with an explicit order bound (ResourceError past it).
const SubgroupLattice& subgroup_lattice(const FiniteGroup& g, int bound = kMaxGroupOrder);

/// Elements of `g` of order exactly k.
std::vector<int> elements_of_order(const FiniteGroup& g, int k);

}  // namespace tambara
