#pragma once

#include <string>
#include <vector>

#include "tambara/group.hpp"

namespace tambara {

inline constexpr int kMaxRingOrder = 256;

/// A finite commutative ring with G acting by ring automorphisms, given
/// by explicit tables. Elements are 0..size-1.
class GRing {
 public:
  /// Validates the ring axioms and that `action[g]` is an automorphism
  /// for every g with action[gh] = action[g] o action[h]. The zero and
  /// unit are located from the tables.
  GRing(GroupPtr group, int size, std::vector<int> add, std::vector<int> mul, std::vector<std::vector<int>> action,
        std::string name = {});

  /// Z/n with the trivial action.
  static GRing zmod(GroupPtr group, int n);
  /// Map(G, Z/n) with (g.r)(a) = r(ag); for C2 this is Z/n x Z/n with the swap.
  static GRing regular(GroupPtr group, int n);

  const GroupPtr& group() const { return group_; }
  int size() const { return n_; }
  int add(int a, int b) const { return add_[a * n_ + b]; }
  int mul(int a, int b) const { return mul_[a * n_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int zero() const { return zero_; }
  int one() const { return one_; }
  int act(int g, int r) const { return action_[g][r]; }
  const std::string& name() const { return name_; }
  const std::vector<int>& add_table() const { return add_; }
  const std::vector<int>& mul_table() const { return mul_; }
  const std::vector<std::vector<int>>& action() const { return action_; }

  /// Elements fixed by every element of h.
  std::vector<int> fixed(Subgroup h) const;

 private:
  GroupPtr group_;
  int n_;
  std::vector<int> add_, mul_, neg_;
  std::vector<std::vector<int>> action_;
  int zero_ = 0, one_ = 0;
  std::string name_;
};

}  // namespace tambara
