#pragma once

#include <set>
#include <string>
#include <vector>

#include "tambara/model.hpp"

namespace tambara {

/// A subset J(G/H) of M(G/H) for one orbit per conjugacy class of
/// subgroups (in lattice class order).
struct SubMackeyData {
  GroupPtr group;
  std::vector<GSet> orbits;
  std::vector<std::set<Value>> subsets;

  /// The subset at orbit class c.
  const std::set<Value>& at(int c) const { return subsets[c]; }
};

/// One orbit G/H per conjugacy class, H the least class member.
std::vector<GSet> canonical_orbits(const GroupPtr& g);

SubMackeyData zero_ideal(const TambaraModel& m);
SubMackeyData whole_ideal(const TambaraModel& m);
/// Additive closure of the transfers of everything from orbits G/H with
/// H in `family` (subgroups given by lattice index; closed under
/// conjugation by the caller or not, conjugates are added here).
SubMackeyData family_ideal(const TambaraModel& m, const std::vector<int>& family);

struct IdealReport {
  bool ok = true;
  std::string condition;  // which closure failed
  std::string witness;
  std::string bound;      // the test objects used for norms
  std::string summary() const;
};

/// Sub-Mackey closure along orbit maps, additive closure, absorption of
/// multiplication, and closure under N_f for every surjective admissible
/// f from a set with at most two orbits to an orbit. Needs finite values.
IdealReport is_O_ideal(const TambaraModel& m, const SubMackeyData& j);

}  // namespace tambara
