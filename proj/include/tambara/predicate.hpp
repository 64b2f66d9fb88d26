#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tambara/gset.hpp"
#include "tambara/indexing.hpp"

namespace tambara {

/// A class of G-maps allowed as exponents (the middle leg of a bispan).
class ExponentPredicate {
 public:
  enum class Kind { FromIndexing, Iso, Mono, Epi, All, UserTable, Derived };

  static ExponentPredicate from_indexing(IndexingSystem sys);
  static ExponentPredicate iso(GroupPtr g);
  static ExponentPredicate mono(GroupPtr g);
  static ExponentPredicate epi(GroupPtr g);
  static ExponentPredicate all(GroupPtr g);
  /// Arrows listed up to isomorphism of source and target. Only arrows
  /// whose source and target have at most `bound` points can be members.
  static ExponentPredicate user_table(GroupPtr g, const std::vector<GMap>& arrows, int bound, std::string name = "user");

  /// Membership decided by a function, used for predicates transported
  /// along restriction, coinduction and m_T.
  static ExponentPredicate derived(GroupPtr g, std::function<bool(const GMap&)> test, std::string name);

  bool contains(const GMap& f) const;
  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  const GroupPtr& group() const { return group_; }
  const std::optional<IndexingSystem>& indexing() const { return indexing_; }
  /// Point bound of a user table; 0 for the builtins.
  int bound() const { return bound_; }

 private:
  ExponentPredicate(Kind kind, GroupPtr g, std::string name) : kind_(kind), group_(std::move(g)), name_(std::move(name)) {}

  Kind kind_;
  GroupPtr group_;
  std::string name_;
  std::optional<IndexingSystem> indexing_;
  std::set<std::string> table_;
  int bound_ = 0;
  std::function<bool(const GMap&)> test_;
};

const char* kind_name(ExponentPredicate::Kind k);

}  // namespace tambara
