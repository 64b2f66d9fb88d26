#include "tambara/predicate.hpp"

#include "tambara/bispan.hpp"
#include "tambara/error.hpp"

namespace tambara {

ExponentPredicate ExponentPredicate::from_indexing(IndexingSystem sys) {
  ExponentPredicate p(Kind::FromIndexing, sys.group(), "indexing");
  p.indexing_ = std::move(sys);
  return p;
}

ExponentPredicate ExponentPredicate::iso(GroupPtr g) { return {Kind::Iso, std::move(g), "iso"}; }
ExponentPredicate ExponentPredicate::mono(GroupPtr g) { return {Kind::Mono, std::move(g), "mono"}; }
ExponentPredicate ExponentPredicate::epi(GroupPtr g) { return {Kind::Epi, std::move(g), "epi"}; }
ExponentPredicate ExponentPredicate::all(GroupPtr g) { return {Kind::All, std::move(g), "all"}; }

ExponentPredicate ExponentPredicate::user_table(GroupPtr g, const std::vector<GMap>& arrows, int bound,
                                                std::string name) {
  ExponentPredicate p(Kind::UserTable, std::move(g), std::move(name));
  p.bound_ = bound;
  for (const auto& a : arrows) {
    if (!same_group(a.source.group(), p.group_)) throw ShapeError("user predicate: arrow over a different group");
    if (a.source.size() > bound || a.target.size() > bound)
      throw ValidationError("user predicate: arrow exceeds the point bound " + std::to_string(bound));
    p.table_.insert(arrow_key(a));
  }
  return p;
}

ExponentPredicate ExponentPredicate::derived(GroupPtr g, std::function<bool(const GMap&)> test, std::string name) {
  ExponentPredicate p(Kind::Derived, std::move(g), std::move(name));
  p.test_ = std::move(test);
  return p;
}

bool ExponentPredicate::contains(const GMap& f) const {
  switch (kind_) {
    case Kind::FromIndexing:
      return map_in_category(*indexing_, f);
    case Kind::Iso:
      return f.is_bijective();
    case Kind::Mono:
      return f.is_injective();
    case Kind::Epi:
      return f.is_surjective();
    case Kind::All:
      return true;
    case Kind::UserTable:
      if (f.source.size() > bound_ || f.target.size() > bound_) return false;
      return table_.count(arrow_key(f)) > 0;
    case Kind::Derived:
      return test_(f);
  }
  return false;
}

const char* kind_name(ExponentPredicate::Kind k) {
  switch (k) {
    case ExponentPredicate::Kind::FromIndexing:
      return "from-indexing";
    case ExponentPredicate::Kind::Iso:
      return "iso";
    case ExponentPredicate::Kind::Mono:
      return "mono";
    case ExponentPredicate::Kind::Epi:
      return "epi";
    case ExponentPredicate::Kind::All:
      return "all";
    case ExponentPredicate::Kind::UserTable:
      return "user";
    case ExponentPredicate::Kind::Derived:
      return "derived";
  }
  return "?";
}

}  // namespace tambara
