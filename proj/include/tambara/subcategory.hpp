#pragma once

#include <string>
#include <vector>

#include "tambara/indexing.hpp"
#include "tambara/predicate.hpp"

namespace tambara {

/// Result of scanning an exponent predicate. Wideness and the mono
/// implication are checked on objects with at most `bound` points; the
/// pullback, composition and coproduct scans use maps between objects
/// with at most `pair_bound` points (pullbacks along maps out of orbits).
struct PropertyReport {
  int bound = 0;
  int pair_bound = 0;
  bool wide = true;
  bool pullback_stable = true;
  bool composition_closed = true;
  bool contains_initial = true;  // 0 -> *
  bool contains_fold = true;     // * + * -> *
  bool sums_closed = true;       // f, f' in D  =>  f + f' in D
  bool summands_closed = true;   // f + f' in D  =>  f, f' in D
  bool coproduct_complete() const { return contains_initial && contains_fold && sums_closed && summands_closed; }
  /// Only meaningful when contains_initial and contains_fold hold.
  bool all_monos = true;
  bool mono_implication_holds() const { return !(contains_initial && contains_fold) || all_monos; }
  std::vector<std::string> witnesses;

  std::string summary() const;
};

PropertyReport subcategory_properties(const ExponentPredicate& d, int bound = 8, int pair_bound = 4);

struct ExtractedIndexing {
  IndexingSystem system;
  /// D was coproduct complete at the scanned bounds, so D is exactly
  /// Set^G for the returned system there.
  bool exact;
  PropertyReport report;
};

/// (H, K) is admissible iff G/K -> G/H lies in D. Throws
/// InvalidSubcategory with a witness unless D is wide and pullback stable.
ExtractedIndexing indexing_from_subcategory(const ExponentPredicate& d, int bound = 8, int pair_bound = 4);

struct RoundTripReport {
  int systems = 0;
  bool ok = true;
  bool order_preserved = true;
  std::vector<std::string> mismatches;
};

/// Every enumerated system survives indexing_from_subcategory o
/// map_in_category, and inclusion of systems matches inclusion of the
/// corresponding map classes on all maps into orbits from orbits and from
/// sets with at most `pair_bound` points.
RoundTripReport round_trip_check(const GroupPtr& g, int bound = 8, int pair_bound = 4, int threads = 1);

/// The projection G/K -> G/H for K <= H.
GMap orbit_projection(const GroupPtr& g, Subgroup k, Subgroup h);

}  // namespace tambara
