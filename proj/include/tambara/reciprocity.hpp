#pragma once

#include <string>
#include <vector>

#include "tambara/bispan.hpp"
#include "tambara/model.hpp"

namespace tambara {

/// The norm-of-a-sum formula for H <= K: the bispan N_pi o T_fold from
/// G/H + G/H to G/K, split into indecomposable summands.
struct ReciprocityFormula {
  enum class Kind { Sum, Transfer };
  Kind kind;
  GMap transfer_map;  // fold (sum) or G/H -> G/K (transfer)
  GMap norm_map;      // G/H -> G/K (sum) or G/K -> G/G (transfer)
  Bispan lhs;         // N o T before decomposition
  std::vector<HomClass> summands;
};

/// Throws NormUnavailable unless (K, H) is admissible for `sys`.
ReciprocityFormula reciprocity_sum(const IndexingSystem& sys, Subgroup h, Subgroup k);
/// The norm-of-a-transfer formula for H <= K <= G: N along G/K -> G/G
/// after T along G/H -> G/K. Needs (G, K) admissible.
ReciprocityFormula reciprocity_transfer(const IndexingSystem& sys, Subgroup h, Subgroup k);

/// Orbit type predicted for the T of the formula: Ind_K^G Map(K/H, 2)
/// for sums, Map_K(G, K/H) for transfers. Built without bispans.
OrbitType reciprocity_oracle(const GroupPtr& g, ReciprocityFormula::Kind kind, Subgroup h, Subgroup k);

struct ReciprocityReport {
  bool ok = true;
  long long cases = 0;
  std::string witness;
  std::string summary() const;
};

/// Checks N(a + b) (resp. N(T a)) against the summed evaluations of the
/// formula on every pair (resp. element) of test elements at G/H.
ReciprocityReport verify_reciprocity(const TambaraModel& m, const ReciprocityFormula& formula, int threads = 1);

}  // namespace tambara
