#pragma once

#include <string>
#include <vector>

#include "tambara/bispan.hpp"
#include "tambara/model.hpp"

namespace tambara::check {

long long catalan(int n);

/// Number of indexing systems for a cyclic group of prime-power order
/// p^k, counted as Catalan(k + 1) ; -1 when n is not a prime power.
long long cyclic_prime_power_count(int n);

struct BijectionReport {
  int source_classes = 0;
  int target_pairs = 0;
  bool ok = true;
  std::string witness;
};

/// hom(X, Y1 + Y2) -> hom(X, Y1) x hom(X, Y2) by restriction along the
/// injections, checked against the pairs whose sizes fit the bounds.
BijectionReport products_bijection(const GSet& x, const GSet& y1, const GSet& y2, const ExponentPredicate& d,
                                   int s_bound, int t_bound);

/// Compares the coinduced model CoInd_e^G(Z/n) with the fixed-point model
/// of Map(G, Z/n) through phi -> (t -> phi(t)(e)) on every G-set with at
/// most `bound` points and every map between them. Returns failures.
std::vector<std::string> coinduction_oracle(const GroupPtr& g, int n, int bound);

struct LawReport {
  int cases = 0;
  std::vector<std::string> failures;
};

/// Frobenius, norm multiplicativity and N(1) = 1 on random maps between
/// sets of at most `max_points` points.
LawReport ring_laws(const TambaraModel& m, int cases, unsigned seed, int max_points = 4);

/// eval(q o p) = eval(q) o eval(p) on random composable pairs with
/// exponents in a randomly chosen enumerated system.
LawReport functoriality(const TambaraModel& m, int pairs, unsigned seed, int elements_per_pair = 3,
                        int max_points = 4);

/// Random composites of admissible bispans must stay admissible for sys.
LawReport composite_closure(const IndexingSystem& sys, int composites, unsigned seed, int max_points = 4);

}  // namespace tambara::check
