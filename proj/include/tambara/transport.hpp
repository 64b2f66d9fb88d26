#pragma once

#include <string>
#include <vector>

#include "tambara/bispan.hpp"
#include "tambara/indexing.hpp"

namespace tambara {

/// Ind_H^G applied to every object and map of an H-bispan.
Bispan induce_bispan(const GroupPtr& g, Subgroup h, const Bispan& b);

/// hom_H(i*X, Y) -> hom_G(X, Ind Y): X <- Ind S -> Ind T -> Ind Y with
/// the first leg adjoint to S -> i*X.
Bispan transport_forward(const GSet& x, Subgroup h, const Bispan& b);

/// hom_G(X, Ind Y) -> hom_H(i*X, Y) through the sieve factorization.
/// Throws ShapeError unless b lands in `target`.
Bispan transport_inverse(const Bispan& b, const Induced& target);

struct TransportReport {
  int h_classes = 0;
  int g_classes = 0;
  bool ok = true;
  std::vector<std::string> failures;
};

/// Checks elementwise that forward and inverse transport are mutually
/// inverse bijections between hom_H(i*X, Y) at bounds (s, t) and
/// hom_G(X, Ind Y) at bounds ([G:H] s, [G:H] t), exponents in i*I and I.
TransportReport verify_transport(const GSet& x, Subgroup h, const GSet& y, const IndexingSystem& sys, int s_bound,
                                 int t_bound);

}  // namespace tambara
