#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tambara/gset.hpp"
#include "tambara/predicate.hpp"

namespace tambara {

/// A diagram X <-f- S -g-> T -h-> Y, read as the polynomial T_h N_g R_f.
struct Bispan {
  GMap f;
  GMap g;
  GMap h;

  /// Throws ShapeError unless the legs compose as drawn.
  Bispan(GMap f, GMap g, GMap h);

  const GSet& source() const { return f.target; }
  const GSet& s() const { return f.source; }
  const GSet& t() const { return g.target; }
  const GSet& target() const { return h.target; }

  static Bispan identity(const GSet& x);
  /// R_f : X -> A for f : A -> X.
  static Bispan restriction(const GMap& f);
  /// N_g : S -> T.
  static Bispan norm(const GMap& g);
  /// T_h : T -> Y.
  static Bispan transfer(const GMap& h);
  /// The additive zero X <- 0 -> 0 -> Y.
  static Bispan zero(const GSet& x, const GSet& y);
  /// The multiplicative unit X <- 0 -> Y = Y.
  static Bispan unit(const GSet& x, const GSet& y);
};

/// One T-orbit of a bispan in canonical form: T-orbit G/K (K the lattice
/// index of a canonical subgroup), its image y in Y, and the fibre over
/// the base coset as a sorted list of K-orbit codes (L, x), x in X.
struct Component {
  int k;
  int y;
  std::vector<std::pair<int, int>> fiber;

  friend auto operator<=>(const Component&, const Component&) = default;
  friend bool operator==(const Component&, const Component&) = default;
};

/// Isomorphism class of bispans X -> Y (isomorphisms of S and T fixing
/// X and Y), stored as its sorted list of components.
struct HomClass {
  GSet x;
  GSet y;
  std::vector<Component> components;

  static HomClass of(const Bispan& b);
  /// The canonical representative T = sum G/K_i, S = sum G/L_ij.
  Bispan representative() const;
  int t_size() const;
  int s_size() const;
  std::string key() const;

  friend bool operator==(const HomClass& a, const HomClass& b) {
    return a.components == b.components && a.x == b.x && a.y == b.y;
  }
};

/// Canonical key of an arrow up to isomorphism of its source and target.
std::string arrow_key(const GMap& g);

/// Bispan with the given components over fixed endpoints.
Bispan build_bispan(const GSet& x, const GSet& y, const std::vector<Component>& components);

struct ComposeOptions {
  long long max_points = kDefaultMaxPoints;
};

/// q o p in T N R form, not canonicalized. Throws ShapeError when p's
/// target is not q's source and ExponentEscape when an input exponent or
/// the rewritten exponent leaves D.
Bispan compose_raw(const Bispan& p, const Bispan& q, const ExponentPredicate& d, const ComposeOptions& opt = {});
/// q o p, canonical representative.
Bispan compose(const Bispan& p, const Bispan& q, const ExponentPredicate& d, const ComposeOptions& opt = {});
HomClass compose(const HomClass& p, const HomClass& q, const ExponentPredicate& d, const ComposeOptions& opt = {});

HomClass add(const HomClass& a, const HomClass& b);
/// N_fold o (a, b), which requires the fold map Y + Y -> Y in D.
HomClass multiply(const HomClass& a, const HomClass& b, const ExponentPredicate& d);
HomClass zero_class(const GSet& x, const GSet& y);
HomClass unit_class(const GSet& x, const GSet& y);
/// The pairing X -> Y1 + Y2 of a in hom(X, Y1) and b in hom(X, Y2).
Bispan pairing(const Bispan& a, const Bispan& b);

/// One class per T-orbit.
std::vector<HomClass> decompose(const HomClass& p);

/// Formal differences of indecomposable classes in hom(X, Y).
struct VirtualHom {
  GSet x;
  GSet y;
  std::map<Component, long long> terms;

  static VirtualHom zero(const GSet& x, const GSet& y);
  static VirtualHom from(const HomClass& p, long long coeff = 1);
  bool empty() const { return terms.empty(); }
  VirtualHom operator+(const VirtualHom& o) const;
  VirtualHom operator-(const VirtualHom& o) const;
  VirtualHom operator-() const;
  friend bool operator==(const VirtualHom& a, const VirtualHom& b) { return a.terms == b.terms && a.x == b.x && a.y == b.y; }
};

VirtualHom group_complete(const std::vector<std::pair<HomClass, long long>>& sums);

/// All classes in hom(X, Y) with exponent in D, |S| <= s_bound and
/// |T| <= t_bound, in canonical order. ResourceError past `limit`.
std::vector<HomClass> enumerate_hom(const GSet& x, const GSet& y, const ExponentPredicate& d, int s_bound, int t_bound,
                                    long long limit = 1 << 20);

std::string describe(const Bispan& b);
std::string describe(const HomClass& c);

}  // namespace tambara
