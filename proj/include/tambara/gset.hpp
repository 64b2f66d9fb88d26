#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tambara/group.hpp"

namespace tambara {

/// A finite G-set given pointwise: points 0..size-1 and the full action
/// table. Immutable, cheap to copy (shared storage).
class GSet {
 public:
  /// `action[g * size + x]` is g.x. Throws ValidationError when the
  /// table is not a group action.
  GSet(GroupPtr group, int size, std::vector<int> action);

  static GSet empty(GroupPtr group);
  static GSet trivial(GroupPtr group, int size);
  /// Builds the action from the permutations of a generating set of
  /// elements; the rest of the table is generated by composition.
  static GSet from_generators(GroupPtr group, int size,
                              const std::vector<std::pair<int, std::vector<int>>>& gens);

  const GroupPtr& group() const { return data_->group; }
  int size() const { return data_->size; }
  int act(int g, int x) const { return data_->action[g * data_->size + x]; }
  std::span<const int> action_table() const { return data_->action; }
  Subgroup stabilizer(int x) const { return data_->stabilizers[x]; }
  std::vector<int> orbit_of(int x) const;
  /// Points fixed by every element of h.
  std::vector<int> fixed_points(Subgroup h) const;

  friend bool operator==(const GSet& a, const GSet& b);

 private:
  struct Data {
    GroupPtr group;
    int size;
    std::vector<int> action;
    std::vector<Subgroup> stabilizers;
  };
  std::shared_ptr<const Data> data_;
};

/// An equivariant map between two G-sets.
struct GMap {
  GSet source;
  GSet target;
  std::vector<int> fn;

  /// Throws ValidationError unless fn is total and equivariant.
  GMap(GSet source, GSet target, std::vector<int> fn);

  int operator()(int x) const { return fn[x]; }
  std::vector<int> fiber(int y) const;
  bool is_injective() const;
  bool is_surjective() const;
  bool is_bijective() const { return is_injective() && is_surjective(); }

  static GMap identity(const GSet& x);
  static GMap to_point(const GSet& x);
  static GMap from_empty(const GSet& x);

  friend bool operator==(const GMap& a, const GMap& b) = default;
};

/// second o first.
GMap compose(const GMap& second, const GMap& first);
/// The inverse of a bijective map.
GMap inverse(const GMap& f);

GSet point(const GroupPtr& g);

/// The coset G-set G/H. Point i is the coset of the i-th least left coset
/// representative, so point 0 is H itself.
GSet orbit(const GroupPtr& g, Subgroup h);
/// element -> point of G/H under the labelling used by `orbit`.
std::vector<int> coset_labels(const FiniteGroup& g, Subgroup h);

struct OrbitInfo {
  int representative;  // least point of the orbit
  Subgroup stabilizer;  // stabilizer of the representative
  int conj_class;       // conjugacy-class label of the stabilizer
  std::vector<int> points;
};

/// Orbits ordered by conjugacy-class label, then least point.
std::vector<OrbitInfo> orbit_decompose(const GSet& x);

/// Multiset of conjugacy-class labels, as sorted (label, multiplicity).
using OrbitType = std::vector<std::pair<int, int>>;
OrbitType orbit_type(const GSet& x);

struct Coproduct {
  GSet set;
  std::vector<GMap> injections;
  std::vector<int> offsets;
};
Coproduct coproduct(std::span<const GSet> parts);
Coproduct coproduct(const GSet& a, const GSet& b);
/// f1 + f2 : A1 + A2 -> B1 + B2.
GMap coproduct_map(const GMap& f1, const GMap& f2);
/// The map A1 + A2 -> B induced by f1, f2.
GMap copair(const GMap& f1, const GMap& f2);
/// The fold map X + X -> X.
GMap fold(const GSet& x);

struct Product {
  GSet set;  // point (a, b) has index a * |B| + b
  GMap first;
  GMap second;
};
Product product(const GSet& a, const GSet& b);
/// f1 x f2.
GMap product_map(const GMap& f1, const GMap& f2);

struct Pullback {
  GSet set;
  GMap first;   // to the source of f
  GMap second;  // to the source of g
  std::vector<std::pair<int, int>> points;

  /// The unique map from a cone (p, q) into the pullback. Throws
  /// ShapeError when the cone does not commute.
  GMap mediate(const GMap& p, const GMap& q) const;
};
/// Pullback of f : A -> C and g : B -> C; points (a, b) in lexicographic order.
Pullback pullback(const GMap& f, const GMap& g);

/// The exponential (distributivity) diagram of a composable pair
/// h : A -> X, g : X -> Y.
///
///   X <--h-- A <--eval-- P
///   |                    | g_prime
///   g                    v
///   Y <------h_prime---- Pi
///
/// with P = X x_Y Pi. A point of Pi is a pair (y, s) where s picks a
/// preimage under h of every point in the fibre of g over y; k.(y, s) is
/// (ky, x -> k.s(k^-1 x)).
struct ExponentialDiagram {
  GMap h;
  GMap g;
  GSet pi;
  GMap h_prime;
  GSet pullback;
  GMap to_x;
  GMap g_prime;
  GMap eval;
  /// For each point of Pi: its base point y and the chosen A-point for
  /// every point of the fibre g^-1(y), in ascending order of that fibre.
  std::vector<std::pair<int, std::vector<int>>> sections;
};

inline constexpr long long kDefaultMaxPoints = 1 << 20;

/// Throws ResourceError when Pi would exceed `max_points`.
ExponentialDiagram dependent_product(const GMap& h, const GMap& g,
                                     long long max_points = kDefaultMaxPoints);

/// G x_H X for an H-set X. Records the induction structure so the sieve
/// factorization can be run against it.
struct Induced {
  GSet set;
  GSet base;
  Subgroup subgroup;
  std::vector<int> reps;  // least element of each left coset gH
  /// Point [reps[i], x] has index i * |base| + x.
  int point(int coset, int x) const { return coset * base.size() + x; }
  /// Unit x -> [e, x] of the induction/restriction adjunction (an H-map).
  GMap unit() const;
};

/// Induce an H-set (over the embedded group of H) up to G.
Induced induce(const GroupPtr& g, Subgroup h, const GSet& x);
/// G x_H f for an H-map f.
GMap induce_map(const GroupPtr& g, Subgroup h, const GMap& f);
/// The adjoint G-map Ind X -> Y of an H-map X -> i*Y.
GMap induce_adjoint(const Induced& ind, const GSet& y, const GMap& f);

/// i*_H X, a G-set regarded as a set over the embedded group of H.
GSet restrict(const GSet& x, Subgroup h);
GMap restrict_map(const GMap& f, Subgroup h);

/// Counit G x_H i*T -> T, [g, t] -> g t.
GMap induce_counit(const GSet& t, Subgroup h);

/// Map_H(G, X): H-equivariant functions G -> X (phi(kg) = k phi(g)),
/// with (g.phi)(a) = phi(a g).
struct Coinduced {
  GSet set;
  GSet base;
  Subgroup subgroup;
  std::vector<int> reps;  // least element of each right coset Hg
  /// Value of the function at group element a.
  int value_at(int point, int a) const;
};
Coinduced coinduce(const GroupPtr& g, Subgroup h, const GSet& x);
/// Unit T -> CoInd i*T, t -> (a -> a t).
GMap coinduce_unit(const GSet& t, Subgroup h, const Coinduced& target);
/// Counit i* CoInd X -> X, phi -> phi(e) (an H-map).
GMap coinduce_counit(const Coinduced& c);

/// Constructive factorization of a G-map f : T' -> Ind_H S through an
/// induced map: T is the pullback S -> i* Ind S <- i* T'.
struct SieveFactorization {
  GSet t;           // H-set
  GMap to_base;     // H-map T -> S
  Induced induced;  // Ind T
  GMap iso;         // Ind T -> T'
  GMap iso_inverse;
};
SieveFactorization sieve_factorization(const GMap& f, const Induced& target);

struct CanonicalGSet {
  GSet set;
  GMap relabel;  // X -> set, an isomorphism
};
/// Coproduct of the canonical orbits G/K (K the least conjugate) in
/// order of conjugacy-class label, with an isomorphism onto it.
CanonicalGSet canonicalize(const GSet& x);
/// A witness isomorphism x -> y, if one exists.
std::optional<GMap> find_isomorphism(const GSet& x, const GSet& y);
inline bool is_isomorphic(const GSet& x, const GSet& y) { return find_isomorphism(x, y).has_value(); }

/// All G-sets with at most `bound` points, one per isomorphism class,
/// in canonical form.
std::vector<GSet> gsets_up_to(const GroupPtr& g, int bound);

/// All equivariant maps a -> b. ResourceError past `limit`.
std::vector<GMap> all_gmaps(const GSet& a, const GSet& b, long long limit = 1 << 20);

/// Canonical code (L, x) of the H-orbit of point s of U, where u : U -> X
/// and every stabilizer in the orbit lies in H: L is the least
/// H-conjugate of Stab(s) (as a lattice index of the ambient group) and x
/// is the least image u(k s) over the base points with stabilizer L.
std::pair<int, int> orbit_code(const GSet& u, const std::vector<int>& u_map, int s, Subgroup h);

std::string describe(const GSet& x);
std::string describe(const GMap& f);

}  // namespace tambara
