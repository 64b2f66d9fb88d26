#pragma once

#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "tambara/bispan.hpp"
#include "tambara/predicate.hpp"
#include "tambara/ring.hpp"

namespace tambara {

/// An element of a model's value at some G-set, as integer coordinates.
/// What the coordinates mean is up to the model.
struct Value {
  std::vector<long long> c;
  friend auto operator<=>(const Value&, const Value&) = default;
  friend bool operator==(const Value&, const Value&) = default;
};

/// An evaluable (semi-)Tambara functor. Norms are only defined along maps
/// in `exponents()`.
class TambaraModel {
 public:
  virtual ~TambaraModel() = default;

  virtual const GroupPtr& group() const = 0;
  virtual const ExponentPredicate& exponents() const = 0;
  virtual std::string name() const = 0;

  /// R_f : M(B) -> M(A) for f : A -> B.
  virtual Value restrict(const GMap& f, const Value& v) const = 0;
  /// T_f : M(A) -> M(B).
  virtual Value transfer(const GMap& f, const Value& v) const = 0;
  /// N_f : M(A) -> M(B). Throws NormUnavailable unless f is in exponents().
  Value norm(const GMap& f, const Value& v) const;

  virtual Value zero(const GSet& x) const = 0;
  virtual Value one(const GSet& x) const = 0;
  virtual Value add(const GSet& x, const Value& a, const Value& b) const = 0;
  virtual Value mul(const GSet& x, const Value& a, const Value& b) const = 0;
  virtual Value neg(const GSet& x, const Value& a) const = 0;

  /// Every element of M(X) when the value is finite.
  virtual std::optional<std::vector<Value>> elements(const GSet& x) const = 0;
  /// Elements used by exhaustive checks: all of M(X) for finite values,
  /// otherwise a fixed finite family.
  virtual std::vector<Value> test_elements(const GSet& x) const;
  virtual Value random_element(const GSet& x, std::mt19937& rng) const = 0;
  virtual std::string format(const GSet& x, const Value& v) const;
  bool finite() const { return finite_; }

  /// The element of M(X_1 + ... + X_n) restricting to the given parts.
  Value join(const Coproduct& c, std::span<const Value> parts) const;

 protected:
  explicit TambaraModel(bool finite) : finite_(finite) {}
  virtual Value norm_unchecked(const GMap& f, const Value& v) const = 0;

 private:
  bool finite_;
};

using ModelPtr = std::shared_ptr<const TambaraModel>;

/// T_h N_g R_f applied to x.
Value eval(const TambaraModel& m, const Bispan& b, const Value& x);

/// Map_G(X, R) with fibrewise sums and products.
class FixedPointModel final : public TambaraModel {
 public:
  FixedPointModel(GRing ring, ExponentPredicate d);

  const GroupPtr& group() const override { return ring_.group(); }
  const ExponentPredicate& exponents() const override { return d_; }
  std::string name() const override { return "fixed-point(" + ring_.name() + ")"; }
  const GRing& ring() const { return ring_; }

  Value restrict(const GMap& f, const Value& v) const override;
  Value transfer(const GMap& f, const Value& v) const override;
  Value zero(const GSet& x) const override;
  Value one(const GSet& x) const override;
  Value add(const GSet& x, const Value& a, const Value& b) const override;
  Value mul(const GSet& x, const Value& a, const Value& b) const override;
  Value neg(const GSet& x, const Value& a) const override;
  std::optional<std::vector<Value>> elements(const GSet& x) const override;
  Value random_element(const GSet& x, std::mt19937& rng) const override;
  std::string format(const GSet& x, const Value& v) const override;

  /// The equivariant function determined by its values on orbit
  /// representatives (each fixed by the representative's stabilizer).
  Value from_representatives(const GSet& x, const std::vector<int>& values) const;

 protected:
  Value norm_unchecked(const GMap& f, const Value& v) const override;

 private:
  GRing ring_;
  ExponentPredicate d_;
};

/// Virtual G-sets over X: coordinates on the basis of orbit codes (L, x)
/// standing for G/L -> X, aL -> ax. With a modulus n (coprime to |G|)
/// coefficients live in Z/n and the values are finite.
class BurnsideModel final : public TambaraModel {
 public:
  BurnsideModel(GroupPtr g, ExponentPredicate d, long long modulus = 0);

  const GroupPtr& group() const override { return g_; }
  const ExponentPredicate& exponents() const override { return d_; }
  std::string name() const override;
  long long modulus() const { return modulus_; }

  /// Sorted canonical codes (lattice index of L, x).
  std::vector<std::pair<int, int>> basis(const GSet& x) const;
  /// Class of an actual G-set over X.
  Value from_gset(const GMap& u) const;
  /// Marks: for every lattice subgroup H and x in X^H, the number of
  /// H-fixed points over x. Ordered by (H index, x).
  std::vector<long long> marks(const GSet& x, const Value& v) const;
  Value from_marks(const GSet& x, const std::vector<long long>& m) const;
  /// Norm of an effective element computed with a dependent product.
  Value norm_effective(const GMap& f, const Value& v) const;

  Value restrict(const GMap& f, const Value& v) const override;
  Value transfer(const GMap& f, const Value& v) const override;
  Value zero(const GSet& x) const override;
  Value one(const GSet& x) const override;
  Value add(const GSet& x, const Value& a, const Value& b) const override;
  Value mul(const GSet& x, const Value& a, const Value& b) const override;
  Value neg(const GSet& x, const Value& a) const override;
  std::optional<std::vector<Value>> elements(const GSet& x) const override;
  std::vector<Value> test_elements(const GSet& x) const override;
  Value random_element(const GSet& x, std::mt19937& rng) const override;
  std::string format(const GSet& x, const Value& v) const override;

 protected:
  Value norm_unchecked(const GMap& f, const Value& v) const override;

 private:
  long long reduce(long long a) const;
  int code_index(const GSet& x, std::pair<int, int> code) const;
  // the G-set over X of a basis element
  GMap basis_gset(const GSet& x, std::pair<int, int> code) const;
  std::vector<std::pair<int, int>> mark_index(const GSet& x) const;

  GroupPtr g_;
  ExponentPredicate d_;
  long long modulus_;
};

/// i*_H M over the embedded group of H: value(X) = M(G x_H X).
class RestrictedModel final : public TambaraModel {
 public:
  RestrictedModel(ModelPtr base, Subgroup h);

  const GroupPtr& group() const override { return sub_; }
  const ExponentPredicate& exponents() const override { return d_; }
  std::string name() const override { return "restricted(" + base_->name() + ")"; }

  Value restrict(const GMap& f, const Value& v) const override;
  Value transfer(const GMap& f, const Value& v) const override;
  Value zero(const GSet& x) const override;
  Value one(const GSet& x) const override;
  Value add(const GSet& x, const Value& a, const Value& b) const override;
  Value mul(const GSet& x, const Value& a, const Value& b) const override;
  Value neg(const GSet& x, const Value& a) const override;
  std::optional<std::vector<Value>> elements(const GSet& x) const override;
  std::vector<Value> test_elements(const GSet& x) const override;
  Value random_element(const GSet& x, std::mt19937& rng) const override;
  std::string format(const GSet& x, const Value& v) const override;

 protected:
  Value norm_unchecked(const GMap& f, const Value& v) const override;

 private:
  GSet up(const GSet& x) const;
  GMap up(const GMap& f) const;

  ModelPtr base_;
  Subgroup h_;
  GroupPtr parent_;
  GroupPtr sub_;
  ExponentPredicate d_;
};

/// CoInd_H^G M for a model M over the embedded group of H:
/// value(T) = M(i*T).
class CoInducedModel final : public TambaraModel {
 public:
  CoInducedModel(ModelPtr base, GroupPtr g, Subgroup h);

  const GroupPtr& group() const override { return g_; }
  const ExponentPredicate& exponents() const override { return d_; }
  std::string name() const override { return "coinduced(" + base_->name() + ")"; }
  const TambaraModel& base() const { return *base_; }
  Subgroup subgroup() const { return h_; }

  Value restrict(const GMap& f, const Value& v) const override;
  Value transfer(const GMap& f, const Value& v) const override;
  Value zero(const GSet& x) const override;
  Value one(const GSet& x) const override;
  Value add(const GSet& x, const Value& a, const Value& b) const override;
  Value mul(const GSet& x, const Value& a, const Value& b) const override;
  Value neg(const GSet& x, const Value& a) const override;
  std::optional<std::vector<Value>> elements(const GSet& x) const override;
  std::vector<Value> test_elements(const GSet& x) const override;
  Value random_element(const GSet& x, std::mt19937& rng) const override;
  std::string format(const GSet& x, const Value& v) const override;

 protected:
  Value norm_unchecked(const GMap& f, const Value& v) const override;

 private:
  ModelPtr base_;
  GroupPtr g_;
  Subgroup h_;
  ExponentPredicate d_;
};

/// m_T M: value(X) = M(T x X).
class ProductShiftModel final : public TambaraModel {
 public:
  ProductShiftModel(ModelPtr base, GSet t);

  const GroupPtr& group() const override { return base_->group(); }
  const ExponentPredicate& exponents() const override { return d_; }
  std::string name() const override { return "shift(" + base_->name() + ")"; }

  Value restrict(const GMap& f, const Value& v) const override;
  Value transfer(const GMap& f, const Value& v) const override;
  Value zero(const GSet& x) const override;
  Value one(const GSet& x) const override;
  Value add(const GSet& x, const Value& a, const Value& b) const override;
  Value mul(const GSet& x, const Value& a, const Value& b) const override;
  Value neg(const GSet& x, const Value& a) const override;
  std::optional<std::vector<Value>> elements(const GSet& x) const override;
  std::vector<Value> test_elements(const GSet& x) const override;
  Value random_element(const GSet& x, std::mt19937& rng) const override;
  std::string format(const GSet& x, const Value& v) const override;

 protected:
  Value norm_unchecked(const GMap& f, const Value& v) const override;

 private:
  GSet shift(const GSet& x) const { return product(t_, x).set; }
  GMap shift(const GMap& f) const { return product_map(GMap::identity(t_), f); }

  ModelPtr base_;
  GSet t_;
  ExponentPredicate d_;
};

}  // namespace tambara
