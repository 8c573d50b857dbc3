#pragma once

#include <optional>
#include <vector>

#include "lefschetz/poly.hpp"

namespace lefschetz {

/// Reduced Groebner basis of the ideal generated by `generators` (zero
/// polynomials are ignored). Elements are monic with respect to `order` and
/// listed by increasing leading monomial, so the result depends only on the
/// ideal and the order.
std::vector<Poly> groebner_basis(int nvars, const std::vector<Poly>& generators,
                                 MonomialOrder order = MonomialOrder::grevlex);

/// Remainder of full multivariate division of f by a Groebner basis.
Poly reduce_by_basis(const Poly& f, const std::vector<Poly>& basis, MonomialOrder order);

/// Homogeneous ideal of K[a1..ar]. The grevlex Groebner basis is computed on
/// first use and cached; a handle must not be shared across threads until
/// basis() has been called once.
class DualIdeal {
 public:
  DualIdeal() = default;
  DualIdeal(int nvars, std::vector<Poly> generators);

  static DualIdeal zero(int nvars) { return DualIdeal(nvars, {}); }
  static DualIdeal unit(int nvars) { return DualIdeal(nvars, {Poly::constant(nvars, 1)}); }

  int nvars() const { return nvars_; }
  const std::vector<Poly>& generators() const { return generators_; }
  const std::vector<Poly>& basis() const;

  bool is_zero() const { return generators_.empty(); }
  bool is_unit() const;

  /// Generators replaced by the reduced basis, each normalized to coprime
  /// integer coefficients with positive leading coefficient.
  DualIdeal canonical() const;

 private:
  int nvars_ = 0;
  std::vector<Poly> generators_;
  mutable std::optional<std::vector<Poly>> basis_;
};

Poly normal_form(const Poly& f, const DualIdeal& ideal);
/// True when `inner` ⊆ `outer`.
bool ideal_contains(const DualIdeal& outer, const DualIdeal& inner);
/// Equality as ideals (both containments).
bool ideal_equal(const DualIdeal& a, const DualIdeal& b);
/// I ∩ J by eliminating t from t·I + (1 - t)·J.
DualIdeal ideal_intersect(const DualIdeal& a, const DualIdeal& b);

}  // namespace lefschetz
