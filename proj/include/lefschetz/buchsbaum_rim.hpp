#pragma once

#include <string>
#include <vector>

#include "lefschetz/matrix.hpp"
#include "lefschetz/presentation.hpp"

namespace lefschetz {

/// The resolution
///   0 -> ⊕R(-dd_i) --delta--> ⊕R(-c_j) --eps--> ⊕R(-b_j) --phi--> ⊕R(-a_i) -> M -> 0
/// together with the primed variant (eps' = eps·g', g'·delta) whose middle
/// map is antisymmetric.
struct BuchsbaumRimResolution {
  GradedPresentation presentation;
  std::vector<int> c;    ///< c_j = d - b_j
  std::vector<int> dd;   ///< dd_i = d - a_i
  PolyMatrix eps;        ///< (n+2) x (n+2)
  PolyMatrix eps_prime;  ///< eps with column j scaled by (-1)^j (one-based j)
  PolyMatrix delta;      ///< (n+2) x n
  std::vector<int> g_prime;  ///< diagonal of g', entries (-1)^j
};

/// Builds eps, delta, eps' and g' from the signed maximal minors of phi.
/// Throws ValidationError when coker(phi) is not of finite length.
BuchsbaumRimResolution build_resolution(const GradedPresentation& p);
/// Same construction without the finite-length check.
BuchsbaumRimResolution build_resolution_unchecked(const GradedPresentation& p);

struct ExactnessRow {
  int t = 0;
  std::size_t f0 = 0, f1 = 0, f2 = 0, f3 = 0;
  std::size_t rank_phi = 0, rank_eps = 0, rank_delta = 0;
  std::size_t module_dim = 0;
  long long euler = 0;
};

struct ExactnessReport {
  bool ok = true;
  /// Degree of the first failure; -1 for a failure of a polynomial identity.
  int failing_degree = -1;
  std::string failing_stage;
  std::vector<ExactnessRow> rows;
};

/// Certifies exactness degree by degree for t = 0 .. d - a_1 - 1 using
/// rank-nullity chains, checks phi·eps = 0, eps·delta = 0, minimality and
/// the Euler characteristic, and repeats the chain for the primed complex.
ExactnessReport verify_exactness(const BuchsbaumRimResolution& res);

/// {dd_i - 3}, the socle degrees of M read off the last free module.
std::vector<int> socle_degrees(const BuchsbaumRimResolution& res);

struct SymGorShape {
  bool twist_duality_f2 = false;  ///< sorted c == sorted (d - b_j)
  bool twist_duality_f3 = false;  ///< sorted dd == sorted (d - a_i)
  bool antisymmetric = false;     ///< eps' = -eps'^T with zero diagonal
  bool holds() const { return twist_duality_f2 && twist_duality_f3 && antisymmetric; }
};

SymGorShape check_symgor_shape(const BuchsbaumRimResolution& res);

}  // namespace lefschetz
