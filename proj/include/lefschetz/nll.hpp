#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lefschetz/groebner.hpp"
#include "lefschetz/module.hpp"

namespace lefschetz {

/// Largest number of maximal minors locus_ideal will enumerate.
inline constexpr std::size_t kMinorCap = 20000;
/// Largest estimated operation count (minors x rank x evaluation points) for
/// the exact elimination of minors whose span is not all of A_s.
inline constexpr double kMinorWorkCap = 5e7;

/// X_j = a_1 X_{1,j} + ... + a_r X_{r,j} over the dual ring K[a_1..a_r].
struct LocusMatrix {
  int degree = 0;
  PolyMatrix matrix;
  std::size_t minor_size = 0;  ///< min(rows, cols)
};

LocusMatrix locus_matrix(const ArtinianGradedModule& N, int j);

/// Ideal of the maximal minors of X_j, generators normalized. The unit ideal
/// when X_j has no rows or columns, the zero ideal when every minor vanishes.
/// Throws SizeCapError when the minor count exceeds kMinorCap or the exact
/// elimination would exceed kMinorWorkCap.
DualIdeal locus_ideal(const ArtinianGradedModule& N, int j);

/// All maximal minors of a matrix of linear forms, reduced to a basis of
/// their span in degree `minor_size`.
std::vector<Poly> maximal_minor_span(const LocusMatrix& L);

/// I(L_{N,j}) for j = t0..c-1 (indexed from t0).
std::vector<DualIdeal> locus_ideals(const ArtinianGradedModule& N);
/// ∩_j I(L_{N,j}); the unit ideal for a single-degree module.
DualIdeal nll_ideal(const ArtinianGradedModule& N);
DualIdeal intersect_all(const std::vector<DualIdeal>& ideals, int nvars);

/// True when every generator vanishes at the point.
bool vanishes_at(const DualIdeal& I, std::span<const Rational> point);

struct CruxVerdict {
  CheckStatus status = CheckStatus::skipped;  ///< skipped = hypotheses not met
  std::string reason;
};

/// Checks I(L_{N,i+1}) ⊆ I(L_{N,i}) whenever h(i) <= h(i+1) <= h(i+2) and Soc(N)_i = 0.
CruxVerdict check_crux(const ArtinianGradedModule& N, int i);
/// Same, with I(L_{N,j}) supplied by `locus` (for callers that cache the ideals).
CruxVerdict check_crux(const ArtinianGradedModule& N, int i, const std::function<DualIdeal(int)>& locus);

struct SetComparison {
  int points = 0;
  int disagreements = 0;
  bool equal() const { return disagreements == 0; }
};

/// Compares V(a) and V(b) at seeded random integer points.
SetComparison compare_loci(const DualIdeal& a, const DualIdeal& b, int points, std::uint64_t seed);

struct ReductionCheck {
  bool applicable = false;
  std::string reason;
  int degree = -1;           ///< peak j, or j* for the symmetric collapse
  DualIdeal predicted;       ///< I(L_{N,j-1}) ∩ I(L_{N,j}), or I(L_{N,j*})
  bool scheme_equal = false;
  SetComparison set;
};

struct ReducedLocusReport {
  std::vector<DualIdeal> per_degree;  ///< indexed from t0
  DualIdeal full;
  bool level = false;
  ReductionCheck level_reduction;
  ReductionCheck symmetric_reduction;
};

inline constexpr std::uint64_t kDefaultSeed = 20240607;

ReducedLocusReport reduced_locus(const ArtinianGradedModule& N, int sample_points = 200,
                                 std::uint64_t seed = kDefaultSeed);
/// Same, from precomputed I(L_{N,j}), j = t0..c-1.
ReducedLocusReport reduced_locus(const ArtinianGradedModule& N, std::vector<DualIdeal> per_degree,
                                 int sample_points = 200, std::uint64_t seed = kDefaultSeed);

struct TransposeVerdict {
  bool equal = false;
  DualIdeal dual_side;    ///< I(L_{N^∨(-c), i})
  DualIdeal module_side;  ///< I(L_{N, c-i-1})
};

TransposeVerdict dual_transpose_identity(const ArtinianGradedModule& N, int i);
/// Same, with I(L_{N, c-i-1}) already known.
TransposeVerdict dual_transpose_identity(const ArtinianGradedModule& N, int i, const DualIdeal& module_side);

}  // namespace lefschetz
