#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lefschetz/buchsbaum_rim.hpp"
#include "lefschetz/matrix.hpp"
#include "lefschetz/presentation.hpp"

namespace lefschetz {

/// ℓ = λ_1 x_1 + ... + λ_r x_r, not all λ_i zero.
struct LinearForm {
  std::vector<Rational> coeffs;

  explicit LinearForm(std::vector<Rational> c);
  int nvars() const { return static_cast<int>(coeffs.size()); }
  std::string to_string() const;
};

/// Graded Artinian module over K[x_1..x_r] stored degreewise: dims on the
/// contiguous range [t0, c] and, for each variable i and degree t < c, the
/// matrix X_{i,t} of multiplication N_t -> N_{t+1} (dims(t+1) x dims(t)).
class ArtinianGradedModule {
 public:
  /// `structure[i][t - t0]` is X_{i,t}. Validates shapes and commutativity.
  ArtinianGradedModule(int r, int t0, std::vector<std::size_t> dims,
                       std::vector<std::vector<ScalarMatrix>> structure,
                       std::optional<GradedPresentation> provenance = std::nullopt);

  int r() const { return r_; }
  int initial_degree() const { return t0_; }
  int top_degree() const { return t0_ + static_cast<int>(dims_.size()) - 1; }
  std::size_t dim(int t) const;
  std::vector<long long> dims() const;
  /// X_{i,t}; an empty matrix of the right shape outside [t0, c-1].
  ScalarMatrix structure(int var, int t) const;
  const std::optional<GradedPresentation>& provenance() const { return provenance_; }

  bool operator==(const ArtinianGradedModule& o) const;

 private:
  int r_;
  int t0_;
  std::vector<std::size_t> dims_;
  std::vector<std::vector<ScalarMatrix>> structure_;
  std::optional<GradedPresentation> provenance_;
};

/// Degreewise model of coker(phi): quotient bases are the monomial basis
/// vectors left over after pivoting the image of phi_t on its latest
/// monomials. Throws ValidationError if coker(phi) is not Artinian.
ArtinianGradedModule module_from_presentation(const GradedPresentation& p);

/// Σ λ_i X_{i,j}.
ScalarMatrix multiplication_matrix(const ArtinianGradedModule& N, const LinearForm& l, int j);

struct LefschetzCheck {
  bool is_lefschetz = true;
  std::vector<int> failing_degrees;
};

LefschetzCheck is_lefschetz_element(const ArtinianGradedModule& N, const LinearForm& l);

enum class WlpStatus { has_wlp, no_wlp, inconclusive };
std::string to_string(WlpStatus s);

struct WlpVerdict {
  WlpStatus status = WlpStatus::inconclusive;
  std::optional<LinearForm> witness;  ///< when has_wlp
  std::optional<int> certificate;     ///< degree with identically deficient rank, when no_wlp
  int trials_used = 0;
  std::vector<std::pair<std::string, std::vector<int>>> sampled_failures;  ///< form, failing degrees
};

/// Samples seeded forms with integer coefficients in [-101, 101]. One form of
/// maximal rank everywhere proves WLP; otherwise each failing degree is
/// checked symbolically for identically vanishing maximal minors.
WlpVerdict wlp_decide(const ArtinianGradedModule& N, int trials, std::uint64_t seed);

/// Uniform integer coefficients in [-bound, bound], redrawn if all zero.
LinearForm random_linear_form(int r, std::mt19937_64& rng, int bound = 101);

/// The dual N^∨ twisted to live on the same range [t0, c]: dims reversed,
/// X^∨_{i,s} = X_{i, t0 + c - s - 1}^T. For t0 = 0 this is N^∨(-c).
ArtinianGradedModule dual_module(const ArtinianGradedModule& N);

/// dim of ∩_i ker X_{i,t} for t = t0..c.
std::vector<long long> socle_dims(const ArtinianGradedModule& N);
/// S_1 · N_t = N_{t+1} for every t in [t0, c-1].
bool generated_in_initial_degree(const ArtinianGradedModule& N);
/// Generated in the initial degree with socle concentrated in degree c.
bool is_level(const ArtinianGradedModule& N);

enum class CheckStatus { passed, failed, skipped };
std::string to_string(CheckStatus s);

struct PropagationReport {
  CheckStatus surjective_upward = CheckStatus::skipped;  ///< needs generation in initial degree
  CheckStatus injective_downward = CheckStatus::skipped;  ///< needs level
  std::vector<int> surjective_degrees;
  std::vector<int> injective_degrees;
  std::vector<std::string> counterexamples;
};

PropagationReport check_propagation(const ArtinianGradedModule& N, const LinearForm& l);

/// Resolution-shape verdict for a presentation-built module. Throws
/// ValidationError ("not applicable") for modules without a presentation.
SymGorShape check_symgor_shape(const ArtinianGradedModule& N);

}  // namespace lefschetz
