#pragma once

#include <span>
#include <vector>

#include "lefschetz/presentation.hpp"

namespace lefschetz {

/// Binomial C(m, 2) clamped to zero for m <= 1.
long long clamped_binom2(long long m);

/// Closed form of dim M_t from the twists alone:
///   Σ_i [C(t+2-a_i) - C(t+2+a_i-d)] + Σ_j [C(t+2+b_j-d) - C(t+2-b_j)]
long long hilbert_closed(const GradedPresentation& p, int t);

/// dim (F_0)_t - rank(phi_t).
long long hilbert_rank(const GradedPresentation& p, int t);

/// Hilbert function on degrees 0..c with c = d - a_1 - 3.
struct HilbertTable {
  std::vector<long long> values;

  int top() const { return static_cast<int>(values.size()) - 1; }
  long long total() const;
  long long at(int t) const { return t < 0 || t > top() ? 0 : values[t]; }
};

enum class HilbertMethod { closed, rank };

HilbertTable hilbert_table(const GradedPresentation& p, HilbertMethod method = HilbertMethod::rank);

bool is_symmetric(const HilbertTable& h);

/// Strictly increasing up to the maximum and strictly decreasing after it.
/// A flat top of two values is accepted only as the central pair of an odd
/// c; a constant table counts as (degenerately) strictly unimodal.
bool is_strictly_unimodal(const HilbertTable& h);

/// Weakly unimodal: non-decreasing then non-increasing.
bool is_unimodal(std::span<const long long> values);

/// First index at which the maximum is attained.
int first_peak(std::span<const long long> values);

struct ParityConditions {
  bool a1_is_zero = false;
  bool d_even = false;
  bool condition_a = false;  ///< d even and d' + b_{n+1} + 2 > b_{n+2}
  bool condition_b = false;  ///< d odd and d' + b_{n+1} + 1 > b_{n+2}
  bool applicable = false;   ///< a_1 = 0 and the condition matching d's parity
};

ParityConditions check_parity_conditions(const GradedPresentation& p);

}  // namespace lefschetz
