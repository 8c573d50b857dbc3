#include "lefschetz/hilbert.hpp"

#include <algorithm>
#include <numeric>

namespace lefschetz {

long long clamped_binom2(long long m) { return m <= 1 ? 0 : m * (m - 1) / 2; }

long long hilbert_closed(const GradedPresentation& p, int t) {
  const long long d = p.d();
  long long h = 0;
  for (int a : p.a()) h += clamped_binom2(t + 2 - a) - clamped_binom2(t + 2 + a - d);
  for (int b : p.b()) h += clamped_binom2(t + 2 + b - d) - clamped_binom2(t + 2 - b);
  return h;
}

long long hilbert_rank(const GradedPresentation& p, int t) {
  if (t < 0) return 0;
  return static_cast<long long>(cokernel_dim(p, t));
}

long long HilbertTable::total() const { return std::accumulate(values.begin(), values.end(), 0LL); }

HilbertTable hilbert_table(const GradedPresentation& p, HilbertMethod method) {
  HilbertTable h;
  const int c = p.socle_bound();
  for (int t = 0; t <= c; ++t)
    h.values.push_back(method == HilbertMethod::closed ? hilbert_closed(p, t) : hilbert_rank(p, t));
  return h;
}

bool is_symmetric(const HilbertTable& h) {
  const int c = h.top();
  for (int t = 0; t <= c; ++t)
    if (h.values[t] != h.values[c - t]) return false;
  return true;
}

bool is_strictly_unimodal(const HilbertTable& h) {
  const auto& v = h.values;
  if (v.empty()) return true;
  if (std::all_of(v.begin(), v.end(), [&](long long x) { return x == v.front(); })) return true;
  const int c = h.top();
  const long long max = *std::max_element(v.begin(), v.end());
  int lo = 0, hi = c;
  while (v[lo] != max) ++lo;
  while (v[hi] != max) --hi;
  for (int t = 0; t < lo; ++t)
    if (!(v[t] < v[t + 1])) return false;
  for (int t = hi; t < c; ++t)
    if (!(v[t] > v[t + 1])) return false;
  for (int t = lo; t <= hi; ++t)
    if (v[t] != max) return false;
  if (hi == lo) return true;
  return hi == lo + 1 && c % 2 == 1 && lo == c / 2;
}

bool is_unimodal(std::span<const long long> values) {
  std::size_t t = 0;
  while (t + 1 < values.size() && values[t] <= values[t + 1]) ++t;
  while (t + 1 < values.size() && values[t] >= values[t + 1]) ++t;
  return t + 1 >= values.size();
}

int first_peak(std::span<const long long> values) {
  return static_cast<int>(std::max_element(values.begin(), values.end()) - values.begin());
}

ParityConditions check_parity_conditions(const GradedPresentation& p) {
  ParityConditions c;
  const int n = p.n(), d = p.d(), dp = p.dprime();
  const int b_n1 = p.b()[n], b_n2 = p.b()[n + 1];  // b_{n+1}, b_{n+2}
  c.a1_is_zero = p.a().front() == 0;
  c.d_even = d % 2 == 0;
  c.condition_a = c.d_even && dp + b_n1 + 2 > b_n2;
  c.condition_b = !c.d_even && dp + b_n1 + 1 > b_n2;
  c.applicable = c.a1_is_zero && (c.condition_a || c.condition_b);
  return c;
}

}  // namespace lefschetz
