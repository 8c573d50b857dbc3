#include "lefschetz/buchsbaum_rim.hpp"

#include <algorithm>

namespace lefschetz {

namespace {

int sign_pow(int e) { return (e % 2 == 0) ? 1 : -1; }

bool entries_in_maximal_ideal(const PolyMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero() && *m(r, c).degree() <= 0) return false;
  return true;
}

}  // namespace

BuchsbaumRimResolution build_resolution_unchecked(const GradedPresentation& p) {
  const int n = p.n(), m = n + 2, nv = p.nvars();
  const int d = p.d();
  BuchsbaumRimResolution res{p, {}, {}, PolyMatrix(m, m, nv), PolyMatrix(m, m, nv), PolyMatrix(m, n, nv), {}};
  for (int j = 0; j < m; ++j) res.c.push_back(d - p.b()[j]);
  for (int i = 0; i < n; ++i) res.dd.push_back(d - p.a()[i]);

  // Phi_{rj} is symmetric in (r, j); compute each once.
  for (int r = 0; r < m; ++r)
    for (int j = r + 1; j < m; ++j) {
      Poly minor = maximal_minor(p, r, j);
      const int r1 = r + 1, j1 = j + 1;  // one-based
      // entry (r, j), r < j: (-1)^{n - r + 1}
      res.eps(r, j) = minor * Rational(sign_pow(n - r1 + 1));
      // entry (j, r), j > r: (-1)^{n - j}
      res.eps(j, r) = minor * Rational(sign_pow(n - j1));
    }
  for (int j = 0; j < m; ++j) {
    res.g_prime.push_back(sign_pow(j + 1));
    for (int r = 0; r < m; ++r) res.eps_prime(r, j) = res.eps(r, j) * Rational(res.g_prime[j]);
    for (int i = 0; i < n; ++i) res.delta(j, i) = p.entry(i, j) * Rational(sign_pow(j + 2));
  }
  return res;
}

BuchsbaumRimResolution build_resolution(const GradedPresentation& p) {
  auto verdict = is_artinian(p);
  if (!verdict.artinian)
    throw ValidationError("cokernel is not of finite length: dim M_" + std::to_string(verdict.witness_degree) +
                          " = " + std::to_string(verdict.witness_dim));
  return build_resolution_unchecked(p);
}

ExactnessReport verify_exactness(const BuchsbaumRimResolution& res) {
  const GradedPresentation& p = res.presentation;
  const int n = p.n(), m = n + 2;
  ExactnessReport report;
  auto fail = [&report](int t, std::string stage) {
    if (report.ok) {
      report.ok = false;
      report.failing_degree = t;
      report.failing_stage = std::move(stage);
    }
  };

  PolyMatrix g_delta(m, n, p.nvars());
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < n; ++i) g_delta(j, i) = res.delta(j, i) * Rational(res.g_prime[j]);

  if (!(p.entries() * res.eps).is_zero()) fail(-1, "phi*eps != 0");
  if (!(res.eps * res.delta).is_zero()) fail(-1, "eps*delta != 0");
  if (!(p.entries() * res.eps_prime).is_zero()) fail(-1, "phi*eps' != 0");
  if (!(res.eps_prime * g_delta).is_zero()) fail(-1, "eps'*g'delta != 0");
  if (!entries_in_maximal_ideal(p.entries()) || !entries_in_maximal_ideal(res.eps) ||
      !entries_in_maximal_ideal(res.delta))
    fail(-1, "non-minimal: an entry is a nonzero constant");
  for (int j = 0; j < m; ++j)
    for (int r = 0; r < m; ++r) {
      const Poly& e = res.eps(r, j);
      if (!e.is_zero() && (!e.is_homogeneous() || *e.degree() != res.c[j] - p.b()[r]))
        fail(-1, "eps entry (" + std::to_string(r + 1) + "," + std::to_string(j + 1) + ") has wrong degree");
    }
  if (!report.ok) return report;

  for (int t = 0; t <= p.d() - p.a().front() - 1; ++t) {
    DegreeMap phi = degree_map(p.entries(), p.b(), p.a(), t);
    DegreeMap eps = degree_map(res.eps, res.c, p.b(), t);
    DegreeMap delta = degree_map(res.delta, res.dd, res.c, t);
    ExactnessRow row;
    row.t = t;
    row.f0 = phi.target_dim;
    row.f1 = phi.source_dim;
    row.f2 = eps.source_dim;
    row.f3 = delta.source_dim;
    row.rank_phi = phi.rank();
    row.rank_eps = eps.rank();
    row.rank_delta = delta.rank();
    row.module_dim = row.f0 - row.rank_phi;
    row.euler = static_cast<long long>(row.f0) - static_cast<long long>(row.f1) + static_cast<long long>(row.f2) -
                static_cast<long long>(row.f3);
    report.rows.push_back(row);

    if (row.f1 - row.rank_phi != row.rank_eps) fail(t, "ker phi != im eps");
    if (row.f2 - row.rank_eps != row.rank_delta) fail(t, "ker eps != im delta");
    if (row.rank_delta != row.f3) fail(t, "delta not injective");
    if (row.euler != static_cast<long long>(row.module_dim)) fail(t, "Euler characteristic != dim M_t");

    DegreeMap eps_p = degree_map(res.eps_prime, res.c, p.b(), t);
    DegreeMap g_delta_t = degree_map(g_delta, res.dd, res.c, t);
    std::size_t rank_eps_p = eps_p.rank(), rank_gd = g_delta_t.rank();
    if (row.f1 - row.rank_phi != rank_eps_p) fail(t, "primed: ker phi != im eps'");
    if (row.f2 - rank_eps_p != rank_gd) fail(t, "primed: ker eps' != im g'delta");
    if (rank_gd != row.f3) fail(t, "primed: g'delta not injective");
    if (!report.ok) break;
  }
  return report;
}

std::vector<int> socle_degrees(const BuchsbaumRimResolution& res) {
  std::vector<int> out;
  for (int di : res.dd) out.push_back(di - 3);
  return out;
}

SymGorShape check_symgor_shape(const BuchsbaumRimResolution& res) {
  const GradedPresentation& p = res.presentation;
  const int d = p.d();
  SymGorShape s;
  std::vector<int> c = res.c, dual_b, dd = res.dd, dual_a;
  for (int b : p.b()) dual_b.push_back(d - b);
  for (int a : p.a()) dual_a.push_back(d - a);
  std::sort(c.begin(), c.end());
  std::sort(dual_b.begin(), dual_b.end());
  std::sort(dd.begin(), dd.end());
  std::sort(dual_a.begin(), dual_a.end());
  s.twist_duality_f2 = c == dual_b;
  s.twist_duality_f3 = dd == dual_a;
  s.antisymmetric = true;
  const std::size_t m = res.eps_prime.rows();
  for (std::size_t r = 0; r < m; ++r) {
    if (!res.eps_prime(r, r).is_zero()) s.antisymmetric = false;
    for (std::size_t j = r + 1; j < m; ++j)
      if (res.eps_prime(r, j) != -res.eps_prime(j, r)) s.antisymmetric = false;
  }
  return s;
}

}  // namespace lefschetz
