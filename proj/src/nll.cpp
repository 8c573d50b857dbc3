#include "lefschetz/nll.hpp"

#include <algorithm>
#include <functional>
#include <cstdio>
#include <random>

#include "lefschetz/hilbert.hpp"

namespace lefschetz {

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > 100 * kMinorCap) return r;
  }
  return r;
}

/// Calls f(subset) for every k-subset of {0..n-1} in lexicographic order.
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Submatrix keeping the given rows (tall) or columns (wide) of a matrix
/// whose other dimension equals the subset size.
template <class M>
M square_part(const M& m, const std::vector<std::size_t>& keep, bool tall, M out) {
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = 0; b < keep.size(); ++b) out(a, b) = tall ? m(keep[a], b) : m(a, keep[b]);
  return out;
}

SparseVector coefficient_vector(const Poly& f) {
  SparseVector v;
  for (const auto& t : f.terms()) v.emplace_back(monomial_rank(t.mono), t.coef);
  std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return v;
}

/// Inverse of the Vandermonde matrix at nodes 0..s, so that
/// coefficients = inv * values for a univariate polynomial of degree <= s.
ScalarMatrix inverse_vandermonde(int s) {
  const int n = s + 1;
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (int i = 0; i < n; ++i) {
    Rational p = 1;
    for (int k = 0; k < n; ++k) {
      a[i][k] = p;
      p *= i;
    }
    a[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (a[piv][col] == 0) ++piv;
    std::swap(a[piv], a[col]);
    Rational inv = 1 / a[col][col];
    for (auto& x : a[col]) x *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (int k = 0; k < 2 * n; ++k) a[r][k] -= f * a[col][k];
    }
  }
  ScalarMatrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) out(i, k) = a[i][n + k];
  return out;
}

/// Recovers the homogeneous degree-s polynomial in r variables from its
/// values at (g, 1), g in {0..s}^{r-1}, listed with the first coordinate
/// varying slowest.
Poly interpolate_homogeneous(std::vector<Rational> values, int r, int s, const ScalarMatrix& vinv) {
  const std::size_t base = s + 1;
  const int free = r - 1;
  std::vector<std::size_t> stride(free, 1);
  for (int k = free - 2; k >= 0; --k) stride[k] = stride[k + 1] * base;
  for (int axis = 0; axis < free; ++axis) {
    std::vector<Rational> next(values.size());
    for (std::size_t idx = 0; idx < values.size(); ++idx) {
      const std::size_t coord = (idx / stride[axis]) % base;
      if (coord != 0) continue;
      for (std::size_t e = 0; e < base; ++e) {
        Rational acc = 0;
        for (std::size_t g = 0; g < base; ++g) acc += vinv(e, g) * values[idx + g * stride[axis]];
        next[idx + e * stride[axis]] = acc;
      }
    }
    values = std::move(next);
  }
  std::vector<Term> terms;
  for (std::size_t idx = 0; idx < values.size(); ++idx) {
    if (values[idx] == 0) continue;
    Monomial m(r);
    int deg = 0;
    for (int k = 0; k < free; ++k) {
      int e = static_cast<int>((idx / stride[k]) % base);
      m.set(k, e);
      deg += e;
    }
    if (deg > s) throw Error("interpolation produced a term above the minor degree");
    m.set(r - 1, s - deg);
    terms.push_back({m, values[idx]});
  }
  return Poly::from_terms(r, std::move(terms));
}

std::vector<Poly> minors_by_expansion(const LocusMatrix& L) {
  const PolyMatrix& m = L.matrix;
  const std::size_t s = L.minor_size;
  const bool tall = m.rows() > m.cols();
  const std::size_t full = monomials_of_degree(m.nvars(), static_cast<int>(s)).size();
  SparseEchelon span(full);
  std::vector<Poly> basis;
  for_each_subset(tall ? m.rows() : m.cols(), s, [&](const std::vector<std::size_t>& keep) {
    if (span.rank() == full) return;
    Poly det = poly_determinant(square_part(m, keep, tall, PolyMatrix(s, s, m.nvars())));
    if (!det.is_zero() && span.insert(coefficient_vector(det))) basis.push_back(det);
  });
  return basis;
}

/// All maximal minors of a fixed tall scalar matrix P (m x s, m >= s) from
/// one elimination: with B the first basis of rows and Q = P P_B^{-1},
/// det P_S = det P_B * ± det Q[S \ B, positions of B \ S].
class PluckerPoint {
 public:
  PluckerPoint(const ScalarMatrix& p) : m_(p.rows()), s_(p.cols()), in_basis_(m_, -1) {
    SparseEchelon rows(s_);
    for (std::size_t i = 0; i < m_ && basis_.size() < s_; ++i) {
      SparseVector v;
      for (std::size_t c = 0; c < s_; ++c)
        if (p(i, c) != 0) v.emplace_back(c, p(i, c));
      if (rows.insert(std::move(v))) {
        in_basis_[i] = static_cast<long>(basis_.size());
        basis_.push_back(i);
      }
    }
    if (basis_.size() < s_) return;
    full_rank_ = true;
    // Solve Q P_B = P row by row: Q = P * inv(P_B).
    std::vector<std::vector<Rational>> a(s_, std::vector<Rational>(2 * s_));
    for (std::size_t i = 0; i < s_; ++i) {
      for (std::size_t c = 0; c < s_; ++c) a[i][c] = p(basis_[i], c);
      a[i][s_ + i] = 1;
    }
    ScalarMatrix pb(s_, s_);
    for (std::size_t i = 0; i < s_; ++i)
      for (std::size_t c = 0; c < s_; ++c) pb(i, c) = a[i][c];
    det_basis_ = determinant(pb);
    for (std::size_t col = 0; col < s_; ++col) {
      std::size_t piv = col;
      while (a[piv][col] == 0) ++piv;
      std::swap(a[piv], a[col]);
      Rational inv = 1 / a[col][col];
      for (auto& x : a[col]) x *= inv;
      for (std::size_t r = 0; r < s_; ++r) {
        if (r == col || a[r][col] == 0) continue;
        Rational f = a[r][col];
        for (std::size_t k = col; k < 2 * s_; ++k) a[r][k] -= f * a[col][k];
      }
    }
    q_ = ScalarMatrix(m_, s_);
    for (std::size_t i = 0; i < m_; ++i) {
      if (in_basis_[i] >= 0) continue;
      for (std::size_t c = 0; c < s_; ++c) {
        Rational acc = 0;
        for (std::size_t k = 0; k < s_; ++k)
          if (p(i, k) != 0) acc += p(i, k) * a[k][s_ + c];
        q_(i, c) = acc;
      }
    }
  }

  /// det of the rows `subset` (sorted).
  Rational minor(const std::vector<std::size_t>& subset) const {
    if (!full_rank_) return 0;
    std::vector<std::size_t> outside_rows;
    std::vector<bool> used(s_, false);
    std::size_t parity = 0;
    for (std::size_t k = 0; k < subset.size(); ++k) {
      long pos = in_basis_[subset[k]];
      if (pos < 0) {
        outside_rows.push_back(subset[k]);
      } else {
        used[pos] = true;
        parity += k + static_cast<std::size_t>(pos);
      }
    }
    if (outside_rows.empty()) return det_basis_;
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < s_; ++c)
      if (!used[c]) cols.push_back(c);
    const std::size_t k = cols.size();
    ScalarMatrix small(k, k);
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) small(a, b) = q_(outside_rows[a], cols[b]);
    Rational d = k == 1 ? small(0, 0) : determinant(small);
    d *= det_basis_;
    return parity % 2 == 0 ? d : Rational(-d);
  }

 private:
  std::size_t m_, s_;
  std::vector<long> in_basis_;
  std::vector<std::size_t> basis_;
  bool full_rank_ = false;
  Rational det_basis_ = 0;
  ScalarMatrix q_;
};

/// PluckerPoint over F_p.
class ModularPluckerPoint {
 public:
  ModularPluckerPoint(std::vector<std::vector<std::uint64_t>> a, const PrimeField& f)
      : f_(f), m_(a.size()), s_(a.empty() ? 0 : a[0].size()), in_basis_(m_, -1),
        q_(m_, std::vector<std::uint64_t>(s_)) {
    // Row-reduce a copy to pick the first basis of rows.
    std::vector<std::vector<std::uint64_t>> echelon;
    std::vector<std::size_t> lead;
    for (std::size_t i = 0; i < m_ && basis_.size() < s_; ++i) {
      std::vector<std::uint64_t> v = a[i];
      for (std::size_t k = 0; k < echelon.size(); ++k) {
        std::uint64_t factor = v[lead[k]];
        if (factor == 0) continue;
        for (std::size_t c = 0; c < s_; ++c) v[c] = f_.sub(v[c], f_.mul(factor, echelon[k][c]));
      }
      std::size_t c = 0;
      while (c < s_ && v[c] == 0) ++c;
      if (c == s_) continue;
      std::uint64_t inv = f_.inv(v[c]);
      for (auto& x : v) x = f_.mul(x, inv);
      echelon.push_back(std::move(v));
      lead.push_back(c);
      in_basis_[i] = static_cast<long>(basis_.size());
      basis_.push_back(i);
    }
    if (basis_.size() < s_) return;
    full_rank_ = true;
    std::vector<std::vector<std::uint64_t>> g(s_, std::vector<std::uint64_t>(2 * s_));
    for (std::size_t i = 0; i < s_; ++i) {
      for (std::size_t c = 0; c < s_; ++c) g[i][c] = a[basis_[i]][c];
      g[i][s_ + i] = 1;
    }
    det_basis_ = 1;
    for (std::size_t col = 0; col < s_; ++col) {
      std::size_t piv = col;
      while (g[piv][col] == 0) ++piv;
      if (piv != col) {
        std::swap(g[piv], g[col]);
        det_basis_ = f_.sub(0, det_basis_);
      }
      det_basis_ = f_.mul(det_basis_, g[col][col]);
      std::uint64_t inv = f_.inv(g[col][col]);
      for (auto& x : g[col]) x = f_.mul(x, inv);
      for (std::size_t r = 0; r < s_; ++r) {
        if (r == col || g[r][col] == 0) continue;
        std::uint64_t factor = g[r][col];
        for (std::size_t k = col; k < 2 * s_; ++k) g[r][k] = f_.sub(g[r][k], f_.mul(factor, g[col][k]));
      }
    }
    for (std::size_t i = 0; i < m_; ++i) {
      if (in_basis_[i] >= 0) continue;
      for (std::size_t c = 0; c < s_; ++c) {
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < s_; ++k)
          if (a[i][k] != 0) acc = f_.add(acc, f_.mul(a[i][k], g[k][s_ + c]));
        q_[i][c] = acc;
      }
    }
  }

  std::uint64_t minor(const std::vector<std::size_t>& subset) const {
    if (!full_rank_) return 0;
    std::vector<std::size_t> outside_rows;
    std::vector<bool> used(s_, false);
    std::size_t parity = 0;
    for (std::size_t k = 0; k < subset.size(); ++k) {
      long pos = in_basis_[subset[k]];
      if (pos < 0) {
        outside_rows.push_back(subset[k]);
      } else {
        used[pos] = true;
        parity += k + static_cast<std::size_t>(pos);
      }
    }
    std::uint64_t d = det_basis_;
    if (!outside_rows.empty()) {
      std::vector<std::size_t> cols;
      for (std::size_t c = 0; c < s_; ++c)
        if (!used[c]) cols.push_back(c);
      const std::size_t k = cols.size();
      std::vector<std::vector<std::uint64_t>> small(k, std::vector<std::uint64_t>(k));
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) small[a][b] = q_[outside_rows[a]][cols[b]];
      for (std::size_t col = 0; col < k; ++col) {
        std::size_t piv = col;
        while (piv < k && small[piv][col] == 0) ++piv;
        if (piv == k) return 0;
        if (piv != col) {
          std::swap(small[piv], small[col]);
          d = f_.sub(0, d);
        }
        d = f_.mul(d, small[col][col]);
        std::uint64_t inv = f_.inv(small[col][col]);
        for (std::size_t r = col + 1; r < k; ++r) {
          if (small[r][col] == 0) continue;
          std::uint64_t factor = f_.mul(small[r][col], inv);
          for (std::size_t c = col; c < k; ++c) small[r][c] = f_.sub(small[r][c], f_.mul(factor, small[col][c]));
        }
      }
    }
    return parity % 2 == 0 ? d : f_.sub(0, d);
  }

 private:
  const PrimeField& f_;
  std::size_t m_, s_;
  std::vector<long> in_basis_;
  std::vector<std::size_t> basis_;
  bool full_rank_ = false;
  std::uint64_t det_basis_ = 0;
  std::vector<std::vector<std::uint64_t>> q_;
};

/// True when the minors mod p already span every form of degree s, which
/// then holds over Q as well. Evaluates at `full` random points of F_p^r.
std::size_t rank_mod_p(const PolyMatrix& m, int s, std::size_t full) {
  PrimeField f(kCheckPrimes[0]);
  const int r = m.nvars();
  // coef[v][i][j]: coefficient of variable v in entry (i, j), reduced mod p
  std::vector<std::vector<std::vector<std::uint64_t>>> coef(
      r, std::vector<std::vector<std::uint64_t>>(m.rows(), std::vector<std::uint64_t>(m.cols())));
  try {
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        for (const auto& t : m(i, j).terms()) {
          if (t.mono.degree() != 1) return 0;
          int v = 0;
          while (t.mono[v] == 0) ++v;
          coef[v][i][j] = f.reduce(t.coef);
        }
  } catch (const Error&) {
    return 0;  // a denominator vanishes mod p
  }
  std::mt19937_64 rng(static_cast<std::uint64_t>(s) * 7919 + m.rows());
  std::uniform_int_distribution<std::uint64_t> dist(0, f.modulus() - 1);
  std::vector<ModularPluckerPoint> at_points;
  at_points.reserve(full);
  for (std::size_t k = 0; k < full; ++k) {
    std::vector<std::uint64_t> pt(r);
    for (auto& x : pt) x = dist(rng);
    std::vector<std::vector<std::uint64_t>> a(m.rows(), std::vector<std::uint64_t>(m.cols()));
    for (int v = 0; v < r; ++v)
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = f.add(a[i][j], f.mul(coef[v][i][j], pt[v]));
    at_points.emplace_back(std::move(a), f);
  }
  std::vector<std::vector<std::uint64_t>> echelon;
  std::vector<std::size_t> lead;
  for_each_subset(m.rows(), s, [&](const std::vector<std::size_t>& keep) {
    if (echelon.size() == full) return;
    std::vector<std::uint64_t> v(full);
    for (std::size_t idx = 0; idx < full; ++idx) v[idx] = at_points[idx].minor(keep);
    for (std::size_t k = 0; k < echelon.size(); ++k) {
      std::uint64_t factor = v[lead[k]];
      if (factor == 0) continue;
      for (std::size_t c = 0; c < full; ++c) v[c] = f.sub(v[c], f.mul(factor, echelon[k][c]));
    }
    std::size_t c = 0;
    while (c < full && v[c] == 0) ++c;
    if (c == full) return;
    std::uint64_t inv = f.inv(v[c]);
    for (auto& x : v) x = f.mul(x, inv);
    echelon.push_back(std::move(v));
    lead.push_back(c);
  });
  return echelon.size();
}

std::string format_work(double w) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2g", w);
  return buf;
}

std::vector<Poly> minors_by_interpolation(const LocusMatrix& L) {
  const bool tall = L.matrix.rows() >= L.matrix.cols();
  const PolyMatrix m = tall ? L.matrix : L.matrix.transposed();
  const int r = m.nvars(), s = static_cast<int>(L.minor_size);
  const std::size_t full = monomials_of_degree(r, s).size();

  std::size_t npoints = 1;
  for (int k = 0; k + 1 < r; ++k) npoints *= s + 1;
  std::vector<std::vector<Rational>> points;
  std::vector<Rational> point(r, 1);
  for (std::size_t idx = 0; idx < npoints; ++idx) {
    std::size_t rest = idx;
    for (int k = r - 2; k >= 0; --k) {
      point[k] = static_cast<long>(rest % (s + 1));
      rest /= s + 1;
    }
    points.push_back(point);
  }
  const std::size_t rank_p = m.rows() > m.cols() ? rank_mod_p(m, s, full) : 1;
  if (rank_p == full) {
    std::vector<Poly> basis;
    for (const auto& mono : monomials_of_degree(r, s)) basis.push_back(Poly::monomial(mono));
    return basis;
  }
  ScalarMatrix vinv = inverse_vandermonde(s);
  if (m.rows() == m.cols()) {
    std::vector<Rational> values;
    for (const auto& pt : points) values.push_back(determinant(m.evaluate(pt)));
    if (std::all_of(values.begin(), values.end(), [](const Rational& v) { return v == 0; })) return {};
    return {interpolate_homogeneous(std::move(values), r, s, vinv)};
  }
  const double work = static_cast<double>(binomial(m.rows(), s)) * static_cast<double>(rank_p) *
                      static_cast<double>(npoints);
  if (work > kMinorWorkCap)
    throw SizeCapError("degree " + std::to_string(L.degree) + ": exact elimination of " +
                       std::to_string(binomial(m.rows(), s)) + " maximal minors of size " + std::to_string(s) +
                       " (span of rank " + std::to_string(rank_p) + " mod p) needs about " + format_work(work) +
                       " operations, above the cap of " + format_work(kMinorWorkCap));
  std::vector<PluckerPoint> at_points;
  at_points.reserve(npoints);
  for (const auto& pt : points) at_points.emplace_back(m.evaluate(pt));

  SparseEchelon span(npoints);
  std::vector<std::vector<Rational>> kept;
  for_each_subset(m.rows(), s, [&](const std::vector<std::size_t>& keep) {
    if (span.rank() == full) return;
    std::vector<Rational> values(npoints);
    SparseVector v;
    for (std::size_t idx = 0; idx < npoints; ++idx) {
      values[idx] = at_points[idx].minor(keep);
      if (values[idx] != 0) v.emplace_back(idx, values[idx]);
    }
    if (!v.empty() && span.insert(std::move(v))) kept.push_back(std::move(values));
  });

  std::vector<Poly> basis;
  for (auto& values : kept) basis.push_back(interpolate_homogeneous(std::move(values), r, s, vinv));
  return basis;
}

std::vector<Rational> random_point(int r, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-3, 3);
  for (;;) {
    std::vector<Rational> p;
    bool nonzero = false;
    for (int i = 0; i < r; ++i) {
      p.emplace_back(dist(rng));
      nonzero = nonzero || p.back() != 0;
    }
    if (nonzero) return p;
  }
}

}  // namespace

LocusMatrix locus_matrix(const ArtinianGradedModule& N, int j) {
  const int r = N.r();
  LocusMatrix L{j, PolyMatrix(N.dim(j + 1), N.dim(j), r), std::min(N.dim(j + 1), N.dim(j))};
  if (L.minor_size == 0) return L;
  for (int i = 0; i < r; ++i) {
    ScalarMatrix x = N.structure(i, j);
    Poly a = Poly::variable(r, i);
    for (std::size_t row = 0; row < x.rows(); ++row)
      for (std::size_t col = 0; col < x.cols(); ++col)
        if (x(row, col) != 0) L.matrix(row, col) += a * x(row, col);
  }
  return L;
}

std::vector<Poly> maximal_minor_span(const LocusMatrix& L) {
  const PolyMatrix& m = L.matrix;
  const std::size_t s = L.minor_size;
  if (s == 0) return {Poly::constant(m.nvars(), 1)};
  const std::size_t count = binomial(m.rows(), s) * binomial(m.cols(), s);
  if (count > kMinorCap)
    throw SizeCapError("degree " + std::to_string(L.degree) + ": " + std::to_string(m.rows()) + "x" +
                       std::to_string(m.cols()) + " locus matrix has " + std::to_string(count) +
                       " maximal minors, above the cap of " + std::to_string(kMinorCap));
  if (m.is_zero()) return {};
  return s < 5 ? minors_by_expansion(L) : minors_by_interpolation(L);
}

DualIdeal locus_ideal(const ArtinianGradedModule& N, int j) {
  LocusMatrix L = locus_matrix(N, j);
  std::vector<Poly> gens;
  for (const auto& g : maximal_minor_span(L)) gens.push_back(g.normalized());
  return DualIdeal(N.r(), std::move(gens));
}

std::vector<DualIdeal> locus_ideals(const ArtinianGradedModule& N) {
  std::vector<DualIdeal> out;
  for (int j = N.initial_degree(); j < N.top_degree(); ++j) out.push_back(locus_ideal(N, j));
  return out;
}

DualIdeal intersect_all(const std::vector<DualIdeal>& ideals, int nvars) {
  DualIdeal acc = DualIdeal::unit(nvars);
  for (const auto& I : ideals) {
    if (I.is_unit()) continue;
    acc = acc.is_unit() ? I : ideal_intersect(acc, I);
  }
  return acc;
}

DualIdeal nll_ideal(const ArtinianGradedModule& N) { return intersect_all(locus_ideals(N), N.r()); }

bool vanishes_at(const DualIdeal& I, std::span<const Rational> point) {
  return std::all_of(I.generators().begin(), I.generators().end(),
                     [&](const Poly& g) { return g.evaluate(point) == 0; });
}

namespace {

CruxVerdict crux_with(const ArtinianGradedModule& N, int i, const std::function<DualIdeal(int)>& locus) {
  CruxVerdict v;
  if (i < N.initial_degree() || i + 1 >= N.top_degree()) {
    v.reason = "degree " + std::to_string(i) + " out of range";
    return v;
  }
  const long long h0 = N.dim(i), h1 = N.dim(i + 1), h2 = N.dim(i + 2);
  if (!(h0 <= h1 && h1 <= h2)) {
    v.reason = "Hilbert function hypothesis h(i) <= h(i+1) <= h(i+2) fails: " + std::to_string(h0) + ", " +
               std::to_string(h1) + ", " + std::to_string(h2);
    return v;
  }
  const long long soc = socle_dims(N)[i - N.initial_degree()];
  if (soc != 0) {
    v.reason = "socle hypothesis fails: dim Soc_" + std::to_string(i) + " = " + std::to_string(soc);
    return v;
  }
  bool ok = ideal_contains(locus(i), locus(i + 1));
  v.status = ok ? CheckStatus::passed : CheckStatus::failed;
  v.reason = ok ? "I(L_" + std::to_string(i + 1) + ") is contained in I(L_" + std::to_string(i) + ")"
                : "I(L_" + std::to_string(i + 1) + ") is not contained in I(L_" + std::to_string(i) + ")";
  return v;
}

}  // namespace

CruxVerdict check_crux(const ArtinianGradedModule& N, int i) {
  return crux_with(N, i, [&](int j) { return locus_ideal(N, j); });
}

CruxVerdict check_crux(const ArtinianGradedModule& N, int i, const std::function<DualIdeal(int)>& locus) {
  return crux_with(N, i, locus);
}

SetComparison compare_loci(const DualIdeal& a, const DualIdeal& b, int points, std::uint64_t seed) {
  SetComparison cmp;
  std::mt19937_64 rng(seed);
  for (int k = 0; k < points; ++k) {
    auto p = random_point(a.nvars(), rng);
    ++cmp.points;
    if (vanishes_at(a, p) != vanishes_at(b, p)) ++cmp.disagreements;
  }
  return cmp;
}

ReducedLocusReport reduced_locus(const ArtinianGradedModule& N, int sample_points, std::uint64_t seed) {
  return reduced_locus(N, locus_ideals(N), sample_points, seed);
}

ReducedLocusReport reduced_locus(const ArtinianGradedModule& N, std::vector<DualIdeal> per_degree, int sample_points,
                                 std::uint64_t seed) {
  ReducedLocusReport rep;
  const int t0 = N.initial_degree(), c = N.top_degree(), r = N.r();
  if (per_degree.size() != static_cast<std::size_t>(c - t0))
    throw ValidationError("expected one locus ideal per degree t0..c-1");
  rep.per_degree = std::move(per_degree);
  rep.full = intersect_all(rep.per_degree, r);
  rep.level = is_level(N);
  auto ideal_at = [&](int j) { return j < t0 || j >= c ? DualIdeal::unit(r) : rep.per_degree[j - t0]; };

  ReductionCheck& lv = rep.level_reduction;
  auto dims = N.dims();
  if (!rep.level) {
    lv.reason = "module is not level";
  } else if (!is_unimodal(dims)) {
    lv.reason = "Hilbert function is not unimodal";
  } else {
    lv.applicable = true;
    lv.degree = t0 + first_peak(dims);
    lv.predicted = intersect_all({ideal_at(lv.degree - 1), ideal_at(lv.degree)}, r);
    lv.scheme_equal = ideal_equal(lv.predicted, rep.full);
    lv.set = compare_loci(lv.predicted, rep.full, sample_points, seed);
  }

  ReductionCheck& sg = rep.symmetric_reduction;
  if (!N.provenance()) {
    sg.reason = "module has no presentation";
  } else if (N.provenance()->a().front() != 0) {
    sg.reason = "a_1 != 0";
  } else if (!rep.level) {
    sg.reason = "module is not level";
  } else if (!check_symgor_shape(N).holds()) {
    sg.reason = "resolution is not self-dual with antisymmetric middle map";
  } else {
    sg.applicable = true;
    sg.degree = (c - t0 - 1) / 2 + t0;
    sg.predicted = ideal_at(sg.degree);
    sg.scheme_equal = ideal_equal(sg.predicted, rep.full);
    sg.set = compare_loci(sg.predicted, rep.full, sample_points, seed);
  }
  return rep;
}

TransposeVerdict dual_transpose_identity(const ArtinianGradedModule& N, int i) {
  const int t0 = N.initial_degree(), c = N.top_degree();
  if (i < t0 || i >= c) throw ValidationError("degree " + std::to_string(i) + " outside the maps of the dual");
  return dual_transpose_identity(N, i, locus_ideal(N, t0 + c - i - 1));
}

TransposeVerdict dual_transpose_identity(const ArtinianGradedModule& N, int i, const DualIdeal& module_side) {
  const int t0 = N.initial_degree(), c = N.top_degree();
  if (i < t0 || i >= c) throw ValidationError("degree " + std::to_string(i) + " outside the maps of the dual");
  TransposeVerdict v;
  v.dual_side = locus_ideal(dual_module(N), i);
  v.module_side = module_side;
  v.equal = ideal_equal(v.dual_side, v.module_side);
  return v;
}

}  // namespace lefschetz
