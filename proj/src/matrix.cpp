#include "lefschetz/matrix.hpp"

#include <algorithm>
#include <iterator>

namespace lefschetz {

ScalarMatrix ScalarMatrix::identity(std::size_t n) {
  ScalarMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ScalarMatrix ScalarMatrix::transposed() const {
  ScalarMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

ScalarMatrix ScalarMatrix::operator*(const ScalarMatrix& o) const {
  if (cols_ != o.rows_) throw Error("matrix product shape mismatch");
  ScalarMatrix p(rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < o.cols_; ++c)
        if (o(k, c) != 0) p(r, c) += a * o(k, c);
    }
  return p;
}

ScalarMatrix ScalarMatrix::operator+(const ScalarMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix sum shape mismatch");
  ScalarMatrix s(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] += o.data_[i];
  return s;
}

ScalarMatrix ScalarMatrix::operator*(const Rational& c) const {
  ScalarMatrix s(*this);
  for (auto& v : s.data_) v *= c;
  return s;
}

bool ScalarMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& v) { return v == 0; });
}

bool ScalarMatrix::operator==(const ScalarMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

ScalarMatrix stack_rows(const std::vector<const ScalarMatrix*>& blocks, std::size_t cols) {
  std::size_t rows = 0;
  for (auto* b : blocks) {
    if (b->cols() != cols) throw Error("stack_rows: column mismatch");
    rows += b->rows();
  }
  ScalarMatrix m(rows, cols);
  std::size_t off = 0;
  for (auto* b : blocks) {
    for (std::size_t r = 0; r < b->rows(); ++r)
      for (std::size_t c = 0; c < cols; ++c) m(off + r, c) = (*b)(r, c);
    off += b->rows();
  }
  return m;
}

ScalarMatrix stack_cols(const std::vector<const ScalarMatrix*>& blocks, std::size_t rows) {
  std::size_t cols = 0;
  for (auto* b : blocks) {
    if (b->rows() != rows) throw Error("stack_cols: row mismatch");
    cols += b->cols();
  }
  ScalarMatrix m(rows, cols);
  std::size_t off = 0;
  for (auto* b : blocks) {
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < b->cols(); ++c) m(r, off + c) = (*b)(r, c);
    off += b->cols();
  }
  return m;
}

namespace {

std::size_t rank_over_integers(const ScalarMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    mpz_class den = 1;
    for (std::size_t c = 0; c < cols; ++c)
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = m(r, c).get_num() * (den / m(r, c).get_den());
  }
  mpz_class prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t p = rank;
    while (p < rows && a[p][col] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    const mpz_class& piv = a[rank][col];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const mpz_class f = a[i][col];
      for (std::size_t j = col + 1; j < cols; ++j) {
        mpz_class v = piv * a[i][j];
        if (f != 0) v -= f * a[rank][j];
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = piv;
    ++rank;
  }
  return rank;
}

std::size_t rank_mod_p(const ScalarMatrix& m, std::uint64_t p) {
  PrimeField f(p);
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = m(r, c) == 0 ? 0 : f.reduce(m(r, c));
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    std::uint64_t inv = f.inv(a[rank][col]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (a[i][col] == 0) continue;
      std::uint64_t factor = f.mul(a[i][col], inv);
      for (std::size_t j = col; j < cols; ++j) a[i][j] = f.sub(a[i][j], f.mul(factor, a[rank][j]));
    }
    ++rank;
  }
  return rank;
}

}  // namespace

Rational determinant(const ScalarMatrix& m) {
  if (m.rows() != m.cols()) throw ValidationError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  mpz_class scale = 1;
  for (std::size_t r = 0; r < n; ++r) {
    mpz_class den = 1;
    for (std::size_t c = 0; c < n; ++c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < n; ++c) a[r][c] = m(r, c).get_num() * (den / m(r, c).get_den());
    scale *= den;
  }
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class v = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  Rational det(a[n - 1][n - 1] * sign, scale);
  det.canonicalize();
  return det;
}

std::size_t matrix_rank(const ScalarMatrix& m, const Field& field) {
  if (m.empty()) return 0;
  if (field.kind == Field::Kind::prime) return rank_mod_p(m, field.p);
  return rank_over_integers(m);
}

// ------------------------------------------------------------ SparseEchelon

SparseVector SparseEchelon::reduce(SparseVector v) const {
  std::map<std::size_t, Rational> work;
  for (auto& [i, x] : v)
    if (x != 0) work.emplace(i, std::move(x));
  SparseVector out;
  while (!work.empty()) {
    auto it = std::prev(work.end());
    std::size_t k = it->first;
    Rational c = std::move(it->second);
    work.erase(it);
    auto row = rows_.find(k);
    if (row == rows_.end()) {
      out.emplace_back(k, std::move(c));
      continue;
    }
    for (const auto& [idx, val] : row->second) {
      if (idx == k) continue;
      auto [slot, inserted] = work.try_emplace(idx, 0);
      slot->second -= c * val;
      if (slot->second == 0) work.erase(slot);
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

bool SparseEchelon::insert(SparseVector v) {
  SparseVector r = reduce(std::move(v));
  if (r.empty()) return false;
  Rational lead = r.back().second;
  for (auto& [i, x] : r) x /= lead;
  std::size_t pivot = r.back().first;
  rows_.emplace(pivot, std::move(r));
  return true;
}

// -------------------------------------------------------------- PolyMatrix

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (cols_ != o.rows_) throw Error("polynomial matrix product shape mismatch");
  PolyMatrix p(rows_, o.cols_, std::max(nvars_, o.nvars_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < o.cols_; ++c) {
      Poly s(p.nvars_);
      for (std::size_t k = 0; k < cols_; ++k)
        if (!(*this)(r, k).is_zero() && !o(k, c).is_zero()) s += (*this)(r, k) * o(k, c);
      p(r, c) = std::move(s);
    }
  return p;
}

PolyMatrix PolyMatrix::transposed() const {
  PolyMatrix t(cols_, rows_, nvars_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool PolyMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Poly& p) { return p.is_zero(); });
}

ScalarMatrix PolyMatrix::evaluate(std::span<const Rational> point) const {
  ScalarMatrix m(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c).evaluate(point);
  return m;
}

namespace {

Poly cofactor_det(const PolyMatrix& m, std::vector<std::size_t>& rows, std::size_t col) {
  const int nv = m.nvars();
  if (col == m.cols()) return Poly::constant(nv, 1);
  Poly sum(nv);
  int sign = 1;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    std::size_t r = rows[k];
    if (!m(r, col).is_zero()) {
      rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(k));
      Poly minor = cofactor_det(m, rows, col + 1);
      rows.insert(rows.begin() + static_cast<std::ptrdiff_t>(k), r);
      if (!minor.is_zero()) {
        Poly t = m(r, col) * minor;
        sum = sign > 0 ? sum + t : sum - t;
      }
    }
    sign = -sign;
  }
  return sum;
}

Poly bareiss_det(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  const int nv = m.nvars();
  std::vector<std::vector<Poly>> a(n, std::vector<Poly>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a[r][c] = m(r, c);
  Poly prev = Poly::constant(nv, 1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a[p][k].is_zero()) ++p;
      if (p == n) return Poly(nv);
      std::swap(a[p], a[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Poly v = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        a[i][j] = k == 0 ? std::move(v) : exact_divide(v, prev);
      }
      a[i][k] = Poly(nv);
    }
    prev = a[k][k];
  }
  Poly det = a[n - 1][n - 1];
  return negate ? -det : det;
}

}  // namespace

Poly poly_determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols())
    throw ValidationError("determinant of non-square " + std::to_string(m.rows()) + "x" +
                          std::to_string(m.cols()) + " matrix");
  if (m.rows() < 5) {
    std::vector<std::size_t> rows(m.rows());
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
    return cofactor_det(m, rows, 0);
  }
  return bareiss_det(m);
}

}  // namespace lefschetz
