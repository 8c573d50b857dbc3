#include "lefschetz/presentation.hpp"

#include <algorithm>
#include <numeric>

namespace lefschetz {

namespace {

std::size_t count_monomials(int nvars, int degree) {
  if (degree < 0) return 0;
  // C(degree + nvars - 1, nvars - 1)
  std::size_t r = 1;
  for (int i = 1; i < nvars; ++i) r = r * static_cast<std::size_t>(degree + i) / static_cast<std::size_t>(i);
  return r;
}

std::string join(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

}  // namespace

GradedPresentation::GradedPresentation(std::vector<std::string> vars, std::vector<int> a, std::vector<int> b,
                                       PolyMatrix entries)
    : vars_(std::move(vars)), a_(std::move(a)), b_(std::move(b)), entries_(std::move(entries)) {}

int GradedPresentation::d() const {
  return std::accumulate(b_.begin(), b_.end(), 0) - std::accumulate(a_.begin(), a_.end(), 0);
}

int GradedPresentation::dprime() const {
  int s = 0;
  for (int i = 0; i < n(); ++i) s += b_[i] - a_[i];
  return s;
}

bool GradedPresentation::operator==(const GradedPresentation& o) const {
  if (vars_ != o.vars_ || a_ != o.a_ || b_ != o.b_) return false;
  for (int i = 0; i < n(); ++i)
    for (int j = 0; j < n() + 2; ++j)
      if (entry(i, j) != o.entry(i, j)) return false;
  return true;
}

std::optional<int> codim3_violation(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
    if (b[i] <= a[i]) return static_cast<int>(i);
  return std::nullopt;
}

GradedPresentation validate(const RawPresentation& raw) {
  const int n = static_cast<int>(raw.a.size());
  if (raw.vars.size() != 3)
    throw ValidationError("presentations live over K[x,y,z]: expected 3 variables, got " +
                          std::to_string(raw.vars.size()));
  if (n < 1) throw ValidationError("presentation needs n >= 1 rows (a is empty)");
  if (static_cast<int>(raw.b.size()) != n + 2)
    throw ValidationError("dimension mismatch: a has " + std::to_string(n) + " entries so b needs " +
                          std::to_string(n + 2) + ", got " + std::to_string(raw.b.size()));
  if (static_cast<int>(raw.entries.size()) != n)
    throw ValidationError("dimension mismatch: expected " + std::to_string(n) + " rows of entries, got " +
                          std::to_string(raw.entries.size()));
  for (int i = 0; i < n; ++i)
    if (static_cast<int>(raw.entries[i].size()) != n + 2)
      throw ValidationError("dimension mismatch: row " + std::to_string(i + 1) + " has " +
                            std::to_string(raw.entries[i].size()) + " entries, expected " + std::to_string(n + 2));
  if (!std::is_sorted(raw.a.begin(), raw.a.end()))
    throw ValidationError("twists a must be non-decreasing: " + join(raw.a));
  if (!std::is_sorted(raw.b.begin(), raw.b.end()))
    throw ValidationError("twists b must be non-decreasing: " + join(raw.b));
  if (auto i = codim3_violation(raw.a, raw.b))
    throw ValidationError("b_" + std::to_string(*i + 1) + " = " + std::to_string(raw.b[*i]) + " <= a_" +
                          std::to_string(*i + 1) + " = " + std::to_string(raw.a[*i]) +
                          ": phi has a zero block forcing the ideal of maximal minors to codimension at most 2 "
                          "(need b_i > a_i for i = 1..n)");

  PolyMatrix m(n, n + 2, 3);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n + 2; ++j) {
      Poly p;
      try {
        p = parse_poly(raw.entries[i][j], raw.vars, /*require_homogeneous=*/true);
      } catch (const ValidationError& e) {
        throw ValidationError("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): " + e.what());
      }
      int expected = raw.b[j] - raw.a[i];
      if (!p.is_zero() && (expected <= 0 || *p.degree() != expected))
        throw ValidationError("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") = '" +
                              raw.entries[i][j] + "' has degree " + std::to_string(*p.degree()) +
                              ", expected e_ij = " + std::to_string(expected) +
                              (expected <= 0 ? " (entries with e_ij <= 0 must be 0)" : ""));
      m(i, j) = std::move(p);
    }
  return GradedPresentation(raw.vars, raw.a, raw.b, std::move(m));
}

Poly maximal_minor(const GradedPresentation& p, int r, int s) {
  const int n = p.n();
  if (r < 0 || s < 0 || r >= n + 2 || s >= n + 2)
    throw ValidationError("minor column index out of range 0.." + std::to_string(n + 1));
  if (r == s) throw ValidationError("minor needs two distinct deleted columns");
  PolyMatrix sub(n, n, p.nvars());
  int col = 0;
  for (int j = 0; j < n + 2; ++j) {
    if (j == r || j == s) continue;
    for (int i = 0; i < n; ++i) sub(i, col) = p.entry(i, j);
    ++col;
  }
  return poly_determinant(sub);
}

// ---------------------------------------------------------- FreeDegreeBasis

FreeDegreeBasis::FreeDegreeBasis(int nvars, const std::vector<int>& twists, int t)
    : nvars_(nvars), twists_(twists), t_(t) {
  offsets_.reserve(twists.size());
  for (int tw : twists) {
    offsets_.push_back(size_);
    size_ += count_monomials(nvars, t - tw);
  }
}

std::size_t FreeDegreeBasis::index(int generator, const Monomial& m) const {
  return offsets_[generator] + monomial_rank(m);
}

std::pair<int, Monomial> FreeDegreeBasis::element(std::size_t index) const {
  int g = static_cast<int>(std::upper_bound(offsets_.begin(), offsets_.end(), index) - offsets_.begin()) - 1;
  auto monos = monomials_of_degree(nvars_, t_ - twists_[g]);
  return {g, monos.at(index - offsets_[g])};
}

// ---------------------------------------------------------------- DegreeMap

std::size_t DegreeMap::rank() const {
  SparseEchelon e(target_dim);
  for (const auto& v : images) e.insert(v);
  return e.rank();
}

ScalarMatrix DegreeMap::dense() const {
  ScalarMatrix m(target_dim, source_dim);
  for (std::size_t c = 0; c < images.size(); ++c)
    for (const auto& [r, v] : images[c]) m(r, c) = v;
  return m;
}

DegreeMap degree_map(const PolyMatrix& map, const std::vector<int>& source_twists,
                     const std::vector<int>& target_twists, int t) {
  const int nv = map.nvars();
  FreeDegreeBasis source(nv, source_twists, t), target(nv, target_twists, t);
  DegreeMap out{source.size(), target.size(), {}};
  out.images.reserve(source.size());
  for (std::size_t j = 0; j < source_twists.size(); ++j) {
    for (const auto& m : monomials_of_degree(nv, t - source_twists[j])) {
      std::vector<std::pair<std::size_t, Rational>> v;
      for (std::size_t i = 0; i < target_twists.size(); ++i) {
        const Poly& f = map(i, j);
        for (const auto& term : f.terms()) {
          Monomial prod = term.mono * m;
          if (prod.degree() != t - target_twists[i])
            throw Error("degree_map: entry degree inconsistent with twists");
          v.emplace_back(target.index(static_cast<int>(i), prod), term.coef);
        }
      }
      std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      SparseVector merged;
      for (auto& [k, c] : v) {
        if (!merged.empty() && merged.back().first == k)
          merged.back().second += c;
        else
          merged.emplace_back(k, std::move(c));
      }
      std::erase_if(merged, [](const auto& e) { return e.second == 0; });
      out.images.push_back(std::move(merged));
    }
  }
  return out;
}

std::size_t cokernel_dim(const GradedPresentation& p, int t) {
  DegreeMap phi = degree_map(p.entries(), p.b(), p.a(), t);
  return phi.target_dim - phi.rank();
}

ArtinianVerdict is_artinian(const GradedPresentation& p) {
  ArtinianVerdict v;
  const int an = p.a().back();
  v.top = std::max(an, p.d() - p.a().front() - 2);
  for (int t = 0; t <= v.top; ++t) v.dims.push_back(cokernel_dim(p, t));
  v.artinian = v.dims[v.top] == 0;
  if (v.artinian) {
    for (int t = an; t <= v.top; ++t)
      if (v.dims[t] == 0) {
        v.witness_degree = t;
        break;
      }
  } else {
    v.witness_degree = v.top;
    v.witness_dim = v.dims[v.top];
  }
  return v;
}

}  // namespace lefschetz
