#include "lefschetz/module.hpp"

#include <algorithm>
#include <sstream>

#include "lefschetz/nll.hpp"

namespace lefschetz {

// --------------------------------------------------------------- LinearForm

LinearForm::LinearForm(std::vector<Rational> c) : coeffs(std::move(c)) {
  if (coeffs.empty() || std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& x) { return x == 0; }))
    throw ValidationError("linear form must have a nonzero coefficient");
}

std::string LinearForm::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) s += ",";
    s += lefschetz::to_string(coeffs[i]);
  }
  return s;
}

// ----------------------------------------------------- ArtinianGradedModule

ArtinianGradedModule::ArtinianGradedModule(int r, int t0, std::vector<std::size_t> dims,
                                           std::vector<std::vector<ScalarMatrix>> structure,
                                           std::optional<GradedPresentation> provenance)
    : r_(r), t0_(t0), dims_(std::move(dims)), structure_(std::move(structure)), provenance_(std::move(provenance)) {
  if (r_ < 1) throw ValidationError("module needs at least one variable");
  if (dims_.empty()) throw ValidationError("module has no degrees");
  if (dims_.back() == 0) throw ValidationError("top degree component is zero");
  if (dims_.front() == 0) throw ValidationError("initial degree component is zero");
  if (static_cast<int>(structure_.size()) != r_)
    throw ValidationError("expected structure matrices for " + std::to_string(r_) + " variables, got " +
                          std::to_string(structure_.size()));
  const std::size_t maps = dims_.size() - 1;
  for (int i = 0; i < r_; ++i) {
    if (structure_[i].size() != maps)
      throw ValidationError("variable " + std::to_string(i + 1) + ": expected " + std::to_string(maps) +
                            " matrices, got " + std::to_string(structure_[i].size()));
    for (std::size_t k = 0; k < maps; ++k) {
      const ScalarMatrix& x = structure_[i][k];
      if (x.rows() != dims_[k + 1] || x.cols() != dims_[k]) {
        std::ostringstream msg;
        msg << "X_{" << i + 1 << "," << t0_ + static_cast<int>(k) << "} has shape " << x.rows() << "x" << x.cols()
            << ", expected " << dims_[k + 1] << "x" << dims_[k];
        throw ValidationError(msg.str());
      }
    }
  }
  for (std::size_t k = 0; k + 1 < maps; ++k)
    for (int i = 0; i < r_; ++i)
      for (int l = i + 1; l < r_; ++l) {
        ScalarMatrix lhs = structure_[i][k + 1] * structure_[l][k];
        ScalarMatrix rhs = structure_[l][k + 1] * structure_[i][k];
        for (std::size_t row = 0; row < lhs.rows(); ++row)
          for (std::size_t col = 0; col < lhs.cols(); ++col)
            if (lhs(row, col) != rhs(row, col)) {
              std::ostringstream msg;
              msg << "structure matrices do not commute: i=" << i + 1 << ", k=" << l + 1
                  << ", j=" << t0_ + static_cast<int>(k) << ", entry (" << row + 1 << "," << col + 1 << "): "
                  << lefschetz::to_string(lhs(row, col)) << " != " << lefschetz::to_string(rhs(row, col));
              throw ValidationError(msg.str());
            }
      }
}

std::size_t ArtinianGradedModule::dim(int t) const {
  if (t < t0_ || t > top_degree()) return 0;
  return dims_[t - t0_];
}

std::vector<long long> ArtinianGradedModule::dims() const { return {dims_.begin(), dims_.end()}; }

ScalarMatrix ArtinianGradedModule::structure(int var, int t) const {
  if (var < 0 || var >= r_) throw ValidationError("variable index out of range");
  if (t < t0_ || t >= top_degree()) return ScalarMatrix(dim(t + 1), dim(t));
  return structure_[var][t - t0_];
}

bool ArtinianGradedModule::operator==(const ArtinianGradedModule& o) const {
  return r_ == o.r_ && t0_ == o.t0_ && dims_ == o.dims_ && structure_ == o.structure_;
}

// -------------------------------------------------------- construction

ArtinianGradedModule module_from_presentation(const GradedPresentation& p) {
  auto verdict = is_artinian(p);
  if (!verdict.artinian)
    throw ValidationError("cokernel is not of finite length: dim M_" + std::to_string(verdict.witness_degree) +
                          " = " + std::to_string(verdict.witness_dim));
  const int nv = p.nvars();
  int t0 = 0, c = p.socle_bound();
  while (t0 <= c && verdict.dims[t0] == 0) ++t0;
  while (c >= t0 && verdict.dims[c] == 0) --c;
  if (t0 > c) throw ValidationError("cokernel is zero");

  struct Degree {
    SparseEchelon image{0};
    std::vector<std::size_t> basis;  // F_0 indices of the quotient basis
    std::vector<long> position;      // F_0 index -> basis position or -1
  };
  std::vector<Degree> deg;
  std::vector<std::size_t> dims;
  for (int t = t0; t <= c; ++t) {
    DegreeMap phi = degree_map(p.entries(), p.b(), p.a(), t);
    Degree d{SparseEchelon(phi.target_dim), {}, std::vector<long>(phi.target_dim, -1)};
    for (auto& v : phi.images) d.image.insert(std::move(v));
    for (std::size_t k = 0; k < phi.target_dim; ++k)
      if (!d.image.is_pivot(k)) {
        d.position[k] = static_cast<long>(d.basis.size());
        d.basis.push_back(k);
      }
    dims.push_back(d.basis.size());
    deg.push_back(std::move(d));
  }

  std::vector<std::vector<ScalarMatrix>> structure(nv);
  for (int t = t0; t < c; ++t) {
    FreeDegreeBasis src(nv, p.a(), t), dst(nv, p.a(), t + 1);
    const Degree& from = deg[t - t0];
    const Degree& to = deg[t + 1 - t0];
    for (int v = 0; v < nv; ++v) {
      ScalarMatrix x(to.basis.size(), from.basis.size());
      for (std::size_t col = 0; col < from.basis.size(); ++col) {
        auto [g, m] = src.element(from.basis[col]);
        Monomial shifted = m * Monomial::variable(nv, v);
        SparseVector image = to.image.reduce({{dst.index(g, shifted), Rational(1)}});
        for (const auto& [k, val] : image) x(static_cast<std::size_t>(to.position[k]), col) = val;
      }
      structure[v].push_back(std::move(x));
    }
  }
  return ArtinianGradedModule(nv, t0, std::move(dims), std::move(structure), p);
}

// ------------------------------------------------------ Lefschetz elements

ScalarMatrix multiplication_matrix(const ArtinianGradedModule& N, const LinearForm& l, int j) {
  if (l.nvars() != N.r())
    throw ValidationError("linear form has " + std::to_string(l.nvars()) + " coefficients, module has " +
                          std::to_string(N.r()) + " variables");
  ScalarMatrix out(N.dim(j + 1), N.dim(j));
  if (out.empty()) return out;
  for (int i = 0; i < N.r(); ++i)
    if (l.coeffs[i] != 0) out = out + N.structure(i, j) * l.coeffs[i];
  return out;
}

LefschetzCheck is_lefschetz_element(const ArtinianGradedModule& N, const LinearForm& l) {
  LefschetzCheck check;
  for (int j = N.initial_degree(); j < N.top_degree(); ++j) {
    ScalarMatrix x = multiplication_matrix(N, l, j);
    if (matrix_rank(x) != std::min(x.rows(), x.cols())) check.failing_degrees.push_back(j);
  }
  check.is_lefschetz = check.failing_degrees.empty();
  return check;
}

LinearForm random_linear_form(int r, std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  for (;;) {
    std::vector<Rational> c;
    bool nonzero = false;
    for (int i = 0; i < r; ++i) {
      c.emplace_back(dist(rng));
      nonzero = nonzero || c.back() != 0;
    }
    if (nonzero) return LinearForm(std::move(c));
  }
}

std::string to_string(WlpStatus s) {
  switch (s) {
    case WlpStatus::has_wlp: return "HasWLP";
    case WlpStatus::no_wlp: return "NoWLP";
    case WlpStatus::inconclusive: return "Inconclusive";
  }
  return "?";
}

WlpVerdict wlp_decide(const ArtinianGradedModule& N, int trials, std::uint64_t seed) {
  if (trials < 1) throw ValidationError("trials must be at least 1");
  WlpVerdict v;
  std::mt19937_64 rng(seed);
  std::vector<int> failing;
  for (int k = 0; k < trials; ++k) {
    LinearForm l = random_linear_form(N.r(), rng);
    ++v.trials_used;
    LefschetzCheck check = is_lefschetz_element(N, l);
    if (check.is_lefschetz) {
      v.status = WlpStatus::has_wlp;
      v.witness = l;
      v.sampled_failures.clear();
      return v;
    }
    for (int j : check.failing_degrees)
      if (std::find(failing.begin(), failing.end(), j) == failing.end()) failing.push_back(j);
    v.sampled_failures.emplace_back(l.to_string(), check.failing_degrees);
  }
  std::sort(failing.begin(), failing.end());
  for (int j : failing)
    if (locus_ideal(N, j).is_zero()) {
      v.status = WlpStatus::no_wlp;
      v.certificate = j;
      return v;
    }
  v.status = WlpStatus::inconclusive;
  return v;
}

// ------------------------------------------------------ duality and socle

ArtinianGradedModule dual_module(const ArtinianGradedModule& N) {
  const int t0 = N.initial_degree(), c = N.top_degree();
  std::vector<std::size_t> dims;
  for (int s = t0; s <= c; ++s) dims.push_back(N.dim(t0 + c - s));
  std::vector<std::vector<ScalarMatrix>> structure(N.r());
  for (int i = 0; i < N.r(); ++i)
    for (int s = t0; s < c; ++s) structure[i].push_back(N.structure(i, t0 + c - s - 1).transposed());
  return ArtinianGradedModule(N.r(), t0, std::move(dims), std::move(structure));
}

std::vector<long long> socle_dims(const ArtinianGradedModule& N) {
  std::vector<long long> out;
  for (int t = N.initial_degree(); t <= N.top_degree(); ++t) {
    const std::size_t n = N.dim(t);
    if (t == N.top_degree()) {
      out.push_back(static_cast<long long>(n));
      continue;
    }
    std::vector<ScalarMatrix> xs;
    for (int i = 0; i < N.r(); ++i) xs.push_back(N.structure(i, t));
    std::vector<const ScalarMatrix*> blocks;
    for (const auto& x : xs) blocks.push_back(&x);
    out.push_back(static_cast<long long>(n - matrix_rank(stack_rows(blocks, n))));
  }
  return out;
}

bool generated_in_initial_degree(const ArtinianGradedModule& N) {
  for (int t = N.initial_degree(); t < N.top_degree(); ++t) {
    std::vector<ScalarMatrix> xs;
    for (int i = 0; i < N.r(); ++i) xs.push_back(N.structure(i, t));
    std::vector<const ScalarMatrix*> blocks;
    for (const auto& x : xs) blocks.push_back(&x);
    if (matrix_rank(stack_cols(blocks, N.dim(t + 1))) != N.dim(t + 1)) return false;
  }
  return true;
}

bool is_level(const ArtinianGradedModule& N) {
  if (!generated_in_initial_degree(N)) return false;
  auto soc = socle_dims(N);
  return std::all_of(soc.begin(), soc.end() - 1, [](long long s) { return s == 0; });
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::passed: return "passed";
    case CheckStatus::failed: return "failed";
    case CheckStatus::skipped: return "skipped";
  }
  return "?";
}

PropagationReport check_propagation(const ArtinianGradedModule& N, const LinearForm& l) {
  PropagationReport rep;
  const int t0 = N.initial_degree(), c = N.top_degree();
  std::vector<bool> surj, inj;
  for (int t = t0; t < c; ++t) {
    ScalarMatrix x = multiplication_matrix(N, l, t);
    std::size_t rank = matrix_rank(x);
    surj.push_back(rank == x.rows());
    inj.push_back(rank == x.cols());
    if (surj.back()) rep.surjective_degrees.push_back(t);
    if (inj.back()) rep.injective_degrees.push_back(t);
  }
  const int maps = c - t0;
  if (generated_in_initial_degree(N)) {
    rep.surjective_upward = CheckStatus::passed;
    for (int k = 0; k + 1 < maps; ++k)
      if (surj[k] && !surj[k + 1]) {
        rep.surjective_upward = CheckStatus::failed;
        rep.counterexamples.push_back("surjective in degree " + std::to_string(t0 + k) + " but not in degree " +
                                      std::to_string(t0 + k + 1));
      }
  }
  if (is_level(N)) {
    rep.injective_downward = CheckStatus::passed;
    for (int k = 1; k < maps; ++k)
      if (inj[k] && !inj[k - 1]) {
        rep.injective_downward = CheckStatus::failed;
        rep.counterexamples.push_back("injective in degree " + std::to_string(t0 + k) + " but not in degree " +
                                      std::to_string(t0 + k - 1));
      }
  }
  return rep;
}

SymGorShape check_symgor_shape(const ArtinianGradedModule& N) {
  if (!N.provenance())
    throw ValidationError("symmetric Gorenstein shape check not applicable: module has no presentation");
  return check_symgor_shape(build_resolution(*N.provenance()));
}

}  // namespace lefschetz
