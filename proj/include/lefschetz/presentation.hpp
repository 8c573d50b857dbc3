#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lefschetz/matrix.hpp"
#include "lefschetz/poly.hpp"

namespace lefschetz {

/// Presentation as read from a file, before any checking.
struct RawPresentation {
  std::vector<std::string> vars{"x", "y", "z"};
  std::vector<int> a;
  std::vector<int> b;
  std::vector<std::vector<std::string>> entries;
};

/// A validated graded map phi: ⊕_{j=1}^{n+2} R(-b_j) -> ⊕_{i=1}^{n} R(-a_i)
/// over R = K[x,y,z]. Indices are zero-based in code; entry (i,j) is zero or
/// homogeneous of degree b_j - a_i > 0.
class GradedPresentation {
 public:
  GradedPresentation(std::vector<std::string> vars, std::vector<int> a, std::vector<int> b, PolyMatrix entries);

  int n() const { return static_cast<int>(a_.size()); }
  int nvars() const { return static_cast<int>(vars_.size()); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<int>& a() const { return a_; }
  const std::vector<int>& b() const { return b_; }
  const PolyMatrix& entries() const { return entries_; }
  const Poly& entry(int i, int j) const { return entries_(i, j); }

  /// d = Σ b_j - Σ a_i
  int d() const;
  /// d' = Σ_{i<n} (b_i - a_i)
  int dprime() const;
  int entry_degree(int i, int j) const { return b_[j] - a_[i]; }
  /// Upper bound for the top nonzero degree of an Artinian cokernel: d - a_1 - 3.
  int socle_bound() const { return d() - a_.front() - 3; }

  bool operator==(const GradedPresentation& o) const;

 private:
  std::vector<std::string> vars_;
  std::vector<int> a_, b_;
  PolyMatrix entries_;
};

/// First index i (zero-based) with b_i <= a_i, if any. Such an index forces
/// an (n-i) x (i+1) block of zeros and codimension at most 2.
std::optional<int> codim3_violation(const std::vector<int>& a, const std::vector<int>& b);

/// Parses and checks a raw presentation. Throws ValidationError on shape
/// mismatch, unsorted twists, b_i <= a_i, or an entry of the wrong degree.
GradedPresentation validate(const RawPresentation& raw);

/// Determinant of phi with (zero-based) columns r and s deleted.
Poly maximal_minor(const GradedPresentation& p, int r, int s);

/// Basis of a graded free module ⊕ R(-twist_k) in degree t, ordered by
/// (generator, descending graded-lex monomial).
class FreeDegreeBasis {
 public:
  FreeDegreeBasis(int nvars, const std::vector<int>& twists, int t);

  std::size_t size() const { return size_; }
  /// Index of generator k times monomial m (m of degree t - twist_k).
  std::size_t index(int generator, const Monomial& m) const;
  std::pair<int, Monomial> element(std::size_t index) const;

 private:
  int nvars_;
  std::vector<int> twists_;
  int t_;
  std::vector<std::size_t> offsets_;
  std::size_t size_ = 0;
};

/// Degree-t component of a graded map given by a polynomial matrix
/// (target x source); images of the source basis as sparse target vectors.
struct DegreeMap {
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  std::vector<SparseVector> images;

  std::size_t rank() const;
  ScalarMatrix dense() const;
};

DegreeMap degree_map(const PolyMatrix& map, const std::vector<int>& source_twists,
                     const std::vector<int>& target_twists, int t);

/// dim_K (coker phi)_t computed as dim (F_0)_t - rank(phi_t).
std::size_t cokernel_dim(const GradedPresentation& p, int t);

struct ArtinianVerdict {
  bool artinian = false;
  int top = 0;                  ///< T = max(a_n, d - a_1 - 2)
  std::vector<std::size_t> dims;  ///< dim M_t for t = 0..T
  /// First t >= a_n with dim M_t = 0 when Artinian; otherwise T.
  int witness_degree = 0;
  std::size_t witness_dim = 0;  ///< dim M_T when not Artinian
};

ArtinianVerdict is_artinian(const GradedPresentation& p);

}  // namespace lefschetz
