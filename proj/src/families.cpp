#include "lefschetz/families.hpp"

namespace lefschetz {

namespace {

std::vector<Poly> default_forms(int q) {
  std::vector<Poly> f;
  for (int v = 0; v < 3; ++v) f.push_back(Poly::variable(3, v).pow(q));
  return f;
}

}  // namespace

GradedPresentation make_complete_intersection(int q1, int q2, int q3) {
  if (!(2 <= q1 && q1 <= q2 && q2 <= q3))
    throw ValidationError("complete intersection needs 2 <= q1 <= q2 <= q3, got (" + std::to_string(q1) + "," +
                          std::to_string(q2) + "," + std::to_string(q3) + ")");
  PolyMatrix m(1, 3, 3);
  const int q[3] = {q1, q2, q3};
  for (int v = 0; v < 3; ++v) m(0, v) = Poly::variable(3, v).pow(q[v]);
  return GradedPresentation(default_varnames(3), {0}, {q1, q2, q3}, std::move(m));
}

GradedPresentation make_circulant(int q, int n, const std::optional<std::vector<std::string>>& forms) {
  if (q < 3) throw ValidationError("circulant family needs q >= 3, got " + std::to_string(q));
  if (n <= 1) throw ValidationError("circulant family needs n > 1, got " + std::to_string(n));
  auto vars = default_varnames(3);
  std::vector<Poly> f = default_forms(q);
  if (forms) {
    if (forms->size() != 3) throw ValidationError("circulant family needs exactly three forms");
    for (int k = 0; k < 3; ++k) {
      f[k] = parse_poly((*forms)[k], vars, true);
      if (f[k].is_zero() || *f[k].degree() != q)
        throw ValidationError("form f" + std::to_string(k + 1) + " must be homogeneous of degree " + std::to_string(q));
    }
  }
  PolyMatrix m(n, n + 2, 3);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < 3; ++k) m(i, i + k) = f[k];
  return GradedPresentation(vars, std::vector<int>(n, 0), std::vector<int>(n + 2, q), std::move(m));
}

}  // namespace lefschetz
