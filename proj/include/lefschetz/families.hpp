#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lefschetz/presentation.hpp"

namespace lefschetz {

/// n = 1, a = [0], b = [q1, q2, q3], entries x^q1, y^q2, z^q3.
/// Requires 2 <= q1 <= q2 <= q3.
GradedPresentation make_complete_intersection(int q1, int q2, int q3);

/// The n x (n+2) banded matrix whose row i carries (f1, f2, f3) in columns
/// i, i+1, i+2; a = [0]^n, b = [q]^(n+2). Requires q >= 3 and n > 1; the
/// forms default to x^q, y^q, z^q and must be homogeneous of degree q.
GradedPresentation make_circulant(int q, int n, const std::optional<std::vector<std::string>>& forms = std::nullopt);

}  // namespace lefschetz
