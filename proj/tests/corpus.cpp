#include "corpus.hpp"

#include <random>

#include "lefschetz/families.hpp"

namespace corpus {

using namespace lefschetz;

std::vector<Entry> families() {
  return {
      {"ci(2,2,2)", make_complete_intersection(2, 2, 2)},
      {"ci(2,3,4)", make_complete_intersection(2, 3, 4)},
      {"ci(3,3,3)", make_complete_intersection(3, 3, 3)},
      {"circulant(3,2)", make_circulant(3, 2)},
      {"circulant(3,3)", make_circulant(3, 3)},
      {"circulant(4,2)", make_circulant(4, 2)},
  };
}

namespace {

Poly random_form(int degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-3, 3);
  std::bernoulli_distribution keep(0.45);
  for (;;) {
    std::vector<Term> terms;
    for (const auto& m : monomials_of_degree(3, degree))
      if (keep(rng)) terms.push_back({m, Rational(coef(rng))});
    Poly f = Poly::from_terms(3, std::move(terms));
    if (!f.is_zero()) return f;
  }
}

std::vector<int> random_sorted(int count, int lo, int hi, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(lo, hi);
  std::vector<int> v;
  for (int k = 0; k < count; ++k) v.push_back(d(rng));
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

std::vector<Entry> random_presentations(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Entry> out;
  const std::vector<std::vector<int>> shapes = {{0}, {0, 0}, {0, 1}, {1}, {0, 0, 0}};
  int attempt = 0;
  while (static_cast<int>(out.size()) < count) {
    ++attempt;
    const std::vector<int>& a = shapes[attempt % shapes.size()];
    const int n = static_cast<int>(a.size());
    std::vector<int> b = random_sorted(n + 2, 1, n == 1 ? 5 : 3, rng);
    int d = 0;
    for (int x : b) d += x;
    for (int x : a) d -= x;
    if (d > 14 || codim3_violation(a, b)) continue;
    PolyMatrix m(n, n + 2, 3);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n + 2; ++j)
        if (b[j] > a[i]) m(i, j) = random_form(b[j] - a[i], rng);
    GradedPresentation p(default_varnames(3), a, b, m);
    if (!is_artinian(p).artinian) continue;
    out.push_back({"random#" + std::to_string(out.size()) + " a=" + std::to_string(n) + "x" +
                       std::to_string(a.back()) + " d=" + std::to_string(d),
                   p});
  }
  return out;
}

std::vector<Entry> full(int random_count) {
  auto all = families();
  for (auto& e : random_presentations(random_count)) all.push_back(std::move(e));
  return all;
}

}  // namespace corpus
