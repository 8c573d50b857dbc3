#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "lefschetz/families.hpp"
#include "lefschetz/io.hpp"
#include "lefschetz/nll.hpp"
#include "test_util.hpp"

using namespace lefschetz;
using testutil::A;
using testutil::PM;

namespace {

DualIdeal ideal(std::initializer_list<const char*> gens) {
  std::vector<Poly> g;
  for (const char* s : gens) g.push_back(A(s));
  return DualIdeal(3, g);
}

// Ideal of all maximal minors, each expanded separately.
DualIdeal minors_ideal(const PolyMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  const bool tall = rows > cols;
  const std::size_t big = tall ? rows : cols, s = tall ? cols : rows;
  std::vector<Poly> gens;
  std::vector<bool> pick(big, false);
  std::fill(pick.begin(), pick.begin() + s, true);
  do {
    PolyMatrix sub(s, s, m.nvars());
    std::size_t k = 0;
    for (std::size_t idx = 0; idx < big; ++idx) {
      if (!pick[idx]) continue;
      for (std::size_t l = 0; l < s; ++l) {
        if (tall) sub(k, l) = m(idx, l);
        else sub(l, k) = m(l, idx);
      }
      ++k;
    }
    Poly det = poly_determinant(sub);
    if (!det.is_zero()) gens.push_back(det);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return DualIdeal(m.nvars(), gens);
}

PolyMatrix random_linear_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-3, 3);
  PolyMatrix m(rows, cols, 3);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      for (int v = 0; v < 3; ++v) m(i, j) += Poly::variable(3, v) * Rational(coef(rng));
  return m;
}

ArtinianGradedModule ci(int a, int b, int c) { return module_from_presentation(make_complete_intersection(a, b, c)); }

}  // namespace

TEST_SUITE("nll") {

TEST_CASE("complete intersection loci") {
  ArtinianGradedModule N = ci(2, 2, 2);
  auto I = locus_ideals(N);
  REQUIRE(I.size() == 3);
  CHECK(ideal_equal(I[0], ideal({"a1", "a2", "a3"})));
  CHECK(ideal_equal(I[1], ideal({"a1*a2*a3"})));
  CHECK(ideal_equal(I[2], ideal({"a1", "a2", "a3"})));
  CHECK(ideal_equal(nll_ideal(N), ideal({"a1*a2*a3"})));
  CHECK(locus_ideal(N, 3).is_unit());
  CHECK(locus_ideal(N, -1).is_unit());
  LocusMatrix L = locus_matrix(N, 1);
  CHECK(L.minor_size == 3);
  CHECK(L.matrix(0, 1) == A("a1"));
}

TEST_CASE("span of a single 5x5 minor") {
  PolyMatrix m5 = PM({{"2*x", "2*x - 2*y + z", "-x - 2*y - z", "-2*x + z", "-x + y + 2*z"},
                      {"-2*x + 2*y - z", "-2*x - y + z", "-y + z", "-x - 2*y - z", "2*x + 2*y + z"},
                      {"-x - y - 2*z", "-2*x - y - z", "-x - y", "-y + 2*z", "-x - y - z"},
                      {"x - 2*z", "y - z", "-x - 2*z", "2*z", "2*x - 2*y + 2*z"},
                      {"-2*y", "z", "-y + z", "x - y - 2*z", "-2*y"}});
  auto span = maximal_minor_span(LocusMatrix{0, m5, 5});
  REQUIRE(span.size() == 1);
  CHECK(span[0].normalized() == poly_determinant(m5).normalized());
}

TEST_CASE("interpolated minors agree with expansion") {
  for (auto [rows, cols, seed] : {std::tuple<std::size_t, std::size_t, std::uint64_t>{7, 6, 1},
                                  {6, 8, 2},
                                  {5, 6, 3},
                                  {6, 6, 4}}) {
    CAPTURE(rows);
    CAPTURE(cols);
    PolyMatrix m = random_linear_matrix(rows, cols, seed);
    auto span = maximal_minor_span(LocusMatrix{0, m, std::min(rows, cols)});
    CHECK(ideal_equal(DualIdeal(3, span), minors_ideal(m)));
  }
  // enough minors to fill every monomial of the degree
  PolyMatrix wide = random_linear_matrix(5, 10, 5);
  CHECK(maximal_minor_span(LocusMatrix{0, wide, 5}).size() == 21);

  ArtinianGradedModule N = ci(2, 3, 4);
  for (int j : {2, 3}) {
    LocusMatrix L = locus_matrix(N, j);
    CHECK(L.minor_size == 5);
    CHECK(ideal_equal(locus_ideal(N, j), minors_ideal(L.matrix)));
  }
}

TEST_CASE("circulant peak locus") {
  ArtinianGradedModule N = module_from_presentation(make_circulant(3, 2));
  DualIdeal I4 = locus_ideal(N, 4);
  CHECK(ideal_equal(I4, ideal({"a1^9*a3^9 - 57*a1^6*a2^6*a3^6 + 30*a1^3*a2^12*a3^3 - a2^18"})));
}

TEST_CASE("minor cap") {
  ArtinianGradedModule N = module_from_presentation(make_circulant(3, 3));
  CHECK_THROWS_WITH_AS(locus_ideal(N, 2), doctest::Contains("480700 maximal minors"), SizeCapError);
  CHECK_NOTHROW(locus_ideal(N, 0));
}

TEST_CASE("degenerate loci") {
  ArtinianGradedModule zero = module_from_structure(read_json_file(testutil::data_path("zero_maps.json")));
  CHECK(locus_ideal(zero, 0).is_zero());
  CHECK(nll_ideal(zero).is_zero());
  CHECK(intersect_all({}, 3).is_unit());
  CHECK(ideal_equal(intersect_all({DualIdeal::unit(3), ideal({"a1"}), ideal({"a2"})}, 3), ideal({"a1*a2"})));
  std::vector<Rational> pt{0, 5, 1};
  CHECK(vanishes_at(ideal({"a1", "a1*a2"}), pt));
  CHECK_FALSE(vanishes_at(ideal({"a2"}), pt));
  CHECK(vanishes_at(DualIdeal::zero(3), pt));
}

TEST_CASE("crux containments") {
  ArtinianGradedModule N = ci(2, 2, 2);
  CruxVerdict v0 = check_crux(N, 0);
  CHECK(v0.status == CheckStatus::passed);
  CruxVerdict v1 = check_crux(N, 1);
  CHECK(v1.status == CheckStatus::skipped);
  CHECK(v1.reason.find("hypothesis") != std::string::npos);
  CHECK(check_crux(N, 2).status == CheckStatus::skipped);

  ArtinianGradedModule M = ci(2, 3, 4);
  CHECK(check_crux(M, 0).status == CheckStatus::passed);
  CHECK(check_crux(M, 1).status == CheckStatus::passed);
  CHECK(check_crux(M, 2).status == CheckStatus::skipped);
}

TEST_CASE("set comparison") {
  SetComparison same = compare_loci(ideal({"a1*a2"}), ideal({"a1^2*a2", "a1*a2^2"}), 50, 9);
  CHECK(same.points == 50);
  CHECK(same.equal());
  SetComparison differ = compare_loci(ideal({"a1"}), ideal({"a2"}), 200, 9);
  CHECK_FALSE(differ.equal());
}

TEST_CASE("reductions on small modules") {
  ReducedLocusReport rep = reduced_locus(ci(2, 2, 2));
  CHECK(rep.level);
  CHECK(rep.level_reduction.applicable);
  CHECK(rep.level_reduction.degree == 1);
  CHECK(rep.level_reduction.scheme_equal);
  CHECK(rep.level_reduction.set.equal());
  CHECK(rep.symmetric_reduction.applicable);
  CHECK(rep.symmetric_reduction.degree == 1);
  CHECK(rep.symmetric_reduction.scheme_equal);

  ReducedLocusReport r2 = reduced_locus(ci(2, 3, 4), 50);
  CHECK(r2.level_reduction.degree == 3);
  CHECK(r2.level_reduction.scheme_equal);
  CHECK(r2.symmetric_reduction.degree == 2);
  CHECK(r2.symmetric_reduction.scheme_equal);

  ReducedLocusReport d = reduced_locus(dual_module(ci(2, 2, 2)));
  CHECK_FALSE(d.symmetric_reduction.applicable);
  CHECK(d.symmetric_reduction.reason == "module has no presentation");
}

TEST_CASE("transpose relation with the dual") {
  for (auto N : {ci(2, 2, 2), ci(2, 3, 4), ci(3, 3, 3)})
    for (int i = N.initial_degree(); i < N.top_degree(); ++i) CHECK(dual_transpose_identity(N, i).equal);
  CHECK_THROWS_AS(dual_transpose_identity(ci(2, 2, 2), 3), ValidationError);
}

}  // TEST_SUITE
