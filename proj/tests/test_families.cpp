#include <doctest.h>

#include "lefschetz/families.hpp"
#include "lefschetz/hilbert.hpp"
#include "test_util.hpp"

using namespace lefschetz;
using testutil::P;

TEST_SUITE("families") {

TEST_CASE("complete intersection presentation") {
  GradedPresentation p = make_complete_intersection(2, 3, 4);
  CHECK(p.n() == 1);
  CHECK(p.a() == std::vector<int>{0});
  CHECK(p.b() == std::vector<int>{2, 3, 4});
  CHECK(p.entry(0, 0) == P("x^2"));
  CHECK(p.entry(0, 1) == P("y^3"));
  CHECK(p.entry(0, 2) == P("z^4"));
  CHECK_THROWS_AS(make_complete_intersection(1, 2, 2), ValidationError);
  CHECK_THROWS_AS(make_complete_intersection(3, 2, 4), ValidationError);
}

TEST_CASE("circulant presentation") {
  GradedPresentation p = make_circulant(3, 3);
  CHECK(p.n() == 3);
  CHECK(p.a() == std::vector<int>{0, 0, 0});
  CHECK(p.b() == std::vector<int>(5, 3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 5; ++j) {
      if (j == i) CHECK(p.entry(i, j) == P("x^3"));
      else if (j == i + 1) CHECK(p.entry(i, j) == P("y^3"));
      else if (j == i + 2) CHECK(p.entry(i, j) == P("z^3"));
      else CHECK(p.entry(i, j).is_zero());
    }
  CHECK(p.d() == 15);
  CHECK(hilbert_table(p).values ==
        std::vector<long long>{3, 9, 18, 25, 30, 33, 34, 33, 30, 25, 18, 9, 3});
  CHECK(hilbert_table(make_circulant(4, 2)).values ==
        std::vector<long long>{2, 6, 12, 20, 26, 30, 32, 32, 30, 26, 20, 12, 6, 2});
}

TEST_CASE("circulant with custom forms") {
  GradedPresentation p = make_circulant(3, 2, std::vector<std::string>{"x^3", "y^3 + x*y*z", "z^3"});
  CHECK(p.entry(1, 2) == P("y^3 + x*y*z"));
  CHECK_THROWS_WITH_AS(make_circulant(3, 2, std::vector<std::string>{"x^3", "y^2", "z^3"}),
                       doctest::Contains("f2 must be homogeneous of degree 3"), ValidationError);
  CHECK_THROWS_AS(make_circulant(3, 2, std::vector<std::string>{"x^3", "z^3"}), ValidationError);
  CHECK_THROWS_AS(make_circulant(2, 2), ValidationError);
  CHECK_THROWS_AS(make_circulant(3, 1), ValidationError);
}

}  // TEST_SUITE
