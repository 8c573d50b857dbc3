#include <doctest.h>

#include <algorithm>
#include <set>

#include "lefschetz/groebner.hpp"
#include "test_util.hpp"

using namespace lefschetz;
using testutil::A;

namespace {

std::set<std::string> normalized_strings(const std::vector<Poly>& ps) {
  std::set<std::string> out;
  for (const Poly& p : ps) out.insert(p.normalized().to_string(dual_varnames(3)));
  return out;
}

DualIdeal ideal(std::initializer_list<const char*> gens) {
  std::vector<Poly> g;
  for (const char* s : gens) g.push_back(A(s));
  return DualIdeal(3, g);
}

}  // namespace

TEST_SUITE("groebner") {

TEST_CASE("reduced grevlex basis matches an independent computation") {
  std::vector<Poly> gens{A("a1^2*a2 - a3^3"), A("a1*a2^2 - a3^3 + a1*a2*a3"), A("a2^3 - a1^3")};
  std::vector<Poly> expected{A("a3^7"),
                             A("9*a2*a3^5 - a3^6"),
                             A("a2^2*a3^3 + 4*a2*a3^4"),
                             A("a2^4 - a2*a3^3 - a3^4"),
                             A("a1*a3^3 - a2*a3^3 - a3^4"),
                             A("a1^3 - a2^3"),
                             A("a1^2*a2 - a3^3"),
                             A("a1*a2^2 + a1*a2*a3 - a3^3")};
  auto gb = groebner_basis(3, gens);
  CHECK(gb.size() == expected.size());
  CHECK(normalized_strings(gb) == normalized_strings(expected));
  for (const Poly& g : gb) {
    // monic with respect to grevlex
    const Term* lead = &g.terms().front();
    for (const Term& t : g.terms())
      if (compare(t.mono, lead->mono, MonomialOrder::grevlex) > 0) lead = &t;
    CHECK(lead->coef == 1);
  }
}

TEST_CASE("basis is independent of generator order and redundancy") {
  std::vector<Poly> gens{A("a1^2*a2 - a3^3"), A("a1*a2^2 - a3^3 + a1*a2*a3"), A("a2^3 - a1^3")};
  auto reference = groebner_basis(3, gens);
  std::vector<Poly> shuffled{gens[2] * Rational(-5), gens[0], gens[1] + gens[0], gens[0] * A("a2")};
  CHECK(groebner_basis(3, shuffled) == reference);
  std::reverse(gens.begin(), gens.end());
  CHECK(groebner_basis(3, gens) == reference);
}

TEST_CASE("normal forms and membership") {
  DualIdeal I = ideal({"a1^2 - a2*a3", "a2^2"});
  CHECK(normal_form(A("a1^2*a2^2"), I).is_zero());
  CHECK_FALSE(normal_form(A("a3^5"), I).is_zero());
  CHECK(ideal_contains(I, ideal({"a1^2*a3 - a2*a3^2"})));
  CHECK_FALSE(ideal_contains(I, ideal({"a1*a2"})));
  CHECK(ideal_equal(I, ideal({"a2^2", "a1^2 - a2*a3", "a1^2*a2^2"})));
}

TEST_CASE("zero and unit ideals") {
  DualIdeal z = DualIdeal::zero(3), u = DualIdeal::unit(3);
  CHECK(z.is_zero());
  CHECK(u.is_unit());
  CHECK(ideal_contains(u, ideal({"a1^4 + a3^4"})) == true);
  CHECK(ideal_contains(z, DualIdeal(3, {Poly(3)})));
  CHECK_FALSE(ideal_contains(z, u));
  CHECK(ideal_intersect(u, ideal({"a2"})).canonical().generators() == std::vector<Poly>{A("a2")});
  CHECK(ideal_intersect(z, ideal({"a2"})).is_zero());
  CHECK_THROWS_AS(DualIdeal(3, {A("a1 + a2^2")}), ValidationError);
}

TEST_CASE("intersections") {
  CHECK(ideal_equal(ideal_intersect(ideal({"a1", "a2"}), ideal({"a2", "a3"})), ideal({"a2", "a1*a3"})));
  CHECK(ideal_equal(ideal_intersect(ideal({"a1^2", "a2"}), ideal({"a1", "a2^2"})),
                    ideal({"a1^2", "a1*a2", "a2^2"})));
  CHECK(ideal_equal(ideal_intersect(ideal({"a1"}), ideal({"a2"})), ideal({"a1*a2"})));
  DualIdeal I = ideal({"a1^2 - a2*a3", "a3^3"}), J = ideal({"a1 + a2", "a3^2"});
  DualIdeal K = ideal_intersect(I, J);
  CHECK(ideal_contains(I, K));
  CHECK(ideal_contains(J, K));
  // I*J ⊆ I ∩ J
  std::vector<Poly> prod;
  for (const Poly& f : I.generators())
    for (const Poly& g : J.generators()) prod.push_back(f * g);
  CHECK(ideal_contains(K, DualIdeal(3, prod)));
}

TEST_CASE("canonical form is a normalized reduced basis") {
  DualIdeal I = ideal({"2*a1*a2 + 4*a3^2", "-3*a1*a2 - 6*a3^2", "a1^3"});
  DualIdeal c = I.canonical();
  for (const Poly& g : c.generators()) CHECK(g == g.normalized());
  CHECK(ideal_equal(c, I));
  CHECK(I.canonical().generators() == ideal({"a1*a2 + 2*a3^2", "a1^3"}).canonical().generators());
}

}  // TEST_SUITE
