#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <qfejer/qfejer.hpp>

#include "support.hpp"

using namespace qfejer;
using qfejer::testing::random_element;

namespace {

const SystemDescriptor kQ2 = SystemDescriptor::q2();

Element pow_mul(const Element& a, int k) {
  Element out = Element::one(a.system());
  for (int i = 0; i < k; ++i) out = mul(out, a);
  return out;
}

}  // namespace

TEST_CASE("monomial grading values") {
  CHECK(monomial_degree(Monomial{0, 2, 1, 0}) == Degree(2, 1));
  CHECK(monomial_degree(Monomial{3, 1, 1, 0}) == Degree::identity());
  CHECK(monomial_degree(Monomial{-1, 2, 4, 1}) == Degree(1, 2));
  CHECK(monomial_degree(Monomial{0, 6, 4, 3}) == Degree(3, 2));
}

TEST_CASE("grading is multiplicative on products") {
  std::mt19937_64 rng(201);
  SystemDescriptor qn = SystemDescriptor::naturals();
  for (int trial = 0; trial < 400; ++trial) {
    Monomial a = qfejer::testing::random_monomial(rng, qn, 10, 6);
    Monomial b = qfejer::testing::random_monomial(rng, qn, 10, 6);
    Element prod = mul(Element::from_monomial(qn, a, GaussianRational::one()),
                       Element::from_monomial(qn, b, GaussianRational::one()));
    Degree expected = monomial_degree(a) * monomial_degree(b);
    for (const auto& [m, c] : prod.terms()) CHECK(monomial_degree(m) == expected);
  }
}

TEST_CASE("graded pieces are homogeneous and sum back") {
  std::mt19937_64 rng(202);
  for (auto sys : {kQ2, SystemDescriptor::naturals()}) {
    for (int trial = 0; trial < 100; ++trial) {
      Element a = random_element(rng, sys, 5, 8, 6);
      GradedDecomposition dec = graded_decomposition(a);
      Element sum = Element::zero(sys);
      for (const auto& [d, comp] : dec) {
        for (const auto& [m, c] : comp.terms()) CHECK(monomial_degree(m) == d);
        sum = sum + comp;
      }
      CHECK(eq(sum, a));
      CHECK(eq(graded_component(a, Degree(3, 1)),
               dec.count(Degree(3, 1)) ? dec.at(Degree(3, 1)) : Element::zero(sys)));
    }
  }
}

TEST_CASE("support drops components that cancel in the algebra") {
  // the level-2 summation relation makes the identity-degree terms cancel
  // against -1 even though three raw terms remain
  Element s2 = Element::isometry(kQ2, 2);
  Element a = mul(s2, adjoint(s2)) +
              mul(mul(Element::unitary(kQ2, 1), mul(s2, adjoint(s2))),
                  Element::unitary(kQ2, -1)) -
              Element::one(kQ2) + s2;
  CHECK(graded_component(a, Degree::identity()).term_count() == 3);
  CHECK(degree_support(a) == std::set<Degree>{Degree(2, 1)});
}

TEST_CASE("built-in generator coefficients match the published table") {
  Element x0 = thompson_x0();
  Element x1 = thompson_x1();
  Element s1 = cuntz_s1();
  Element s2 = Element::isometry(kQ2, 2);

  CHECK(degree_support(x0) == std::set<Degree>{Degree(1, 2), Degree(1, 1), Degree(2, 1)});

  CHECK(eq(fourier_coeff(x0, 1, 2), mul(pow_mul(s2, 2), adjoint(pow_mul(s2, 2)))));
  CHECK(eq(fourier_coeff(x0, 1, 1), mul(mul(s2, s1), adjoint(mul(s1, s2)))));
  CHECK(eq(fourier_coeff(x0, 2, 1), mul(mul(s2, s1), adjoint(pow_mul(s1, 2)))));

  CHECK(eq(fourier_coeff(x1, 1, 2),
           mul(mul(s1, pow_mul(s2, 2)), adjoint(mul(s2, mul(s1, s2))))));
  CHECK(eq(fourier_coeff(x1, 1, 1),
           mul(s2, adjoint(s2)) +
               mul(mul(s1, mul(s2, s1)), adjoint(mul(pow_mul(s1, 2), s2)))));
  // Forced by the other three summands: x1's summand of degree 1/2 is
  // S1^2 (S1^3)*, so the coefficient is S2 S1^2 (S1^3)*, not S2 S1^2 (S2^3)*.
  CHECK(eq(fourier_coeff(x1, 2, 1), mul(mul(s2, pow_mul(s1, 2)), adjoint(pow_mul(s1, 3)))));
}

TEST_CASE("coefficients live in the fixed-point algebra") {
  std::mt19937_64 rng(203);
  for (int trial = 0; trial < 100; ++trial) {
    Element a = random_element(rng, kQ2, 5, 8, 6);
    for (const Degree& d : degree_support(a)) {
      Element f = fourier_coeff(a, d.den, d.num);
      for (const auto& [m, c] : f.terms()) CHECK(monomial_degree(m) == Degree::identity());
    }
  }
}

TEST_CASE("coefficient data does not depend on the class representative") {
  // (p, q) and (2p, 2q) index the same grading class; the middle product
  // s_p^* F s_q recovers the same component either way
  std::mt19937_64 rng(204);
  for (int trial = 0; trial < 60; ++trial) {
    Element a = random_element(rng, kQ2, 4, 8, 5);
    for (const Degree& d : degree_support(a)) {
      long long p = d.den, q = d.num;
      Element via1 = mul(mul(adjoint(Element::isometry(kQ2, p)), fourier_coeff(a, p, q)),
                         Element::isometry(kQ2, q));
      Element via2 =
          mul(mul(adjoint(Element::isometry(kQ2, 2 * p)), fourier_coeff(a, 2 * p, 2 * q)),
              Element::isometry(kQ2, 2 * q));
      CHECK(eq(via1, via2));
      CHECK(eq(via1, graded_component(a, d)));
    }
  }
}

TEST_CASE("adjoint inverts grading values") {
  std::mt19937_64 rng(205);
  for (int trial = 0; trial < 100; ++trial) {
    Element a = random_element(rng, kQ2, 5, 8, 6);
    for (const auto& [d, comp] : graded_decomposition(a))
      CHECK(eq(graded_component(adjoint(a), d.inverse()), adjoint(comp)));
  }
}

TEST_CASE("elements rebuild exactly from their coefficients") {
  std::mt19937_64 rng(206);
  for (auto sys :
       {kQ2, SystemDescriptor::base_powers(3), SystemDescriptor::naturals()}) {
    for (int trial = 0; trial < 60; ++trial) {
      Element a = random_element(rng, sys, 5, 8, 6);
      CHECK(eq(reconstruct(a), a));
    }
  }
  CHECK(eq(reconstruct(thompson_x0()), thompson_x0()));
  CHECK(eq(reconstruct(thompson_x1()), thompson_x1()));
  CHECK(is_zero(reconstruct(Element::zero(kQ2))));
}
