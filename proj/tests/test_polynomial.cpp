#include <doctest.h>

#include "youngschur/error.hpp"
#include "youngschur/polynomial.hpp"

using namespace youngschur;

namespace {

ExactRational q(long n, long d = 1) { return make_rational(n, d); }

}  // namespace

TEST_CASE("arithmetic and evaluation") {
  const PolynomialQ a{-4, 0, 1};  // u^2 - 4
  const PolynomialQ b{2, 1};      // u + 2
  CHECK(a.degree() == 2);
  CHECK(PolynomialQ{}.degree() == -1);
  CHECK(PolynomialQ{0, 0}.is_zero());
  CHECK(a(q(3)) == 5);
  CHECK(a(q(1, 2)) == q(-15, 4));
  const auto [quot, rem] = PolynomialQ::divmod(a, b);
  CHECK(quot == PolynomialQ{-2, 1});
  CHECK(rem.is_zero());
  CHECK(PolynomialQ::gcd(a, PolynomialQ{6, 5, 1}) == b);
  CHECK(a * b == PolynomialQ{-8, -4, 2, 1});
  CHECK(a - a == PolynomialQ{});
  CHECK(a.derivative() == PolynomialQ{0, 2});
  CHECK((q(2) * b).monic() == b);
  CHECK(PolynomialQ::from_roots({q(2), q(-2)}) == a);
}

TEST_CASE("composition") {
  const PolynomialQ a{-4, 0, 1};
  const PolynomialQ quadratic{0, -1, 1};  // u(u-1)
  const PolynomialQ c = a.compose(quadratic);
  for (int u = -5; u <= 5; ++u) CHECK(c(q(u)) == a(quadratic(q(u))));
}

TEST_CASE("rendering") {
  CHECK(PolynomialQ{-4, 0, 1}.to_string() == "u^2 - 4");
  CHECK(PolynomialQ{-12, -13, 0, 1}.to_string() == "u^3 - 13*u - 12");
  CHECK(PolynomialQ{}.to_string() == "0");
  const RationalFunction f(PolynomialQ{0, 1}, PolynomialQ{-1, 0, 1});
  CHECK(f.to_string() == "(u) / (u^2 - 1)");
  const RationalFunction g(PolynomialQ(std::vector<ExactRational>{q(1, 2)}), PolynomialQ{0, 3});
  CHECK(g.to_string("v") == "(1) / (6*v)");
}

TEST_CASE("rational functions reduce to lowest terms") {
  const RationalFunction f(PolynomialQ{-4, 0, 1}, PolynomialQ{4, 2});
  CHECK(f.numerator() == PolynomialQ({q(-1), q(1, 2)}));
  CHECK(f.denominator() == PolynomialQ::constant(q(1)));
  CHECK_THROWS(RationalFunction(PolynomialQ{1}, PolynomialQ{}));
  const RationalFunction g(PolynomialQ{0, 1}, PolynomialQ{-1, 0, 1});
  const RationalFunction h(PolynomialQ{0, 2}, PolynomialQ{-2, 0, 2});
  CHECK(g.equals_by_cross_multiplication(h));
  CHECK(g(q(2)) == q(2, 3));
}

TEST_CASE("rational roots") {
  CHECK(rational_roots(PolynomialQ{-4, 0, 1}) == std::vector<ExactRational>{q(-2), q(2)});
  CHECK(rational_roots(PolynomialQ{-1, 0, 4}) == std::vector<ExactRational>{q(-1, 2), q(1, 2)});
  CHECK(rational_roots(PolynomialQ{-2, 0, 1}).empty());
  CHECK(rational_roots(PolynomialQ{0, 0, 1}) == std::vector<ExactRational>{q(0)});
  CHECK(rational_roots(PolynomialQ{1, 0, 1}).empty());
}

TEST_CASE("partial fractions") {
  CHECK(partial_fractions(RationalFunction(PolynomialQ{1}, PolynomialQ{0, 1})) ==
        std::vector<PoleResidue>{{q(0), q(1)}});
  const RationalFunction f(PolynomialQ{0, 1}, PolynomialQ{-1, 0, 1});
  CHECK(partial_fractions(f) == std::vector<PoleResidue>{{q(-1), q(1, 2)}, {q(1), q(1, 2)}});
  // Poles must be simple, rational, and the fraction proper.
  const auto expect = [](const RationalFunction& g, Errc code) {
    try {
      partial_fractions(g);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == code);
    }
  };
  expect(RationalFunction(PolynomialQ{1}, PolynomialQ{0, 0, 1}), Errc::non_simple_pole);
  expect(RationalFunction(PolynomialQ{1}, PolynomialQ{-2, 0, 1}), Errc::irrational_pole);
  CHECK_THROWS_AS(partial_fractions(RationalFunction(PolynomialQ{0, 0, 1}, PolynomialQ{0, 1})), std::exception);
}
