#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "eulerseq/laurent.hpp"
#include "eulerseq/matrix.hpp"
#include "eulerseq/parser.hpp"

using namespace eulerseq;

TEST_CASE("field construction and arithmetic") {
  CHECK_THROWS_AS(Field::prime(4), InvalidInputError);
  CHECK_THROWS_AS(Field::prime(1), InvalidInputError);
  Field f2 = Field::prime(2);
  CHECK(f2.characteristic() == 2);
  CHECK(f2.is_zero(f2.add(f2.one(), f2.one())));

  Field q = Field::rationals();
  Scalar a = q.from_fraction(1, 3), b = q.from_fraction(2, 5);
  CHECK(q.str(q.add(a, b)) == "11/15");
  CHECK(q.str(q.div(a, b)) == "5/6");
  CHECK_THROWS_AS(q.inv(q.zero()), InvalidInputError);

  Field f7 = Field::prime(7);
  for (long long x = 1; x < 7; ++x)
    CHECK(f7.is_one(f7.mul(f7.from_int(x), f7.inv(f7.from_int(x)))));

  // An F_p scalar fed to the rationals is a mixed-field error.
  CHECK_THROWS_AS(q.add(q.one(), f7.one()), InvalidInputError);
}

TEST_CASE("kernel of small matrices") {
  Field q = Field::rationals();
  ExactMatrix id2(q, 2, 2);
  id2.at(0, 0) = q.one();
  id2.at(1, 1) = q.one();
  CHECK(solve_kernel(id2).empty());

  Field f2 = Field::prime(2);
  ExactMatrix zero_row(f2, 1, 3);
  CHECK(solve_kernel(zero_row).size() == 3);

  ExactMatrix m(q, 2, 2);
  m.at(0, 0) = q.one();
  m.at(0, 1) = q.one();
  m.at(1, 0) = q.from_int(2);
  m.at(1, 1) = q.from_int(2);
  auto k = solve_kernel(m);
  REQUIRE(k.size() == 1);
  // proportional to (1, -1)
  CHECK(q.eq(k[0][0], q.neg(k[0][1])));
}

TEST_CASE("kernel rank identity and exact annihilation on random matrices") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 60; ++trial) {
    Field f = trial % 2 ? Field::rationals() : Field::prime(5);
    std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 6;
    ExactMatrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c)
        m.at(r, c) = f.from_int(static_cast<long long>(rng() % 7) - 3);
    auto kernel = solve_kernel(m);
    CHECK(kernel.size() + m.rank() == cols);
    for (const auto& v : kernel)
      for (std::size_t r = 0; r < rows; ++r) {
        Scalar acc = f.zero();
        for (std::size_t c = 0; c < cols; ++c) acc = f.add(acc, f.mul(m.at(r, c), v[c]));
        CHECK(f.is_zero(acc));
      }
  }
}

TEST_CASE("laurent determinants") {
  Field q = Field::rationals();
  Laurent t = Laurent::monomial(q, "t", q.one(), 1);
  Laurent tm2 = Laurent::monomial(q, "t", q.one(), -2);
  LaurentMatrix diag{{t, Laurent::zero(q, "t")}, {Laurent::zero(q, "t"), tm2}};
  Laurent d = laurent_det(diag);
  CHECK(d.is_monomial());
  CHECK(d.degree() == -1);

  Laurent one = Laurent::monomial(q, "t", q.one(), 0);
  LaurentMatrix rot{{Laurent::zero(q, "t"), one}, {-one, Laurent::zero(q, "t")}};
  CHECK(laurent_det(rot) == one);

  // 3x3 upper triangular with a full last row.
  Laurent z = Laurent::zero(q, "t");
  LaurentMatrix m3{{t, one, tm2}, {z, tm2, one}, {t, one, t}};
  Laurent expect = t * tm2 * t - t * (tm2 * tm2);  // expand along the first column
  CHECK(laurent_det(m3) == expect);
  CHECK_THROWS_AS(laurent_det(LaurentMatrix{{t, one}}), InvalidInputError);
}

TEST_CASE("laurent determinant is multiplicative") {
  std::mt19937 rng(777);
  Field f = Field::prime(7);
  auto random_laurent = [&]() {
    Laurent l = Laurent::zero(f, "t");
    for (int k = 0; k < 3; ++k)
      l = l + Laurent::monomial(f, "t", f.from_int(rng() % 7), static_cast<long>(rng() % 5) - 2);
    return l;
  };
  for (int trial = 0; trial < 40; ++trial) {
    LaurentMatrix a{{random_laurent(), random_laurent()}, {random_laurent(), random_laurent()}};
    LaurentMatrix b{{random_laurent(), random_laurent()}, {random_laurent(), random_laurent()}};
    LaurentMatrix ab(2, std::vector<Laurent>(2, Laurent::zero(f, "t")));
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        ab[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    CHECK(laurent_det(ab) == laurent_det(a) * laurent_det(b));
  }
}

TEST_CASE("squarefree and coprime checks") {
  Field q = Field::rationals();
  auto p = [&](const std::string& s) { return parse_poly1(q, "t", s); };
  CHECK(squarefree_coprime_check({p("t"), p("t + 1")}));
  CHECK_FALSE(squarefree_coprime_check({p("t^2"), p("t + 1")}));
  CHECK_FALSE(squarefree_coprime_check({p("t^2 + 1"), p("t^4 - 1")}));
  CHECK_THROWS_AS(squarefree_coprime_check({p("2*t + 1")}), InvalidInputError);

  // In characteristic 2, t^2 + 1 = (t+1)^2 is not squarefree.
  Field f2 = Field::prime(2);
  CHECK_FALSE(squarefree_coprime_check({parse_poly1(f2, "t", "t^2 + 1")}));
  CHECK(squarefree_coprime_check({parse_poly1(f2, "t", "t^2 + t + 1")}));
}

TEST_CASE("expression grammar") {
  Field q = Field::rationals();
  std::vector<std::string> vars{"x", "z", "y"};
  MPoly rel = parse_polynomial(q, vars, "z^2 - x*y");
  CHECK(rel.str(vars) == "-x*y + z^2");  // descending lex: x*y before z^2
  CHECK_THROWS_AS(parse_polynomial(q, vars, "z^2 - x*w"), ParseError);
  CHECK_THROWS_AS(parse_polynomial(q, vars, "z^^2"), ParseError);
  CHECK_THROWS_AS(parse_polynomial(q, vars, "z^2 )"), ParseError);
  CHECK(parse_polynomial(q, vars, "  -x \n + 2 * z ").str(vars) == "-x + 2*z");

  // ^ binds a single base: -x^2 is -(x^2)
  MPoly m = parse_polynomial(q, vars, "-x^2");
  CHECK(m.str(vars) == "-x^2");
}

TEST_CASE("parse of printed canonical forms is the identity") {
  std::mt19937 rng(4242);
  std::vector<std::string> vars{"x", "y"};
  for (int trial = 0; trial < 80; ++trial) {
    Field f = trial % 2 ? Field::rationals() : Field::prime(5);
    MPoly p(f, 2);
    for (int k = 0; k < 4; ++k) {
      ExpVec e{static_cast<unsigned>(rng() % 4), static_cast<unsigned>(rng() % 4)};
      p.add_term(e, f.from_int(static_cast<long long>(rng() % 9) - 4));
    }
    std::string s = p.str(vars);
    CHECK(parse_polynomial(f, vars, s) == p);
  }
  // Same for univariate polynomials through Poly1.
  for (int trial = 0; trial < 40; ++trial) {
    Field f = trial % 2 ? Field::rationals() : Field::prime(3);
    std::vector<Scalar> coeffs;
    for (int k = 0; k < 5; ++k) coeffs.push_back(f.from_int(static_cast<long long>(rng() % 7) - 3));
    Poly1 p = Poly1::from_coeffs(f, "t", coeffs);
    CHECK(parse_poly1(f, "t", p.str()) == p);
  }
}

TEST_CASE("polynomial division, gcd, reversal") {
  Field q = Field::rationals();
  auto p = [&](const std::string& s) { return parse_poly1(q, "t", s); };
  Poly1 a = p("t^4 - 1"), b = p("t^2 + 1");
  CHECK((a / b) == p("t^2 - 1"));
  CHECK(Poly1::gcd(a, b) == b);
  CHECK(Poly1::gcd(p("t^2 - 1"), p("t^2 - 2*t + 1")) == p("t - 1"));
  Poly1 quot(q, "t"), rem(q, "t");
  p("t^3 + t + 1").divmod(p("t^2 + 1"), quot, rem);
  CHECK(quot == p("t"));
  CHECK(rem == p("1"));

  CHECK(p("t^2 - t").reversed("s") == parse_poly1(q, "s", "1 - s"));
  CHECK(p("t^3 + 2").reversed("s") == parse_poly1(q, "s", "1 + 2*s^3"));
}

TEST_CASE("rational functions reduce and substitute") {
  Field q = Field::rationals();
  auto p = [&](const std::string& s) { return parse_poly1(q, "t", s); };
  RatFun f(p("t^2 - 1"), p("t - 1"));
  CHECK(f.is_polynomial());
  CHECK(f.as_poly() == p("t + 1"));

  RatFun g(p("1"), p("t"));
  RatFun h = g.reciprocal_substitution("s");
  CHECK(h.is_polynomial());
  CHECK(h.as_poly() == parse_poly1(q, "s", "s"));

  RatFun k(p("t^2 + 1"), p("t^3"));
  CHECK(k.order_at(p("t")) == -3);
  CHECK((k * RatFun::of(p("t^3"))).is_polynomial());
  CHECK(k.str() == "(t^2 + 1)/t^3");
}
