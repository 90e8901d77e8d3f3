#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "eulerseq/builtin.hpp"
#include "eulerseq/divisor.hpp"

using namespace eulerseq;

TEST_CASE("floor values") {
  CHECK(s_value(1, 2, -1) == -1);
  for (long long d = -5; d <= 5; ++d) CHECK(s_value(1, 1, d) == d);
  CHECK(s_value(3, 5, 4) == 2);
  CHECK_THROWS_AS(s_value(2, 4, 1), InvalidInputError);
}

TEST_CASE("s_i values and the achiever flag") {
  for (long long i = -20; i <= 20; ++i) {
    SiValue v = s_i_value(1, 2, -1, i);
    if (i % 2 == 0) {
      CHECK(v.s_i == -1);
      CHECK(v.achieves_minimum);
    } else {
      CHECK(v.s_i == 0);
      CHECK_FALSE(v.achieves_minimum);
    }
  }
  for (long long i = -4; i <= 4; ++i) {
    SiValue v = s_i_value(1, 1, 3, i);
    CHECK(v.s_i == 3);
    CHECK(v.achieves_minimum);
  }
}

TEST_CASE("component classification") {
  for (long long d = -3; d <= 3; ++d)
    for (long long w : {0LL, 2LL, 5LL})
      CHECK(classify_component(1, 1, d, w) == ComponentClass::Free);
  CHECK(classify_component(1, 2, 1, 2) == ComponentClass::WAndL);
  CHECK(classify_component(1, 3, 1, 0) == ComponentClass::LOnly);
  CHECK(classify_component(1, 2, 1, 0) == ComponentClass::Free);
}

TEST_CASE("correction divisors") {
  Field q = Field::rationals();
  QDivisorP1 conic = io::load_divisor(builtin::conic_divisor_doc(q));
  for (long long d = -2; d <= 2; ++d)
    for (long long w : {0LL, 2LL, 3LL}) {
      WLDivisors wl = build_WL(conic, d, w);
      CHECK(wl.W.is_zero());
      CHECK(wl.L.is_zero());
    }

  QDivisorP1 ht = io::load_divisor(builtin::half_third_divisor_doc(q));
  WLDivisors wl = build_WL(ht, 1, 0);
  CHECK(wl.W.is_zero());
  CHECK(wl.L.str() == "{inf}");

  QDivisorP1 half = io::load_divisor(builtin::half_point_divisor_doc(Field::prime(2)));
  WLDivisors wl2 = build_WL(half, 1, 2);
  CHECK(wl2.W.str() == "{t}");
  CHECK(wl2.L.str() == "{t}");
}

TEST_CASE("sweep: minimum, fractional criterion, period characterization") {
  for (long long p = -7; p <= 7; ++p)
    for (long long q = 1; q <= 8; ++q) {
      if (std::gcd(p < 0 ? -p : p, q) != 1) continue;
      for (long long d = -6; d <= 6; ++d) {
        long long s = s_value(p, q, d);
        long long smin = s_i_value(p, q, d, 0).s_i;
        for (long long i = 0; i < q; ++i) smin = std::min(smin, s_i_value(p, q, d, i).s_i);
        CHECK(smin == s);
        bool congruent = ((p * d) % q + q) % q == (q - 1) % q;
        for (long long i = -2 * q; i <= 2 * q; ++i) {
          SiValue v = s_i_value(p, q, d, i);
          long long frac_d = ((p * d) % q + q) % q;
          long long frac_i = ((p * i) % q + q) % q;
          CHECK(v.achieves_minimum == (frac_d + frac_i < q));
          if (congruent) CHECK(v.achieves_minimum == (i % q == 0));
        }
      }
    }
}

TEST_CASE("classification table document") {
  Field q = Field::rationals();
  QDivisorP1 ht = io::load_divisor(builtin::half_third_divisor_doc(q));
  auto table = io::classification_table(ht, 1);
  REQUIRE(table["components"].size() == 2);
  CHECK(table["components"][0]["place"] == "t");
  CHECK(table["components"][0]["p"] == 1);
  CHECK(table["components"][0]["q"] == 2);
  CHECK(table["components"][0]["s"] == 0);
  CHECK(table["components"][0]["class"] == "Free");
  CHECK(table["components"][1]["class"] == "LOnly");
  CHECK(table["W"] == "0");
  CHECK(table["L"] == "{inf}");
}

TEST_CASE("W is contained in L; absence from L means Free") {
  Field q = Field::rationals();
  std::mt19937 rng(55);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<DivisorTerm> terms;
    long long den = 1 + rng() % 4;
    long long num = static_cast<long long>(rng() % 11) - 5;
    if (num == 0) num = 1;
    long long g = std::gcd(num < 0 ? -num : num, den);
    terms.push_back({Place{false, Poly1::variable(q, "t")}, num / g, den / g});
    terms.push_back({Place{true, Poly1::zero(q, "t")}, 1 + static_cast<long long>(rng() % 3), 1});
    QDivisorP1 d(q, terms);
    long long w = std::vector<long long>{0, 2, 3, 5}[rng() % 4];
    long long deg = static_cast<long long>(rng() % 7) - 3;
    WLDivisors wl = build_WL(d, deg, w);
    for (const auto& t : wl.W.terms) {
      bool found = false;
      for (const auto& l : wl.L.terms) found = found || l.place.same(t.place);
      CHECK(found);
    }
    for (const auto& t : d.terms()) {
      bool in_l = false;
      for (const auto& l : wl.L.terms) in_l = in_l || l.place.same(t.place);
      CHECK(in_l == (classify_component(t.num, t.den, deg, w) != ComponentClass::Free));
    }
  }
}

TEST_CASE("W and L are invariant under integer coefficient shifts") {
  Field q = Field::rationals();
  std::mt19937 rng(66);
  for (int trial = 0; trial < 60; ++trial) {
    long long den = 1 + rng() % 5;
    long long num = static_cast<long long>(rng() % 13) - 6;
    if (num == 0) num = 1;
    long long g = std::gcd(num < 0 ? -num : num, den);
    num /= g;
    den /= g;
    long long shift = static_cast<long long>(rng() % 9) - 4;
    if (num + shift * den == 0) ++shift;
    long long d = static_cast<long long>(rng() % 9) - 4;
    long long w = std::vector<long long>{0, 2, 3}[rng() % 3];
    CHECK(classify_component(num, den, d, w) ==
          classify_component(num + shift * den, den, d, w));
  }
}
