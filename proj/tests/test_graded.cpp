#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <thread>

#include "eulerseq/builtin.hpp"
#include "eulerseq/graded.hpp"
#include "eulerseq/parser.hpp"

using namespace eulerseq;

namespace {

const std::vector<long> kIcisWeights{8, 8, 5, 2, 2, 2};

GradedRing conic_ring() {
  return GradedRing(io::load_ring(builtin::conic_ring_doc(Field::rationals())));
}

}  // namespace

TEST_CASE("monomial bases of weighted degrees") {
  CHECK(monomial_basis({1, 1, 1}, 1).size() == 3);
  CHECK(monomial_basis({1, 1, 1}, 0).size() == 1);
  CHECK(monomial_basis({1, 1, 1}, -2).empty());

  auto e2 = monomial_basis(kIcisWeights, 2);
  REQUIRE(e2.size() == 3);  // exactly the three weight-2 variables
  CHECK(e2[0] == ExpVec{0, 0, 0, 1, 0, 0});
  CHECK(e2[1] == ExpVec{0, 0, 0, 0, 1, 0});
  CHECK(e2[2] == ExpVec{0, 0, 0, 0, 0, 1});

  auto e5 = monomial_basis(kIcisWeights, 5);
  REQUIRE(e5.size() == 1);
  CHECK(e5[0] == ExpVec{0, 0, 1, 0, 0, 0});
}

TEST_CASE("monomial count equals the generating-function coefficient") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + rng() % 4;
    std::vector<long> w;
    for (std::size_t i = 0; i < n; ++i) w.push_back(1 + rng() % 5);
    long e = static_cast<long>(rng() % 14);
    CHECK(hilbert_ci_oracle(w, {}, e) == static_cast<long>(monomial_basis(w, e).size()));
  }
}

TEST_CASE("ideal pieces of the conic") {
  GradedRing ring = conic_ring();
  auto p0 = ideal_piece(ring, 0);
  CHECK(p0->ideal_rank == 0);
  CHECK(p0->quotient_dim == 1);
  auto p1 = ring.piece(1);
  CHECK(p1->ideal_rank == 0);
  CHECK(p1->quotient_dim == 3);
  auto p2 = ring.piece(2);
  CHECK(p2->ideal_rank == 1);
  CHECK(p2->quotient_dim == 5);
}

TEST_CASE("quotient dimensions") {
  GradedRing icis(io::load_ring(builtin::icis_ring_doc()));
  CHECK(icis.quotient_dim(2) == 3);
  GradedRing ring = conic_ring();
  CHECK(ring.quotient_dim(1) == 3);
  CHECK(ring.quotient_dim(-1) == 0);
  CHECK(ring.quotient_dim(0) == 1);
}

TEST_CASE("complete-intersection series oracle") {
  CHECK(hilbert_ci_oracle({1, 1, 1}, {2}, 2) == 5);
  CHECK(hilbert_ci_oracle(kIcisWeights, {10, 10}, 2) == 3);
  for (long d = 0; d <= 9; ++d) CHECK(hilbert_ci_oracle({1, 1}, {}, d) == d + 1);
}

TEST_CASE("icis ring agrees with its oracle and its reduction") {
  GradedRing icis(io::load_ring(builtin::icis_ring_doc()));
  GradedRing reduced(io::load_ring(builtin::icis_reduced_ring_doc()));
  for (long e = 0; e <= 20; ++e)
    CHECK(hilbert_ci_oracle(kIcisWeights, {10, 10}, e) == icis.quotient_dim(e));
  for (long j = 0; j <= 10; ++j) CHECK(icis.quotient_dim(2 * j) == reduced.quotient_dim(j));
}

TEST_CASE("ideal pieces are multiplicatively closed") {
  GradedRing ring = conic_ring();
  const Field& f = ring.field();
  std::mt19937 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    long e = 2 + static_cast<long>(rng() % 3);
    long fdeg = static_cast<long>(rng() % 3);
    auto pe = ring.piece(e);
    if (pe->ideal_columns.cols() == 0) continue;
    // Random element of I_e as a combination of the ideal columns.
    MPoly elem(f, 3);
    for (std::size_t c = 0; c < pe->ideal_columns.cols(); ++c) {
      Scalar k = f.from_int(static_cast<long long>(rng() % 5) - 2);
      for (std::size_t r = 0; r < pe->monomials.size(); ++r)
        elem.add_term(pe->monomials[r], f.mul(k, pe->ideal_columns.at(r, c)));
    }
    auto mons = monomial_basis({1, 1, 1}, fdeg);
    MPoly m = MPoly::monomial(f, 3, mons[rng() % mons.size()], f.one());
    MPoly prod = elem * m;
    if (prod.is_zero()) continue;
    auto target = ring.piece(e + fdeg);
    Eliminator span(f, target->monomials.size());
    for (std::size_t c = 0; c < target->ideal_columns.cols(); ++c)
      span.add(target->ideal_columns.col(c));
    CHECK(span.contains(target->coords(prod)));
  }
}

TEST_CASE("non-homogeneous relations are rejected with the offending pair") {
  Field q = Field::rationals();
  std::vector<std::string> vars{"x", "y"};
  MPoly bad = parse_polynomial(q, vars, "x^2 - y");
  try {
    make_presentation(q, vars, {1, 1}, {bad});
    FAIL("expected InvalidInputError");
  } catch (const InvalidInputError& e) {
    std::string msg = e.what();
    CHECK(msg.find("not weighted-homogeneous") != std::string::npos);
    CHECK(msg.find("degree 2") != std::string::npos);
    CHECK(msg.find("degree 1") != std::string::npos);
  }
  // The same polynomial is homogeneous for weights (1, 2).
  CHECK_NOTHROW(make_presentation(q, vars, {1, 2}, {parse_polynomial(q, vars, "x^2 - y")}));
}

TEST_CASE("weight gcd is recorded, not enforced") {
  Field q = Field::rationals();
  auto p = make_presentation(q, {"a", "b"}, {2, 4}, {});
  CHECK(p.weight_gcd == 2);
}

TEST_CASE("piece cache serves concurrent readers") {
  GradedRing icis(io::load_ring(builtin::icis_ring_doc()));
  std::vector<std::thread> threads;
  std::vector<long> dims(8, -1);
  for (int i = 0; i < 8; ++i)
    threads.emplace_back(
        [&icis, &dims, i] { dims[static_cast<std::size_t>(i)] = icis.quotient_dim(10 + i % 4); });
  for (auto& t : threads) t.join();
  for (int i = 0; i < 8; ++i)
    CHECK(dims[static_cast<std::size_t>(i)] == icis.quotient_dim(10 + i % 4));
}
