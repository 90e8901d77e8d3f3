#pragma once

#include <string>
#include <vector>

#include "eulerseq/graded.hpp"
#include "eulerseq/numerics.hpp"
#include "eulerseq/ratfun.hpp"

namespace eulerseq {

// A place on the projective line: a monic squarefree nonconstant polynomial
// in t, or the point at infinity. A reducible squarefree polynomial is a
// block of prime places all carrying the same coefficient.
struct Place {
  bool at_infinity = false;
  Poly1 poly;

  long degree() const { return at_infinity ? 1 : poly.degree(); }
  bool same(const Place& o) const;
  std::string str() const { return at_infinity ? "inf" : poly.str(); }
};

struct DivisorTerm {
  Place place;
  long long num = 0;  // coefficient num/den in lowest terms, den > 0
  long long den = 1;
};

// A Q-divisor on P^1 over an exact field: distinct pairwise-coprime places
// with nonzero reduced rational coefficients.
class QDivisorP1 {
 public:
  QDivisorP1(const Field& f, std::vector<DivisorTerm> terms);

  const Field& field() const { return f_; }
  const std::vector<DivisorTerm>& terms() const { return terms_; }
  // Exact degree as a reduced fraction.
  std::pair<long long, long long> degree_fraction() const;
  std::string degree_str() const;
  std::string str() const;

 private:
  Field f_;
  std::vector<DivisorTerm> terms_;
};

struct IntDivisorTerm {
  Place place;
  long long coeff = 0;
};

// Integer divisor supported on a set of places; zero-coefficient terms are dropped.
struct IntDivisor {
  std::vector<IntDivisorTerm> terms;

  long long degree() const;
  bool is_zero() const { return terms.empty(); }
  std::string str() const;
};

// Coefficient-wise round-down of i*D.
IntDivisor floor_divisor(const QDivisorP1& d, long long i);

// The correction divisors: W collects the components classified WAndL, L all
// non-Free components; both are reduced effective and W is contained in L.
struct WLDivisors {
  IntDivisor W, L;
};
WLDivisors build_WL(const QDivisorP1& d, long long degree, long long characteristic);

// Riemann-Roch space L(E) = {f : div(f) + E >= 0} with a deterministic basis;
// dimension max(0, deg E + 1).
struct SectionSpace {
  IntDivisor divisor;
  std::vector<RatFun> basis;
};
SectionSpace rr_space(const Field& f, const IntDivisor& e);

IntDivisor add_divisors(const IntDivisor& a, const IntDivisor& b);

// Coordinates of f in the canonical numerator frame of L(E): the coefficient
// vector of f * (positive-part denominator), which must be a polynomial
// within the frame's degree bound.
std::vector<Scalar> section_coords(const Field& f, const IntDivisor& e, const RatFun& fn);

// Throws NonAmpleError unless deg D > 0.
void validate_ample(const QDivisorP1& d);

// Pieces i = 0..maxdeg of the section ring of D.
std::vector<SectionSpace> section_ring(const QDivisorP1& d, long maxdeg);

// Degreewise greedy presentation discovery for the section ring: generators
// are basis complements of products of lower-degree generators; relations are
// kernel vectors of the evaluation map modulo multiples of lower-degree
// relations. `complete` is a quiescence heuristic: no new generator or
// relation in the top ceil(maxdeg/3) degrees.
struct SectionRingModel {
  QDivisorP1 divisor;
  long maxdeg = 0;
  std::vector<SectionSpace> pieces;
  struct Generator {
    long degree = 0;
    RatFun function;
    std::string name;
  };
  std::vector<Generator> generators;
  std::vector<MPoly> relations;  // in abstract generator variables
  std::vector<long> relation_degrees;
  bool complete = false;

  WeightedPresentation presentation() const;
};

SectionRingModel present_section_ring(const QDivisorP1& d, long maxdeg);

}  // namespace eulerseq
