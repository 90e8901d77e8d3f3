#pragma once

#include <map>
#include <string>
#include <vector>

#include "eulerseq/graded.hpp"

namespace eulerseq {

// A homogeneous degree-d derivation of A = P/I, given by the images of the
// generators: one polynomial of weighted degree w_i + d per generator (zero
// when w_i + d < 0).
struct HomogeneousDerivation {
  long degree = 0;
  std::vector<MPoly> images;
};

struct DerivationSpace {
  long degree = 0;
  long dimension = 0;
  std::vector<HomogeneousDerivation> basis;
};

// Basis of Der_k(A)_d. Unknowns are the monomial coefficients of the images;
// the constraints say that applying the candidate to each relation lands in
// the ideal; trivial derivations (all images in I) are quotiented out.
DerivationSpace solve_degree(const GradedRing& ring, long d);

struct VerifyResult {
  bool ok = false;
  std::string diagnostic;
};

// Exact check that a candidate is a well-defined derivation of the quotient;
// the diagnostic names the first failing relation.
VerifyResult verify_derivation(const GradedRing& ring, const HomogeneousDerivation& cand);

// The grading derivation sum_i w_i x_i d/dx_i (degree 0).
HomogeneousDerivation euler_derivation(const GradedRing& ring);

// degree -> dimension over a finite interval.
std::map<long, long> derivation_dims(const GradedRing& ring, long lo, long hi);

// Membership of a candidate in the span of a computed space, modulo trivial
// derivations.
bool in_span(const GradedRing& ring, const DerivationSpace& space,
             const HomogeneousDerivation& cand);

}  // namespace eulerseq
