#pragma once

#include "eulerseq/divisor.hpp"

namespace eulerseq {

// Cech extension class of the short exact sequence on the projective line,
// represented by a rational 1-form f(t) dt on the chart overlap.
struct CechClass {
  RatFun cocycle;   // the coefficient function f
  Scalar residue;   // coefficient of 1/t in f; the class under H^1(P^1, Omega^1) = k
  bool log_trivial; // the receiving group vanishes (deg L >= 1)
};

// Requires W_{D,d} = 0. The cocycle sums (p/q)(dg2/g2 - dg1/g1) over the free
// components, with per-chart local equations; a chart missing the component
// contributes the unit equation, hence the zero form.
CechClass cech_cocycle(const QDivisorP1& d, long degree);

// True iff the class vanishes: the residue is zero in k, or the receiving
// group is trivial. Matches the splitting-type predicate of the degree report.
bool splits(const QDivisorP1& d, long degree);

}  // namespace eulerseq
