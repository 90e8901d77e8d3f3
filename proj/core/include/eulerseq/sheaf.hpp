#pragma once

#include <array>
#include <optional>
#include <vector>

#include "eulerseq/divisor.hpp"
#include "eulerseq/laurent.hpp"

namespace eulerseq {

// The two standard charts of the projective line: U1 = Spec k[t] and
// U2 = Spec k[s] with s = 1/t.
enum class Chart { U1, U2 };

// A local degree-d derivation written against the splitting
// delta' = sigma'(u) d/du + alpha' T d/dT on a chart with coordinate u.
struct LocalDerivationPair {
  RatFun sigma;  // the coefficient sigma'(u)
  RatFun alpha;
};

// A divisor component as seen on one chart: its local equation (the place
// polynomial on U1, the monic reversed polynomial on U2, the coordinate for
// the point at infinity), with the floor value s and the classification.
struct ChartPlace {
  Poly1 g;
  long long p = 0, q = 1;
  long long s = 0;
  ComponentClass cls = ComponentClass::Free;
};

// Free rank-2 basis of the degree-d piece of the pushed-forward cylinder
// tangent sheaf over one chart: the kernel generator (0, generator of
// O(floor(dD) + W)) and a lifted generator of the logarithmic-derivation
// line with its alpha' lift.
struct ChartModule {
  Chart chart = Chart::U1;
  long degree = 0;
  std::array<LocalDerivationPair, 2> basis;  // [0] kernel part, [1] lifted part
  std::vector<ChartPlace> places;
};

std::vector<ChartPlace> chart_places(const QDivisorP1& d, long degree, Chart chart);

ChartModule chart_basis(const QDivisorP1& d, long degree, Chart chart);

// Exact membership test against the pole-order condition system ((45)/(46)
// instances) at the sampled twists; sampling a full period mod lcm(q) plus
// the period-difference instance is exact, extra samples are redundancy.
bool check_local_conditions(const LocalDerivationPair& pair, const QDivisorP1& d, long degree,
                            Chart chart, const std::vector<long long>& i_samples);

// Whether the pair lies in the span of the module basis over the chart's
// polynomial ring.
bool module_contains(const ChartModule& m, const LocalDerivationPair& pair);

// Transition data between the two chart bases. T maps U2-coordinates of a
// section to U1-coordinates; entries are Laurent polynomials in t, and the
// determinant is a monomial whose degree is the sum of the splitting type.
struct TransitionData {
  LaurentMatrix t_from_u2;     // 2x2, in t
  Laurent det;                 // monomial
  long det_exponent = 0;
  long entry_span = 0;         // max degree spread over both transition directions
  long max_entry_degree = 0;   // over t_from_u2
  long max_reverse_degree = 0; // over the inverse direction; bounds section degrees
};

TransitionData transition_between(const ChartModule& u1, const ChartModule& u2);
TransitionData transition_data(const QDivisorP1& d, long degree);
LaurentMatrix transition_matrix(const QDivisorP1& d, long degree);

// dim H^0 of the glued rank-2 module twisted by n*{inf}, by exact kernel
// computation with an auto-widening degree bound.
long h0_twisted(const TransitionData& td, long n);
long h0_twisted(const QDivisorP1& d, long degree, long n);

// Splitting type a1 >= a2 with a1 + a2 equal to the determinant exponent;
// O(n) means twist by n*{inf}.
struct SplittingType {
  long a1 = 0, a2 = 0;
};
SplittingType splitting_type_of(const TransitionData& td);
SplittingType splitting_type(const QDivisorP1& d, long degree);

struct ComponentReport {
  std::string place;
  long long p = 0, q = 1, s = 0;
  ComponentClass cls = ComponentClass::Free;
};

// The degree report for the short exact sequence over the projective line:
// a = deg(floor(dD) + W), b = 2 + deg(floor(dD) - L) are the two line-bundle
// degrees; a1 + a2 must equal a + b and the determinant exponent, and h^0 is
// checked against the splitting and the cohomology bounds.
struct EulerReport {
  std::vector<ComponentReport> components;
  IntDivisor W, L;
  long long a = 0, b = 0;
  SplittingType splitting;
  long det_exponent = 0;
  long h0 = 0;
  bool presentation_complete = false;
  std::optional<long> derivation_dim;  // set when the presentation is complete
  bool consistent = false;
};

struct EulerReportOptions {
  bool with_derivations = true;
  long presentation_maxdeg = 12;
  long presentation_maxdeg_retry = 15;  // second attempt when incomplete
};

EulerReport euler_report(const QDivisorP1& d, long degree,
                         const EulerReportOptions& opts = {});

}  // namespace eulerseq
