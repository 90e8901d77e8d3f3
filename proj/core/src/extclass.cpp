#include "eulerseq/extclass.hpp"

#include "eulerseq/laurent.hpp"

namespace eulerseq {

CechClass cech_cocycle(const QDivisorP1& d, long degree) {
  const Field& f = d.field();
  long long w = f.characteristic();
  WLDivisors wl = build_WL(d, degree, w);
  if (!wl.W.is_zero())
    throw HypothesisViolatedError("extension-class computation requires W = 0 (here W = " +
                                  wl.W.str() + ")");

  RatFun sum = RatFun::zero(f, "t");
  for (const auto& term : d.terms()) {
    if (classify_component(term.num, term.den, degree, w) != ComponentClass::Free) continue;
    // Logarithmic forms of the two local equations, both written in t.
    RatFun form1 = RatFun::zero(f, "t");
    if (!term.place.at_infinity)
      form1 = RatFun(term.place.poly.derivative(), term.place.poly);
    RatFun form2 = RatFun::zero(f, "t");
    Poly1 g2 = Poly1::one(f, "s");
    if (term.place.at_infinity) {
      g2 = Poly1::variable(f, "s");
    } else {
      Poly1 rev = term.place.poly.reversed("s");
      if (rev.degree() >= 1) g2 = rev.monic();
    }
    if (g2.degree() >= 1) {
      RatFun g2_in_t = RatFun::of(g2).reciprocal_substitution("t");
      form2 = g2_in_t.derivative() / g2_in_t;
    }
    sum = sum + (form2 - form1).scaled(f.from_fraction(term.num, term.den));
  }

  Laurent l = Laurent::from_ratfun(sum);  // poles only at 0 and infinity
  CechClass out{sum, l.coeff(-1), wl.L.degree() >= 1};
  return out;
}

bool splits(const QDivisorP1& d, long degree) {
  CechClass c = cech_cocycle(d, degree);
  return c.log_trivial || d.field().is_zero(c.residue);
}

}  // namespace eulerseq
