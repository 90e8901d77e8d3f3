#include "eulerseq/ratfun.hpp"

namespace eulerseq {

RatFun::RatFun(Poly1 num, Poly1 den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw InvalidInputError("zero denominator");
  reduce();
}

RatFun RatFun::of(Poly1 p) {
  Poly1 one = Poly1::one(p.field(), p.var());
  return RatFun(std::move(p), std::move(one));
}

RatFun RatFun::zero(const Field& f, const std::string& var) {
  return of(Poly1::zero(f, var));
}

RatFun RatFun::one(const Field& f, const std::string& var) {
  return of(Poly1::one(f, var));
}

void RatFun::reduce() {
  if (num_.is_zero()) {
    den_ = Poly1::one(num_.field(), num_.var());
    return;
  }
  Poly1 g = Poly1::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  Scalar lead = den_.leading();
  if (!num_.field().is_one(lead)) {
    Scalar linv = num_.field().inv(lead);
    num_ = num_.scaled(linv);
    den_ = den_.scaled(linv);
  }
}

const Poly1& RatFun::as_poly() const {
  if (!is_polynomial()) throw InternalError("rational function is not a polynomial: " + str());
  return num_;
}

RatFun RatFun::operator+(const RatFun& o) const {
  return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator-(const RatFun& o) const {
  return RatFun(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator*(const RatFun& o) const {
  return RatFun(num_ * o.num_, den_ * o.den_);
}

RatFun RatFun::operator/(const RatFun& o) const {
  if (o.is_zero()) throw InvalidInputError("division by the zero function");
  return RatFun(num_ * o.den_, den_ * o.num_);
}

RatFun RatFun::operator-() const { return RatFun(-num_, den_); }

RatFun RatFun::scaled(const Scalar& c) const { return RatFun(num_.scaled(c), den_); }

RatFun RatFun::derivative() const {
  return RatFun(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

bool RatFun::operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }

RatFun RatFun::reciprocal_substitution(const std::string& newvar) const {
  // num(1/u)/den(1/u) = u^(deg den - deg num) * rev(num)/rev(den)
  Poly1 rn = num_.reversed(newvar);
  Poly1 rd = den_.reversed(newvar);
  int shift = den_.degree() - num_.degree();
  if (num_.is_zero()) return RatFun::zero(num_.field(), newvar);
  if (shift >= 0) return RatFun(rn.shifted(shift), rd);
  return RatFun(rn, rd.shifted(-shift));
}

long RatFun::order_at(const Poly1& g) const {
  if (g.degree() < 1) throw InvalidInputError("order at a constant");
  if (is_zero()) throw InvalidInputError("order of the zero function");
  auto mult = [&g](Poly1 p) {
    long m = 0;
    while (true) {
      Poly1 q(p.field(), p.var()), r(p.field(), p.var());
      p.divmod(g, q, r);
      if (!r.is_zero()) return m;
      ++m;
      p = std::move(q);
    }
  };
  // num and den are coprime, so at most one count is nonzero.
  return mult(num_) - mult(den_);
}

std::string RatFun::str() const {
  const Field& f = field();
  Poly1 n = num_, d = den_;
  if (f.is_rationals() && !n.is_zero()) {
    mpz_class lcm_den(1), gcd_num(0);
    auto visit = [&](const Poly1& p) {
      for (const auto& c : p.coeffs()) {
        if (f.is_zero(c)) continue;
        const mpq_class& v = f.rational(c);
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), v.get_den().get_mpz_t());
        mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), v.get_num().get_mpz_t());
      }
    };
    visit(n);
    visit(d);
    mpq_class factor(lcm_den, gcd_num);
    factor.canonicalize();
    Scalar s = f.from_mpq(factor);
    n = n.scaled(s);
    d = d.scaled(s);
  }
  if (d.is_one()) return n.str();
  std::string ds = d.str();
  bool bare_power = d.is_single_term() && f.is_one(d.leading());
  if (!d.is_constant() && !bare_power) ds = "(" + ds + ")";
  std::string ns = n.str();
  if (n.degree() > 0 && !n.is_single_term()) ns = "(" + ns + ")";
  return ns + "/" + ds;
}

}  // namespace eulerseq
