#include "eulerseq/poly.hpp"

#include <algorithm>

namespace eulerseq {

void Poly1::trim() {
  while (!c_.empty() && f_.is_zero(c_.back())) c_.pop_back();
}

Poly1 Poly1::constant(const Field& f, const std::string& var, const Scalar& c) {
  Poly1 p(f, var);
  p.c_.push_back(c);
  p.trim();
  return p;
}

Poly1 Poly1::variable(const Field& f, const std::string& var) {
  return monomial(f, var, f.one(), 1);
}

Poly1 Poly1::monomial(const Field& f, const std::string& var, const Scalar& c, int e) {
  Poly1 p(f, var);
  if (!f.is_zero(c)) {
    p.c_.assign(static_cast<std::size_t>(e) + 1, f.zero());
    p.c_.back() = c;
  }
  return p;
}

Poly1 Poly1::from_coeffs(const Field& f, const std::string& var, std::vector<Scalar> c) {
  Poly1 p(f, var);
  p.c_ = std::move(c);
  p.trim();
  return p;
}

bool Poly1::is_single_term() const {
  int n = 0;
  for (const auto& c : c_)
    if (!f_.is_zero(c)) ++n;
  return n == 1;
}

Scalar Poly1::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return f_.zero();
  return c_[static_cast<std::size_t>(i)];
}

const Scalar& Poly1::leading() const {
  if (c_.empty()) throw InternalError("leading coefficient of the zero polynomial");
  return c_.back();
}

Poly1 Poly1::operator+(const Poly1& o) const {
  Poly1 r(f_, var_);
  r.c_.resize(std::max(c_.size(), o.c_.size()), f_.zero());
  for (std::size_t i = 0; i < r.c_.size(); ++i)
    r.c_[i] = f_.add(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
  r.trim();
  return r;
}

Poly1 Poly1::operator-(const Poly1& o) const { return *this + (-o); }

Poly1 Poly1::operator-() const {
  Poly1 r = *this;
  for (auto& c : r.c_) c = f_.neg(c);
  return r;
}

Poly1 Poly1::operator*(const Poly1& o) const {
  Poly1 r(f_, var_);
  if (is_zero() || o.is_zero()) return r;
  r.c_.assign(c_.size() + o.c_.size() - 1, f_.zero());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (f_.is_zero(c_[i])) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      r.c_[i + j] = f_.add(r.c_[i + j], f_.mul(c_[i], o.c_[j]));
  }
  r.trim();
  return r;
}

Poly1 Poly1::scaled(const Scalar& c) const {
  Poly1 r(f_, var_);
  if (f_.is_zero(c)) return r;
  r.c_ = c_;
  for (auto& x : r.c_) x = f_.mul(x, c);
  r.trim();
  return r;
}

Poly1 Poly1::shifted(int k) const {
  if (k < 0) throw InvalidInputError("negative shift");
  if (is_zero()) return *this;
  Poly1 r(f_, var_);
  r.c_.assign(static_cast<std::size_t>(k), f_.zero());
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

Poly1 Poly1::pow(unsigned long e) const {
  Poly1 r = one(f_, var_);
  Poly1 b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

Poly1 Poly1::derivative() const {
  Poly1 r(f_, var_);
  for (std::size_t i = 1; i < c_.size(); ++i)
    r.c_.push_back(f_.mul(c_[i], f_.from_int(static_cast<long long>(i))));
  r.trim();
  return r;
}

Poly1 Poly1::monic() const {
  if (is_zero()) return *this;
  return scaled(f_.inv(leading()));
}

Poly1 Poly1::reversed(const std::string& newvar) const {
  Poly1 r(f_, newvar);
  r.c_.assign(c_.rbegin(), c_.rend());
  r.trim();
  return r;
}

void Poly1::divmod(const Poly1& d, Poly1& quot, Poly1& rem) const {
  if (d.is_zero()) throw InvalidInputError("polynomial division by zero");
  quot = Poly1(f_, var_);
  rem = *this;
  int dd = d.degree();
  Scalar linv = f_.inv(d.leading());
  if (rem.degree() >= dd)
    quot.c_.assign(static_cast<std::size_t>(rem.degree() - dd) + 1, f_.zero());
  while (rem.degree() >= dd) {
    int k = rem.degree() - dd;
    Scalar c = f_.mul(rem.leading(), linv);
    quot.c_[static_cast<std::size_t>(k)] = c;
    for (int i = 0; i <= dd; ++i)
      rem.c_[static_cast<std::size_t>(i + k)] =
          f_.sub(rem.c_[static_cast<std::size_t>(i + k)], f_.mul(c, d.coeff(i)));
    rem.trim();
  }
  quot.trim();
}

Poly1 Poly1::operator%(const Poly1& d) const {
  Poly1 q(f_, var_), r(f_, var_);
  divmod(d, q, r);
  return r;
}

Poly1 Poly1::operator/(const Poly1& d) const {
  Poly1 q(f_, var_), r(f_, var_);
  divmod(d, q, r);
  if (!r.is_zero()) throw InternalError("inexact polynomial division");
  return q;
}

namespace {

// Scale a rational polynomial to integer coefficients with content 1.
// Plain Euclidean remainders over Q suffer combinatorial coefficient growth;
// the gcd below works with primitive pseudo-remainders instead.
Poly1 primitive_int(const Poly1& p) {
  const Field& f = p.field();
  if (p.is_zero()) return p;
  mpz_class lcm(1), gcd(0);
  for (const auto& c : p.coeffs())
    if (!f.is_zero(c))
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), f.rational(c).get_den().get_mpz_t());
  for (const auto& c : p.coeffs())
    if (!f.is_zero(c)) {
      mpz_class n = f.rational(c).get_num() * lcm / f.rational(c).get_den();
      mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), n.get_mpz_t());
    }
  mpq_class factor(lcm, gcd);
  factor.canonicalize();
  return p.scaled(f.from_mpq(factor));
}

}  // namespace

Poly1 Poly1::gcd(Poly1 a, Poly1 b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  const Field f = a.field();
  if (!f.is_rationals()) {
    while (!b.is_zero()) {
      Poly1 r = a % b;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }
  a = primitive_int(a);
  b = primitive_int(b);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    // Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b stays integral.
    Scalar scale = f.one();
    Scalar lead = b.leading();
    for (int k = 0; k <= a.degree() - b.degree(); ++k) scale = f.mul(scale, lead);
    Poly1 r = a.scaled(scale) % b;
    a = std::move(b);
    b = primitive_int(r);
  }
  return a.monic();
}

Scalar Poly1::eval(const Scalar& x) const {
  Scalar r = f_.zero();
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = f_.add(f_.mul(r, x), *it);
  return r;
}

bool Poly1::operator==(const Poly1& o) const {
  if (c_.size() != o.c_.size()) return false;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!f_.eq(c_[i], o.c_[i])) return false;
  return true;
}

std::string Poly1::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    Scalar c = coeff(i);
    if (f_.is_zero(c)) continue;
    std::string cs = f_.str(c);
    bool negative = !cs.empty() && cs[0] == '-';
    if (negative) cs.erase(cs.begin());
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    bool unit_coeff = (cs == "1");
    if (i == 0) {
      out += cs;
    } else {
      if (!unit_coeff) out += cs + "*";
      out += var_;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

bool squarefree_coprime_check(const std::vector<Poly1>& polys) {
  for (const auto& p : polys) {
    if (p.is_zero() || !p.is_monic())
      throw InvalidInputError("squarefree check requires monic nonzero polynomials");
  }
  for (const auto& p : polys) {
    if (p.is_constant()) continue;
    // gcd(f, f') detects repeated factors; f' == 0 (possible in characteristic p
    // when every exponent is a multiple of p) makes f a p-th power.
    Poly1 d = p.derivative();
    if (d.is_zero()) return false;
    if (Poly1::gcd(p, d).degree() != 0) return false;
  }
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (std::size_t j = i + 1; j < polys.size(); ++j)
      if (Poly1::gcd(polys[i], polys[j]).degree() != 0) return false;
  return true;
}

}  // namespace eulerseq
