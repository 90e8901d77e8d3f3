#pragma once

#include <string>
#include <vector>

#include "eulerseq/field.hpp"

namespace eulerseq {

// Dense univariate polynomial over an exact field, lowest degree first.
// The coefficient list never ends in a zero (the zero polynomial is empty).
class Poly1 {
 public:
  Poly1(Field f, std::string var) : f_(f), var_(std::move(var)) {}

  static Poly1 zero(const Field& f, const std::string& var) { return Poly1(f, var); }
  static Poly1 constant(const Field& f, const std::string& var, const Scalar& c);
  static Poly1 one(const Field& f, const std::string& var) { return constant(f, var, f.one()); }
  static Poly1 variable(const Field& f, const std::string& var);
  static Poly1 monomial(const Field& f, const std::string& var, const Scalar& c, int e);
  static Poly1 from_coeffs(const Field& f, const std::string& var, std::vector<Scalar> c);

  const Field& field() const { return f_; }
  const std::string& var() const { return var_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && f_.is_one(c_[0]); }
  bool is_monic() const { return !c_.empty() && f_.is_one(c_.back()); }
  // Exactly one nonzero term.
  bool is_single_term() const;
  Scalar coeff(int i) const;  // zero outside the stored range
  const Scalar& leading() const;
  const std::vector<Scalar>& coeffs() const { return c_; }

  Poly1 operator+(const Poly1& o) const;
  Poly1 operator-(const Poly1& o) const;
  Poly1 operator*(const Poly1& o) const;
  Poly1 operator-() const;
  Poly1 scaled(const Scalar& c) const;
  Poly1 shifted(int k) const;  // multiply by var^k, k >= 0
  Poly1 pow(unsigned long e) const;
  Poly1 derivative() const;
  Poly1 monic() const;
  // Coefficients reversed: var^degree * f(1/var), written in `newvar`.
  Poly1 reversed(const std::string& newvar) const;

  // Quotient and remainder; the divisor must be nonzero.
  void divmod(const Poly1& d, Poly1& quot, Poly1& rem) const;
  Poly1 operator%(const Poly1& d) const;
  Poly1 operator/(const Poly1& d) const;  // exact division; nonzero remainder is an internal error
  // Monic gcd; gcd(f, 0) = monic f.
  static Poly1 gcd(Poly1 a, Poly1 b);

  Scalar eval(const Scalar& x) const;
  bool operator==(const Poly1& o) const;

  // Canonical printing in the expression grammar, highest degree first.
  std::string str() const;

 private:
  void trim();
  Field f_;
  std::string var_;
  std::vector<Scalar> c_;
};

// True iff every polynomial is squarefree and all are pairwise coprime.
// Inputs must be monic and nonzero.
bool squarefree_coprime_check(const std::vector<Poly1>& polys);

}  // namespace eulerseq
