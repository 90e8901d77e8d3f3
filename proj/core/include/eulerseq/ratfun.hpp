#pragma once

#include "eulerseq/poly.hpp"

namespace eulerseq {

// Quotient of univariate polynomials, kept reduced with a monic denominator.
class RatFun {
 public:
  RatFun(Poly1 num, Poly1 den);
  static RatFun of(Poly1 p);
  static RatFun zero(const Field& f, const std::string& var);
  static RatFun one(const Field& f, const std::string& var);

  const Poly1& num() const { return num_; }
  const Poly1& den() const { return den_; }
  const Field& field() const { return num_.field(); }
  const std::string& var() const { return num_.var(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  const Poly1& as_poly() const;

  RatFun operator+(const RatFun& o) const;
  RatFun operator-(const RatFun& o) const;
  RatFun operator*(const RatFun& o) const;
  RatFun operator/(const RatFun& o) const;
  RatFun operator-() const;
  RatFun scaled(const Scalar& c) const;
  RatFun derivative() const;
  bool operator==(const RatFun& o) const;

  // f(1/u), written in the variable `newvar`.
  RatFun reciprocal_substitution(const std::string& newvar) const;

  // Multiplicity of a monic squarefree factor g in this function (negative at poles).
  long order_at(const Poly1& g) const;

  // "num/den" with integer primitive numerator and denominator (denominator
  // omitted when it is 1). Both parts parse back in the expression grammar.
  std::string str() const;

 private:
  Poly1 num_, den_;
  void reduce();
};

}  // namespace eulerseq
