#pragma once

#include <string>
#include <vector>

#include "eulerseq/poly.hpp"
#include "eulerseq/ratfun.hpp"

namespace eulerseq {

// Laurent polynomial in one variable; trimmed at both ends.
class Laurent {
 public:
  Laurent(Field f, std::string var) : f_(f), var_(std::move(var)) {}

  static Laurent zero(const Field& f, const std::string& var) { return Laurent(f, var); }
  static Laurent monomial(const Field& f, const std::string& var, const Scalar& c, long e);
  static Laurent from_poly(const Poly1& p);
  // Requires the denominator to be a monomial c * var^k.
  static Laurent from_ratfun(const RatFun& r);

  const Field& field() const { return f_; }
  const std::string& var() const { return var_; }
  bool is_zero() const { return c_.empty(); }
  bool is_monomial() const { return c_.size() == 1; }
  long low_degree() const;
  long degree() const;
  Scalar coeff(long e) const;

  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator*(const Laurent& o) const;
  Laurent operator-() const;
  Laurent scaled(const Scalar& c) const;
  Laurent shifted(long k) const;  // multiply by var^k
  bool operator==(const Laurent& o) const;

  // Exact division by a monomial divisor.
  Laurent divided_by_monomial(const Laurent& m) const;
  // Exponent negation: f(1/u) written in `newvar`.
  Laurent reciprocal_substitution(const std::string& newvar) const;

  std::string str() const;

 private:
  void trim();
  Field f_;
  std::string var_;
  long lo_ = 0;
  std::vector<Scalar> c_;  // value = sum c_[i] * var^(lo_ + i)
};

using LaurentMatrix = std::vector<std::vector<Laurent>>;

// Exact determinant by cofactor expansion; the matrix must be square.
Laurent laurent_det(const LaurentMatrix& m);

}  // namespace eulerseq
