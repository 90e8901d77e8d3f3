#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "eulerseq/errors.hpp"

namespace eulerseq {

class Field;

// An exact scalar, either an arbitrary-precision rational or a prime-field
// residue. Scalars are inert values; all arithmetic goes through the Field
// that created them, which rejects values of the wrong kind so that elements
// of different fields can never be combined silently.
class Scalar {
 public:
  Scalar() : v_(std::uint64_t{0}) {}

  bool operator==(const Scalar& o) const { return v_ == o.v_; }

 private:
  friend class Field;
  explicit Scalar(std::uint64_t r) : v_(r) {}
  explicit Scalar(mpq_class q) : v_(std::move(q)) {}
  std::variant<std::uint64_t, mpq_class> v_;
};

// The base field: the rationals or F_p for a prime p < 2^31.
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint32_t p);  // verifies primality by trial division

  bool is_rationals() const { return p_ == 0; }
  // 0 for the rationals, p for F_p.
  std::uint32_t characteristic() const { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long n) const;
  Scalar from_mpz(const mpz_class& n) const;
  Scalar from_mpq(const mpq_class& q) const;  // in F_p the denominator is inverted
  Scalar from_fraction(long long num, long long den) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar div(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;

  bool is_zero(const Scalar& a) const;
  bool is_one(const Scalar& a) const;
  bool eq(const Scalar& a, const Scalar& b) const;

  // Exact decimal/fraction string: "3", "-3/2"; residues print as 0..p-1.
  std::string str(const Scalar& a) const;
  // The rational value of a Q-scalar (error for prime fields).
  const mpq_class& rational(const Scalar& a) const;

  bool operator==(const Field& o) const { return p_ == o.p_; }
  bool operator!=(const Field& o) const { return p_ != o.p_; }

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint64_t fp(const Scalar& a) const;
  const mpq_class& q(const Scalar& a) const;
  std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e) const;

  std::uint32_t p_ = 0;  // 0 means rationals
};

}  // namespace eulerseq
