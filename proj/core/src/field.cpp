#include "eulerseq/field.hpp"

namespace eulerseq {

namespace {

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31))
    throw InvalidInputError("field modulus " + std::to_string(p) + " is out of range");
  if (!is_prime_u32(p))
    throw InvalidInputError("field modulus " + std::to_string(p) + " is not prime");
  return Field(p);
}

std::uint64_t Field::fp(const Scalar& a) const {
  if (p_ == 0 || !std::holds_alternative<std::uint64_t>(a.v_))
    throw InvalidInputError("mixed field specs: expected a residue scalar");
  return std::get<std::uint64_t>(a.v_);
}

const mpq_class& Field::q(const Scalar& a) const {
  if (p_ != 0 || !std::holds_alternative<mpq_class>(a.v_))
    throw InvalidInputError("mixed field specs: expected a rational scalar");
  return std::get<mpq_class>(a.v_);
}

Scalar Field::zero() const {
  return p_ ? Scalar(std::uint64_t{0}) : Scalar(mpq_class(0));
}

Scalar Field::one() const {
  return p_ ? Scalar(std::uint64_t{1}) : Scalar(mpq_class(1));
}

Scalar Field::from_int(long long n) const {
  if (!p_) return Scalar(mpq_class(static_cast<long>(n)));
  long long r = n % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return Scalar(static_cast<std::uint64_t>(r));
}

Scalar Field::from_mpz(const mpz_class& n) const {
  if (!p_) return Scalar(mpq_class(n));
  mpz_class r = n % p_;
  if (r < 0) r += p_;
  return Scalar(static_cast<std::uint64_t>(r.get_ui()));
}

Scalar Field::from_mpq(const mpq_class& v) const {
  if (!p_) {
    mpq_class c = v;
    c.canonicalize();
    return Scalar(c);
  }
  return div(from_mpz(v.get_num()), from_mpz(v.get_den()));
}

Scalar Field::from_fraction(long long num, long long den) const {
  if (den == 0) throw InvalidInputError("zero denominator");
  if (!p_) {
    mpq_class v(static_cast<long>(num), static_cast<long>(den));
    v.canonicalize();
    return Scalar(v);
  }
  return div(from_int(num), from_int(den));
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (p_) return Scalar((fp(a) + fp(b)) % p_);
  return Scalar(mpq_class(q(a) + q(b)));
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (p_) return Scalar((fp(a) + p_ - fp(b)) % p_);
  return Scalar(mpq_class(q(a) - q(b)));
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (p_) return Scalar((fp(a) * fp(b)) % p_);  // p < 2^31 keeps products in range
  return Scalar(mpq_class(q(a) * q(b)));
}

Scalar Field::neg(const Scalar& a) const {
  if (p_) return Scalar((p_ - fp(a)) % p_);
  return Scalar(mpq_class(-q(a)));
}

std::uint64_t Field::pow_mod(std::uint64_t base, std::uint64_t e) const {
  std::uint64_t r = 1 % p_;
  base %= p_;
  while (e) {
    if (e & 1) r = r * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return r;
}

Scalar Field::inv(const Scalar& a) const {
  if (p_) {
    std::uint64_t v = fp(a);
    if (v == 0) throw InvalidInputError("division by zero in F_p");
    return Scalar(pow_mod(v, p_ - 2));
  }
  if (q(a) == 0) throw InvalidInputError("division by zero in Q");
  return Scalar(mpq_class(1 / q(a)));
}

Scalar Field::div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

bool Field::is_zero(const Scalar& a) const { return p_ ? fp(a) == 0 : q(a) == 0; }

bool Field::is_one(const Scalar& a) const { return p_ ? fp(a) == 1 % p_ : q(a) == 1; }

bool Field::eq(const Scalar& a, const Scalar& b) const {
  return p_ ? fp(a) == fp(b) : q(a) == q(b);
}

std::string Field::str(const Scalar& a) const {
  if (p_) return std::to_string(fp(a));
  return q(a).get_str();
}

const mpq_class& Field::rational(const Scalar& a) const { return q(a); }

}  // namespace eulerseq
