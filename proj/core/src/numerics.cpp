#include "eulerseq/numerics.hpp"

#include <numeric>

#include "eulerseq/errors.hpp"

namespace eulerseq {

std::string to_string(ComponentClass c) {
  switch (c) {
    case ComponentClass::Free: return "Free";
    case ComponentClass::LOnly: return "LOnly";
    case ComponentClass::WAndL: return "WAndL";
  }
  return "?";
}

long long floor_div(long long a, long long b) {
  long long q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

namespace {

void require_coprime(long long p, long long q) {
  if (q <= 0) throw InvalidInputError("denominator must be positive");
  if (std::gcd(p < 0 ? -p : p, q) != 1)
    throw InvalidInputError("p and q must be coprime");
}

}  // namespace

long long s_value(long long p, long long q, long long d) {
  require_coprime(p, q);
  return floor_div(p * d, q);
}

SiValue s_i_value(long long p, long long q, long long d, long long i) {
  require_coprime(p, q);
  long long m_id = floor_div(p * (i + d), q);
  long long m_i = floor_div(p * i, q);
  SiValue v;
  v.s_i = m_id - m_i;
  v.achieves_minimum = (v.s_i == floor_div(p * d, q));
  return v;
}

ComponentClass classify_component(long long p, long long q, long long d,
                                  long long characteristic) {
  require_coprime(p, q);
  if (characteristic < 0) throw InvalidInputError("characteristic must be 0 or a prime");
  long long r = ((p * d) % q + q) % q;
  bool congruent = (r == (q - 1) % q);
  if (!congruent) return ComponentClass::LOnly;
  bool w_divides_q = characteristic != 0 && q % characteristic == 0;
  return w_divides_q ? ComponentClass::WAndL : ComponentClass::Free;
}

}  // namespace eulerseq
