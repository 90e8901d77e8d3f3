#pragma once

#include <string>

namespace eulerseq {

// Classification of a divisor component with reduced coefficient p/q against
// a twist degree d and the characteristic w:
//   Free  <=> p*d = -1 (mod q) and w does not divide q
//   WAndL <=> p*d = -1 (mod q) and w divides q
//   LOnly <=> p*d != -1 (mod q)
// A WAndL component lies in both correction divisors (W is contained in L).
enum class ComponentClass { Free, LOnly, WAndL };

std::string to_string(ComponentClass c);

// Floor with the mathematically correct rounding for negative arguments.
long long floor_div(long long a, long long b);

// s = floor(p*d/q); requires gcd(p, q) = 1.
long long s_value(long long p, long long q, long long d);

struct SiValue {
  long long s_i = 0;
  // s_i attains the minimum s; equivalent to {p*d/q} + {p*i/q} < 1.
  bool achieves_minimum = false;
};

// s_i = m_{i+d} - m_i with m_i = floor(p*i/q).
SiValue s_i_value(long long p, long long q, long long d, long long i);

// characteristic is 0 or a prime.
ComponentClass classify_component(long long p, long long q, long long d,
                                  long long characteristic);

}  // namespace eulerseq
