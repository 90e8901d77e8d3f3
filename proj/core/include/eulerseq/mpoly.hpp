#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eulerseq/field.hpp"
#include "eulerseq/ratfun.hpp"

namespace eulerseq {

using ExpVec = std::vector<unsigned>;

// Multivariate polynomial over an exact field. Terms are stored in a fixed
// lexicographic monomial order; printing runs highest first.
class MPoly {
 public:
  MPoly(const Field& f, std::size_t nvars) : f_(f), nvars_(nvars) {}

  static MPoly zero(const Field& f, std::size_t nvars) { return MPoly(f, nvars); }
  static MPoly constant(const Field& f, std::size_t nvars, const Scalar& c);
  static MPoly variable(const Field& f, std::size_t nvars, std::size_t i);
  static MPoly monomial(const Field& f, std::size_t nvars, ExpVec e, const Scalar& c);

  const Field& field() const { return f_; }
  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return t_.empty(); }
  const std::map<ExpVec, Scalar>& terms() const { return t_; }
  Scalar coeff(const ExpVec& e) const;

  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly operator-() const;
  MPoly scaled(const Scalar& c) const;
  MPoly times_monomial(const ExpVec& e, const Scalar& c) const;
  MPoly pow(unsigned long e) const;
  // Formal partial derivative; valid in any characteristic.
  MPoly partial(std::size_t var) const;
  bool operator==(const MPoly& o) const;

  void add_term(const ExpVec& e, const Scalar& c);

  // Weighted degree of a homogeneous polynomial. For an inhomogeneous one,
  // nullopt, with the offending monomial pair reported when requested.
  std::optional<long> homogeneous_degree(const std::vector<long>& weights,
                                         std::string* offending = nullptr) const;

  RatFun eval(const std::vector<RatFun>& args) const;
  Scalar eval(const std::vector<Scalar>& args) const;

  std::string str(const std::vector<std::string>& names) const;

 private:
  Field f_;
  std::size_t nvars_;
  std::map<ExpVec, Scalar> t_;
};

long weighted_degree(const std::vector<long>& weights, const ExpVec& e);
std::string monomial_str(const std::vector<std::string>& names, const ExpVec& e);

}  // namespace eulerseq
