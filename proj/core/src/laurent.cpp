#include "eulerseq/laurent.hpp"

#include <algorithm>

namespace eulerseq {

void Laurent::trim() {
  std::size_t head = 0;
  while (head < c_.size() && f_.is_zero(c_[head])) ++head;
  if (head) {
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(head));
    lo_ += static_cast<long>(head);
  }
  while (!c_.empty() && f_.is_zero(c_.back())) c_.pop_back();
  if (c_.empty()) lo_ = 0;
}

Laurent Laurent::monomial(const Field& f, const std::string& var, const Scalar& c, long e) {
  Laurent r(f, var);
  if (!f.is_zero(c)) {
    r.lo_ = e;
    r.c_.push_back(c);
  }
  return r;
}

Laurent Laurent::from_poly(const Poly1& p) {
  Laurent r(p.field(), p.var());
  r.c_ = p.coeffs();
  r.trim();
  return r;
}

Laurent Laurent::from_ratfun(const RatFun& r) {
  const Poly1& d = r.den();
  if (!d.is_single_term())
    throw InternalError("rational function is not Laurent: " + r.str());
  Laurent out = from_poly(r.num());
  out = out.shifted(-d.degree());
  if (!r.field().is_one(d.leading())) out = out.scaled(r.field().inv(d.leading()));
  return out;
}

long Laurent::low_degree() const {
  if (is_zero()) throw InternalError("degree of the zero Laurent polynomial");
  return lo_;
}

long Laurent::degree() const {
  if (is_zero()) throw InternalError("degree of the zero Laurent polynomial");
  return lo_ + static_cast<long>(c_.size()) - 1;
}

Scalar Laurent::coeff(long e) const {
  long i = e - lo_;
  if (i < 0 || i >= static_cast<long>(c_.size())) return f_.zero();
  return c_[static_cast<std::size_t>(i)];
}

Laurent Laurent::operator+(const Laurent& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  Laurent r(f_, var_);
  long lo = std::min(lo_, o.lo_);
  long hi = std::max(degree(), o.degree());
  r.lo_ = lo;
  r.c_.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (long e = lo; e <= hi; ++e) r.c_.push_back(f_.add(coeff(e), o.coeff(e)));
  r.trim();
  return r;
}

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& c : r.c_) c = f_.neg(c);
  return r;
}

Laurent Laurent::operator-(const Laurent& o) const { return *this + (-o); }

Laurent Laurent::operator*(const Laurent& o) const {
  Laurent r(f_, var_);
  if (is_zero() || o.is_zero()) return r;
  r.lo_ = lo_ + o.lo_;
  r.c_.assign(c_.size() + o.c_.size() - 1, f_.zero());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (f_.is_zero(c_[i])) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      r.c_[i + j] = f_.add(r.c_[i + j], f_.mul(c_[i], o.c_[j]));
  }
  r.trim();
  return r;
}

Laurent Laurent::scaled(const Scalar& c) const {
  Laurent r(f_, var_);
  if (f_.is_zero(c)) return r;
  r.lo_ = lo_;
  r.c_ = c_;
  for (auto& x : r.c_) x = f_.mul(x, c);
  r.trim();
  return r;
}

Laurent Laurent::shifted(long k) const {
  Laurent r = *this;
  if (!r.is_zero()) r.lo_ += k;
  return r;
}

bool Laurent::operator==(const Laurent& o) const {
  if (c_.size() != o.c_.size()) return false;
  if (!c_.empty() && lo_ != o.lo_) return false;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!f_.eq(c_[i], o.c_[i])) return false;
  return true;
}

Laurent Laurent::divided_by_monomial(const Laurent& m) const {
  if (!m.is_monomial()) throw InternalError("division by a non-monomial Laurent polynomial");
  return shifted(-m.lo_).scaled(f_.inv(m.c_[0]));
}

Laurent Laurent::reciprocal_substitution(const std::string& newvar) const {
  Laurent r(f_, newvar);
  if (is_zero()) return r;
  r.lo_ = -degree();
  r.c_.assign(c_.rbegin(), c_.rend());
  return r;
}

std::string Laurent::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (long e = degree(); e >= lo_; --e) {
    Scalar c = coeff(e);
    if (f_.is_zero(c)) continue;
    std::string cs = f_.str(c);
    bool negative = !cs.empty() && cs[0] == '-';
    if (negative) cs.erase(cs.begin());
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    bool unit_coeff = (cs == "1");
    if (e == 0) {
      out += cs;
    } else {
      if (!unit_coeff) out += cs + "*";
      out += var_;
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

Laurent laurent_det(const LaurentMatrix& m) {
  std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw InvalidInputError("determinant of a non-square matrix");
  if (n == 0) throw InvalidInputError("determinant of an empty matrix");
  const Field& f = m[0][0].field();
  const std::string& var = m[0][0].var();
  if (n == 1) return m[0][0];
  std::vector<std::size_t> cols(n);
  for (std::size_t i = 0; i < n; ++i) cols[i] = i;
  // Cofactor expansion along the first row; fine at the 2x2 and 3x3 sizes we see.
  struct Rec {
    const LaurentMatrix& a;
    const Field& f;
    const std::string& var;
    Laurent run(std::size_t row, std::vector<std::size_t>& cs) {
      if (cs.size() == 1) return a[row][cs[0]];
      Laurent acc = Laurent::zero(f, var);
      for (std::size_t k = 0; k < cs.size(); ++k) {
        if (a[row][cs[k]].is_zero()) continue;
        std::vector<std::size_t> rest;
        rest.reserve(cs.size() - 1);
        for (std::size_t j = 0; j < cs.size(); ++j)
          if (j != k) rest.push_back(cs[j]);
        Laurent minor = run(row + 1, rest);
        Laurent term = a[row][cs[k]] * minor;
        acc = (k % 2 == 0) ? acc + term : acc - term;
      }
      return acc;
    }
  };
  Rec rec{m, f, var};
  return rec.run(0, cols);
}

}  // namespace eulerseq
