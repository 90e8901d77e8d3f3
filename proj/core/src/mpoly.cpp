#include "eulerseq/mpoly.hpp"

namespace eulerseq {

long weighted_degree(const std::vector<long>& weights, const ExpVec& e) {
  long d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) d += weights[i] * static_cast<long>(e[i]);
  return d;
}

std::string monomial_str(const std::vector<std::string>& names, const ExpVec& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += names[i];
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

MPoly MPoly::constant(const Field& f, std::size_t nvars, const Scalar& c) {
  MPoly p(f, nvars);
  p.add_term(ExpVec(nvars, 0), c);
  return p;
}

MPoly MPoly::variable(const Field& f, std::size_t nvars, std::size_t i) {
  ExpVec e(nvars, 0);
  e[i] = 1;
  return monomial(f, nvars, std::move(e), f.one());
}

MPoly MPoly::monomial(const Field& f, std::size_t nvars, ExpVec e, const Scalar& c) {
  MPoly p(f, nvars);
  p.add_term(e, c);
  return p;
}

Scalar MPoly::coeff(const ExpVec& e) const {
  auto it = t_.find(e);
  return it == t_.end() ? f_.zero() : it->second;
}

void MPoly::add_term(const ExpVec& e, const Scalar& c) {
  if (f_.is_zero(c)) return;
  auto [it, inserted] = t_.emplace(e, c);
  if (!inserted) {
    it->second = f_.add(it->second, c);
    if (f_.is_zero(it->second)) t_.erase(it);
  }
}

MPoly MPoly::operator+(const MPoly& o) const {
  MPoly r = *this;
  for (const auto& [e, c] : o.t_) r.add_term(e, c);
  return r;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [e, c] : r.t_) c = f_.neg(c);
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
  MPoly r = *this;
  for (const auto& [e, c] : o.t_) r.add_term(e, f_.neg(c));
  return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
  MPoly r(f_, nvars_);
  for (const auto& [e1, c1] : t_)
    for (const auto& [e2, c2] : o.t_) {
      ExpVec e = e1;
      for (std::size_t i = 0; i < nvars_; ++i) e[i] += e2[i];
      r.add_term(e, f_.mul(c1, c2));
    }
  return r;
}

MPoly MPoly::scaled(const Scalar& c) const {
  MPoly r(f_, nvars_);
  for (const auto& [e, v] : t_) r.add_term(e, f_.mul(v, c));
  return r;
}

MPoly MPoly::times_monomial(const ExpVec& e, const Scalar& c) const {
  MPoly r(f_, nvars_);
  for (const auto& [e1, v] : t_) {
    ExpVec ee = e1;
    for (std::size_t i = 0; i < nvars_; ++i) ee[i] += e[i];
    r.add_term(ee, f_.mul(v, c));
  }
  return r;
}

MPoly MPoly::pow(unsigned long e) const {
  MPoly r = constant(f_, nvars_, f_.one());
  MPoly b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

MPoly MPoly::partial(std::size_t var) const {
  MPoly r(f_, nvars_);
  for (const auto& [e, c] : t_) {
    if (e[var] == 0) continue;
    ExpVec ee = e;
    ee[var] -= 1;
    r.add_term(ee, f_.mul(c, f_.from_int(e[var])));
  }
  return r;
}

bool MPoly::operator==(const MPoly& o) const {
  if (t_.size() != o.t_.size()) return false;
  auto it = t_.begin(), jt = o.t_.begin();
  for (; it != t_.end(); ++it, ++jt)
    if (it->first != jt->first || !f_.eq(it->second, jt->second)) return false;
  return true;
}

std::optional<long> MPoly::homogeneous_degree(const std::vector<long>& weights,
                                              std::string* offending) const {
  if (is_zero()) return std::nullopt;
  long deg = weighted_degree(weights, t_.begin()->first);
  for (const auto& [e, c] : t_) {
    long d = weighted_degree(weights, e);
    if (d != deg) {
      if (offending) {
        std::vector<std::string> names;
        for (std::size_t i = 0; i < nvars_; ++i) names.push_back("x" + std::to_string(i + 1));
        *offending = monomial_str(names, t_.begin()->first) + " (degree " +
                     std::to_string(deg) + ") vs " + monomial_str(names, e) + " (degree " +
                     std::to_string(d) + ")";
      }
      return std::nullopt;
    }
  }
  return deg;
}

RatFun MPoly::eval(const std::vector<RatFun>& args) const {
  if (args.size() != nvars_) throw InvalidInputError("wrong number of evaluation arguments");
  const Field& f = f_;
  const std::string& var = args.empty() ? "t" : args[0].var();
  RatFun acc = RatFun::zero(f, var);
  for (const auto& [e, c] : t_) {
    RatFun term = RatFun::of(Poly1::constant(f, var, c));
    for (std::size_t i = 0; i < nvars_; ++i)
      for (unsigned k = 0; k < e[i]; ++k) term = term * args[i];
    acc = acc + term;
  }
  return acc;
}

Scalar MPoly::eval(const std::vector<Scalar>& args) const {
  if (args.size() != nvars_) throw InvalidInputError("wrong number of evaluation arguments");
  Scalar acc = f_.zero();
  for (const auto& [e, c] : t_) {
    Scalar term = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (unsigned k = 0; k < e[i]; ++k) term = f_.mul(term, args[i]);
    acc = f_.add(acc, term);
  }
  return acc;
}

std::string MPoly::str(const std::vector<std::string>& names) const {
  if (is_zero()) return "0";
  std::string out;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    std::string cs = f_.str(it->second);
    bool negative = !cs.empty() && cs[0] == '-';
    if (negative) cs.erase(cs.begin());
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    std::string ms = monomial_str(names, it->first);
    if (ms == "1") {
      out += cs;
    } else {
      if (cs != "1") out += cs + "*";
      out += ms;
    }
  }
  return out;
}

}  // namespace eulerseq
