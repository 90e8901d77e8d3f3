#include "eulerseq/divisor.hpp"

#include <algorithm>
#include <numeric>

namespace eulerseq {

bool Place::same(const Place& o) const {
  if (at_infinity != o.at_infinity) return false;
  return at_infinity || poly == o.poly;
}

QDivisorP1::QDivisorP1(const Field& f, std::vector<DivisorTerm> terms)
    : f_(f), terms_(std::move(terms)) {
  int infinities = 0;
  std::vector<Poly1> finite;
  for (auto& t : terms_) {
    if (t.den == 0) throw InvalidInputError("zero coefficient denominator");
    if (t.den < 0) {
      t.den = -t.den;
      t.num = -t.num;
    }
    long long g = std::gcd(t.num < 0 ? -t.num : t.num, t.den);
    if (g > 1) {
      t.num /= g;
      t.den /= g;
    }
    if (t.num == 0) throw InvalidInputError("zero divisor coefficient");
    if (t.place.at_infinity) {
      ++infinities;
    } else {
      if (t.place.poly.field() != f_) throw InvalidInputError("place polynomial over the wrong field");
      if (t.place.poly.var() != "t") throw InvalidInputError("place polynomials use the variable t");
      if (t.place.poly.degree() < 1) throw InvalidInputError("constant place polynomial");
      if (!t.place.poly.is_monic()) throw InvalidInputError("place polynomial must be monic");
      finite.push_back(t.place.poly);
    }
  }
  if (infinities > 1) throw InvalidInputError("the point at infinity appears twice");
  if (!squarefree_coprime_check(finite))
    throw InvalidInputError("places must be squarefree and pairwise coprime");
}

std::pair<long long, long long> QDivisorP1::degree_fraction() const {
  long long num = 0, den = 1;
  for (const auto& t : terms_) {
    // num/den += t.num * deg / t.den
    long long n2 = t.num * t.place.degree(), d2 = t.den;
    num = num * d2 + n2 * den;
    den *= d2;
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  if (num == 0) den = 1;
  return {num, den};
}

std::string QDivisorP1::degree_str() const {
  auto [n, d] = degree_fraction();
  return d == 1 ? std::to_string(n) : std::to_string(n) + "/" + std::to_string(d);
}

namespace {

std::string coeff_prefix(long long num, long long den) {
  std::string s;
  if (num == 1 && den == 1) return "";
  if (num == -1 && den == 1) return "-";
  s = std::to_string(num);
  if (den != 1) s += "/" + std::to_string(den);
  return s + " ";
}

}  // namespace

std::string QDivisorP1::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    out += coeff_prefix(t.num, t.den) + "{" + t.place.str() + "}";
  }
  return out;
}

long long IntDivisor::degree() const {
  long long d = 0;
  for (const auto& t : terms) d += t.coeff * t.place.degree();
  return d;
}

std::string IntDivisor::str() const {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& t : terms) {
    if (!out.empty()) out += " + ";
    out += coeff_prefix(t.coeff, 1) + "{" + t.place.str() + "}";
  }
  return out;
}

IntDivisor floor_divisor(const QDivisorP1& d, long long i) {
  IntDivisor out;
  for (const auto& t : d.terms()) {
    long long c = floor_div(i * t.num, t.den);
    if (c != 0) out.terms.push_back({t.place, c});
  }
  return out;
}

WLDivisors build_WL(const QDivisorP1& d, long long degree, long long characteristic) {
  WLDivisors out;
  for (const auto& t : d.terms()) {
    switch (classify_component(t.num, t.den, degree, characteristic)) {
      case ComponentClass::Free:
        break;
      case ComponentClass::LOnly:
        out.L.terms.push_back({t.place, 1});
        break;
      case ComponentClass::WAndL:
        out.W.terms.push_back({t.place, 1});
        out.L.terms.push_back({t.place, 1});
        break;
    }
  }
  return out;
}

IntDivisor add_divisors(const IntDivisor& a, const IntDivisor& b) {
  IntDivisor out = a;
  for (const auto& t : b.terms) {
    bool merged = false;
    for (auto& s : out.terms)
      if (s.place.same(t.place)) {
        s.coeff += t.coeff;
        merged = true;
        break;
      }
    if (!merged) out.terms.push_back(t);
  }
  std::erase_if(out.terms, [](const IntDivisorTerm& t) { return t.coeff == 0; });
  return out;
}

namespace {

// Canonical numerator frame for L(E): every element is N / den with N a
// polynomial of degree <= bound, subject to divisibility at the negative places.
struct SectionFrame {
  Poly1 den;
  long long bound = -1;
  std::vector<Poly1> negative_moduli;  // g^{-c} for c < 0

  SectionFrame(const Field& f, const IntDivisor& e) : den(Poly1::one(f, "t")) {
    bound = 0;
    for (const auto& t : e.terms) {
      if (t.place.at_infinity) {
        bound += t.coeff;
      } else if (t.coeff > 0) {
        bound += t.coeff * t.place.degree();
        den = den * t.place.poly.pow(static_cast<unsigned long>(t.coeff));
      } else {
        negative_moduli.push_back(t.place.poly.pow(static_cast<unsigned long>(-t.coeff)));
      }
    }
  }
};

}  // namespace

SectionSpace rr_space(const Field& f, const IntDivisor& e) {
  std::vector<Poly1> support;
  for (const auto& t : e.terms)
    if (!t.place.at_infinity) support.push_back(t.place.poly);
  if (!squarefree_coprime_check(support))
    throw InvalidInputError("divisor support must be squarefree and pairwise coprime");

  SectionSpace out{e, {}};
  SectionFrame frame(f, e);
  if (frame.bound < 0) return out;
  std::size_t ncoef = static_cast<std::size_t>(frame.bound) + 1;

  std::size_t nrows = 0;
  for (const auto& m : frame.negative_moduli) nrows += static_cast<std::size_t>(m.degree());
  ExactMatrix cond(f, nrows, ncoef);
  std::size_t row0 = 0;
  for (const auto& m : frame.negative_moduli) {
    // Rows demand N = 0 mod m, via the residues of t^j.
    Poly1 rj = Poly1::one(f, "t") % m;
    for (std::size_t j = 0; j < ncoef; ++j) {
      for (int k = 0; k <= rj.degree(); ++k)
        cond.at(row0 + static_cast<std::size_t>(k), j) = rj.coeff(k);
      rj = (rj * Poly1::variable(f, "t")) % m;
    }
    row0 += static_cast<std::size_t>(m.degree());
  }

  for (const auto& v : solve_kernel(cond)) {
    Poly1 num = Poly1::from_coeffs(f, "t", v);
    out.basis.emplace_back(num, frame.den);
  }
  return out;
}

std::vector<Scalar> section_coords(const Field& f, const IntDivisor& e, const RatFun& fn) {
  SectionFrame frame(f, e);
  if (frame.bound < 0) throw InternalError("coordinates in an empty section space");
  RatFun scaled = fn * RatFun::of(frame.den);
  const Poly1& num = scaled.as_poly();
  if (num.degree() > frame.bound)
    throw InternalError("function does not lie in the section space");
  std::vector<Scalar> v(static_cast<std::size_t>(frame.bound) + 1, f.zero());
  for (int i = 0; i <= num.degree(); ++i) v[static_cast<std::size_t>(i)] = num.coeff(i);
  return v;
}

void validate_ample(const QDivisorP1& d) {
  auto [num, den] = d.degree_fraction();
  (void)den;
  if (num <= 0) throw NonAmpleError(d.degree_str());
}

std::vector<SectionSpace> section_ring(const QDivisorP1& d, long maxdeg) {
  validate_ample(d);
  if (maxdeg < 1) throw InvalidInputError("maxdeg must be at least 1");
  std::vector<SectionSpace> pieces;
  for (long i = 0; i <= maxdeg; ++i) pieces.push_back(rr_space(d.field(), floor_divisor(d, i)));
  return pieces;
}

namespace {

ExpVec padded(const ExpVec& e, std::size_t n) {
  ExpVec out = e;
  out.resize(n, 0);
  return out;
}

MPoly pad_to(const MPoly& p, std::size_t nvars) {
  MPoly out(p.field(), nvars);
  for (const auto& [e, c] : p.terms()) out.add_term(padded(e, nvars), c);
  return out;
}

}  // namespace

WeightedPresentation SectionRingModel::presentation() const {
  std::vector<std::string> names;
  std::vector<long> w;
  for (const auto& g : generators) {
    names.push_back(g.name);
    w.push_back(g.degree);
  }
  std::vector<MPoly> rels;
  for (const auto& r : relations) rels.push_back(pad_to(r, names.size()));
  return make_presentation(divisor.field(), std::move(names), std::move(w), std::move(rels));
}

SectionRingModel present_section_ring(const QDivisorP1& d, long maxdeg) {
  const Field& f = d.field();
  SectionRingModel model{d, maxdeg, section_ring(d, maxdeg), {}, {}, {}, false};

  std::vector<long> genw;
  std::vector<std::vector<RatFun>> powers;  // powers[g] = [1, f_g, f_g^2, ...]
  auto eval_monomial = [&](const ExpVec& e) {
    RatFun acc = RatFun::one(f, "t");
    for (std::size_t g = 0; g < e.size(); ++g) {
      while (powers[g].size() <= e[g])
        powers[g].push_back(powers[g].back() * model.generators[g].function);
      if (e[g]) acc = acc * powers[g][e[g]];
    }
    return acc;
  };

  // Leading monomials of the discovered relations. A monomial divisible by
  // one of them rewrites, through multiples of that relation, into
  // lexicographically larger monomials of the same degree, so skipping it
  // changes neither the product span nor the set of new relations. This is
  // what keeps the evaluation work proportional to the piece dimension.
  std::vector<ExpVec> rel_leads;
  auto reducible = [&](const ExpVec& e) {
    for (const auto& lead : rel_leads) {
      bool divides = true;
      for (std::size_t g = 0; g < e.size() && divides; ++g)
        divides = (g < lead.size() ? lead[g] : 0u) <= e[g];
      if (divides) return true;
    }
    return false;
  };

  long last_new_gen = 0, last_new_rel = 0;
  for (long i = 1; i <= maxdeg; ++i) {
    IntDivisor Ei = floor_divisor(d, i);
    const SectionSpace& piece = model.pieces[static_cast<std::size_t>(i)];
    std::size_t n_i = piece.basis.size();
    std::vector<ExpVec> monomials;
    for (auto& m : monomial_basis(genw, i))
      if (!reducible(m)) monomials.push_back(std::move(m));
    if (n_i == 0) {
      // Floor superadditivity rules out products landing in an empty piece.
      if (!monomials.empty()) throw InternalError("products land in an empty section piece");
      continue;
    }
    auto coords = [&](const RatFun& fn) { return section_coords(f, Ei, fn); };
    std::size_t width = coords(RatFun::zero(f, "t")).size();

    // One elimination pass over the surviving monomials, tracking how each
    // dependent column combines the earlier ones: every dependency is a
    // relation not generated by lower-degree ones.
    struct Row {
      std::vector<Scalar> coord;
      std::vector<Scalar> expr;
    };
    std::map<std::size_t, Row> rows;
    for (std::size_t j = 0; j < monomials.size(); ++j) {
      std::vector<Scalar> v = coords(eval_monomial(monomials[j]));
      std::vector<Scalar> expr(monomials.size(), f.zero());
      expr[j] = f.one();
      std::size_t lead = width;
      for (std::size_t pos = 0; pos < width; ++pos) {
        if (f.is_zero(v[pos])) continue;
        auto it = rows.find(pos);
        if (it == rows.end()) {
          lead = pos;
          break;
        }
        Scalar k = v[pos];
        for (std::size_t q = pos; q < width; ++q)
          v[q] = f.sub(v[q], f.mul(k, it->second.coord[q]));
        for (std::size_t q = 0; q <= j; ++q)
          expr[q] = f.sub(expr[q], f.mul(k, it->second.expr[q]));
      }
      if (lead == width) {
        canonicalize_vector(f, expr);
        MPoly rel(f, genw.size());
        for (std::size_t q = 0; q <= j; ++q) rel.add_term(monomials[q], expr[q]);
        model.relations.push_back(rel);
        model.relation_degrees.push_back(i);
        rel_leads.push_back(monomials[j]);
        last_new_rel = i;
      } else {
        Scalar pinv = f.inv(v[lead]);
        for (auto& x : v) x = f.mul(x, pinv);
        for (auto& x : expr) x = f.mul(x, pinv);
        rows.emplace(lead, Row{std::move(v), std::move(expr)});
      }
    }

    if (rows.size() < n_i) {
      Eliminator prodspan(f, width);
      for (const auto& [pos, row] : rows) prodspan.add(row.coord);
      for (const auto& b : piece.basis) {
        if (!prodspan.add(coords(b))) continue;
        std::string name = "x" + std::to_string(model.generators.size() + 1);
        model.generators.push_back({i, b, name});
        genw.push_back(i);
        powers.push_back({RatFun::one(f, "t")});
        last_new_gen = i;
      }
      if (prodspan.rank() != n_i) throw InternalError("section piece not spanned");
    } else if (rows.size() != n_i) {
      throw InternalError("product span exceeds the section piece");
    }
  }

  long window = (maxdeg + 2) / 3;
  model.complete = last_new_gen <= maxdeg - window && last_new_rel <= maxdeg - window;
  // Final arities: pad every relation to the full generator count.
  for (auto& r : model.relations) r = pad_to(r, model.generators.size());
  return model;
}

}  // namespace eulerseq
