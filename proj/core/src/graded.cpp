#include "eulerseq/graded.hpp"

#include <numeric>

namespace eulerseq {

WeightedPresentation make_presentation(const Field& f, std::vector<std::string> variables,
                                       std::vector<long> weights,
                                       std::vector<MPoly> relations) {
  if (variables.size() != weights.size())
    throw InvalidInputError("variable and weight counts differ");
  for (std::size_t i = 0; i < variables.size(); ++i)
    for (std::size_t j = i + 1; j < variables.size(); ++j)
      if (variables[i] == variables[j])
        throw InvalidInputError("duplicate variable name '" + variables[i] + "'");
  for (long w : weights)
    if (w <= 0) throw InvalidInputError("weights must be positive");
  WeightedPresentation p{f, std::move(variables), std::move(weights), std::move(relations), {}, 1};
  for (std::size_t j = 0; j < p.relations.size(); ++j) {
    const MPoly& g = p.relations[j];
    if (g.is_zero()) throw InvalidInputError("relation " + std::to_string(j + 1) + " is zero");
    if (g.nvars() != p.variables.size())
      throw InvalidInputError("relation " + std::to_string(j + 1) + " has the wrong arity");
    std::string offending;
    auto deg = g.homogeneous_degree(p.weights, &offending);
    if (!deg)
      throw InvalidInputError("relation " + std::to_string(j + 1) +
                              " is not weighted-homogeneous: " + offending);
    if (*deg <= 0)
      throw InvalidInputError("relation " + std::to_string(j + 1) + " has degree <= 0");
    p.relation_degrees.push_back(*deg);
  }
  long g = 0;
  for (long w : p.weights) g = std::gcd(g, w);
  p.weight_gcd = g == 0 ? 1 : g;
  return p;
}

std::vector<ExpVec> monomial_basis(const std::vector<long>& weights, long degree) {
  std::vector<ExpVec> out;
  if (degree < 0) return out;
  std::size_t n = weights.size();
  ExpVec cur(n, 0);
  // Assign exponents to the first variable first, largest first: this emits
  // the monomials in descending lexicographic order.
  auto rec = [&](auto&& self, std::size_t i, long rem) -> void {
    if (i + 1 == n) {
      if (rem % weights[i] == 0) {
        cur[i] = static_cast<unsigned>(rem / weights[i]);
        out.push_back(cur);
        cur[i] = 0;
      }
      return;
    }
    for (long e = rem / weights[i]; e >= 0; --e) {
      cur[i] = static_cast<unsigned>(e);
      self(self, i + 1, rem - e * weights[i]);
    }
    cur[i] = 0;
  };
  if (n == 0) {
    if (degree == 0) out.push_back(cur);
    return out;
  }
  rec(rec, 0, degree);
  return out;
}

std::vector<Scalar> GradedPiece::coords(const MPoly& p) const {
  std::vector<Scalar> v(monomials.size(), p.field().zero());
  for (const auto& [e, c] : p.terms()) {
    auto it = index.find(e);
    if (it == index.end())
      throw InternalError("polynomial does not live in graded piece " + std::to_string(degree));
    v[it->second] = c;
  }
  return v;
}

std::vector<std::size_t> GradedPiece::quotient_coordinates() const {
  std::vector<bool> pivot(monomials.size(), false);
  for (std::size_t p : ideal_span.pivot_columns()) pivot[p] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < monomials.size(); ++i)
    if (!pivot[i]) out.push_back(i);
  return out;
}

GradedRing::GradedRing(WeightedPresentation pres) : pres_(std::move(pres)) {}

std::shared_ptr<const GradedPiece> GradedRing::piece(long degree) const {
  {
    std::lock_guard<std::mutex> lk(cache_->mu);
    auto it = cache_->map.find(degree);
    if (it != cache_->map.end()) return it->second;
  }
  // Computed outside the lock; a concurrent recomputation is idempotent.
  auto p = compute_piece(degree);
  std::lock_guard<std::mutex> lk(cache_->mu);
  auto [it, _] = cache_->map.emplace(degree, std::move(p));
  return it->second;
}

std::shared_ptr<const GradedPiece> GradedRing::compute_piece(long degree) const {
  auto piece = std::make_shared<GradedPiece>(GradedPiece{
      degree, {}, {}, ExactMatrix(pres_.field, 0, 0), Eliminator(pres_.field, 0), 0, 0});
  piece->monomials = eulerseq::monomial_basis(pres_.weights, degree);
  for (std::size_t i = 0; i < piece->monomials.size(); ++i)
    piece->index.emplace(piece->monomials[i], i);

  // I_e is spanned by the monomial multiples of the relations, which is the
  // whole degree-e piece of the ideal because the relations are homogeneous.
  std::size_t ncols = 0;
  std::vector<std::pair<std::size_t, ExpVec>> gens;  // (relation index, cofactor monomial)
  for (std::size_t j = 0; j < pres_.relations.size(); ++j) {
    for (const auto& m : eulerseq::monomial_basis(pres_.weights, degree - pres_.relation_degrees[j])) {
      gens.emplace_back(j, m);
      ++ncols;
    }
  }
  piece->ideal_columns = ExactMatrix(pres_.field, piece->monomials.size(), ncols);
  piece->ideal_span = Eliminator(pres_.field, piece->monomials.size());
  std::size_t col = 0;
  for (const auto& [j, m] : gens) {
    MPoly prod = pres_.relations[j].times_monomial(m, pres_.field.one());
    std::vector<Scalar> v = piece->coords(prod);
    piece->ideal_columns.set_col(col++, v);
    piece->ideal_span.add(std::move(v));
  }
  piece->ideal_rank = piece->ideal_span.rank();
  piece->quotient_dim = static_cast<long>(piece->monomials.size()) -
                        static_cast<long>(piece->ideal_rank);
  return piece;
}

long GradedRing::quotient_dim(long degree) const {
  if (degree < 0) return 0;
  return piece(degree)->quotient_dim;
}

std::vector<ExpVec> GradedRing::monomial_basis(long degree) const {
  return eulerseq::monomial_basis(pres_.weights, degree);
}

std::shared_ptr<const GradedPiece> ideal_piece(const GradedRing& ring, long degree) {
  return ring.piece(degree);
}

mpz_class hilbert_ci_oracle(const std::vector<long>& weights,
                            const std::vector<long>& relation_degrees, long degree) {
  if (degree < 0) return 0;
  std::size_t n = static_cast<std::size_t>(degree) + 1;
  std::vector<mpz_class> c(n, 0);
  c[0] = 1;
  for (long d : relation_degrees) {  // multiply by (1 - t^d)
    if (d <= 0) throw InvalidInputError("relation degrees must be positive");
    for (long i = degree; i >= d; --i) c[static_cast<std::size_t>(i)] -= c[static_cast<std::size_t>(i - d)];
  }
  for (long w : weights) {  // divide by (1 - t^w): cumulative sums
    if (w <= 0) throw InvalidInputError("weights must be positive");
    for (long i = w; i <= degree; ++i) c[static_cast<std::size_t>(i)] += c[static_cast<std::size_t>(i - w)];
  }
  return c[static_cast<std::size_t>(degree)];
}

}  // namespace eulerseq
