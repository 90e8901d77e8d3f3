#pragma once

#include <memory>
#include <mutex>
#include <map>
#include <string>
#include <vector>

#include "eulerseq/matrix.hpp"
#include "eulerseq/mpoly.hpp"

namespace eulerseq {

// A positively graded algebra A = P/I presented by weighted generators and
// homogeneous relations.
struct WeightedPresentation {
  Field field;
  std::vector<std::string> variables;
  std::vector<long> weights;
  std::vector<MPoly> relations;
  std::vector<long> relation_degrees;
  // gcd of the generator weights; the coprimality convention is reported, not enforced.
  long weight_gcd = 1;
};

// Validates weights and relation homogeneity (non-homogeneous relations are
// rejected with the offending monomial pair named).
WeightedPresentation make_presentation(const Field& f, std::vector<std::string> variables,
                                       std::vector<long> weights, std::vector<MPoly> relations);

// All monomials of the given weighted degree, in graded-lex order (within one
// degree: lexicographic, first variable most significant, descending).
std::vector<ExpVec> monomial_basis(const std::vector<long>& weights, long degree);

// One graded piece of P and of I: the monomial basis of P_e, a matrix whose
// column span is I_e in that basis, and the span in eliminator form for
// membership tests and quotient coordinates.
struct GradedPiece {
  long degree = 0;
  std::vector<ExpVec> monomials;
  std::map<ExpVec, std::size_t> index;
  ExactMatrix ideal_columns;
  Eliminator ideal_span;
  std::size_t ideal_rank = 0;
  long quotient_dim = 0;  // #monomials - ideal_rank

  std::vector<Scalar> coords(const MPoly& p) const;
  // Coordinates not hit by an ideal pivot; a basis of A_e in quotient form.
  std::vector<std::size_t> quotient_coordinates() const;
};

// Immutable handle over a presentation with a per-degree piece cache, safe
// for concurrent readers.
class GradedRing {
 public:
  explicit GradedRing(WeightedPresentation pres);

  const WeightedPresentation& pres() const { return pres_; }
  const Field& field() const { return pres_.field; }
  std::size_t nvars() const { return pres_.variables.size(); }

  std::shared_ptr<const GradedPiece> piece(long degree) const;
  long quotient_dim(long degree) const;
  std::vector<ExpVec> monomial_basis(long degree) const;

 private:
  struct Cache {
    std::mutex mu;
    std::map<long, std::shared_ptr<const GradedPiece>> map;
  };
  std::shared_ptr<const GradedPiece> compute_piece(long degree) const;
  WeightedPresentation pres_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

// The degree-e piece of the defining ideal together with the ambient monomial
// basis; shorthand for GradedRing::piece.
std::shared_ptr<const GradedPiece> ideal_piece(const GradedRing& ring, long degree);

// Coefficient of t^degree in prod_j (1 - t^rel_deg_j) / prod_i (1 - t^w_i),
// the Hilbert series of a complete intersection with these data. Serves as an
// independent oracle for quotient dimensions.
mpz_class hilbert_ci_oracle(const std::vector<long>& weights,
                            const std::vector<long>& relation_degrees, long degree);

}  // namespace eulerseq
