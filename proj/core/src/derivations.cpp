#include "eulerseq/derivations.hpp"

namespace eulerseq {

namespace {

// Layout of the unknown vector: one block of monomial coefficients per
// generator image, block i spanning the monomials of degree w_i + d.
struct Blocks {
  std::vector<std::vector<ExpVec>> monos;
  std::vector<std::size_t> offset;
  std::size_t total = 0;

  Blocks(const GradedRing& ring, long d) {
    const auto& w = ring.pres().weights;
    for (std::size_t i = 0; i < w.size(); ++i) {
      monos.push_back(ring.monomial_basis(w[i] + d));
      offset.push_back(total);
      total += monos.back().size();
    }
  }

  std::vector<Scalar> pack(const Field& f, const std::vector<MPoly>& images) const {
    std::vector<Scalar> v(total, f.zero());
    for (std::size_t i = 0; i < images.size(); ++i) {
      std::map<ExpVec, std::size_t> idx;
      for (std::size_t k = 0; k < monos[i].size(); ++k) idx.emplace(monos[i][k], k);
      for (const auto& [e, c] : images[i].terms()) {
        auto it = idx.find(e);
        if (it == idx.end()) throw InternalError("image term outside its graded piece");
        v[offset[i] + it->second] = c;
      }
    }
    return v;
  }

  std::vector<MPoly> unpack(const Field& f, std::size_t nvars,
                            const std::vector<Scalar>& v) const {
    std::vector<MPoly> images;
    for (std::size_t i = 0; i < monos.size(); ++i) {
      MPoly h(f, nvars);
      for (std::size_t k = 0; k < monos[i].size(); ++k)
        h.add_term(monos[i][k], v[offset[i] + k]);
      images.push_back(std::move(h));
    }
    return images;
  }
};

// Columns of the trivial subspace: for each generator block, the ideal
// columns of the matching degree embedded into the block layout.
void seed_trivial(const GradedRing& ring, long d, const Blocks& blocks, Eliminator& elim) {
  const Field& f = ring.field();
  const auto& w = ring.pres().weights;
  for (std::size_t i = 0; i < w.size(); ++i) {
    long e = w[i] + d;
    if (e < 0 || blocks.monos[i].empty()) continue;
    auto piece = ring.piece(e);
    for (std::size_t c = 0; c < piece->ideal_columns.cols(); ++c) {
      std::vector<Scalar> v(blocks.total, f.zero());
      for (std::size_t r = 0; r < piece->monomials.size(); ++r)
        v[blocks.offset[i] + r] = piece->ideal_columns.at(r, c);
      elim.add(std::move(v));
    }
  }
}

}  // namespace

DerivationSpace solve_degree(const GradedRing& ring, long d) {
  const Field& f = ring.field();
  const auto& pres = ring.pres();
  std::size_t nvars = ring.nvars();
  Blocks blocks(ring, d);

  // One constraint block per relation with target degree >= 0: the image of
  // the candidate must lie in the ideal piece, expressed directly in quotient
  // coordinates (reduce modulo I and keep the coordinates without an ideal
  // pivot). This keeps the system at dim A_e rows per relation.
  struct RelBlock {
    std::shared_ptr<const GradedPiece> piece;
    std::vector<std::size_t> quotient_coords;
    std::size_t row_offset;
    std::size_t relation;
  };
  std::vector<RelBlock> rel_blocks;
  std::size_t total_rows = 0;
  for (std::size_t j = 0; j < pres.relations.size(); ++j) {
    long e = pres.relation_degrees[j] + d;
    if (e < 0) continue;
    auto piece = ring.piece(e);
    std::vector<std::size_t> qc = piece->quotient_coordinates();
    std::size_t nrows = qc.size();
    rel_blocks.push_back({std::move(piece), std::move(qc), total_rows, j});
    total_rows += nrows;
  }

  ExactMatrix m(f, total_rows, blocks.total);
  for (const auto& rb : rel_blocks) {
    for (std::size_t i = 0; i < nvars; ++i) {
      MPoly dg = pres.relations[rb.relation].partial(i);
      if (dg.is_zero()) continue;
      for (std::size_t k = 0; k < blocks.monos[i].size(); ++k) {
        MPoly prod = dg.times_monomial(blocks.monos[i][k], f.one());
        std::vector<Scalar> red = rb.piece->ideal_span.reduced(rb.piece->coords(prod));
        for (std::size_t r = 0; r < rb.quotient_coords.size(); ++r)
          m.at(rb.row_offset + r, blocks.offset[i] + k) = red[rb.quotient_coords[r]];
      }
    }
  }

  // The kernel is exactly the space of admissible image tuples.
  std::vector<std::vector<Scalar>> solutions = solve_kernel(m);
  long solution_dim = static_cast<long>(solutions.size());

  Eliminator trivial(f, blocks.total);
  seed_trivial(ring, d, blocks, trivial);
  long trivial_dim = static_cast<long>(trivial.rank());

  DerivationSpace out;
  out.degree = d;
  out.dimension = solution_dim - trivial_dim;
  for (auto& u : solutions) {
    if (!trivial.add(std::vector<Scalar>(u))) continue;  // dependent mod trivial
    canonicalize_vector(f, u);
    out.basis.push_back({d, blocks.unpack(f, nvars, u)});
  }
  if (static_cast<long>(out.basis.size()) != out.dimension)
    throw InternalError("derivation basis extraction lost rank");
  return out;
}

VerifyResult verify_derivation(const GradedRing& ring, const HomogeneousDerivation& cand) {
  const Field& f = ring.field();
  const auto& pres = ring.pres();
  if (cand.images.size() != ring.nvars())
    throw InvalidInputError("wrong number of generator images");
  for (std::size_t i = 0; i < cand.images.size(); ++i) {
    const MPoly& h = cand.images[i];
    if (h.is_zero()) continue;
    auto deg = h.homogeneous_degree(pres.weights);
    if (!deg || *deg != pres.weights[i] + cand.degree)
      throw InvalidInputError("image of " + pres.variables[i] +
                              " is not homogeneous of degree w_i + d");
  }
  for (std::size_t j = 0; j < pres.relations.size(); ++j) {
    MPoly sum(f, ring.nvars());
    for (std::size_t i = 0; i < cand.images.size(); ++i)
      sum = sum + pres.relations[j].partial(i) * cand.images[i];
    if (sum.is_zero()) continue;
    long e = pres.relation_degrees[j] + cand.degree;
    if (e < 0)
      return {false, "relation " + std::to_string(j + 1) +
                         ": nonzero image in an empty graded piece"};
    auto piece = ring.piece(e);
    if (!piece->ideal_span.contains(piece->coords(sum)))
      return {false, "relation " + std::to_string(j + 1) + " (" +
                         pres.relations[j].str(pres.variables) +
                         "): image lies outside the degree-" + std::to_string(e) +
                         " ideal piece"};
  }
  return {true, ""};
}

HomogeneousDerivation euler_derivation(const GradedRing& ring) {
  const Field& f = ring.field();
  HomogeneousDerivation e;
  e.degree = 0;
  for (std::size_t i = 0; i < ring.nvars(); ++i)
    e.images.push_back(
        MPoly::variable(f, ring.nvars(), i).scaled(f.from_int(ring.pres().weights[i])));
  return e;
}

std::map<long, long> derivation_dims(const GradedRing& ring, long lo, long hi) {
  if (lo > hi) throw InvalidInputError("empty degree range");
  std::map<long, long> out;
  for (long d = lo; d <= hi; ++d) out[d] = solve_degree(ring, d).dimension;
  return out;
}

bool in_span(const GradedRing& ring, const DerivationSpace& space,
             const HomogeneousDerivation& cand) {
  if (cand.degree != space.degree) return false;
  const Field& f = ring.field();
  Blocks blocks(ring, space.degree);
  Eliminator span(f, blocks.total);
  seed_trivial(ring, space.degree, blocks, span);
  for (const auto& b : space.basis) span.add(blocks.pack(f, b.images));
  return span.contains(blocks.pack(f, cand.images));
}

}  // namespace eulerseq
