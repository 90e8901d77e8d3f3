#include "eulerseq/matrix.hpp"

namespace eulerseq {

std::vector<std::size_t> ExactMatrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t pr = r;
    while (pr < rows_ && f_.is_zero(at(pr, c))) ++pr;
    if (pr == rows_) continue;
    if (pr != r)
      for (std::size_t j = c; j < cols_; ++j) std::swap(at(r, j), at(pr, j));
    Scalar pinv = f_.inv(at(r, c));
    for (std::size_t j = c; j < cols_; ++j) at(r, j) = f_.mul(at(r, j), pinv);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || f_.is_zero(at(i, c))) continue;
      Scalar k = at(i, c);
      for (std::size_t j = c; j < cols_; ++j)
        at(i, j) = f_.sub(at(i, j), f_.mul(k, at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t ExactMatrix::rank() const {
  ExactMatrix copy = *this;
  return copy.rref().size();
}

std::vector<Scalar> ExactMatrix::row(std::size_t r) const {
  return std::vector<Scalar>(a_.begin() + static_cast<long>(r * cols_),
                             a_.begin() + static_cast<long>((r + 1) * cols_));
}

std::vector<Scalar> ExactMatrix::col(std::size_t c) const {
  std::vector<Scalar> v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back(at(r, c));
  return v;
}

void ExactMatrix::set_col(std::size_t c, const std::vector<Scalar>& v) {
  for (std::size_t r = 0; r < rows_; ++r) at(r, c) = v[r];
}

ExactMatrix ExactMatrix::mul(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidInputError("matrix shape mismatch in product");
  ExactMatrix r(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.field().is_zero(a.at(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        r.at(i, j) = a.field().add(r.at(i, j), a.field().mul(a.at(i, k), b.at(k, j)));
    }
  return r;
}

std::vector<std::vector<Scalar>> solve_kernel(const ExactMatrix& m) {
  const Field& f = m.field();
  ExactMatrix red = m;
  std::vector<std::size_t> pivots = red.rref();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(m.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t k = 0; k < pivots.size(); ++k)
      v[pivots[k]] = f.neg(red.at(k, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

void canonicalize_vector(const Field& f, std::vector<Scalar>& v) {
  const Scalar* first = nullptr;
  for (const auto& c : v)
    if (!f.is_zero(c)) {
      first = &c;
      break;
    }
  if (!first) return;
  Scalar k = f.inv(*first);
  for (auto& c : v) c = f.mul(c, k);
  if (!f.is_rationals()) return;
  mpz_class lcm(1), gcd(0);
  for (const auto& c : v)
    if (!f.is_zero(c))
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), f.rational(c).get_den().get_mpz_t());
  for (const auto& c : v)
    if (!f.is_zero(c)) {
      mpz_class n = f.rational(c).get_num() * lcm / f.rational(c).get_den();
      mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), n.get_mpz_t());
    }
  mpq_class factor(lcm, gcd);
  factor.canonicalize();
  Scalar s = f.from_mpq(factor);
  for (auto& c : v) c = f.mul(c, s);
}

std::size_t Eliminator::reduce(std::vector<Scalar>& v) const {
  std::size_t lead = width_;
  for (std::size_t i = 0; i < width_; ++i) {
    if (f_.is_zero(v[i])) continue;
    auto it = rows_.find(i);
    if (it == rows_.end()) {
      lead = i;
      break;
    }
    Scalar k = v[i];
    const std::vector<Scalar>& row = it->second;
    for (std::size_t j = i; j < width_; ++j) v[j] = f_.sub(v[j], f_.mul(k, row[j]));
  }
  return lead;
}

bool Eliminator::add(std::vector<Scalar> v) {
  std::size_t lead = reduce(v);
  if (lead == width_) return false;
  Scalar pinv = f_.inv(v[lead]);
  for (std::size_t j = lead; j < width_; ++j) v[j] = f_.mul(v[j], pinv);
  // Back-substitute into existing rows so the stored system stays reduced.
  for (auto& [piv, row] : rows_) {
    if (f_.is_zero(row[lead])) continue;
    Scalar k = row[lead];
    for (std::size_t j = lead; j < width_; ++j)
      row[j] = f_.sub(row[j], f_.mul(k, v[j]));
  }
  rows_.emplace(lead, std::move(v));
  return true;
}

bool Eliminator::contains(std::vector<Scalar> v) const { return reduce(v) == width_; }

std::vector<Scalar> Eliminator::reduced(std::vector<Scalar> v) const {
  for (std::size_t i = 0; i < width_; ++i) {
    if (f_.is_zero(v[i])) continue;
    auto it = rows_.find(i);
    if (it == rows_.end()) continue;
    Scalar k = v[i];
    const std::vector<Scalar>& row = it->second;
    for (std::size_t j = i; j < width_; ++j) v[j] = f_.sub(v[j], f_.mul(k, row[j]));
  }
  return v;
}

std::vector<std::size_t> Eliminator::pivot_columns() const {
  std::vector<std::size_t> out;
  out.reserve(rows_.size());
  for (const auto& [piv, row] : rows_) out.push_back(piv);
  return out;
}

}  // namespace eulerseq
