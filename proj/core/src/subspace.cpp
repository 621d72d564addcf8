#include "dialg/subspace.hpp"

namespace dialg {

Subspace Subspace::zero(FieldSpec field, std::size_t ambient_dim) {
  return Subspace(Matrix(field, 0, ambient_dim), {});
}

Subspace Subspace::full(FieldSpec field, std::size_t ambient_dim) {
  std::vector<std::size_t> pivots(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) pivots[i] = i;
  return Subspace(Matrix::identity(field, ambient_dim), std::move(pivots));
}

Subspace Subspace::row_space(const Matrix& m) {
  auto [reduced, rank, pivots] = rref(m);
  Matrix basis(m.field(), rank, m.cols());
  for (std::size_t i = 0; i < rank; ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) basis(i, j) = reduced(i, j);
  }
  return Subspace(std::move(basis), std::move(pivots));
}

Subspace Subspace::span(FieldSpec field, std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  return row_space(Matrix::from_rows(field, vectors, ambient_dim));
}

std::vector<std::size_t> Subspace::free_columns() const {
  std::vector<std::size_t> out;
  std::size_t next = 0;
  for (std::size_t c = 0; c < ambient_dim(); ++c) {
    if (next < pivots_.size() && pivots_[next] == c) {
      ++next;
    } else {
      out.push_back(c);
    }
  }
  return out;
}

void Subspace::require_compatible(const Vector& v) const {
  if (v.size() != ambient_dim()) throw UsageError("vector does not live in the ambient space");
  for (const auto& s : v) {
    if (s.field() != field()) throw UsageError("vector field mismatch");
  }
}

Vector Subspace::reduce(const Vector& v) const {
  require_compatible(v);
  Vector r = v;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Scalar c = r[pivots_[i]];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < ambient_dim(); ++j) {
      if (!basis_(i, j).is_zero()) r[j] -= c * basis_(i, j);
    }
  }
  return r;
}

bool Subspace::contains(const Vector& v) const { return dialg::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim() != ambient_dim() || other.field() != field()) {
    throw UsageError("subspace ambient mismatch");
  }
  for (std::size_t i = 0; i < other.dim(); ++i) {
    if (!contains(other.basis_.row(i))) return false;
  }
  return true;
}

namespace {
void require_same_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim() || a.field() != b.field()) {
    throw UsageError("subspace ambient mismatch");
  }
}
}  // namespace

Subspace sum(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  return Subspace::row_space(a.basis().stacked(b.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  const std::size_t n = a.ambient_dim();
  const FieldSpec f = a.field();
  // Solve sum_i x_i a_i - sum_j y_j b_j = 0; each solution's x-part gives an
  // element of the intersection.
  Matrix system(f, n, a.dim() + b.dim());
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t i = 0; i < a.dim(); ++i) system(c, i) = a.basis()(i, c);
    for (std::size_t j = 0; j < b.dim(); ++j) system(c, a.dim() + j) = -b.basis()(j, c);
  }
  const Subspace solutions = kernel(system);
  std::vector<Vector> vectors;
  for (const auto& sol : solutions.basis_vectors()) {
    Vector v = zero_vector(f, n);
    for (std::size_t i = 0; i < a.dim(); ++i) axpy(v, sol[i], a.basis().row(i));
    vectors.push_back(std::move(v));
  }
  return Subspace::span(f, n, vectors);
}

}  // namespace dialg
