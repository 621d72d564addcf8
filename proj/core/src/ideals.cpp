#include "dialg/ideals.hpp"

namespace dialg {

NotAnIdealError::NotAnIdealError(ProductWitness witness)
    : Rejection("subspace is not an ideal: " + to_string(witness.left) + " " +
                std::string(symbol(witness.op)) + " " + to_string(witness.right) + " = " +
                to_string(witness.product) + " escapes it"),
      witness_(std::move(witness)) {}

namespace {

void require_ambient(const DiassociativeAlgebra& algebra, const Subspace& s) {
  if (s.ambient_dim() != algebra.dim() || s.field() != algebra.field()) {
    throw UsageError("subspace does not live in the algebra");
  }
}

// First product between the given vector families that leaves `target`.
std::optional<ProductWitness> escaping_product(const DiassociativeAlgebra& algebra,
                                               const std::vector<Vector>& lefts,
                                               const std::vector<Vector>& rights,
                                               const Subspace& target) {
  for (Op op : kOps) {
    for (const auto& a : lefts) {
      for (const auto& b : rights) {
        Vector p = multiply(algebra, a, b, op);
        if (!target.contains(p)) return ProductWitness{op, a, b, std::move(p)};
      }
    }
  }
  return std::nullopt;
}

std::vector<Vector> standard_basis(const DiassociativeAlgebra& algebra) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < algebra.dim(); ++i) {
    out.push_back(unit_vector(algebra.field(), algebra.dim(), i));
  }
  return out;
}

}  // namespace

Subspace product_space(const DiassociativeAlgebra& algebra, const Subspace& u, const Subspace& w,
                       Op op) {
  require_ambient(algebra, u);
  require_ambient(algebra, w);
  std::vector<Vector> products;
  for (const auto& a : u.basis_vectors()) {
    for (const auto& b : w.basis_vectors()) products.push_back(multiply(algebra, a, b, op));
  }
  return Subspace::span(algebra.field(), algebra.dim(), products);
}

Subspace lozenge(const DiassociativeAlgebra& algebra, const Subspace& u, const Subspace& w) {
  return sum(product_space(algebra, u, w, Op::Left), product_space(algebra, u, w, Op::Right));
}

bool is_subalgebra(const DiassociativeAlgebra& algebra, const Subspace& s) {
  require_ambient(algebra, s);
  const auto b = s.basis_vectors();
  return !escaping_product(algebra, b, b, s).has_value();
}

IdealReport is_ideal(const DiassociativeAlgebra& algebra, const Subspace& s) {
  require_ambient(algebra, s);
  const auto sb = s.basis_vectors();
  const auto db = standard_basis(algebra);
  IdealReport report{s, true, true, std::nullopt};
  if (auto w = escaping_product(algebra, db, sb, s)) {
    report.is_ideal = false;
    report.witness = std::move(w);
  } else if (auto w2 = escaping_product(algebra, sb, db, s)) {
    report.is_ideal = false;
    report.witness = std::move(w2);
  }
  const Subspace zero = Subspace::zero(algebra.field(), algebra.dim());
  if (auto w = escaping_product(algebra, sb, sb, zero)) {
    report.is_abelian = false;
    if (!report.witness) report.witness = std::move(w);
  }
  return report;
}

namespace {

Subspace close_under(const DiassociativeAlgebra& algebra, Subspace s, bool two_sided_with_algebra) {
  const auto db = standard_basis(algebra);
  while (true) {
    const auto sb = s.basis_vectors();
    std::vector<Vector> grow = sb;
    const auto& lefts = two_sided_with_algebra ? db : sb;
    for (Op op : kOps) {
      for (const auto& a : lefts) {
        for (const auto& b : sb) {
          grow.push_back(multiply(algebra, a, b, op));
          grow.push_back(multiply(algebra, b, a, op));
        }
      }
    }
    Subspace next = Subspace::span(algebra.field(), algebra.dim(), grow);
    if (next.dim() == s.dim()) return s;
    s = std::move(next);
  }
}

}  // namespace

Subspace ideal_closure(const DiassociativeAlgebra& algebra, const std::vector<Vector>& generators) {
  return close_under(algebra, Subspace::span(algebra.field(), algebra.dim(), generators), true);
}

Subspace subalgebra_closure(const DiassociativeAlgebra& algebra,
                            const std::vector<Vector>& generators) {
  return close_under(algebra, Subspace::span(algebra.field(), algebra.dim(), generators), false);
}

Subspace dias_subspace(const DiassociativeAlgebra& algebra) {
  const std::size_t n = algebra.dim();
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vector v = zero_vector(algebra.field(), n);
      for (std::size_t k = 0; k < n; ++k) {
        v[k] = algebra.tensor(Op::Left)(i, j, k) - algebra.tensor(Op::Right)(i, j, k);
      }
      gens.push_back(std::move(v));
    }
  }
  Subspace out = Subspace::span(algebra.field(), n, gens);
#ifndef NDEBUG
  if (algebra.verified()) {
    const auto report = is_ideal(algebra, out);
    if (!report.is_ideal || !report.is_abelian) {
      throw std::logic_error("Dias(D) failed to be an abelian ideal of a verified algebra");
    }
  }
#endif
  return out;
}

Subspace annihilator(const DiassociativeAlgebra& algebra) {
  const std::size_t n = algebra.dim();
  Matrix stacked(algebra.field(), 0, n);
  for (std::size_t a = 0; a < n; ++a) {
    const Vector ea = unit_vector(algebra.field(), n, a);
    for (Op op : kOps) {
      for (Side side : {Side::LeftMult, Side::RightMult}) {
        // As functions of z: λ_{e_a}(z) = e_a * z and ρ_{e_a}(z) = z * e_a.
        stacked = stacked.stacked(op_matrix(algebra, ea, side, op));
      }
    }
  }
  return kernel(stacked);
}

Subspace normalizer(const DiassociativeAlgebra& algebra, const Subspace& k) {
  require_ambient(algebra, k);
  if (!is_associative_dias(algebra)) {
    throw UsageError("normalizer is only defined for associative algebras");
  }
  if (!is_subalgebra(algebra, k)) throw UsageError("normalizer needs a subalgebra");
  const std::size_t n = algebra.dim();
  // Rows: for each k_j, the coordinates of (a k_j mod K) and (k_j a mod K) as
  // linear functions of a.
  std::vector<Vector> rows;
  for (const auto& kj : k.basis_vectors()) {
    for (Side side : {Side::RightMult, Side::LeftMult}) {
      const Matrix m = op_matrix(algebra, kj, side, Op::Left);
      std::vector<Vector> reduced_cols;
      for (std::size_t a = 0; a < n; ++a) reduced_cols.push_back(k.reduce(m.column(a)));
      const Matrix r = Matrix::from_columns(algebra.field(), reduced_cols, n);
      for (std::size_t i = 0; i < n; ++i) rows.push_back(r.row(i));
    }
  }
  if (rows.empty()) return Subspace::full(algebra.field(), n);
  return kernel(Matrix::from_rows(algebra.field(), rows, n));
}

}  // namespace dialg
