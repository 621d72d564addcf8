#include "dialg/algebra.hpp"

namespace dialg {

std::string_view symbol(Op op) { return op == Op::Left ? "⊣" : "⊢"; }

const AxiomShape& axiom(int id) {
  if (id < 1 || id > static_cast<int>(kAxioms.size())) throw UsageError("no such axiom");
  return kAxioms[static_cast<std::size_t>(id - 1)];
}

DiassociativeAlgebra::DiassociativeAlgebra(FieldSpec field, std::size_t dim, Tensor3 left,
                                           Tensor3 right, std::vector<std::string> basis_names) {
  const std::array<std::size_t, 3> cube{dim, dim, dim};
  if (left.extents() != cube || right.extents() != cube) {
    throw UsageError("structure tensors must be dim x dim x dim");
  }
  if (left.field() != field || right.field() != field) {
    throw UsageError("structure tensor field mismatch");
  }
  if (basis_names.empty()) {
    for (std::size_t i = 0; i < dim; ++i) basis_names.push_back("e" + std::to_string(i + 1));
  } else if (basis_names.size() != dim) {
    throw UsageError("basis name count does not match dimension");
  }
  data_ = std::make_shared<const Data>(
      Data{field, dim, std::move(left), std::move(right), std::move(basis_names)});
}

bool DiassociativeAlgebra::same_as(const DiassociativeAlgebra& other) const {
  if (data_ == other.data_) return true;
  return data_->field == other.data_->field && data_->dim == other.data_->dim &&
         data_->left == other.data_->left && data_->right == other.data_->right;
}

bool operator==(const DiassociativeAlgebra& a, const DiassociativeAlgebra& b) {
  return a.same_as(b) && a.data_->names == b.data_->names;
}

Element::Element(DiassociativeAlgebra algebra, Vector coords)
    : algebra_(std::move(algebra)), coords_(std::move(coords)) {
  if (coords_.size() != algebra_.dim()) throw UsageError("element coordinate length mismatch");
  for (const auto& c : coords_) {
    if (c.field() != algebra_.field()) throw UsageError("element field mismatch");
  }
}

Element Element::basis(const DiassociativeAlgebra& algebra, std::size_t i) {
  return Element(algebra, unit_vector(algebra.field(), algebra.dim(), i));
}

Element Element::zero(const DiassociativeAlgebra& algebra) {
  return Element(algebra, zero_vector(algebra.field(), algebra.dim()));
}

bool operator==(const Element& a, const Element& b) {
  return a.algebra_.same_as(b.algebra_) && a.coords_ == b.coords_;
}

InvalidAlgebraError::InvalidAlgebraError(std::vector<AxiomViolation> violations)
    : Rejection("structure constants violate " + std::to_string(violations.size()) +
                " diassociative identity instance(s)"),
      violations_(std::move(violations)) {}

NotAssociativeError::NotAssociativeError(std::array<std::size_t, 3> triple)
    : Rejection("table is not associative at basis triple (" + std::to_string(triple[0] + 1) +
                "," + std::to_string(triple[1] + 1) + "," + std::to_string(triple[2] + 1) + ")"),
      triple_(triple) {}

namespace {

Vector multiply_table(const Tensor3& t, FieldSpec field, const Vector& x, const Vector& y) {
  const std::size_t n = t.extent(0);
  Vector out = zero_vector(field, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const Scalar c = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& s = t(i, j, k);
        if (!s.is_zero()) out[k] += c * s;
      }
    }
  }
  return out;
}

}  // namespace

Vector multiply(const DiassociativeAlgebra& algebra, const Vector& x, const Vector& y, Op op) {
  if (x.size() != algebra.dim() || y.size() != algebra.dim()) {
    throw UsageError("operand length does not match algebra dimension");
  }
  return multiply_table(algebra.tensor(op), algebra.field(), x, y);
}

Element product(const DiassociativeAlgebra& algebra, const Element& x, const Element& y, Op op) {
  if (!x.algebra().same_as(algebra) || !y.algebra().same_as(algebra)) {
    throw UsageError("element does not belong to this algebra");
  }
  return Element(algebra, multiply(algebra, x.coords(), y.coords(), op));
}

std::vector<AxiomViolation> check_axioms(const DiassociativeAlgebra& algebra) {
  const std::size_t n = algebra.dim();
  const FieldSpec f = algebra.field();
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < n; ++i) basis.push_back(unit_vector(f, n, i));
  // Basis products, cached per op.
  std::array<std::vector<Vector>, 2> prod;
  for (Op op : kOps) {
    auto& table = prod[static_cast<std::size_t>(op)];
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) table.push_back(multiply(algebra, basis[i], basis[j], op));
    }
  }
  auto basis_prod = [&](std::size_t i, std::size_t j, Op op) -> const Vector& {
    return prod[static_cast<std::size_t>(op)][i * n + j];
  };

  std::vector<AxiomViolation> out;
  for (const auto& ax : kAxioms) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        const Vector& xy = basis_prod(x, y, ax.inner_left);
        for (std::size_t z = 0; z < n; ++z) {
          Vector lhs = multiply(algebra, xy, basis[z], ax.outer_left);
          Vector rhs = multiply(algebra, basis[x], basis_prod(y, z, ax.inner_right), ax.outer_right);
          if (lhs != rhs) out.push_back({ax.id, {x, y, z}, std::move(lhs), std::move(rhs)});
        }
      }
    }
  }
  return out;
}

DiassociativeAlgebra verify(DiassociativeAlgebra algebra) {
  auto violations = check_axioms(algebra);
  if (!violations.empty()) throw InvalidAlgebraError(std::move(violations));
  algebra.verified_ = true;
  return algebra;
}

void require_verified(const DiassociativeAlgebra& algebra, std::string_view operation) {
  if (!algebra.verified()) {
    throw UsageError(std::string(operation) + " requires a verified algebra");
  }
}

bool is_associative_dias(const DiassociativeAlgebra& algebra) {
  return algebra.tensor(Op::Left) == algebra.tensor(Op::Right);
}

std::optional<std::array<std::size_t, 3>> associativity_witness(const Tensor3& table) {
  const std::size_t n = table.extent(0);
  const FieldSpec f = table.field();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vector ij = multiply_table(table, f, unit_vector(f, n, i), unit_vector(f, n, j));
      for (std::size_t k = 0; k < n; ++k) {
        const Vector ek = unit_vector(f, n, k);
        const Vector jk = multiply_table(table, f, unit_vector(f, n, j), ek);
        if (multiply_table(table, f, ij, ek) != multiply_table(table, f, unit_vector(f, n, i), jk)) {
          return std::array<std::size_t, 3>{i, j, k};
        }
      }
    }
  }
  return std::nullopt;
}

DiassociativeAlgebra from_associative(FieldSpec field, std::size_t dim, const Tensor3& table,
                                      std::vector<std::string> basis_names) {
  if (table.extents() != std::array<std::size_t, 3>{dim, dim, dim} || table.field() != field) {
    throw UsageError("associative table has the wrong shape or field");
  }
  if (auto w = associativity_witness(table)) throw NotAssociativeError(*w);
  // Equal associative tables satisfy all five identities; verify() re-checks.
  return verify(DiassociativeAlgebra(field, dim, table, table, std::move(basis_names)));
}

Matrix op_matrix(const DiassociativeAlgebra& algebra, const Vector& d, Side side, Op op) {
  const std::size_t n = algebra.dim();
  if (d.size() != n) throw UsageError("operator element has the wrong length");
  const Tensor3& t = algebra.tensor(op);
  Matrix m(algebra.field(), n, n);
  // Column x holds the image of e_x.
  for (std::size_t a = 0; a < n; ++a) {
    if (d[a].is_zero()) continue;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& c = side == Side::LeftMult ? t(a, x, k) : t(x, a, k);
        if (!c.is_zero()) m(k, x) += d[a] * c;
      }
    }
  }
  return m;
}

Matrix op_matrix(const DiassociativeAlgebra& algebra, const Element& d, Side side, Op op) {
  if (!d.algebra().same_as(algebra)) throw UsageError("element does not belong to this algebra");
  return op_matrix(algebra, d.coords(), side, op);
}

}  // namespace dialg
