#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dialg/matrix.hpp"
#include "dialg/subspace.hpp"
#include "dialg/tensor.hpp"

namespace dialg {

/// The two products of a diassociative algebra: Left is x ⊣ y, Right is x ⊢ y.
enum class Op : std::uint8_t { Left, Right };
inline constexpr std::array<Op, 2> kOps{Op::Left, Op::Right};
std::string_view symbol(Op op);

/// Multiplication operators: LeftMult is λ_d(x) = d * x, RightMult is ρ_d(x) = x * d.
enum class Side : std::uint8_t { LeftMult, RightMult };

/// One diassociative identity in the shape (x a y) b z = x c (y d z).
struct AxiomShape {
  int id;
  Op inner_left;
  Op outer_left;
  Op outer_right;
  Op inner_right;
  std::string_view text;
};

inline constexpr std::array<AxiomShape, 5> kAxioms{{
    {1, Op::Right, Op::Right, Op::Right, Op::Right, "(x⊢y)⊢z = x⊢(y⊢z)"},
    {2, Op::Left, Op::Left, Op::Left, Op::Left, "(x⊣y)⊣z = x⊣(y⊣z)"},
    {3, Op::Left, Op::Right, Op::Right, Op::Right, "(x⊣y)⊢z = x⊢(y⊢z)"},
    {4, Op::Left, Op::Left, Op::Left, Op::Right, "(x⊣y)⊣z = x⊣(y⊢z)"},
    {5, Op::Right, Op::Left, Op::Right, Op::Left, "(x⊢y)⊣z = x⊢(y⊣z)"},
}};

const AxiomShape& axiom(int id);

/// Finite-dimensional algebra with two products given by structure constants:
///   e_i ⊣ e_j = sum_k left(i, j, k) e_k,   e_i ⊢ e_j = sum_k right(i, j, k) e_k.
/// Indices are 0-based in the API. Copies share the immutable tables; the
/// `verified` flag is only set by verify() (or by constructors that check).
class DiassociativeAlgebra {
 public:
  DiassociativeAlgebra(FieldSpec field, std::size_t dim, Tensor3 left, Tensor3 right,
                       std::vector<std::string> basis_names = {});

  FieldSpec field() const { return data_->field; }
  std::size_t dim() const { return data_->dim; }
  const Tensor3& tensor(Op op) const { return op == Op::Left ? data_->left : data_->right; }
  const std::vector<std::string>& basis_names() const { return data_->names; }
  bool verified() const { return verified_; }

  /// Same tables (or the very same instance). Used for element-ownership checks.
  bool same_as(const DiassociativeAlgebra& other) const;
  friend bool operator==(const DiassociativeAlgebra& a, const DiassociativeAlgebra& b);

 private:
  struct Data {
    FieldSpec field;
    std::size_t dim;
    Tensor3 left;
    Tensor3 right;
    std::vector<std::string> names;
  };
  friend DiassociativeAlgebra verify(DiassociativeAlgebra algebra);

  std::shared_ptr<const Data> data_;
  bool verified_ = false;
};

/// An element of a specific algebra.
class Element {
 public:
  Element(DiassociativeAlgebra algebra, Vector coords);
  static Element basis(const DiassociativeAlgebra& algebra, std::size_t i);
  static Element zero(const DiassociativeAlgebra& algebra);

  const DiassociativeAlgebra& algebra() const { return algebra_; }
  const Vector& coords() const { return coords_; }

  friend bool operator==(const Element& a, const Element& b);

 private:
  DiassociativeAlgebra algebra_;
  Vector coords_;
};

struct AxiomViolation {
  int axiom_id;
  std::array<std::size_t, 3> triple;  // 0-based basis indices (x, y, z)
  Vector lhs;
  Vector rhs;
};

class InvalidAlgebraError : public Rejection {
 public:
  explicit InvalidAlgebraError(std::vector<AxiomViolation> violations);
  const std::vector<AxiomViolation>& violations() const { return violations_; }

 private:
  std::vector<AxiomViolation> violations_;
};

class NotAssociativeError : public Rejection {
 public:
  explicit NotAssociativeError(std::array<std::size_t, 3> triple);
  const std::array<std::size_t, 3>& triple() const { return triple_; }

 private:
  std::array<std::size_t, 3> triple_;
};

/// x * y on raw coordinates.
Vector multiply(const DiassociativeAlgebra& algebra, const Vector& x, const Vector& y, Op op);
/// Throws UsageError unless both elements belong to `algebra`.
Element product(const DiassociativeAlgebra& algebra, const Element& x, const Element& y, Op op);

/// All five identities on all basis triples; trilinearity makes that
/// sufficient. Empty iff the tables define a diassociative algebra.
std::vector<AxiomViolation> check_axioms(const DiassociativeAlgebra& algebra);

/// Returns the algebra flagged as verified, or throws InvalidAlgebraError.
DiassociativeAlgebra verify(DiassociativeAlgebra algebra);

/// Throws UsageError if `algebra` is not verified.
void require_verified(const DiassociativeAlgebra& algebra, std::string_view operation);

/// left == right entrywise.
bool is_associative_dias(const DiassociativeAlgebra& algebra);

/// Associativity of a single table; returns the first failing basis triple.
std::optional<std::array<std::size_t, 3>> associativity_witness(const Tensor3& table);

/// Embeds an associative algebra with left = right = table. Throws
/// NotAssociativeError with the failing triple otherwise.
DiassociativeAlgebra from_associative(FieldSpec field, std::size_t dim, const Tensor3& table,
                                      std::vector<std::string> basis_names = {});

/// n x n matrix of λ_d or ρ_d for the chosen product.
Matrix op_matrix(const DiassociativeAlgebra& algebra, const Vector& d, Side side, Op op);
Matrix op_matrix(const DiassociativeAlgebra& algebra, const Element& d, Side side, Op op);

struct QuotientResult {
  DiassociativeAlgebra algebra;
  /// (n - dim I) x n matrix of the canonical projection.
  Matrix projection;
  /// Indices of the standard basis vectors spanning the chosen complement.
  std::vector<std::size_t> complement;
};

/// D / I with complement coordinates taken from the non-pivot columns of I's
/// RREF basis. Throws NotAnIdealError (see ideals.hpp) if I is not an ideal.
QuotientResult quotient(const DiassociativeAlgebra& algebra, const Subspace& ideal);

}  // namespace dialg
