#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dialg/algebra.hpp"

namespace dialg {

/// S actions are v * d (tensor s[v_in][d][v_out]); T actions are d * v
/// (tensor t[d][v_in][v_out]).
enum class ActionSide : std::uint8_t { S, T };

/// A vector space V with four bilinear actions S⊣, S⊢, T⊣, T⊢ of an algebra.
class Representation {
 public:
  Representation(DiassociativeAlgebra algebra, std::size_t dim_v, Tensor3 s_left, Tensor3 s_right,
                 Tensor3 t_left, Tensor3 t_right, std::vector<std::string> v_names = {});

  const DiassociativeAlgebra& algebra() const { return algebra_; }
  std::size_t dim_v() const { return dim_v_; }
  FieldSpec field() const { return algebra_.field(); }
  const Tensor3& tensor(ActionSide side, Op op) const;
  const std::vector<std::string>& v_names() const { return v_names_; }
  bool verified() const { return verified_; }

  friend bool operator==(const Representation& a, const Representation& b);

 private:
  friend Representation verify(Representation rep);

  DiassociativeAlgebra algebra_;
  std::size_t dim_v_;
  std::array<Tensor3, 4> tensors_;  // S⊣, S⊢, T⊣, T⊢
  std::vector<std::string> v_names_;
  bool verified_ = false;
};

/// Which of the three axiom slots holds the module vector.
struct RepViolation {
  int axiom_id;
  int v_position;  // 1, 2 or 3
  /// Basis indices for (x, y, z); the entry at v_position indexes V.
  std::array<std::size_t, 3> triple;
  Vector lhs;
  Vector rhs;
};

class InvalidRepresentationError : public Rejection {
 public:
  explicit InvalidRepresentationError(std::vector<RepViolation> violations);
  const std::vector<RepViolation>& violations() const { return violations_; }

 private:
  std::vector<RepViolation> violations_;
};

Vector act(const Representation& rep, const Vector& d, const Vector& v, ActionSide side, Op op);
Vector act(const Representation& rep, const Element& d, const Vector& v, ActionSide side, Op op);

/// m x m matrix of S^op_d or T^op_d.
Matrix action_matrix(const Representation& rep, const Vector& d, ActionSide side, Op op);

/// The 15 identities obtained by putting v in each slot of each axiom,
/// evaluated on all basis triples.
std::vector<RepViolation> check_rep_identities(const Representation& rep);

/// Returns the representation flagged verified, or throws
/// InvalidRepresentationError. The algebra must itself be verified.
Representation verify(Representation rep);

/// V = D with S = ρ and T = λ.
Representation regular_rep(const DiassociativeAlgebra& algebra);
/// All four actions zero on an m-dimensional V.
Representation zero_rep(const DiassociativeAlgebra& algebra, std::size_t dim_v);

/// {d : every action of d on V is zero}.
Subspace rep_kernel(const Representation& rep);

/// X = D ⊕ V with (d1, v1) * (d2, v2) = (d1 * d2, d1 * v2 + v1 * d2). Basis
/// order is e_1..e_n then v_1..v_m. Requires a verified representation.
DiassociativeAlgebra split_extension(const Representation& rep);
/// The same tables without any verification (negative tests).
DiassociativeAlgebra split_extension_unchecked(const Representation& rep);

/// Least subspace containing v stable under all 4n basis action maps.
Subspace invariant_closure(const Representation& rep, const Vector& v);

struct IrreducibilityResult {
  enum class Kind : std::uint8_t { Irreducible, Reducible, Unknown };
  Kind kind;
  /// A proper nonzero invariant subspace when kind == Reducible.
  std::optional<Subspace> witness;
};

/// Exact over F_p with dim V <= 4 (every line is tried). Elsewhere only a
/// witness can be produced; otherwise the answer is Unknown.
IrreducibilityResult is_irreducible(const Representation& rep, std::uint64_t seed = 0x5eed,
                                    std::size_t random_trials = 16);

/// {v : every action of every d kills v}.
Subspace common_null_space(const Representation& rep);

struct DichotomyReport {
  /// Dias(D) ⊆ C_D(V), i.e. D / C_D(V) is associative.
  bool quotient_associative = false;
  /// S⊢ = 0 and T⊣ = 0.
  bool zero_branch = false;
  /// S⊣ = S⊢ and T⊣ = T⊢.
  bool agree_branch = false;
  bool violation() const { return !quotient_associative || (!zero_branch && !agree_branch); }
  std::string branch() const;
};

/// Requires is_irreducible(rep) == Irreducible; throws UsageError otherwise.
DichotomyReport dichotomy_check(const Representation& rep);
/// Same check without the irreducibility precondition.
DichotomyReport dichotomy_report(const Representation& rep);

/// The pair (S⊣, T⊢) viewed as a representation of an associative algebra.
struct AssocRepresentation {
  DiassociativeAlgebra algebra;
  std::size_t dim_v;
  Tensor3 s;  // v b, entries s[v_in][b][v_out]
  Tensor3 t;  // a v, entries t[a][v_in][v_out]
};

struct AssocRepViolation {
  int identity;  // 1: a(bv) = (ab)v, 2: a(vb) = (av)b, 3: v(ab) = (va)b
  std::array<std::size_t, 3> triple;
  Vector lhs;
  Vector rhs;
};

/// Throws UsageError unless the algebra is associative (left == right).
AssocRepresentation assoc_pair_view(const Representation& rep);
std::vector<AssocRepViolation> check_assoc_rep_identities(const AssocRepresentation& pair);

}  // namespace dialg
