#pragma once

#include <optional>
#include <vector>

#include "dialg/algebra.hpp"

namespace dialg {

/// A product u * w (on coordinates) that escapes a subspace, or that is
/// nonzero where zero was required.
struct ProductWitness {
  Op op;
  Vector left;
  Vector right;
  Vector product;
};

struct IdealReport {
  Subspace subspace;
  bool is_ideal;
  bool is_abelian;
  /// Present iff one of the flags is false. Describes the ideal failure when
  /// there is one, otherwise a nonzero product inside the subspace.
  std::optional<ProductWitness> witness;
};

class NotAnIdealError : public Rejection {
 public:
  explicit NotAnIdealError(ProductWitness witness);
  const ProductWitness& witness() const { return witness_; }

 private:
  ProductWitness witness_;
};

/// span{u * w : u in basis(U), w in basis(W)}.
Subspace product_space(const DiassociativeAlgebra& algebra, const Subspace& u, const Subspace& w,
                       Op op);
/// U ⊣ W + U ⊢ W.
Subspace lozenge(const DiassociativeAlgebra& algebra, const Subspace& u, const Subspace& w);

bool is_subalgebra(const DiassociativeAlgebra& algebra, const Subspace& s);
/// Two-sided for both products; is_abelian means lozenge(S, S) = 0.
IdealReport is_ideal(const DiassociativeAlgebra& algebra, const Subspace& s);

/// Smallest two-sided ideal containing the generators.
Subspace ideal_closure(const DiassociativeAlgebra& algebra, const std::vector<Vector>& generators);
/// Smallest subalgebra containing the generators.
Subspace subalgebra_closure(const DiassociativeAlgebra& algebra, const std::vector<Vector>& generators);

/// span{e_i ⊣ e_j - e_i ⊢ e_j}.
Subspace dias_subspace(const DiassociativeAlgebra& algebra);

/// {z : z * a = a * z = 0 for every a and both products}.
Subspace annihilator(const DiassociativeAlgebra& algebra);

/// Largest N with N K ⊆ K and K N ⊆ K. Only defined for associative algebras
/// (left == right); throws UsageError otherwise or when K is not a subalgebra.
Subspace normalizer(const DiassociativeAlgebra& algebra, const Subspace& k);

}  // namespace dialg
