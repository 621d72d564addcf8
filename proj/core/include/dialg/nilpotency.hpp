#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dialg/algebra.hpp"

namespace dialg {

/// A descending chain of subspaces ending either in 0 (nilpotent) or in a
/// repeated nonzero term (stabilized, not nilpotent).
struct SeriesCertificate {
  /// terms[0] is the whole algebra; the last term is 0 or equals its predecessor.
  std::vector<Subspace> terms;
  bool nilpotent = false;
  /// m with terms[m-1] = D^m = 0, when nilpotent.
  std::optional<std::size_t> nilpotency_class;
  /// False only when max_steps ran out before either outcome was reached.
  bool decided = true;
};

/// D^1 = D, D^{n+1} = sum_{i=1..n} D^i ◊ D^{n+1-i}.
SeriesCertificate dias_series(const DiassociativeAlgebra& algebra,
                              std::optional<std::size_t> max_steps = std::nullopt);

/// A^1 = A, A^{i+1} = A * A^i for the single product `op`.
SeriesCertificate assoc_powers(const DiassociativeAlgebra& algebra, Op op);

/// Smallest k with the left-nested power x * (x * (... * x)) (k factors) equal
/// to zero, or nullopt if x is not nilpotent for `op`.
std::optional<std::size_t> element_nilpotency_index(const DiassociativeAlgebra& algebra,
                                                    const Vector& x, Op op);
std::optional<std::size_t> element_nilpotency_index(const DiassociativeAlgebra& algebra,
                                                    const Element& x, Op op);

struct EngelEvidence {
  bool nilpotent = false;
  /// nilpotency_index of λ^⊢_{e_i} for each basis element.
  std::vector<std::optional<std::size_t>> basis_indices;
  /// First basis element whose λ^⊢ is not nilpotent.
  std::optional<std::size_t> failing_basis;
};

/// Decides nilpotency from the left ⊢-multiplications of the basis.
EngelEvidence engel_criterion(const DiassociativeAlgebra& algebra);

struct OperatorCounterexample {
  Vector element;
  Side side;
  Op op;
};

struct OperatorSampleReport {
  std::size_t trials = 0;
  std::size_t operators_checked = 0;
  std::optional<OperatorCounterexample> counterexample;
  bool all_nilpotent() const { return !counterexample.has_value(); }
};

/// For `trials` seeded random elements d of a nilpotent algebra, checks that
/// λ^⊣_d, λ^⊢_d, ρ^⊣_d and ρ^⊢_d are all nilpotent. Throws UsageError unless
/// the algebra is verified and nilpotent.
OperatorSampleReport operator_nilpotency_sample(const DiassociativeAlgebra& algebra,
                                                std::size_t trials, std::uint64_t seed);

}  // namespace dialg
