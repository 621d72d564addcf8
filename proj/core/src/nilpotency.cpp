#include "dialg/nilpotency.hpp"

#include "dialg/ideals.hpp"
#include "dialg/random.hpp"

namespace dialg {

namespace {

template <typename Next>
SeriesCertificate descend(const DiassociativeAlgebra& algebra, std::size_t max_steps, Next next) {
  SeriesCertificate cert;
  cert.terms.push_back(Subspace::full(algebra.field(), algebra.dim()));
  while (true) {
    if (cert.terms.back().is_zero()) {
      cert.nilpotent = true;
      cert.nilpotency_class = cert.terms.size();
      return cert;
    }
    if (cert.terms.size() > max_steps) {
      cert.decided = false;
      return cert;
    }
    Subspace term = next(cert.terms);
    const bool stable = term == cert.terms.back();
    cert.terms.push_back(std::move(term));
    if (stable) return cert;
  }
}

}  // namespace

SeriesCertificate dias_series(const DiassociativeAlgebra& algebra,
                              std::optional<std::size_t> max_steps) {
  require_verified(algebra, "dias_series");
  // Dimensions never increase, so dim + 1 steps always reach 0 or a repeat.
  const std::size_t limit = max_steps.value_or(algebra.dim() + 1);
  return descend(algebra, limit, [&](const std::vector<Subspace>& terms) {
    // terms[i] holds D^{i+1}; build D^{m+1} with m = terms.size().
    const std::size_t m = terms.size();
    Subspace acc = Subspace::zero(algebra.field(), algebra.dim());
    for (std::size_t i = 1; i <= m; ++i) {
      acc = sum(acc, lozenge(algebra, terms[i - 1], terms[m - i]));
    }
    return acc;
  });
}

SeriesCertificate assoc_powers(const DiassociativeAlgebra& algebra, Op op) {
  require_verified(algebra, "assoc_powers");
  const Subspace whole = Subspace::full(algebra.field(), algebra.dim());
  return descend(algebra, algebra.dim() + 1, [&](const std::vector<Subspace>& terms) {
    return product_space(algebra, whole, terms.back(), op);
  });
}

std::optional<std::size_t> element_nilpotency_index(const DiassociativeAlgebra& algebra,
                                                    const Vector& x, Op op) {
  const std::size_t n = algebra.dim();
  if (x.size() != n) throw UsageError("element has the wrong length");
  if (is_zero(x)) return 1;
  // Powers p_{k+1} = x * p_k span the subalgebra of `op` generated by x (both
  // products are associative). Restrict λ_x to it and decide there.
  std::vector<Vector> krylov{x};
  while (true) {
    Vector next = multiply(algebra, x, krylov.back(), op);
    const Subspace so_far = Subspace::span(algebra.field(), n, krylov);
    if (so_far.contains(next)) break;
    krylov.push_back(std::move(next));
  }
  const std::size_t m = krylov.size();
  // Coordinates of λ_x(p_j) in the basis p_1..p_m: solve via RREF of [P | image].
  const Matrix p = Matrix::from_columns(algebra.field(), krylov, n);
  Matrix restricted(algebra.field(), m, m);
  for (std::size_t j = 0; j < m; ++j) {
    const Vector image = multiply(algebra, x, krylov[j], op);
    Matrix augmented(algebra.field(), n, m + 1);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < m; ++c) augmented(r, c) = p(r, c);
      augmented(r, m) = image[r];
    }
    const auto red = rref(augmented);
    // Columns of P are independent, so the first m pivots are 0..m-1.
    for (std::size_t i = 0; i < m; ++i) restricted(i, j) = red.reduced(i, m);
  }
  const auto idx = nilpotency_index(restricted);
  if (!idx) return std::nullopt;
  // λ^{k} vanishes on the cyclic space iff p_{k+1} = λ^k x = 0.
  return *idx + 1;
}

std::optional<std::size_t> element_nilpotency_index(const DiassociativeAlgebra& algebra,
                                                    const Element& x, Op op) {
  if (!x.algebra().same_as(algebra)) throw UsageError("element does not belong to this algebra");
  return element_nilpotency_index(algebra, x.coords(), op);
}

EngelEvidence engel_criterion(const DiassociativeAlgebra& algebra) {
  require_verified(algebra, "engel_criterion");
  // Nilpotent λ^⊢_{e_i} makes every e_i a ⊢-nilpotent element, so the
  // associative algebra (D, ⊢) has a basis of nilpotent elements and is
  // nilpotent; nilpotency of (D, ⊢) forces nilpotency of D. Conversely, a
  // nilpotent D has every λ^⊢_d nilpotent since λ^⊢_d maps D^k into D^{k+1}.
  EngelEvidence ev;
  ev.nilpotent = true;
  for (std::size_t i = 0; i < algebra.dim(); ++i) {
    const Matrix m = op_matrix(algebra, unit_vector(algebra.field(), algebra.dim(), i),
                               Side::LeftMult, Op::Right);
    auto idx = nilpotency_index(m);
    if (!idx && ev.nilpotent) {
      ev.nilpotent = false;
      ev.failing_basis = i;
    }
    ev.basis_indices.push_back(idx);
  }
  return ev;
}

OperatorSampleReport operator_nilpotency_sample(const DiassociativeAlgebra& algebra,
                                                std::size_t trials, std::uint64_t seed) {
  require_verified(algebra, "operator_nilpotency_sample");
  if (!dias_series(algebra).nilpotent) {
    throw UsageError("operator_nilpotency_sample requires a nilpotent algebra");
  }
  Rng rng(seed);
  OperatorSampleReport report;
  for (std::size_t t = 0; t < trials; ++t) {
    const Vector d = rng.vector(algebra.field(), algebra.dim(), 5);
    ++report.trials;
    for (Side side : {Side::LeftMult, Side::RightMult}) {
      for (Op op : kOps) {
        ++report.operators_checked;
        if (!nilpotency_index(op_matrix(algebra, d, side, op))) {
          report.counterexample = OperatorCounterexample{d, side, op};
          return report;
        }
      }
    }
  }
  return report;
}

}  // namespace dialg
