#include "dialg/algebra.hpp"
#include "dialg/ideals.hpp"

namespace dialg {

QuotientResult quotient(const DiassociativeAlgebra& algebra, const Subspace& ideal) {
  const IdealReport report = is_ideal(algebra, ideal);
  if (!report.is_ideal) throw NotAnIdealError(*report.witness);

  const std::size_t n = algebra.dim();
  const FieldSpec f = algebra.field();
  const std::vector<std::size_t> comp = ideal.free_columns();
  const std::size_t q = comp.size();

  // π(v): reduce modulo the ideal, then read the free columns.
  auto project = [&](const Vector& v) {
    const Vector r = ideal.reduce(v);
    Vector out;
    out.reserve(q);
    for (auto c : comp) out.push_back(r[c]);
    return out;
  };

  Matrix projection(f, q, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Vector pj = project(unit_vector(f, n, j));
    for (std::size_t i = 0; i < q; ++i) projection(i, j) = pj[i];
  }

  Tensor3 left = Tensor3::cube(f, q);
  Tensor3 right = Tensor3::cube(f, q);
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t b = 0; b < q; ++b) {
      const Vector ea = unit_vector(f, n, comp[a]);
      const Vector eb = unit_vector(f, n, comp[b]);
      const Vector pl = project(multiply(algebra, ea, eb, Op::Left));
      const Vector pr = project(multiply(algebra, ea, eb, Op::Right));
      for (std::size_t c = 0; c < q; ++c) {
        left.at(a, b, c) = pl[c];
        right.at(a, b, c) = pr[c];
      }
    }
  }

  std::vector<std::string> names;
  for (auto c : comp) names.push_back(algebra.basis_names()[c]);
  DiassociativeAlgebra quot(f, q, std::move(left), std::move(right), std::move(names));
  if (algebra.verified()) quot = verify(std::move(quot));
  return {std::move(quot), std::move(projection), comp};
}

}  // namespace dialg
