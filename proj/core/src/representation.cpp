#include "dialg/representation.hpp"

#include <algorithm>
#include <tuple>

#include "dialg/ideals.hpp"
#include "dialg/random.hpp"

namespace dialg {

namespace {

std::size_t slot(ActionSide side, Op op) {
  return (side == ActionSide::S ? 0 : 2) + (op == Op::Left ? 0 : 1);
}

}  // namespace

Representation::Representation(DiassociativeAlgebra algebra, std::size_t dim_v, Tensor3 s_left,
                               Tensor3 s_right, Tensor3 t_left, Tensor3 t_right,
                               std::vector<std::string> v_names)
    : algebra_(std::move(algebra)),
      dim_v_(dim_v),
      tensors_{std::move(s_left), std::move(s_right), std::move(t_left), std::move(t_right)},
      v_names_(std::move(v_names)) {
  const std::size_t n = algebra_.dim();
  const std::array<std::size_t, 3> s_shape{dim_v, n, dim_v};
  const std::array<std::size_t, 3> t_shape{n, dim_v, dim_v};
  for (std::size_t i = 0; i < 4; ++i) {
    if (tensors_[i].extents() != (i < 2 ? s_shape : t_shape)) {
      throw UsageError("action tensor has the wrong shape");
    }
    if (tensors_[i].field() != algebra_.field()) throw UsageError("action tensor field mismatch");
  }
  if (v_names_.empty()) {
    for (std::size_t i = 0; i < dim_v; ++i) v_names_.push_back("v" + std::to_string(i + 1));
  } else if (v_names_.size() != dim_v) {
    throw UsageError("module basis name count does not match dimV");
  }
}

const Tensor3& Representation::tensor(ActionSide side, Op op) const {
  return tensors_[slot(side, op)];
}

bool operator==(const Representation& a, const Representation& b) {
  return a.algebra_ == b.algebra_ && a.dim_v_ == b.dim_v_ && a.tensors_ == b.tensors_ &&
         a.v_names_ == b.v_names_;
}

InvalidRepresentationError::InvalidRepresentationError(std::vector<RepViolation> violations)
    : Rejection("actions violate " + std::to_string(violations.size()) +
                " representation identity instance(s)"),
      violations_(std::move(violations)) {}

Vector act(const Representation& rep, const Vector& d, const Vector& v, ActionSide side, Op op) {
  const std::size_t n = rep.algebra().dim();
  const std::size_t m = rep.dim_v();
  if (d.size() != n || v.size() != m) throw UsageError("action operand shape mismatch");
  const Tensor3& t = rep.tensor(side, op);
  Vector out = zero_vector(rep.field(), m);
  for (std::size_t a = 0; a < n; ++a) {
    if (d[a].is_zero()) continue;
    for (std::size_t b = 0; b < m; ++b) {
      if (v[b].is_zero()) continue;
      const Scalar coeff = d[a] * v[b];
      for (std::size_t c = 0; c < m; ++c) {
        const Scalar& s = side == ActionSide::S ? t(b, a, c) : t(a, b, c);
        if (!s.is_zero()) out[c] += coeff * s;
      }
    }
  }
  return out;
}

Vector act(const Representation& rep, const Element& d, const Vector& v, ActionSide side, Op op) {
  if (!d.algebra().same_as(rep.algebra())) {
    throw UsageError("element does not belong to the represented algebra");
  }
  return act(rep, d.coords(), v, side, op);
}

Matrix action_matrix(const Representation& rep, const Vector& d, ActionSide side, Op op) {
  const std::size_t m = rep.dim_v();
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < m; ++j) cols.push_back(act(rep, d, unit_vector(rep.field(), m, j), side, op));
  return Matrix::from_columns(rep.field(), cols, m);
}

namespace {

// A value in X = D ⊕ V that lies entirely in D or entirely in V.
struct Operand {
  bool in_v;
  Vector coords;
};

Operand mixed_product(const Representation& rep, const Operand& a, const Operand& b, Op op) {
  if (!a.in_v && !b.in_v) return {false, multiply(rep.algebra(), a.coords, b.coords, op)};
  if (a.in_v && !b.in_v) return {true, act(rep, b.coords, a.coords, ActionSide::S, op)};
  if (!a.in_v && b.in_v) return {true, act(rep, a.coords, b.coords, ActionSide::T, op)};
  throw std::logic_error("product of two module vectors is undefined");
}

}  // namespace

std::vector<RepViolation> check_rep_identities(const Representation& rep) {
  const std::size_t n = rep.algebra().dim();
  const std::size_t m = rep.dim_v();
  const FieldSpec f = rep.field();
  std::vector<RepViolation> out;
  for (const auto& ax : kAxioms) {
    for (int pos = 1; pos <= 3; ++pos) {
      std::array<std::size_t, 3> extent{n, n, n};
      extent[static_cast<std::size_t>(pos - 1)] = m;
      for (std::size_t x = 0; x < extent[0]; ++x) {
        for (std::size_t y = 0; y < extent[1]; ++y) {
          for (std::size_t z = 0; z < extent[2]; ++z) {
            const std::array<std::size_t, 3> idx{x, y, z};
            std::array<Operand, 3> ops;
            for (std::size_t s = 0; s < 3; ++s) {
              const bool in_v = static_cast<int>(s) == pos - 1;
              ops[s] = {in_v, unit_vector(f, in_v ? m : n, idx[s])};
            }
            Operand lhs = mixed_product(rep, mixed_product(rep, ops[0], ops[1], ax.inner_left), ops[2],
                                        ax.outer_left);
            Operand rhs = mixed_product(rep, ops[0], mixed_product(rep, ops[1], ops[2], ax.inner_right),
                                        ax.outer_right);
            if (lhs.coords != rhs.coords) {
              out.push_back({ax.id, pos, idx, std::move(lhs.coords), std::move(rhs.coords)});
            }
          }
        }
      }
    }
  }
  return out;
}

Representation verify(Representation rep) {
  require_verified(rep.algebra(), "representation verification");
  auto violations = check_rep_identities(rep);
  if (!violations.empty()) throw InvalidRepresentationError(std::move(violations));
  rep.verified_ = true;
  return rep;
}

Representation regular_rep(const DiassociativeAlgebra& algebra) {
  require_verified(algebra, "regular_rep");
  // v * d and d * v are the algebra products themselves.
  const Tensor3& l = algebra.tensor(Op::Left);
  const Tensor3& r = algebra.tensor(Op::Right);
  return verify(Representation(algebra, algebra.dim(), l, r, l, r, algebra.basis_names()));
}

Representation zero_rep(const DiassociativeAlgebra& algebra, std::size_t dim_v) {
  const std::size_t n = algebra.dim();
  const FieldSpec f = algebra.field();
  Tensor3 s(f, dim_v, n, dim_v);
  Tensor3 t(f, n, dim_v, dim_v);
  Representation rep(algebra, dim_v, s, s, t, t);
  return algebra.verified() ? verify(std::move(rep)) : rep;
}

Subspace rep_kernel(const Representation& rep) {
  const std::size_t n = rep.algebra().dim();
  const std::size_t m = rep.dim_v();
  Matrix system(rep.field(), 4 * m * m, n);
  std::size_t row = 0;
  for (ActionSide side : {ActionSide::S, ActionSide::T}) {
    for (Op op : kOps) {
      const Tensor3& t = rep.tensor(side, op);
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t c = 0; c < m; ++c, ++row) {
          for (std::size_t d = 0; d < n; ++d) {
            system(row, d) = side == ActionSide::S ? t(a, d, c) : t(d, a, c);
          }
        }
      }
    }
  }
  return kernel(system);
}

DiassociativeAlgebra split_extension_unchecked(const Representation& rep) {
  const DiassociativeAlgebra& alg = rep.algebra();
  const std::size_t n = alg.dim();
  const std::size_t m = rep.dim_v();
  const FieldSpec f = alg.field();
  std::array<Tensor3, 2> tables{Tensor3::cube(f, n + m), Tensor3::cube(f, n + m)};
  for (Op op : kOps) {
    Tensor3& x = tables[static_cast<std::size_t>(op)];
    const Tensor3& a = alg.tensor(op);
    const Tensor3& s = rep.tensor(ActionSide::S, op);
    const Tensor3& t = rep.tensor(ActionSide::T, op);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) x.at(i, j, k) = a(i, j, k);
      }
    }
    for (std::size_t d = 0; d < n; ++d) {
      for (std::size_t b = 0; b < m; ++b) {
        for (std::size_t c = 0; c < m; ++c) {
          x.at(d, n + b, n + c) = t(d, b, c);
          x.at(n + b, d, n + c) = s(b, d, c);
        }
      }
    }
  }
  // Module names may collide with algebra names (regular representation);
  // fall back to v1..vm, then to x_{n+1}..x_{n+m}.
  auto with_module_names = [&](auto name_of) {
    std::vector<std::string> names = alg.basis_names();
    for (std::size_t i = 0; i < m; ++i) names.push_back(name_of(i));
    std::vector<std::string> sorted = names;
    std::sort(sorted.begin(), sorted.end());
    const bool distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    return std::make_pair(distinct, names);
  };
  auto [ok, names] = with_module_names([&](std::size_t i) { return rep.v_names()[i]; });
  if (!ok) std::tie(ok, names) = with_module_names([](std::size_t i) { return "v" + std::to_string(i + 1); });
  if (!ok) std::tie(ok, names) = with_module_names([&](std::size_t i) { return "x" + std::to_string(n + i + 1); });
  return DiassociativeAlgebra(f, n + m, std::move(tables[0]), std::move(tables[1]), std::move(names));
}

DiassociativeAlgebra split_extension(const Representation& rep) {
  if (!rep.verified()) throw UsageError("split_extension requires a verified representation");
  return verify(split_extension_unchecked(rep));
}

Subspace invariant_closure(const Representation& rep, const Vector& v) {
  const std::size_t n = rep.algebra().dim();
  const std::size_t m = rep.dim_v();
  const FieldSpec f = rep.field();
  std::vector<Matrix> maps;
  for (std::size_t d = 0; d < n; ++d) {
    for (ActionSide side : {ActionSide::S, ActionSide::T}) {
      for (Op op : kOps) maps.push_back(action_matrix(rep, unit_vector(f, n, d), side, op));
    }
  }
  Subspace w = Subspace::span(f, m, {v});
  while (true) {
    std::vector<Vector> grow = w.basis_vectors();
    for (const auto& b : w.basis_vectors()) {
      for (const auto& map : maps) grow.push_back(map.apply(b));
    }
    Subspace next = Subspace::span(f, m, grow);
    if (next.dim() == w.dim()) return w;
    w = std::move(next);
  }
}

IrreducibilityResult is_irreducible(const Representation& rep, std::uint64_t seed,
                                    std::size_t random_trials) {
  const std::size_t m = rep.dim_v();
  if (m == 0) throw UsageError("irreducibility is undefined for the zero module");
  if (!rep.verified()) throw UsageError("is_irreducible requires a verified representation");
  using Kind = IrreducibilityResult::Kind;
  if (m == 1) return {Kind::Irreducible, std::nullopt};
  const FieldSpec f = rep.field();

  auto proper = [&](const Vector& v) -> std::optional<Subspace> {
    if (is_zero(v)) return std::nullopt;
    Subspace w = invariant_closure(rep, v);
    if (w.dim() < m) return w;
    return std::nullopt;
  };

  if (f.is_finite() && m <= 4) {
    // Every line, represented by its vector with leading coefficient 1.
    const std::uint32_t p = f.characteristic();
    std::vector<std::uint32_t> digits(m, 0);
    while (true) {
      std::size_t i = 0;
      while (i < m && ++digits[i] == p) digits[i++] = 0;
      if (i == m) break;
      std::size_t lead = 0;
      while (digits[lead] == 0) ++lead;
      if (digits[lead] != 1) continue;
      Vector v;
      for (auto d : digits) v.push_back(Scalar::from_int(f, d));
      if (auto w = proper(v)) return {Kind::Reducible, std::move(w)};
    }
    return {Kind::Irreducible, std::nullopt};
  }

  for (std::size_t i = 0; i < m; ++i) {
    if (auto w = proper(unit_vector(f, m, i))) return {Kind::Reducible, std::move(w)};
  }
  Rng rng(seed);
  for (std::size_t t = 0; t < random_trials; ++t) {
    if (auto w = proper(rng.vector(f, m, 7))) return {Kind::Reducible, std::move(w)};
  }
  return {Kind::Unknown, std::nullopt};
}

Subspace common_null_space(const Representation& rep) {
  const std::size_t n = rep.algebra().dim();
  const std::size_t m = rep.dim_v();
  Matrix system(rep.field(), 4 * n * m, m);
  std::size_t row = 0;
  for (ActionSide side : {ActionSide::S, ActionSide::T}) {
    for (Op op : kOps) {
      const Tensor3& t = rep.tensor(side, op);
      for (std::size_t d = 0; d < n; ++d) {
        for (std::size_t c = 0; c < m; ++c, ++row) {
          for (std::size_t a = 0; a < m; ++a) {
            system(row, a) = side == ActionSide::S ? t(a, d, c) : t(d, a, c);
          }
        }
      }
    }
  }
  return kernel(system);
}

std::string DichotomyReport::branch() const {
  if (zero_branch && agree_branch) return "both";
  if (zero_branch) return "V⊢D = D⊣V = 0";
  if (agree_branch) return "actions agree";
  return "none";
}

DichotomyReport dichotomy_report(const Representation& rep) {
  DichotomyReport report;
  report.quotient_associative = rep_kernel(rep).contains(dias_subspace(rep.algebra()));
  report.zero_branch = rep.tensor(ActionSide::S, Op::Right).is_zero() &&
                       rep.tensor(ActionSide::T, Op::Left).is_zero();
  report.agree_branch = rep.tensor(ActionSide::S, Op::Left) == rep.tensor(ActionSide::S, Op::Right) &&
                        rep.tensor(ActionSide::T, Op::Left) == rep.tensor(ActionSide::T, Op::Right);
  return report;
}

DichotomyReport dichotomy_check(const Representation& rep) {
  if (is_irreducible(rep).kind != IrreducibilityResult::Kind::Irreducible) {
    throw UsageError("dichotomy_check requires an irreducible representation");
  }
  return dichotomy_report(rep);
}

AssocRepresentation assoc_pair_view(const Representation& rep) {
  if (!is_associative_dias(rep.algebra())) {
    throw UsageError("assoc_pair_view requires an associative algebra");
  }
  return {rep.algebra(), rep.dim_v(), rep.tensor(ActionSide::S, Op::Left),
          rep.tensor(ActionSide::T, Op::Right)};
}

std::vector<AssocRepViolation> check_assoc_rep_identities(const AssocRepresentation& pair) {
  const DiassociativeAlgebra& alg = pair.algebra;
  const std::size_t n = alg.dim();
  const std::size_t m = pair.dim_v;
  const FieldSpec f = alg.field();
  // Reuse the four-action evaluator with both sides mapped to the pair.
  const Representation view(alg, m, pair.s, pair.s, pair.t, pair.t);
  auto T = [&](const Vector& a, const Vector& v) { return act(view, a, v, ActionSide::T, Op::Left); };
  auto S = [&](const Vector& b, const Vector& v) { return act(view, b, v, ActionSide::S, Op::Left); };
  std::vector<AssocRepViolation> out;
  for (std::size_t a = 0; a < n; ++a) {
    const Vector ea = unit_vector(f, n, a);
    for (std::size_t b = 0; b < n; ++b) {
      const Vector eb = unit_vector(f, n, b);
      const Vector ab = multiply(alg, ea, eb, Op::Left);
      for (std::size_t i = 0; i < m; ++i) {
        const Vector v = unit_vector(f, m, i);
        Vector l1 = T(ea, T(eb, v)), r1 = T(ab, v);
        if (l1 != r1) out.push_back({1, {a, b, i}, std::move(l1), std::move(r1)});
        Vector l2 = T(ea, S(eb, v)), r2 = S(eb, T(ea, v));
        if (l2 != r2) out.push_back({2, {a, i, b}, std::move(l2), std::move(r2)});
        Vector l3 = S(ab, v), r3 = S(eb, S(ea, v));
        if (l3 != r3) out.push_back({3, {i, a, b}, std::move(l3), std::move(r3)});
      }
    }
  }
  return out;
}

}  // namespace dialg
