#include <algorithm>

#include "dialg/genlab.hpp"
#include "dialg/ideals.hpp"
#include "dialg/nilpotency.hpp"
#include "dialg/random.hpp"

namespace dialg {

// ---- Catalog ---------------------------------------------------------------

DiassociativeAlgebra abelian(FieldSpec field, std::size_t n) {
  return verify(DiassociativeAlgebra(field, n, Tensor3::cube(field, n), Tensor3::cube(field, n)));
}

DiassociativeAlgebra d2b(FieldSpec field) {
  Tensor3 left = Tensor3::cube(field, 2);
  left.at(0, 0, 1) = Scalar::one(field);
  return verify(DiassociativeAlgebra(field, 2, std::move(left), Tensor3::cube(field, 2)));
}

DiassociativeAlgebra idempotent_line(FieldSpec field) {
  Tensor3 t = Tensor3::cube(field, 1);
  t.at(0, 0, 0) = Scalar::one(field);
  return from_associative(field, 1, t);
}

DiassociativeAlgebra matrix_algebra(FieldSpec field, std::size_t n) {
  // E_ab E_cd = [b == c] E_ad; E_ab has index a * n + b.
  const std::size_t dim = n * n;
  Tensor3 t = Tensor3::cube(field, dim);
  std::vector<std::string> names;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      names.push_back("E" + std::to_string(a + 1) + std::to_string(b + 1));
      for (std::size_t d = 0; d < n; ++d) t.at(a * n + b, b * n + d, a * n + d) = Scalar::one(field);
    }
  }
  return from_associative(field, dim, t, std::move(names));
}

DiassociativeAlgebra triangular_projection_dialgebra(FieldSpec field) {
  // Basis E11, E12, E22 of upper-triangular 2x2 matrices; φ keeps the diagonal.
  const auto one = Scalar::one(field);
  auto mat = [&](std::size_t i) {
    Matrix m(field, 2, 2);
    if (i == 0) m(0, 0) = one;
    if (i == 1) m(0, 1) = one;
    if (i == 2) m(1, 1) = one;
    return m;
  };
  auto phi = [&](const Matrix& m) {
    Matrix d(field, 2, 2);
    d(0, 0) = m(0, 0);
    d(1, 1) = m(1, 1);
    return d;
  };
  auto coords = [&](const Matrix& m) { return Vector{m(0, 0), m(0, 1), m(1, 1)}; };
  Tensor3 left = Tensor3::cube(field, 3);
  Tensor3 right = Tensor3::cube(field, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      const Vector l = coords(mat(i) * phi(mat(j)));
      const Vector r = coords(phi(mat(i)) * mat(j));
      for (std::size_t k = 0; k < 3; ++k) {
        left.at(i, j, k) = l[k];
        right.at(i, j, k) = r[k];
      }
    }
  }
  return verify(DiassociativeAlgebra(field, 3, std::move(left), std::move(right), {"E11", "E12", "E22"}));
}

DiassociativeAlgebra direct_sum(const DiassociativeAlgebra& a, const DiassociativeAlgebra& b) {
  if (a.field() != b.field()) throw UsageError("direct sum of algebras over different fields");
  const FieldSpec f = a.field();
  const std::size_t n = a.dim();
  const std::size_t m = b.dim();
  std::array<Tensor3, 2> tables{Tensor3::cube(f, n + m), Tensor3::cube(f, n + m)};
  for (Op op : kOps) {
    Tensor3& t = tables[static_cast<std::size_t>(op)];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) t.at(i, j, k) = a.tensor(op)(i, j, k);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < m; ++k) t.at(n + i, n + j, n + k) = b.tensor(op)(i, j, k);
  }
  DiassociativeAlgebra sum(f, n + m, std::move(tables[0]), std::move(tables[1]));
  return a.verified() && b.verified() ? verify(std::move(sum)) : sum;
}

DiassociativeAlgebra change_basis(const DiassociativeAlgebra& algebra, const Matrix& change) {
  const std::size_t n = algebra.dim();
  if (change.rows() != n || change.cols() != n) throw UsageError("change of basis has the wrong shape");
  const auto inv = inverse(change);
  if (!inv) throw UsageError("change of basis is singular");
  const FieldSpec f = algebra.field();
  std::array<Tensor3, 2> tables{Tensor3::cube(f, n), Tensor3::cube(f, n)};
  for (Op op : kOps) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        const Vector p = inv->apply(multiply(algebra, change.column(a), change.column(b), op));
        for (std::size_t c = 0; c < n; ++c) tables[static_cast<std::size_t>(op)].at(a, b, c) = p[c];
      }
    }
  }
  DiassociativeAlgebra out(f, n, std::move(tables[0]), std::move(tables[1]));
  return algebra.verified() ? verify(std::move(out)) : out;
}

// ---- Generation ------------------------------------------------------------

std::string_view mode_name(GeneratorMode mode) {
  switch (mode) {
    case GeneratorMode::Abelian: return "abelian";
    case GeneratorMode::GradedNilpotent: return "graded-nilpotent";
    case GeneratorMode::SplitExtensionTower: return "split-extension-tower";
    case GeneratorMode::AssociativeTriangular: return "associative-triangular";
    case GeneratorMode::ExhaustiveEnumeration: return "exhaustive";
  }
  return "?";
}

std::optional<GeneratorMode> parse_mode(std::string_view name) {
  for (auto mode : {GeneratorMode::Abelian, GeneratorMode::GradedNilpotent,
                    GeneratorMode::SplitExtensionTower, GeneratorMode::AssociativeTriangular,
                    GeneratorMode::ExhaustiveEnumeration}) {
    if (mode_name(mode) == name) return mode;
  }
  return std::nullopt;
}

namespace {

constexpr std::size_t kRejectionBudget = 50000;

std::uint64_t mix_seed(const GeneratorSpec& spec) {
  // splitmix64 over (seed, mode, dim, characteristic)
  std::uint64_t z = spec.seed * 0x9E3779B97F4A7C15ull + static_cast<std::uint64_t>(spec.mode) * 0xBF58476D1CE4E5B9ull +
                    spec.dim * 0x94D049BB133111EBull + spec.field.characteristic();
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Unit lower times unit upper triangular, small entries.
Matrix random_invertible(FieldSpec f, std::size_t n, Rng& rng) {
  Matrix lower = Matrix::identity(f, n);
  Matrix upper = Matrix::identity(f, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (rng.chance(50)) lower(i, j) = rng.scalar(f, 2);
      if (rng.chance(50)) upper(j, i) = rng.scalar(f, 2);
    }
  }
  return lower * upper;
}

// The e_l component of an axiom only involves constants whose output index is
// at most l, so layers are drawn and rejected one output index at a time.
bool layer_holds(const std::array<Tensor3, 2>& t, std::size_t n, std::size_t l) {
  const FieldSpec f = t[0].field();
  for (int id = 1; id <= 5; ++id) {
    const AxiomShape& ax = axiom(id);
    const Tensor3& a = t[static_cast<std::size_t>(ax.inner_left)];
    const Tensor3& b = t[static_cast<std::size_t>(ax.outer_left)];
    const Tensor3& c = t[static_cast<std::size_t>(ax.outer_right)];
    const Tensor3& d = t[static_cast<std::size_t>(ax.inner_right)];
    for (std::size_t x = 0; x < l; ++x)
      for (std::size_t y = 0; y < l; ++y)
        for (std::size_t z = 0; z < l; ++z) {
          Scalar sum = Scalar::zero(f);
          for (std::size_t k = 0; k < l; ++k) {
            sum += a(x, y, k) * b(k, z, l);
            sum -= d(y, z, k) * c(x, k, l);
          }
          if (!sum.is_zero()) return false;
        }
  }
  return true;
}

DiassociativeAlgebra graded_nilpotent(FieldSpec f, std::size_t n, Rng& rng, std::uint64_t seed) {
  std::array<Tensor3, 2> tables{Tensor3::cube(f, n), Tensor3::cube(f, n)};
  std::size_t attempts = 0;
  for (std::size_t l = 1; l < n; ++l) {
    // Draws thin out as a layer keeps failing; the empty layer always passes.
    for (std::size_t tries = 0;; ++tries) {
      if (++attempts > kRejectionBudget) throw GenerationError("graded-nilpotent rejection budget exhausted", seed + 1);
      const unsigned density = static_cast<unsigned>(rng.range(15, 60) * 40 / (40 + tries));
      for (auto& t : tables) {
        for (std::size_t i = 0; i < l; ++i) {
          for (std::size_t j = 0; j < l; ++j) {
            t.at(i, j, l) = rng.chance(density) ? rng.nonzero_scalar(f, 2) : Scalar::zero(f);
          }
        }
      }
      if (layer_holds(tables, n, l)) break;
    }
  }
  DiassociativeAlgebra candidate(f, n, std::move(tables[0]), std::move(tables[1]));
  if (!check_axioms(candidate).empty()) throw GenerationError("graded-nilpotent layers inconsistent", seed + 1);
  return verify(std::move(candidate));
}

// V = I, an ideal, acted on by multiplication. RREF makes coordinates in I
// the entries at I's pivot columns.
Representation ideal_rep(const DiassociativeAlgebra& d, const Subspace& ideal) {
  const FieldSpec f = d.field();
  const std::size_t n = d.dim();
  const std::size_t m = ideal.dim();
  const auto basis = ideal.basis_vectors();
  std::array<Tensor3, 4> t{Tensor3(f, m, n, m), Tensor3(f, m, n, m), Tensor3(f, n, m, m),
                           Tensor3(f, n, m, m)};
  for (Op op : kOps) {
    const std::size_t o = static_cast<std::size_t>(op);
    for (std::size_t e = 0; e < n; ++e) {
      const Vector ee = unit_vector(f, n, e);
      for (std::size_t a = 0; a < m; ++a) {
        const Vector vs = multiply(d, basis[a], ee, op);
        const Vector vt = multiply(d, ee, basis[a], op);
        for (std::size_t c = 0; c < m; ++c) {
          t[o].at(a, e, c) = vs[ideal.pivots()[c]];
          t[2 + o].at(e, a, c) = vt[ideal.pivots()[c]];
        }
      }
    }
  }
  return verify(Representation(d, m, t[0], t[1], t[2], t[3]));
}

// Every action is α(d) N with N² = 0 and α vanishing on D◊D; all products of
// two actions vanish, and so does every action of a product.
Representation square_zero_rep(const DiassociativeAlgebra& d, std::size_t m, Rng& rng) {
  const FieldSpec f = d.field();
  const std::size_t n = d.dim();
  const Subspace full = Subspace::full(f, n);
  const Subspace derived = lozenge(d, full, full);
  // Functionals vanishing on `derived`: the kernel of derived's basis as rows.
  const Subspace functionals = derived.is_zero() ? full : kernel(derived.basis());
  Matrix nil(f, m, m);
  if (m >= 2) {
    // Rank-one nilpotent u w^T with w ⟂ u.
    Vector u = rng.vector(f, m, 2);
    u[0] = Scalar::one(f);
    Vector w = rng.vector(f, m, 2);
    w[0] = Scalar::zero(f);
    for (std::size_t i = 1; i < m; ++i) w[0] -= w[i] * u[i];
    if (is_zero(w)) {
      w = unit_vector(f, m, m - 1);
      w[0] = -u[m - 1];
    }
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) nil(i, j) = u[i] * w[j];
  }
  std::array<Tensor3, 4> t{Tensor3(f, m, n, m), Tensor3(f, m, n, m), Tensor3(f, n, m, m),
                           Tensor3(f, n, m, m)};
  for (std::size_t which = 0; which < 4; ++which) {
    Vector alpha = zero_vector(f, n);
    for (const auto& b : functionals.basis_vectors()) axpy(alpha, rng.scalar(f, 2), b);
    for (std::size_t e = 0; e < n; ++e) {
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t c = 0; c < m; ++c) {
          const Scalar v = alpha[e] * nil(c, a);
          if (which < 2) {
            t[which].at(a, e, c) = v;
          } else {
            t[which].at(e, a, c) = v;
          }
        }
      }
    }
  }
  return verify(Representation(d, m, t[0], t[1], t[2], t[3]));
}

DiassociativeAlgebra split_extension_tower(FieldSpec f, std::size_t n, Rng& rng) {
  if (n == 0) return abelian(f, 0);
  DiassociativeAlgebra d = abelian(f, n >= 4 && rng.chance(50) ? 2 : 1);
  while (d.dim() < n) {
    const std::size_t remaining = n - d.dim();
    const Subspace full = Subspace::full(f, d.dim());
    const Subspace derived = lozenge(d, full, full);
    std::vector<int> options{0};  // square-zero family
    if (d.dim() <= remaining && !derived.is_zero()) options.push_back(1);  // regular
    if (!derived.is_zero() && derived.dim() <= remaining) options.push_back(2);  // ideal
    const int pick = options[static_cast<std::size_t>(rng.range(0, static_cast<long long>(options.size()) - 1))];
    Representation rep = pick == 1   ? regular_rep(d)
                         : pick == 2 ? ideal_rep(d, derived)
                                     : square_zero_rep(d, std::min<std::size_t>(remaining, remaining >= 2 ? 2 : 1), rng);
    d = split_extension(rep);
  }
  return verify(change_basis(DiassociativeAlgebra(f, n, d.tensor(Op::Left), d.tensor(Op::Right)),
                             random_invertible(f, n, rng)));
}

DiassociativeAlgebra associative_triangular(FieldSpec f, std::size_t n, Rng& rng, std::uint64_t seed) {
  if (n == 0) return abelian(f, 0);
  std::size_t size = 2;
  while (size * (size - 1) / 2 < n) ++size;
  size += static_cast<std::size_t>(rng.range(0, 1));
  const std::size_t sq = size * size;
  auto flat = [&](const Matrix& m) {
    Vector v;
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j) v.push_back(m(i, j));
    return v;
  };
  auto unflat = [&](const Vector& v) {
    Matrix m(f, size, size);
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j) m(i, j) = v[i * size + j];
    return m;
  };
  for (std::size_t attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Vector> gens;
    const std::size_t count = static_cast<std::size_t>(rng.range(1, 3));
    for (std::size_t g = 0; g < count; ++g) {
      Matrix m(f, size, size);
      for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = i + 1; j < size; ++j)
          if (rng.chance(60)) m(i, j) = rng.scalar(f, 2);
      gens.push_back(flat(m));
    }
    // Subalgebra closure inside strictly upper triangular matrices.
    Subspace s = Subspace::span(f, sq, gens);
    while (true) {
      std::vector<Vector> grow = s.basis_vectors();
      for (const auto& a : s.basis_vectors())
        for (const auto& b : s.basis_vectors()) grow.push_back(flat(unflat(a) * unflat(b)));
      Subspace next = Subspace::span(f, sq, grow);
      if (next.dim() == s.dim()) break;
      s = std::move(next);
    }
    if (s.dim() < n) continue;
    const std::size_t k = s.dim();
    const auto basis = s.basis_vectors();
    Tensor3 t = Tensor3::cube(f, k);
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        const Vector p = flat(unflat(basis[a]) * unflat(basis[b]));
        for (std::size_t c = 0; c < k; ++c) t.at(a, b, c) = p[s.pivots()[c]];
      }
    }
    DiassociativeAlgebra alg = from_associative(f, k, t);
    while (alg.dim() > n) {
      // Quotient by a random central line; the annihilator of a nonzero
      // nilpotent algebra is nonzero.
      const Subspace z = annihilator(alg);
      Vector v = zero_vector(f, alg.dim());
      while (is_zero(v)) {
        for (const auto& b : z.basis_vectors()) axpy(v, rng.scalar(f, 2), b);
      }
      alg = quotient(alg, Subspace::span(f, alg.dim(), {v})).algebra;
    }
    return verify(DiassociativeAlgebra(f, n, alg.tensor(Op::Left), alg.tensor(Op::Right)));
  }
  throw GenerationError("associative-triangular generation budget exhausted", seed + 1);
}

}  // namespace

DiassociativeAlgebra generate(const GeneratorSpec& spec) {
  Rng rng(mix_seed(spec));
  switch (spec.mode) {
    case GeneratorMode::Abelian:
      return abelian(spec.field, spec.dim);
    case GeneratorMode::GradedNilpotent:
      return graded_nilpotent(spec.field, spec.dim, rng, spec.seed);
    case GeneratorMode::SplitExtensionTower:
      return split_extension_tower(spec.field, spec.dim, rng);
    case GeneratorMode::AssociativeTriangular:
      return associative_triangular(spec.field, spec.dim, rng, spec.seed);
    case GeneratorMode::ExhaustiveEnumeration: {
      const auto all = enumerate_all(spec.field, spec.dim);
      return all.at(spec.seed % all.size());
    }
  }
  throw UsageError("unknown generator mode");
}

DiassociativeAlgebra non_nilpotent_fixture(FieldSpec field, std::uint64_t seed) {
  Rng rng(mix_seed({field, 0, GeneratorMode::Abelian, seed ^ 0xA5A5A5A5ull}));
  DiassociativeAlgebra piece = idempotent_line(field);
  switch (rng.range(0, 2)) {
    case 0: break;
    case 1: piece = triangular_projection_dialgebra(field); break;
    default: {
      Tensor3 t = Tensor3::cube(field, 2);
      t.at(0, 0, 0) = Scalar::one(field);
      t.at(0, 1, 1) = Scalar::one(field);
      piece = from_associative(field, 2, t);
    }
  }
  const std::size_t extra = static_cast<std::size_t>(rng.range(0, 3));
  DiassociativeAlgebra whole = piece;
  if (extra > 0) {
    const GeneratorMode mode = rng.chance(50) ? GeneratorMode::SplitExtensionTower : GeneratorMode::GradedNilpotent;
    whole = rng.chance(50) ? direct_sum(generate({field, extra, mode, rng.next()}), piece)
                           : direct_sum(piece, generate({field, extra, mode, rng.next()}));
  }
  return change_basis(whole, random_invertible(field, whole.dim(), rng));
}

DiassociativeAlgebra mutate(const DiassociativeAlgebra& algebra, Op op, std::size_t i, std::size_t j,
                            std::size_t k, const Scalar& value) {
  Tensor3 left = algebra.tensor(Op::Left);
  Tensor3 right = algebra.tensor(Op::Right);
  (op == Op::Left ? left : right).at(i, j, k) = value;
  return DiassociativeAlgebra(algebra.field(), algebra.dim(), std::move(left), std::move(right),
                              algebra.basis_names());
}

Representation mutate(const Representation& rep, ActionSide side, Op op, std::size_t a,
                      std::size_t b, std::size_t c, const Scalar& value) {
  std::array<Tensor3, 4> t{rep.tensor(ActionSide::S, Op::Left), rep.tensor(ActionSide::S, Op::Right),
                           rep.tensor(ActionSide::T, Op::Left), rep.tensor(ActionSide::T, Op::Right)};
  t[(side == ActionSide::S ? 0 : 2) + (op == Op::Left ? 0 : 1)].at(a, b, c) = value;
  return Representation(rep.algebra(), rep.dim_v(), t[0], t[1], t[2], t[3], rep.v_names());
}

}  // namespace dialg
