#include <algorithm>
#include <thread>

#include "dialg/genlab.hpp"

namespace dialg {

namespace {

using Table = std::vector<int>;  // flattened (i, j, k), entry index (i * n + j) * n + k

int at(const Table& t, std::size_t n, std::size_t i, std::size_t j, std::size_t k) {
  return t[(i * n + j) * n + k];
}

// (x a y) b z == x c (y d z) on every basis triple, mod p.
bool identity_holds(const Table& a, const Table& b, const Table& c, const Table& d, std::size_t n, int p) {
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        for (std::size_t l = 0; l < n; ++l) {
          int lhs = 0;
          int rhs = 0;
          for (std::size_t k = 0; k < n; ++k) {
            lhs += at(a, n, x, y, k) * at(b, n, k, z, l);
            rhs += at(d, n, y, z, k) * at(c, n, x, k, l);
          }
          if ((lhs - rhs) % p != 0) return false;
        }
      }
    }
  }
  return true;
}

/// Every table in lexicographic order, the first entry most significant.
std::vector<Table> all_tables(std::size_t entries, int p) {
  std::vector<Table> out;
  Table t(entries, 0);
  while (true) {
    out.push_back(t);
    std::size_t pos = entries;
    while (pos > 0) {
      --pos;
      if (++t[pos] < p) break;
      t[pos] = 0;
      if (pos == 0) return out;
    }
    if (entries == 0) return out;
  }
}

Tensor3 to_tensor(FieldSpec field, std::size_t n, const Table& t) {
  Tensor3 out = Tensor3::cube(field, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out.at(i, j, k) = Scalar::from_int(field, at(t, n, i, j, k));
  return out;
}

}  // namespace

std::vector<DiassociativeAlgebra> enumerate_all(FieldSpec field, std::size_t dim, std::size_t workers) {
  if (!field.is_finite() || (field.characteristic() != 2 && field.characteristic() != 3) || dim > 2) {
    throw UsageError("enumeration is limited to F2 or F3 and dimension at most 2");
  }
  const int p = static_cast<int>(field.characteristic());
  const std::size_t n = dim;
  std::vector<Table> assoc;
  for (auto& t : all_tables(n * n * n, p)) {
    if (identity_holds(t, t, t, t, n, p)) assoc.push_back(std::move(t));
  }
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> found(assoc.size());
  auto scan = [&](std::size_t begin, std::size_t end) {
    for (std::size_t l = begin; l < end; ++l) {
      const Table& left = assoc[l];
      for (std::size_t r = 0; r < assoc.size(); ++r) {
        const Table& right = assoc[r];
        if (!identity_holds(left, right, right, right, n, p)) continue;  // (x⊣y)⊢z = x⊢(y⊢z)
        if (!identity_holds(left, left, left, right, n, p)) continue;    // (x⊣y)⊣z = x⊣(y⊢z)
        if (!identity_holds(right, left, right, left, n, p)) continue;   // (x⊢y)⊣z = x⊢(y⊣z)
        found[l].emplace_back(l, r);
      }
    }
  };
  workers = std::max<std::size_t>(1, std::min(workers, assoc.size()));
  if (workers == 1) {
    scan(0, assoc.size());
  } else {
    std::vector<std::thread> threads;
    const std::size_t chunk = (assoc.size() + workers - 1) / workers;
    for (std::size_t begin = 0; begin < assoc.size(); begin += chunk) {
      threads.emplace_back(scan, begin, std::min(assoc.size(), begin + chunk));
    }
    for (auto& t : threads) t.join();
  }
  std::vector<DiassociativeAlgebra> out;
  for (const auto& row : found) {
    for (const auto& [l, r] : row) {
      out.push_back(verify(DiassociativeAlgebra(field, n, to_tensor(field, n, assoc[l]), to_tensor(field, n, assoc[r]))));
    }
  }
  return out;
}

namespace {

// Action blocks are m x m matrices M with v_out = M v_in. Block index
// group * n + d, groups in assignment order T⊢, T⊣, S⊣, S⊢.
enum Group : std::size_t { TRight = 0, TLeft = 1, SLeft = 2, SRight = 3 };

std::size_t s_group(Op op) { return op == Op::Left ? SLeft : SRight; }
std::size_t t_group(Op op) { return op == Op::Left ? TLeft : TRight; }

struct Term {
  int coeff;
  std::size_t first;
  std::optional<std::size_t> second;  // product first * second when present
};

struct Constraint {
  std::vector<Term> terms;
  std::size_t last_block;
};

using Block = std::vector<int>;  // m x m row-major

class RepSearch {
 public:
  RepSearch(const DiassociativeAlgebra& algebra, std::size_t m)
      : algebra_(algebra), n_(algebra.dim()), m_(m), p_(static_cast<int>(algebra.field().characteristic())) {
    for (Op op : kOps) {
      Table t(n_ * n_ * n_);
      for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
          for (std::size_t k = 0; k < n_; ++k)
            t[(i * n_ + j) * n_ + k] = static_cast<int>(algebra.tensor(op)(i, j, k).residue());
      tables_[static_cast<std::size_t>(op)] = std::move(t);
    }
    build_constraints();
    candidates_ = all_tables(m_ * m_, p_);
  }

  std::vector<Representation> run() {
    assigned_.assign(4 * n_, Block{});
    descend(0);
    return std::move(found_);
  }

 private:
  int structure(Op op, std::size_t i, std::size_t j, std::size_t k) const {
    return at(tables_[static_cast<std::size_t>(op)], n_, i, j, k);
  }
  std::size_t block(std::size_t group, std::size_t d) const { return group * n_ + d; }

  void add(std::vector<Term> terms) {
    std::size_t last = 0;
    for (const Term& t : terms) {
      last = std::max(last, t.first);
      if (t.second) last = std::max(last, *t.second);
    }
    by_depth_[last].push_back({std::move(terms), last});
  }

  void build_constraints() {
    by_depth_.assign(4 * n_, {});
    const int minus = p_ - 1;
    for (const AxiomShape& ax : kAxioms) {
      for (std::size_t u = 0; u < n_; ++u) {
        for (std::size_t w = 0; w < n_; ++w) {
          // v in the first slot: S^b_z S^a_y = S^c_{y d z}
          {
            std::vector<Term> terms{{1, block(s_group(ax.outer_left), w), block(s_group(ax.inner_left), u)}};
            for (std::size_t k = 0; k < n_; ++k) {
              const int c = structure(ax.inner_right, u, w, k);
              if (c != 0) terms.push_back({(minus * c) % p_, block(s_group(ax.outer_right), k), std::nullopt});
            }
            add(std::move(terms));
          }
          // middle slot, x = u, z = w: S^b_z T^a_x = T^c_x S^d_z
          add({{1, block(s_group(ax.outer_left), w), block(t_group(ax.inner_left), u)},
               {minus, block(t_group(ax.outer_right), u), block(s_group(ax.inner_right), w)}});
          // last slot, x = u, y = w: T^b_{x a y} = T^c_x T^d_y
          {
            std::vector<Term> terms{{minus, block(t_group(ax.outer_right), u), block(t_group(ax.inner_right), w)}};
            for (std::size_t k = 0; k < n_; ++k) {
              const int c = structure(ax.inner_left, u, w, k);
              if (c != 0) terms.push_back({c, block(t_group(ax.outer_left), k), std::nullopt});
            }
            add(std::move(terms));
          }
        }
      }
    }
  }

  bool satisfied(const Constraint& c) const {
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < m_; ++j) {
        int total = 0;
        for (const Term& t : c.terms) {
          const Block& a = assigned_[t.first];
          int entry = 0;
          if (t.second) {
            const Block& b = assigned_[*t.second];
            for (std::size_t k = 0; k < m_; ++k) entry += a[i * m_ + k] * b[k * m_ + j];
          } else {
            entry = a[i * m_ + j];
          }
          total += t.coeff * entry;
        }
        if (total % p_ != 0) return false;
      }
    }
    return true;
  }

  void descend(std::size_t depth) {
    if (depth == 4 * n_) {
      record();
      return;
    }
    for (const Block& candidate : candidates_) {
      assigned_[depth] = candidate;
      bool ok = true;
      for (const Constraint& c : by_depth_[depth]) {
        if (!satisfied(c)) {
          ok = false;
          break;
        }
      }
      if (ok) descend(depth + 1);
    }
  }

  void record() {
    const FieldSpec f = algebra_.field();
    std::array<Tensor3, 4> t{Tensor3(f, m_, n_, m_), Tensor3(f, m_, n_, m_), Tensor3(f, n_, m_, m_),
                             Tensor3(f, n_, m_, m_)};
    for (std::size_t d = 0; d < n_; ++d) {
      for (std::size_t i = 0; i < m_; ++i) {
        for (std::size_t j = 0; j < m_; ++j) {
          t[0].at(j, d, i) = Scalar::from_int(f, assigned_[block(SLeft, d)][i * m_ + j]);
          t[1].at(j, d, i) = Scalar::from_int(f, assigned_[block(SRight, d)][i * m_ + j]);
          t[2].at(d, j, i) = Scalar::from_int(f, assigned_[block(TLeft, d)][i * m_ + j]);
          t[3].at(d, j, i) = Scalar::from_int(f, assigned_[block(TRight, d)][i * m_ + j]);
        }
      }
    }
    found_.push_back(verify(Representation(algebra_, m_, t[0], t[1], t[2], t[3])));
  }

  const DiassociativeAlgebra& algebra_;
  std::size_t n_;
  std::size_t m_;
  int p_;
  std::array<Table, 2> tables_;
  std::vector<std::vector<Constraint>> by_depth_;
  std::vector<Block> candidates_;
  std::vector<Block> assigned_;
  std::vector<Representation> found_;
};

}  // namespace

std::vector<Representation> enumerate_reps(const DiassociativeAlgebra& algebra, std::size_t dim_v) {
  require_verified(algebra, "enumerate_reps");
  if (!algebra.field().is_finite()) throw UsageError("representations can only be enumerated over F_p");
  if (dim_v == 0) return {zero_rep(algebra, 0)};
  if (algebra.dim() == 0) return {zero_rep(algebra, dim_v)};
  return RepSearch(algebra, dim_v).run();
}

}  // namespace dialg
