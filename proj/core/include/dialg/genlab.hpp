#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dialg/algebra.hpp"
#include "dialg/representation.hpp"

namespace dialg {

// ---- Catalog ---------------------------------------------------------------

/// Zero products in dimension n.
DiassociativeAlgebra abelian(FieldSpec field, std::size_t n);
/// Two-dimensional, e1 ⊣ e1 = e2, every other basis product zero.
DiassociativeAlgebra d2b(FieldSpec field);
/// One-dimensional, e1 ⊣ e1 = e1 ⊢ e1 = e1.
DiassociativeAlgebra idempotent_line(FieldSpec field);
/// End(F^n) with composition, basis E_11, E_12, ..., E_nn (row-major).
DiassociativeAlgebra matrix_algebra(FieldSpec field, std::size_t n);
/// Upper-triangular 2x2 matrices with x ⊣ y = x φ(y), x ⊢ y = φ(x) y for φ the
/// diagonal projection. Not associative, not nilpotent.
DiassociativeAlgebra triangular_projection_dialgebra(FieldSpec field);

DiassociativeAlgebra direct_sum(const DiassociativeAlgebra& a, const DiassociativeAlgebra& b);
/// The same algebra in the basis given by the columns of `change` (invertible).
DiassociativeAlgebra change_basis(const DiassociativeAlgebra& algebra, const Matrix& change);

// ---- Generation ------------------------------------------------------------

enum class GeneratorMode : std::uint8_t {
  Abelian,
  GradedNilpotent,
  SplitExtensionTower,
  AssociativeTriangular,
  ExhaustiveEnumeration,
};
std::string_view mode_name(GeneratorMode mode);
std::optional<GeneratorMode> parse_mode(std::string_view name);

struct GeneratorSpec {
  FieldSpec field;
  std::size_t dim;
  GeneratorMode mode;
  std::uint64_t seed;
};

class GenerationError : public std::runtime_error {
 public:
  GenerationError(const std::string& what, std::uint64_t next_seed)
      : std::runtime_error(what), next_seed_(next_seed) {}
  /// Seed to retry with.
  std::uint64_t next_seed() const { return next_seed_; }

 private:
  std::uint64_t next_seed_;
};

/// Deterministic in the spec. Every output is verified.
/// - GradedNilpotent: random tables with e_i * e_j in span{e_k : k > max(i, j)},
///   rejection-filtered by the axioms.
/// - SplitExtensionTower: iterated split extensions starting from an abelian
///   algebra, followed by a random change of basis.
/// - AssociativeTriangular: left = right, a subalgebra of strictly upper
///   triangular matrices (cut down to `dim` through central quotients).
/// - ExhaustiveEnumeration: entry (seed mod count) of enumerate_all.
DiassociativeAlgebra generate(const GeneratorSpec& spec);

/// Non-nilpotent instances: a random nilpotent algebra summed with a
/// non-nilpotent catalog piece, in a random basis.
DiassociativeAlgebra non_nilpotent_fixture(FieldSpec field, std::uint64_t seed);

/// Every diassociative table over F_p, p in {2, 3}, dim <= 2, in lexicographic
/// order of (left table, right table). Throws UsageError beyond those bounds.
/// Workers split the left tables into contiguous ranges; the output does not
/// depend on their number.
std::vector<DiassociativeAlgebra> enumerate_all(FieldSpec field, std::size_t dim, std::size_t workers = 1);

/// Every representation of `algebra` (over F_p) on F_p^dim_v, by backtracking
/// over the basis action matrices. Intended for dim, dim_v <= 2.
std::vector<Representation> enumerate_reps(const DiassociativeAlgebra& algebra, std::size_t dim_v);

/// Replaces one structure constant (0-based indices). The result is unverified.
DiassociativeAlgebra mutate(const DiassociativeAlgebra& algebra, Op op, std::size_t i, std::size_t j,
                            std::size_t k, const Scalar& value);
/// Replaces one action constant (tensor index convention of Representation).
Representation mutate(const Representation& rep, ActionSide side, Op op, std::size_t a,
                      std::size_t b, std::size_t c, const Scalar& value);

// ---- Theorem suites --------------------------------------------------------

enum class Suite : std::uint8_t {
  DiasIdeal,            // Dias(D) is an abelian ideal; D/Dias(D) associative
  Engel,                // λ^⊢ criterion agrees with the series
  OneSidedNilpotent,    // (D,⊢) or (D,⊣) nilpotent ⇒ D nilpotent
  CentralQuotient,      // D/Ann(D) nilpotent ⇒ D nilpotent
  NilBasis,             // nilpotent basis elements ⇒ nilpotent associative algebra
  LeftMultNilpotent,    // x nilpotent ⇒ λ_x nilpotent (associative)
  NullVector,           // nilpotent D: common null vector, nilpotent operators
  IrreducibleDichotomy, // irreducible reps: quotient associative and one branch
  NormalizerGrowth,     // proper subalgebras of nilpotent A grow in their normalizer
  SplitExtension,       // split extension valid iff the identities hold
};
inline constexpr std::array<Suite, 10> kSuites{
    Suite::DiasIdeal,        Suite::Engel,          Suite::OneSidedNilpotent,
    Suite::CentralQuotient,  Suite::NilBasis,       Suite::LeftMultNilpotent,
    Suite::NullVector,       Suite::IrreducibleDichotomy, Suite::NormalizerGrowth,
    Suite::SplitExtension};
std::string_view suite_name(Suite suite);
std::optional<Suite> parse_suite(std::string_view name);

struct Corpus {
  std::vector<DiassociativeAlgebra> algebras;
  std::vector<Representation> reps;
};

struct Counterexample {
  /// Serialized algebra (or representation) file.
  std::string instance;
  std::string witness;
};

struct SuiteReport {
  std::string suite;
  std::size_t instances = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  /// Named tallies, e.g. how often an implication's premise held.
  std::map<std::string, std::size_t> counters;
  std::vector<Counterexample> counterexamples;
  /// FNV-1a over the serialized corpus.
  std::string fingerprint;

  bool ok() const { return failed == 0; }
  std::string to_json() const;
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  /// Parallel workers over disjoint instance ranges; output is independent of it.
  std::size_t workers = 1;
  std::size_t operator_trials = 100;
  /// When nonzero, the dichotomy and split-extension suites also enumerate
  /// every representation of dimension 1..enumerate_rep_dim of each corpus
  /// algebra over F_2/F_3 with dim <= 2.
  std::size_t enumerate_rep_dim = 0;
};

SuiteReport run_suite(const Corpus& corpus, Suite suite, const SuiteOptions& options = {});

/// All subspaces of F_p^n (n small) that are subalgebras for the given algebra.
std::vector<Subspace> finite_subalgebras(const DiassociativeAlgebra& algebra);

/// FNV-1a 64-bit, hex.
std::string fingerprint(std::string_view bytes);

}  // namespace dialg
