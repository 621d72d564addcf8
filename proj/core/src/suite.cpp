#include <algorithm>
#include <exception>
#include <functional>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "dialg/genlab.hpp"
#include "dialg/ideals.hpp"
#include "dialg/io.hpp"
#include "dialg/nilpotency.hpp"
#include "dialg/random.hpp"

namespace dialg {

std::string_view suite_name(Suite suite) {
  switch (suite) {
    case Suite::DiasIdeal: return "dias-ideal";
    case Suite::Engel: return "engel";
    case Suite::OneSidedNilpotent: return "one-sided-nilpotent";
    case Suite::CentralQuotient: return "central-quotient";
    case Suite::NilBasis: return "nil-basis";
    case Suite::LeftMultNilpotent: return "left-mult-nilpotent";
    case Suite::NullVector: return "null-vector";
    case Suite::IrreducibleDichotomy: return "irreducible-dichotomy";
    case Suite::NormalizerGrowth: return "normalizer-growth";
    case Suite::SplitExtension: return "split-extension";
  }
  return "?";
}

std::optional<Suite> parse_suite(std::string_view name) {
  for (Suite s : kSuites) {
    if (suite_name(s) == name) return s;
  }
  return std::nullopt;
}

std::string fingerprint(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = kHex[h & 0xF];
  return out;
}

std::string SuiteReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["suite"] = suite;
  doc["instances"] = instances;
  doc["passed"] = passed;
  doc["failed"] = failed;
  doc["counters"] = nlohmann::ordered_json::object();
  for (const auto& [name, value] : counters) doc["counters"][name] = value;
  doc["counterexamples"] = nlohmann::ordered_json::array();
  for (const auto& c : counterexamples) {
    doc["counterexamples"].push_back({{"witness", c.witness}, {"instance", c.instance}});
  }
  doc["fingerprint"] = fingerprint;
  return doc.dump(2) + "\n";
}

std::vector<Subspace> finite_subalgebras(const DiassociativeAlgebra& algebra) {
  const FieldSpec f = algebra.field();
  const std::size_t n = algebra.dim();
  if (!f.is_finite() || n > 4 || f.characteristic() > 7) {
    throw UsageError("subalgebras are only listed over F_p, p <= 7, in dimension <= 4");
  }
  const long long p = f.characteristic();
  std::vector<Subspace> out;
  // Every RREF matrix: choose pivots, then fill the free slots right of each pivot.
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < n; ++c)
      if (mask & (1u << c)) pivots.push_back(c);
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      for (std::size_t c = pivots[r] + 1; c < n; ++c)
        if (!(mask & (1u << c))) slots.emplace_back(r, c);
    std::vector<long long> digits(slots.size(), 0);
    while (true) {
      Matrix m(f, pivots.size(), n);
      for (std::size_t r = 0; r < pivots.size(); ++r) m(r, pivots[r]) = Scalar::one(f);
      for (std::size_t s = 0; s < slots.size(); ++s) m(slots[s].first, slots[s].second) = Scalar::from_int(f, digits[s]);
      Subspace candidate = Subspace::row_space(m);
      if (is_subalgebra(algebra, candidate)) out.push_back(std::move(candidate));
      std::size_t pos = 0;
      while (pos < digits.size() && ++digits[pos] == p) digits[pos++] = 0;
      if (pos == digits.size()) break;
    }
  }
  return out;
}

namespace {

struct Outcome {
  bool pass = true;
  std::map<std::string, std::size_t> counters;
  std::optional<Counterexample> counterexample;

  void count(const std::string& name) { ++counters[name]; }
  void fail(std::string instance, std::string witness) {
    pass = false;
    counterexample = Counterexample{std::move(instance), std::move(witness)};
  }
};

std::string subspace_text(const Subspace& s) {
  if (s.is_zero()) return "0";
  std::string out;
  for (const auto& v : s.basis_vectors()) out += (out.empty() ? "" : " ") + to_string(v);
  return out;
}

std::string vector_list(const std::vector<std::optional<std::size_t>>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    out += (i ? ", " : "") + (xs[i] ? std::to_string(*xs[i]) : std::string("inf"));
  }
  return out + "]";
}

/// Runs `check` on every item across contiguous ranges; outcomes keep item order.
template <class Item>
std::vector<Outcome> run_all(const std::vector<Item>& items, std::size_t workers,
                             const std::function<void(const Item&, std::size_t, Outcome&)>& check) {
  std::vector<Outcome> outcomes(items.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      try {
        check(items[i], i, outcomes[i]);
      } catch (const std::exception& e) {
        outcomes[i].fail("", std::string("exception: ") + e.what());
      }
    }
  };
  workers = std::max<std::size_t>(1, std::min(workers, items.size()));
  if (workers == 1) {
    work(0, items.size());
    return outcomes;
  }
  std::vector<std::thread> threads;
  const std::size_t chunk = (items.size() + workers - 1) / workers;
  for (std::size_t begin = 0; begin < items.size(); begin += chunk) {
    threads.emplace_back(work, begin, std::min(items.size(), begin + chunk));
  }
  for (auto& t : threads) t.join();
  return outcomes;
}

std::uint64_t instance_seed(const SuiteOptions& options, std::size_t index) {
  return options.seed * 0x9E3779B97F4A7C15ull + index;
}

// ---- algebra suites ----

void check_dias_ideal(const DiassociativeAlgebra& d, Outcome& out) {
  const Subspace dias = dias_subspace(d);
  const IdealReport report = is_ideal(d, dias);
  if (!report.is_ideal || !report.is_abelian) {
    out.fail(write_algebra(d), std::string(!report.is_ideal ? "not an ideal" : "not abelian") +
                                   ", Dias = " + subspace_text(dias));
    return;
  }
  if (!is_associative_dias(quotient(d, dias).algebra)) {
    out.fail(write_algebra(d), "quotient by Dias = " + subspace_text(dias) + " is not associative");
    return;
  }
  out.count(dias.is_zero() ? "dias_zero" : "dias_nonzero");
}

void check_engel(const DiassociativeAlgebra& d, Outcome& out) {
  const EngelEvidence engel = engel_criterion(d);
  const SeriesCertificate series = dias_series(d);
  if (engel.nilpotent != series.nilpotent) {
    out.fail(write_algebra(d), "engel says " + std::string(engel.nilpotent ? "nilpotent" : "not nilpotent") +
                                   " with indices " + vector_list(engel.basis_indices) + ", series says " +
                                   (series.nilpotent ? "nilpotent" : "not nilpotent"));
    return;
  }
  out.count(series.nilpotent ? "nilpotent" : "not_nilpotent");
}

void check_one_sided(const DiassociativeAlgebra& d, Outcome& out) {
  const bool nilpotent = dias_series(d).nilpotent;
  for (Op op : kOps) {
    if (!assoc_powers(d, op).nilpotent) continue;
    const std::string tag = op == Op::Left ? "left" : "right";
    out.count("premise_" + tag);
    if (!nilpotent) {
      out.fail(write_algebra(d), "(D," + std::string(symbol(op)) + ") is nilpotent but D is not");
      return;
    }
  }
}

void check_central_quotient(const DiassociativeAlgebra& d, Outcome& out) {
  const Subspace ann = annihilator(d);
  if (!dias_series(quotient(d, ann).algebra).nilpotent) return;
  out.count("premise");
  if (!dias_series(d).nilpotent) {
    out.fail(write_algebra(d), "D/Ann(D) is nilpotent but D is not, Ann = " + subspace_text(ann));
  }
}

void check_nil_basis(const DiassociativeAlgebra& d, Outcome& out) {
  if (!is_associative_dias(d)) {
    out.count("skipped_not_associative");
    return;
  }
  for (std::size_t i = 0; i < d.dim(); ++i) {
    if (!element_nilpotency_index(d, unit_vector(d.field(), d.dim(), i), Op::Left)) return;
  }
  out.count("premise");
  if (!assoc_powers(d, Op::Left).nilpotent) out.fail(write_algebra(d), "every basis element is nilpotent but D is not");
}

void check_left_mult(const DiassociativeAlgebra& d, std::uint64_t seed, Outcome& out) {
  if (!is_associative_dias(d)) {
    out.count("skipped_not_associative");
    return;
  }
  Rng rng(seed);
  std::vector<Vector> elements;
  for (std::size_t i = 0; i < d.dim(); ++i) elements.push_back(unit_vector(d.field(), d.dim(), i));
  for (int t = 0; t < 8; ++t) elements.push_back(rng.vector(d.field(), d.dim(), 2));
  for (const Vector& x : elements) {
    const auto index = element_nilpotency_index(d, x, Op::Left);
    if (!index) continue;
    out.count("premise");
    const auto op_index = nilpotency_index(op_matrix(d, x, Side::LeftMult, Op::Left));
    if (!op_index || *op_index > *index) {
      out.fail(write_algebra(d), "x = " + to_string(x) + " has index " + std::to_string(*index) +
                                     " but λ_x has index " + (op_index ? std::to_string(*op_index) : "inf"));
      return;
    }
  }
}

void check_null_vector(const DiassociativeAlgebra& d, const SuiteOptions& options, std::uint64_t seed,
                       Outcome& out) {
  if (d.dim() == 0 || !dias_series(d).nilpotent) return;
  out.count("premise");
  if (common_null_space(regular_rep(d)).is_zero()) {
    out.fail(write_algebra(d), "nilpotent but the regular representation has no common null vector");
    return;
  }
  const OperatorSampleReport sample = operator_nilpotency_sample(d, options.operator_trials, seed);
  out.counters["operators_checked"] += sample.operators_checked;
  if (!sample.all_nilpotent()) {
    const auto& c = *sample.counterexample;
    out.fail(write_algebra(d), std::string(c.side == Side::LeftMult ? "λ" : "ρ") + std::string(symbol(c.op)) +
                                   " of " + to_string(c.element) + " is not nilpotent");
  }
}

void check_normalizer(const DiassociativeAlgebra& d, std::uint64_t seed, Outcome& out) {
  if (!is_associative_dias(d) || !assoc_powers(d, Op::Left).nilpotent) {
    out.count("skipped");
    return;
  }
  std::vector<Subspace> candidates;
  if (d.field().is_finite() && d.dim() <= 4 && d.field().characteristic() <= 7) {
    candidates = finite_subalgebras(d);
  } else {
    const std::size_t n = d.dim();
    Rng rng(seed);
    candidates.push_back(Subspace::zero(d.field(), n));
    for (std::size_t i = 0; i < n; ++i) {
      candidates.push_back(subalgebra_closure(d, {unit_vector(d.field(), n, i)}));
      for (std::size_t j = i + 1; j < n; ++j) {
        candidates.push_back(subalgebra_closure(d, {unit_vector(d.field(), n, i), unit_vector(d.field(), n, j)}));
      }
    }
    for (int t = 0; t < 8; ++t) candidates.push_back(subalgebra_closure(d, {rng.vector(d.field(), n, 2)}));
  }
  for (const Subspace& k : candidates) {
    if (k.is_full()) continue;
    out.count("subalgebras");
    const Subspace norm = normalizer(d, k);
    if (!norm.contains(k) || norm.dim() <= k.dim()) {
      out.fail(write_algebra(d), "K = " + subspace_text(k) + " has normalizer " + subspace_text(norm));
      return;
    }
  }
}

// ---- representation suites ----

void check_dichotomy(const Representation& rep, Outcome& out) {
  const IrreducibilityResult ir = is_irreducible(rep);
  if (ir.kind == IrreducibilityResult::Kind::Reducible) {
    out.count("reducible");
    return;
  }
  if (ir.kind == IrreducibilityResult::Kind::Unknown) {
    out.count("undecided");
    return;
  }
  out.count("irreducible");
  const DichotomyReport report = dichotomy_check(rep);
  if (report.violation()) {
    out.fail(write_representation(rep), std::string("irreducible, quotient ") +
                                            (report.quotient_associative ? "associative" : "not associative") +
                                            ", branch " + report.branch());
    return;
  }
  out.count("branch " + report.branch());
}

void check_split(const Representation& rep, Outcome& out) {
  const bool rep_ok = check_rep_identities(rep).empty();
  const bool ext_ok = check_axioms(split_extension_unchecked(rep)).empty();
  out.count(rep_ok ? "valid_rep" : "invalid_rep");
  if (rep_ok != ext_ok) {
    out.fail(write_representation(rep), std::string("representation identities ") + (rep_ok ? "hold" : "fail") +
                                            " but the split extension axioms " + (ext_ok ? "hold" : "fail"));
  }
}

/// A few single-constant mutations per representation, seeded by position.
std::vector<Representation> with_mutations(const std::vector<Representation>& reps, std::uint64_t seed) {
  std::vector<Representation> out;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const Representation& rep = reps[i];
    out.push_back(rep);
    const std::size_t n = rep.algebra().dim();
    const std::size_t m = rep.dim_v();
    if (n == 0 || m == 0) continue;
    Rng rng(seed ^ (0xD1B54A32D192ED03ull * (i + 1)));
    for (int k = 0; k < 2; ++k) {
      const ActionSide side = rng.chance(50) ? ActionSide::S : ActionSide::T;
      const Op op = rng.chance(50) ? Op::Left : Op::Right;
      const std::size_t a = static_cast<std::size_t>(rng.range(0, static_cast<long long>(side == ActionSide::S ? m : n) - 1));
      const std::size_t b = static_cast<std::size_t>(rng.range(0, static_cast<long long>(side == ActionSide::S ? n : m) - 1));
      const std::size_t c = static_cast<std::size_t>(rng.range(0, static_cast<long long>(m) - 1));
      const Scalar value = rep.tensor(side, op)(a, b, c) + rng.nonzero_scalar(rep.field(), 2);
      out.push_back(mutate(rep, side, op, a, b, c, value));
    }
  }
  return out;
}

std::vector<Representation> enumerated_reps(const Corpus& corpus, std::size_t max_dim) {
  std::vector<Representation> out;
  for (const auto& d : corpus.algebras) {
    const FieldSpec f = d.field();
    if (!f.is_finite() || f.characteristic() > 3 || d.dim() > 2) continue;
    for (std::size_t m = 1; m <= max_dim; ++m) {
      auto reps = enumerate_reps(d, m);
      out.insert(out.end(), std::make_move_iterator(reps.begin()), std::make_move_iterator(reps.end()));
    }
  }
  return out;
}

}  // namespace

SuiteReport run_suite(const Corpus& corpus, Suite suite, const SuiteOptions& options) {
  for (const auto& d : corpus.algebras) require_verified(d, "run_suite");
  for (const auto& r : corpus.reps) require_verified(r.algebra(), "run_suite");

  SuiteReport report;
  report.suite = std::string(suite_name(suite));
  std::vector<Outcome> outcomes;
  std::string corpus_bytes;

  const bool rep_suite = suite == Suite::IrreducibleDichotomy || suite == Suite::SplitExtension;
  if (rep_suite) {
    std::vector<Representation> reps = corpus.reps;
    if (options.enumerate_rep_dim > 0) {
      auto more = enumerated_reps(corpus, options.enumerate_rep_dim);
      reps.insert(reps.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
    }
    if (suite == Suite::SplitExtension) reps = with_mutations(reps, options.seed);
    for (const auto& r : reps) corpus_bytes += write_representation(r);
    outcomes = run_all<Representation>(reps, options.workers, [&](const Representation& rep, std::size_t, Outcome& out) {
      if (suite == Suite::IrreducibleDichotomy) {
        if (!rep.verified()) {
          out.count("skipped_unverified");
          return;
        }
        check_dichotomy(rep, out);
      } else {
        check_split(rep, out);
      }
    });
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      if (outcomes[i].counterexample && outcomes[i].counterexample->instance.empty()) {
        outcomes[i].counterexample->instance = write_representation(reps[i]);
      }
    }
  } else {
    for (const auto& d : corpus.algebras) corpus_bytes += write_algebra(d);
    outcomes = run_all<DiassociativeAlgebra>(
        corpus.algebras, options.workers, [&](const DiassociativeAlgebra& d, std::size_t i, Outcome& out) {
          const std::uint64_t seed = instance_seed(options, i);
          switch (suite) {
            case Suite::DiasIdeal: check_dias_ideal(d, out); break;
            case Suite::Engel: check_engel(d, out); break;
            case Suite::OneSidedNilpotent: check_one_sided(d, out); break;
            case Suite::CentralQuotient: check_central_quotient(d, out); break;
            case Suite::NilBasis: check_nil_basis(d, out); break;
            case Suite::LeftMultNilpotent: check_left_mult(d, seed, out); break;
            case Suite::NullVector: check_null_vector(d, options, seed, out); break;
            case Suite::NormalizerGrowth: check_normalizer(d, seed, out); break;
            default: break;
          }
        });
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      if (outcomes[i].counterexample && outcomes[i].counterexample->instance.empty()) {
        outcomes[i].counterexample->instance = write_algebra(corpus.algebras[i]);
      }
    }
  }

  report.instances = outcomes.size();
  for (auto& o : outcomes) {
    (o.pass ? report.passed : report.failed) += 1;
    for (const auto& [name, value] : o.counters) report.counters[name] += value;
    if (o.counterexample) report.counterexamples.push_back(std::move(*o.counterexample));
  }
  report.fingerprint = fingerprint(corpus_bytes);
  return report;
}

}  // namespace dialg
