#include "dialg/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "dialg/genlab.hpp"
#include "dialg/ideals.hpp"
#include "dialg/io.hpp"
#include "dialg/nilpotency.hpp"

namespace dialg::cli {

namespace fs = std::filesystem;

namespace {

std::string combination(const Vector& v, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    const bool negative = v[i].rational() != nullptr && *v[i].rational() < 0;
    const Scalar magnitude = negative ? -v[i] : v[i];
    const std::string term = magnitude.is_one() ? names[i] : magnitude.to_string() + "*" + names[i];
    if (out.empty()) {
      out = (negative ? "-" : "") + term;
    } else {
      out += (negative ? " - " : " + ") + term;
    }
  }
  return out.empty() ? "0" : out;
}

void print_subspace(std::ostream& out, const Subspace& s, const std::vector<std::string>& names) {
  out << "dim: " << s.dim() << "\n";
  out << "basis: ";
  if (s.is_zero()) out << "0";
  const auto basis = s.basis_vectors();
  for (std::size_t i = 0; i < basis.size(); ++i) out << (i ? "; " : "") << combination(basis[i], names);
  out << "\n";
}

std::string triple_text(const std::array<std::size_t, 3>& t, const std::array<const std::vector<std::string>*, 3>& names) {
  return "(" + (*names[0])[t[0]] + ", " + (*names[1])[t[1]] + ", " + (*names[2])[t[2]] + ")";
}

void print_violations(std::ostream& out, const DiassociativeAlgebra& d, const std::vector<AxiomViolation>& vs) {
  const auto& n = d.basis_names();
  for (const auto& v : vs) {
    const auto& ax = axiom(v.axiom_id);
    out << "axiom " << ax.id << " " << ax.text << " fails at " << triple_text(v.triple, {&n, &n, &n})
        << ": lhs = " << combination(v.lhs, n) << ", rhs = " << combination(v.rhs, n) << "\n";
  }
}

void print_violations(std::ostream& out, const Representation& rep, const std::vector<RepViolation>& vs) {
  const auto& n = rep.algebra().basis_names();
  const auto& vn = rep.v_names();
  for (const auto& v : vs) {
    const auto& ax = axiom(v.axiom_id);
    std::array<const std::vector<std::string>*, 3> names{&n, &n, &n};
    names[static_cast<std::size_t>(v.v_position - 1)] = &vn;
    out << "axiom " << ax.id << " " << ax.text << " with the module vector in slot " << v.v_position
        << " fails at " << triple_text(v.triple, names) << ": lhs = " << combination(v.lhs, vn)
        << ", rhs = " << combination(v.rhs, vn) << "\n";
  }
}

DiassociativeAlgebra load_verified(const std::string& path) { return verify(load_algebra(path)); }

/// A representation file, or "regular:ALGEBRA" for the regular representation.
Representation load_rep_source(const std::string& source) {
  static constexpr std::string_view kRegular = "regular:";
  if (source.rfind(kRegular, 0) == 0) return regular_rep(load_verified(source.substr(kRegular.size())));
  return load_representation(source);
}

/// A generator is a basis name or comma-separated coordinates.
Vector parse_generator(const DiassociativeAlgebra& d, const std::string& token) {
  const auto& names = d.basis_names();
  if (const auto it = std::find(names.begin(), names.end(), token); it != names.end()) {
    return unit_vector(d.field(), d.dim(), static_cast<std::size_t>(it - names.begin()));
  }
  Vector v;
  std::stringstream in(token);
  std::string part;
  while (std::getline(in, part, ',')) v.push_back(Scalar::parse(d.field(), part));
  if (v.size() != d.dim()) {
    throw UsageError("generator \"" + token + "\" is neither a basis name nor " + std::to_string(d.dim()) +
                     " comma-separated coordinates");
  }
  return v;
}

bool is_rep_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) return false;
  try {
    const auto doc = nlohmann::json::parse(in);
    return doc.is_object() && doc.contains("dimV");
  } catch (const nlohmann::json::exception&) {
    return false;
  }
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError(path.string() + ": cannot write file");
  out << text;
  if (!out) throw FormatError(path.string() + ": write failed");
}

std::string numbered(const std::string& stem, std::size_t i, std::size_t count) {
  std::string digits = std::to_string(i + 1);
  const std::size_t width = std::max<std::size_t>(4, std::to_string(count).size());
  return stem + std::string(width - std::min(width, digits.size()), '0') + digits + ".json";
}

// ---- commands ----

int cmd_verify(const std::string& path, std::ostream& out) {
  if (is_rep_document(path)) {
    const Representation rep = load_representation(path);
    const auto vs = check_rep_identities(rep);
    if (vs.empty()) {
      out << "OK\n";
      return kSuccess;
    }
    print_violations(out, rep, vs);
    return kCheckedFalse;
  }
  const DiassociativeAlgebra d = load_algebra(path);
  const auto vs = check_axioms(d);
  if (vs.empty()) {
    out << "OK\n";
    return kSuccess;
  }
  print_violations(out, d, vs);
  return kCheckedFalse;
}

int cmd_nilpotent(const std::string& path, const std::string& method, bool certificate, std::ostream& out,
                  std::ostream& err) {
  const DiassociativeAlgebra d = load_verified(path);
  const auto& names = d.basis_names();
  const bool use_series = method != "engel";
  const bool use_engel = method != "series";
  std::optional<SeriesCertificate> series;
  std::optional<EngelEvidence> engel;
  if (use_series) series = dias_series(d);
  if (use_engel) engel = engel_criterion(d);
  if (series && engel && series->nilpotent != engel->nilpotent) {
    err << "theorem violation: the series says " << (series->nilpotent ? "nilpotent" : "not nilpotent")
        << " but the left-multiplication test says " << (engel->nilpotent ? "nilpotent" : "not nilpotent") << "\n";
    return kViolation;
  }
  const bool nilpotent = series ? series->nilpotent : engel->nilpotent;
  if (nilpotent) {
    out << "nilpotent";
    if (series) out << ", class " << *series->nilpotency_class;
    out << "\n";
  } else if (engel) {
    out << "not nilpotent, witness " << names[*engel->failing_basis] << "\n";
  } else {
    out << "not nilpotent, series stabilizes at D^" << series->terms.size() - 1 << "\n";
  }
  if (series && engel) out << "methods agree\n";
  if (certificate) {
    if (series) {
      for (std::size_t i = 0; i < series->terms.size(); ++i) {
        out << "D^" << i + 1 << ":";
        const auto basis = series->terms[i].basis_vectors();
        if (basis.empty()) out << " 0";
        for (std::size_t j = 0; j < basis.size(); ++j) out << (j ? "; " : " ") << combination(basis[j], names);
        out << "\n";
      }
    }
    if (engel) {
      for (std::size_t i = 0; i < engel->basis_indices.size(); ++i) {
        const auto& index = engel->basis_indices[i];
        out << "left ⊢-multiplication by " << names[i] << ": "
            << (index ? "nilpotent, index " + std::to_string(*index) : std::string("not nilpotent")) << "\n";
      }
    }
  }
  return nilpotent ? kSuccess : kCheckedFalse;
}

Subspace named_ideal(const DiassociativeAlgebra& d, const std::vector<std::string>& spec) {
  if (spec.size() == 1 && spec[0] == "dias") return dias_subspace(d);
  if (spec.size() == 1 && spec[0] == "annihilator") return annihilator(d);
  std::vector<Vector> gens;
  for (const auto& token : spec) gens.push_back(parse_generator(d, token));
  return ideal_closure(d, gens);
}

int cmd_ideal(const std::string& kind, const std::string& path, const std::vector<std::string>& gens,
              std::ostream& out) {
  const DiassociativeAlgebra d = load_verified(path);
  Subspace result = Subspace::zero(d.field(), d.dim());
  if (kind == "dias" || kind == "annihilator") {
    if (!gens.empty()) throw UsageError("\"" + kind + "\" takes no generators");
    result = named_ideal(d, {kind});
  } else if (kind == "closure") {
    std::vector<Vector> vs;
    for (const auto& g : gens) vs.push_back(parse_generator(d, g));
    result = ideal_closure(d, vs);
  } else {
    throw UsageError("unknown ideal kind \"" + kind + "\" (expected dias, annihilator or closure)");
  }
  print_subspace(out, result, d.basis_names());
  return kSuccess;
}

int cmd_quotient(const std::string& path, const std::vector<std::string>& by, const std::string& out_path,
                 std::ostream& out) {
  const DiassociativeAlgebra d = load_verified(path);
  const QuotientResult q = quotient(d, named_ideal(d, by));
  if (out_path.empty()) {
    out << write_algebra(q.algebra);
  } else {
    save_algebra(q.algebra, out_path);
    out << "dim: " << q.algebra.dim() << "\n";
  }
  return kSuccess;
}

int cmd_rep(const std::string& action, const std::string& source, std::ostream& out, std::ostream& err) {
  if (action == "check") {
    const Representation rep = load_rep_source(source);
    const auto vs = check_rep_identities(rep);
    if (vs.empty()) {
      out << "OK\n";
      return kSuccess;
    }
    print_violations(out, rep, vs);
    return kCheckedFalse;
  }
  const Representation rep = verify(load_rep_source(source));
  if (action == "nullvec") {
    print_subspace(out, common_null_space(rep), rep.v_names());
    return kSuccess;
  }
  if (action == "kernel") {
    print_subspace(out, rep_kernel(rep), rep.algebra().basis_names());
    return kSuccess;
  }
  const IrreducibilityResult ir = is_irreducible(rep);
  const char* kind = ir.kind == IrreducibilityResult::Kind::Irreducible ? "irreducible"
                     : ir.kind == IrreducibilityResult::Kind::Reducible ? "reducible"
                                                                        : "unknown";
  if (action == "irreducible") {
    out << kind << "\n";
    if (ir.witness) {
      out << "invariant subspace:\n";
      print_subspace(out, *ir.witness, rep.v_names());
    }
    return ir.kind == IrreducibilityResult::Kind::Irreducible ? kSuccess : kCheckedFalse;
  }
  if (action == "dichotomy") {
    const DichotomyReport report = dichotomy_report(rep);
    out << "irreducibility: " << kind << "\n";
    out << "quotient associative: " << (report.quotient_associative ? "yes" : "no") << "\n";
    out << "branch: " << report.branch() << "\n";
    if (ir.kind == IrreducibilityResult::Kind::Irreducible && report.violation()) {
      err << "theorem violation: an irreducible representation satisfies neither branch\n";
      return kViolation;
    }
    return kSuccess;
  }
  throw UsageError("unknown rep action \"" + action + "\"");
}

int cmd_enumerate(const std::string& field_text, std::size_t dim, const std::string& out_dir, std::size_t workers,
                  std::ostream& out) {
  const FieldSpec field = FieldSpec::parse(field_text);
  const auto all = enumerate_all(field, dim, workers);
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    const std::string stem = field.name() + "-dim" + std::to_string(dim) + "-";
    for (std::size_t i = 0; i < all.size(); ++i) save_algebra(all[i], fs::path(out_dir) / numbered(stem, i, all.size()));
  }
  out << "count: " << all.size() << "\n";
  return kSuccess;
}

Corpus load_corpus(const std::vector<std::string>& dirs) {
  Corpus corpus;
  for (const auto& dir : dirs) {
    if (!fs::is_directory(dir)) throw FormatError(dir + ": not a directory");
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
      if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      if (is_rep_document(f.string())) {
        corpus.reps.push_back(load_representation(f));
      } else {
        corpus.algebras.push_back(load_verified(f.string()));
      }
    }
  }
  return corpus;
}

int cmd_suite(const std::vector<std::string>& dirs, const std::vector<std::string>& names, const SuiteOptions& options,
              const std::string& report_path, std::ostream& out) {
  std::vector<Suite> suites;
  for (const auto& name : names) {
    if (name == "all") {
      suites.assign(kSuites.begin(), kSuites.end());
      continue;
    }
    const auto s = parse_suite(name);
    if (!s) throw UsageError("unknown suite \"" + name + "\"");
    suites.push_back(*s);
  }
  if (suites.empty()) suites.assign(kSuites.begin(), kSuites.end());
  const Corpus corpus = load_corpus(dirs);
  bool ok = true;
  std::string json = "[\n";
  for (std::size_t i = 0; i < suites.size(); ++i) {
    const SuiteReport report = run_suite(corpus, suites[i], options);
    out << report.suite << ": " << report.instances << " instances, " << report.passed << " passed, "
        << report.failed << " failed\n";
    for (const auto& c : report.counterexamples) out << "  counterexample: " << c.witness << "\n";
    ok = ok && report.ok();
    json += report.to_json();
    if (i + 1 < suites.size()) json.insert(json.size() - 1, ",");
  }
  json += "]\n";
  if (!report_path.empty()) write_text(report_path, json);
  return ok ? kSuccess : kViolation;
}

int cmd_generate(const std::string& mode_text, const std::string& field_text, std::size_t dim, std::uint64_t seed,
                 std::size_t count, const std::string& out_dir, std::ostream& out, std::ostream& err) {
  const auto mode = parse_mode(mode_text);
  if (!mode) throw UsageError("unknown mode \"" + mode_text + "\"");
  const FieldSpec field = FieldSpec::parse(field_text);
  if (out_dir.empty() && count != 1) throw UsageError("--count above 1 needs --out");
  if (!out_dir.empty()) fs::create_directories(out_dir);
  for (std::size_t i = 0; i < count; ++i) {
    DiassociativeAlgebra d = abelian(field, 0);
    try {
      d = generate({field, dim, *mode, seed + i});
    } catch (const GenerationError& e) {
      err << "error: " << e.what() << "; retry with --seed " << e.next_seed() << "\n";
      return kCheckedFalse;
    }
    if (out_dir.empty()) {
      out << write_algebra(d);
    } else {
      save_algebra(d, fs::path(out_dir) / numbered(std::string(mode_name(*mode)) + "-", i, count));
    }
  }
  if (!out_dir.empty()) out << "count: " << count << "\n";
  return kSuccess;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with diassociative algebras", "dialg"};
  app.require_subcommand(1);
  int code = kSuccess;
  std::function<int()> action;

  auto* verify_cmd = app.add_subcommand("verify", "Check the axioms of an algebra or the identities of a representation");
  std::string path;
  verify_cmd->add_option("path", path, "Algebra or representation file")->required();
  verify_cmd->callback([&] { action = [&] { return cmd_verify(path, out); }; });

  auto* nil_cmd = app.add_subcommand("nilpotent", "Decide nilpotency");
  std::string method = "both";
  bool certificate = false;
  nil_cmd->add_option("path", path, "Algebra file")->required();
  nil_cmd->add_option("--method", method, "series, engel or both")->check(CLI::IsMember({"series", "engel", "both"}));
  nil_cmd->add_flag("--certificate", certificate, "Print the evidence");
  nil_cmd->callback([&] { action = [&] { return cmd_nilpotent(path, method, certificate, out, err); }; });

  auto* ideal_cmd = app.add_subcommand("ideal", "Print a canonical basis of an ideal");
  std::string kind;
  std::vector<std::string> gens;
  ideal_cmd->add_option("kind", kind, "dias, annihilator or closure")->required();
  ideal_cmd->add_option("path", path, "Algebra file")->required();
  ideal_cmd->add_option("generators", gens, "Basis names or comma-separated coordinates (closure)");
  ideal_cmd->callback([&] { action = [&] { return cmd_ideal(kind, path, gens, out); }; });

  auto* quot_cmd = app.add_subcommand("quotient", "Quotient by an ideal");
  std::vector<std::string> by;
  std::string out_path;
  quot_cmd->add_option("path", path, "Algebra file")->required();
  quot_cmd->add_option("--by", by, "dias, annihilator, or generators of the ideal")->required();
  quot_cmd->add_option("--out", out_path, "Write the quotient here instead of stdout");
  quot_cmd->callback([&] { action = [&] { return cmd_quotient(path, by, out_path, out); }; });

  auto* rep_cmd = app.add_subcommand("rep", "Representations");
  std::string rep_action;
  rep_cmd->add_option("action", rep_action, "check, nullvec, kernel, irreducible or dichotomy")
      ->required()
      ->check(CLI::IsMember({"check", "nullvec", "kernel", "irreducible", "dichotomy"}));
  rep_cmd->add_option("source", path, "Representation file, or regular:ALGEBRA_FILE")->required();
  rep_cmd->callback([&] { action = [&] { return cmd_rep(rep_action, path, out, err); }; });

  auto* enum_cmd = app.add_subcommand("enumerate", "Every algebra over F2 or F3 in dimension <= 2");
  std::string field_text;
  std::size_t dim = 0;
  std::size_t workers = 1;
  enum_cmd->add_option("--field", field_text, "F2 or F3")->required();
  enum_cmd->add_option("--dim", dim, "0, 1 or 2")->required();
  enum_cmd->add_option("--out", out_path, "Directory for the algebra files");
  enum_cmd->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
  enum_cmd->callback([&] { action = [&] { return cmd_enumerate(field_text, dim, out_path, workers, out); }; });

  auto* suite_cmd = app.add_subcommand("suite", "Run theorem suites over a corpus");
  std::vector<std::string> dirs;
  std::vector<std::string> suite_names;
  SuiteOptions options;
  std::string report_path;
  suite_cmd->add_option("--corpus", dirs, "Corpus directories")->required();
  suite_cmd->add_option("--suite", suite_names, "Suite names, or all (default)");
  suite_cmd->add_option("--workers", options.workers, "Worker threads")->check(CLI::PositiveNumber);
  suite_cmd->add_option("--seed", options.seed, "Seed for sampled checks");
  suite_cmd->add_option("--operator-trials", options.operator_trials, "Random elements per algebra");
  suite_cmd->add_option("--enumerate-reps", options.enumerate_rep_dim,
                        "Also enumerate representations up to this dimension (small finite fields)");
  suite_cmd->add_option("--report", report_path, "Write the JSON report here");
  suite_cmd->callback([&] { action = [&] { return cmd_suite(dirs, suite_names, options, report_path, out); }; });

  auto* gen_cmd = app.add_subcommand("generate", "Generate algebras");
  std::string mode_text;
  std::uint64_t seed = 1;
  std::size_t count = 1;
  gen_cmd->add_option("--mode", mode_text,
                      "abelian, graded-nilpotent, split-extension-tower, associative-triangular or exhaustive")
      ->required();
  gen_cmd->add_option("--field", field_text, "Q or F<p>")->required();
  gen_cmd->add_option("--dim", dim, "Dimension")->required();
  gen_cmd->add_option("--seed", seed, "Seed");
  gen_cmd->add_option("--count", count, "Number of algebras (consecutive seeds)");
  gen_cmd->add_option("--out", out_path, "Directory for the algebra files");
  gen_cmd->callback([&] {
    action = [&] { return cmd_generate(mode_text, field_text, dim, seed, count, out_path, out, err); };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    return action();
  } catch (const InvalidAlgebraError& e) {
    err << "invalid algebra:\n";
    const std::size_t n = e.violations().empty() ? 0 : e.violations().front().lhs.size();
    const FieldSpec f = e.violations().empty() ? FieldSpec::rationals() : e.violations().front().lhs.front().field();
    print_violations(err, abelian(f, n), e.violations());
    return kCheckedFalse;
  } catch (const InvalidRepresentationError& e) {
    err << "invalid representation: " << e.violations().size() << " identity failures\n";
    return kCheckedFalse;
  } catch (const NotAnIdealError& e) {
    err << "error: " << e.what() << "\n";
    return kCheckedFalse;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace dialg::cli
