#include "dialg/io.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace dialg {

namespace {

using nlohmann::json;

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError(path.string() + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::size_t line_of(std::string_view text, std::size_t byte) {
  const std::size_t end = std::min(byte, text.size());
  std::size_t line = 1;
  for (std::size_t i = 0; i < end; ++i) line += text[i] == '\n' ? 1 : 0;
  return line;
}

json parse_json(std::string_view text, std::string_view origin) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::string reason = e.what();
    if (const auto pos = reason.find("syntax error"); pos != std::string::npos) reason = reason.substr(pos);
    throw FormatError(std::string(origin) + ":" + std::to_string(line_of(text, e.byte)) + ": " + reason);
  }
}

[[noreturn]] void fail(std::string_view origin, const std::string& where, const std::string& what) {
  throw FormatError(std::string(origin) + ": " + where + ": " + what);
}

std::size_t read_count(const json& doc, const char* key, std::string_view origin) {
  if (!doc.contains(key)) fail(origin, key, "missing");
  const json& v = doc.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0) fail(origin, key, "expected a non-negative integer");
  return v.get<std::size_t>();
}

FieldSpec read_field(const json& doc, std::string_view origin) {
  std::string text;
  if (doc.contains("field")) {
    if (!doc.at("field").is_string()) fail(origin, "field", "expected a string such as \"Q\" or \"F2\"");
    text = doc.at("field").get<std::string>();
  } else if (const char* fallback = std::getenv(kDefaultFieldVariable); fallback != nullptr && *fallback != '\0') {
    text = fallback;
  } else {
    fail(origin, "field", std::string("missing and ") + kDefaultFieldVariable + " is not set");
  }
  try {
    return FieldSpec::parse(text);
  } catch (const UsageError& e) {
    fail(origin, "field", e.what());
  }
}

std::vector<std::string> read_names(const json& doc, const char* key, std::size_t count,
                                    std::string_view origin) {
  if (!doc.contains(key)) return {};
  const json& list = doc.at(key);
  if (!list.is_array() || list.size() != count) {
    fail(origin, key, "expected a list of " + std::to_string(count) + " names");
  }
  std::vector<std::string> names;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string where = std::string(key) + "[" + std::to_string(i) + "]";
    if (!list[i].is_string() || list[i].get<std::string>().empty()) fail(origin, where, "expected a non-empty string");
    names.push_back(list[i].get<std::string>());
    if (!seen.insert(names.back()).second) fail(origin, where, "duplicate name \"" + names.back() + "\"");
  }
  return names;
}

// Sparse [a, b, c, "coef"] entries, 1-based, into a tensor with the given extents.
Tensor3 read_entries(const json& doc, const char* key, FieldSpec field, std::array<std::size_t, 3> extents,
                     std::string_view origin) {
  Tensor3 out(field, extents[0], extents[1], extents[2]);
  if (!doc.contains(key)) fail(origin, key, "missing");
  const json& list = doc.at(key);
  if (!list.is_array()) fail(origin, key, "expected a list of [i, j, k, \"coefficient\"] entries");
  std::set<std::array<std::size_t, 3>> seen;
  for (std::size_t n = 0; n < list.size(); ++n) {
    const std::string where = std::string(key) + "[" + std::to_string(n) + "]";
    const json& e = list[n];
    if (!e.is_array() || e.size() != 4) fail(origin, where, "expected [i, j, k, \"coefficient\"]");
    std::array<std::size_t, 3> idx{};
    for (std::size_t a = 0; a < 3; ++a) {
      if (!e[a].is_number_integer()) fail(origin, where, "indices must be integers");
      const long long v = e[a].get<long long>();
      if (v < 1 || static_cast<std::size_t>(v) > extents[a]) {
        fail(origin, where, "index " + std::to_string(v) + " outside [1, " + std::to_string(extents[a]) + "]");
      }
      idx[a] = static_cast<std::size_t>(v - 1);
    }
    if (!e[3].is_string()) fail(origin, where, "coefficient must be a string");
    if (!seen.insert(idx).second) fail(origin, where, "duplicate entry");
    try {
      out.at(idx[0], idx[1], idx[2]) = Scalar::parse(field, e[3].get<std::string>());
    } catch (const UsageError& err) {
      fail(origin, where, err.what());
    }
  }
  return out;
}

std::string entries_text(const Tensor3& t, const std::string& indent) {
  std::vector<std::string> rows;
  const auto ext = t.extents();
  for (std::size_t a = 0; a < ext[0]; ++a) {
    for (std::size_t b = 0; b < ext[1]; ++b) {
      for (std::size_t c = 0; c < ext[2]; ++c) {
        const Scalar& s = t(a, b, c);
        if (s.is_zero()) continue;
        rows.push_back(indent + "  [" + std::to_string(a + 1) + ", " + std::to_string(b + 1) + ", " +
                       std::to_string(c + 1) + ", " + json(s.to_string()).dump() + "]");
      }
    }
  }
  if (rows.empty()) return "[]";
  std::string out = "[\n";
  for (std::size_t i = 0; i < rows.size(); ++i) out += rows[i] + (i + 1 < rows.size() ? ",\n" : "\n");
  return out + indent + "]";
}

std::string names_text(const std::vector<std::string>& names) {
  return json(names).dump();
}

std::string algebra_text(const DiassociativeAlgebra& algebra, const std::string& indent) {
  const std::string in = indent + "  ";
  std::string out = "{\n";
  out += in + "\"field\": " + json(algebra.field().name()).dump() + ",\n";
  out += in + "\"dim\": " + std::to_string(algebra.dim()) + ",\n";
  out += in + "\"basis\": " + names_text(algebra.basis_names()) + ",\n";
  out += in + "\"left\": " + entries_text(algebra.tensor(Op::Left), in) + ",\n";
  out += in + "\"right\": " + entries_text(algebra.tensor(Op::Right), in) + "\n";
  return out + indent + "}";
}

DiassociativeAlgebra algebra_from_json(const json& doc, std::string_view origin) {
  if (!doc.is_object()) fail(origin, "document", "expected a JSON object");
  const FieldSpec field = read_field(doc, origin);
  const std::size_t dim = read_count(doc, "dim", origin);
  auto names = read_names(doc, "basis", dim, origin);
  Tensor3 left = read_entries(doc, "left", field, {dim, dim, dim}, origin);
  Tensor3 right = read_entries(doc, "right", field, {dim, dim, dim}, origin);
  return DiassociativeAlgebra(field, dim, std::move(left), std::move(right), std::move(names));
}

}  // namespace

std::string write_algebra(const DiassociativeAlgebra& algebra) { return algebra_text(algebra, "") + "\n"; }

DiassociativeAlgebra parse_algebra(std::string_view text, std::string_view origin) {
  return algebra_from_json(parse_json(text, origin), origin);
}

DiassociativeAlgebra load_algebra(const std::filesystem::path& path) {
  return parse_algebra(read_file(path), path.string());
}

void save_algebra(const DiassociativeAlgebra& algebra, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError(path.string() + ": cannot write file");
  out << write_algebra(algebra);
  if (!out) throw FormatError(path.string() + ": write failed");
}

std::string write_representation(const Representation& rep) {
  std::string out = "{\n";
  out += "  \"algebra\": " + algebra_text(rep.algebra(), "  ") + ",\n";
  out += "  \"dimV\": " + std::to_string(rep.dim_v()) + ",\n";
  out += "  \"basisV\": " + names_text(rep.v_names()) + ",\n";
  out += "  \"S_left\": " + entries_text(rep.tensor(ActionSide::S, Op::Left), "  ") + ",\n";
  out += "  \"S_right\": " + entries_text(rep.tensor(ActionSide::S, Op::Right), "  ") + ",\n";
  out += "  \"T_left\": " + entries_text(rep.tensor(ActionSide::T, Op::Left), "  ") + ",\n";
  out += "  \"T_right\": " + entries_text(rep.tensor(ActionSide::T, Op::Right), "  ") + "\n";
  return out + "}\n";
}

Representation parse_representation(std::string_view text, const std::filesystem::path& base_dir,
                                     std::string_view origin) {
  const json doc = parse_json(text, origin);
  if (!doc.is_object()) fail(origin, "document", "expected a JSON object");
  if (!doc.contains("algebra")) fail(origin, "algebra", "missing");
  DiassociativeAlgebra algebra = [&] {
    const json& a = doc.at("algebra");
    if (a.is_string()) return load_algebra(base_dir / a.get<std::string>());
    if (a.is_object()) return algebra_from_json(a, std::string(origin) + ": algebra");
    fail(origin, "algebra", "expected a path or an inline algebra object");
  }();
  algebra = verify(std::move(algebra));
  const std::size_t n = algebra.dim();
  const std::size_t m = read_count(doc, "dimV", origin);
  const FieldSpec f = algebra.field();
  auto names = read_names(doc, "basisV", m, origin);
  Tensor3 sl = read_entries(doc, "S_left", f, {m, n, m}, origin);
  Tensor3 sr = read_entries(doc, "S_right", f, {m, n, m}, origin);
  Tensor3 tl = read_entries(doc, "T_left", f, {n, m, m}, origin);
  Tensor3 tr = read_entries(doc, "T_right", f, {n, m, m}, origin);
  return Representation(std::move(algebra), m, std::move(sl), std::move(sr), std::move(tl), std::move(tr),
                        std::move(names));
}

Representation load_representation(const std::filesystem::path& path) {
  return parse_representation(read_file(path), path.parent_path(), path.string());
}

}  // namespace dialg
