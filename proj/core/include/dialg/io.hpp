#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "dialg/algebra.hpp"
#include "dialg/representation.hpp"

namespace dialg {

/// Malformed or unreadable input. The message names the origin and either a
/// line or the offending field.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Environment variable consulted when an algebra file omits "field".
inline constexpr const char* kDefaultFieldVariable = "DIALG_DEFAULT_FIELD";

/// Canonical text: entries sorted by (i, j, k), zero entries omitted,
/// coefficients in canonical form. 1-based indices.
std::string write_algebra(const DiassociativeAlgebra& algebra);
/// The result is not verified.
DiassociativeAlgebra parse_algebra(std::string_view text, std::string_view origin = "<input>");
DiassociativeAlgebra load_algebra(const std::filesystem::path& path);
void save_algebra(const DiassociativeAlgebra& algebra, const std::filesystem::path& path);

/// The algebra is written inline.
std::string write_representation(const Representation& rep);
/// "algebra" may be an inline object or a path, resolved against base_dir.
/// The algebra is verified (InvalidAlgebraError otherwise); the
/// representation is not.
Representation parse_representation(std::string_view text, const std::filesystem::path& base_dir,
                                     std::string_view origin = "<input>");
Representation load_representation(const std::filesystem::path& path);

}  // namespace dialg
