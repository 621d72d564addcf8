#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dialg/errors.hpp"

namespace dialg {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// The base field: the rationals or a prime field F_p with p < 2^16.
class FieldSpec {
 public:
  enum class Kind : std::uint8_t { Rationals, Prime };

  static FieldSpec rationals() { return FieldSpec(Kind::Rationals, 0); }
  /// Throws UsageError unless p is a prime below 2^16.
  static FieldSpec prime(std::uint32_t p);
  /// Parses "Q" or "F<p>" (e.g. "F2", "F65521").
  static FieldSpec parse(std::string_view text);

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::Rationals; }
  bool is_finite() const { return kind_ == Kind::Prime; }
  /// 0 for the rationals.
  std::uint32_t characteristic() const { return p_; }
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}
  Kind kind_;
  std::uint32_t p_;
};

bool is_prime(std::uint32_t n);

/// An exact field element. Fractions are kept in lowest terms with positive
/// denominator; residues are kept in [0, p).
class Scalar {
 public:
  static Scalar zero(FieldSpec field);
  static Scalar one(FieldSpec field);
  static Scalar from_int(FieldSpec field, long long value);
  static Scalar from_rational(FieldSpec field, const Rational& value);
  /// Accepts "a", "-a", "a/b" over Q (reduced on input); a decimal residue in
  /// [0, p) over F_p. Throws UsageError on malformed text.
  static Scalar parse(FieldSpec field, std::string_view text);

  FieldSpec field() const;
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& rhs) const;
  Scalar operator-(const Scalar& rhs) const;
  Scalar operator*(const Scalar& rhs) const;
  Scalar operator/(const Scalar& rhs) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs) { return *this = *this + rhs; }
  Scalar& operator-=(const Scalar& rhs) { return *this = *this - rhs; }
  Scalar& operator*=(const Scalar& rhs) { return *this = *this * rhs; }
  /// Throws std::domain_error on zero.
  Scalar inverse() const;

  /// Canonical text: "p/q" or "p" over Q, the residue over F_p.
  std::string to_string() const;

  /// Null over F_p.
  const Rational* rational() const { return std::get_if<Rational>(&value_); }
  /// The residue over F_p; throws UsageError over Q.
  std::uint32_t residue() const;

  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  struct Residue {
    std::uint16_t value;
    std::uint16_t modulus;
    friend bool operator==(const Residue&, const Residue&) = default;
  };

  explicit Scalar(Rational q) : value_(std::move(q)) {}
  explicit Scalar(Residue r) : value_(r) {}
  void require_same_field(const Scalar& rhs) const;

  std::variant<Rational, Residue> value_;
};

using Vector = std::vector<Scalar>;

Vector zero_vector(FieldSpec field, std::size_t n);
Vector unit_vector(FieldSpec field, std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& s, const Vector& v);
/// y += a * x
void axpy(Vector& y, const Scalar& a, const Vector& x);
std::string to_string(const Vector& v);

}  // namespace dialg
