#include "dialg/field.hpp"

#include <charconv>
#include <stdexcept>

namespace dialg {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (p >= (1u << 16) || !is_prime(p)) {
    throw UsageError("prime field requires a prime p < 65536, got " + std::to_string(p));
  }
  return FieldSpec(Kind::Prime, p);
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text.size() >= 2 && (text[0] == 'F' || text[0] == 'f')) {
    std::uint32_t p = 0;
    auto [ptr, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), p);
    if (ec == std::errc() && ptr == text.data() + text.size()) return prime(p);
  }
  throw UsageError("unknown field '" + std::string(text) + "' (expected Q or F<p>)");
}

std::string FieldSpec::name() const {
  return is_rational() ? std::string("Q") : "F" + std::to_string(p_);
}

Scalar Scalar::zero(FieldSpec field) { return from_int(field, 0); }
Scalar Scalar::one(FieldSpec field) { return from_int(field, 1); }

Scalar Scalar::from_int(FieldSpec field, long long value) {
  if (field.is_rational()) return Scalar(Rational(value));
  const long long p = field.characteristic();
  long long r = value % p;
  if (r < 0) r += p;
  return Scalar(Residue{static_cast<std::uint16_t>(r), static_cast<std::uint16_t>(p)});
}

Scalar Scalar::from_rational(FieldSpec field, const Rational& value) {
  if (field.is_rational()) return Scalar(value);
  const Integer p = field.characteristic();
  Integer num = boost::multiprecision::numerator(value) % p;
  Integer den = boost::multiprecision::denominator(value) % p;
  if (num < 0) num += p;
  if (den == 0) throw std::domain_error("denominator vanishes modulo " + field.name());
  return from_int(field, num.convert_to<long long>()) /
         from_int(field, den.convert_to<long long>());
}

Scalar Scalar::parse(FieldSpec field, std::string_view text) {
  auto bad = [&]() {
    return UsageError("malformed coefficient '" + std::string(text) + "' for field " +
                      field.name());
  };
  if (text.empty()) throw bad();
  auto is_integer = [](std::string_view s, bool allow_sign) {
    if (!s.empty() && allow_sign && s[0] == '-') s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
      if (c < '0' || c > '9') return false;
    }
    return true;
  };
  if (field.is_rational()) {
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                           : text.substr(slash + 1);
    if (!is_integer(num, true) || !is_integer(den, false)) throw bad();
    Integer n{std::string(num)};
    Integer d{std::string(den)};
    if (d == 0) throw bad();
    return Scalar(Rational(n, d));
  }
  if (!is_integer(text, false) || text.size() > 6) throw bad();
  std::uint32_t r = 0;
  std::from_chars(text.data(), text.data() + text.size(), r);
  if (r >= field.characteristic()) throw bad();
  return from_int(field, r);
}

FieldSpec Scalar::field() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return FieldSpec::prime(r->modulus);
  return FieldSpec::rationals();
}

bool Scalar::is_zero() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 0;
  return std::get<Rational>(value_) == 0;
}

bool Scalar::is_one() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 1;
  return std::get<Rational>(value_) == 1;
}

void Scalar::require_same_field(const Scalar& rhs) const {
  if (value_.index() != rhs.value_.index()) {
    throw UsageError("scalar field mismatch");
  }
  if (const auto* r = std::get_if<Residue>(&value_)) {
    if (r->modulus != std::get<Residue>(rhs.value_).modulus) {
      throw UsageError("scalar field mismatch");
    }
  }
}

Scalar Scalar::operator+(const Scalar& rhs) const {
  require_same_field(rhs);
  if (const auto* a = std::get_if<Residue>(&value_)) {
    const auto& b = std::get<Residue>(rhs.value_);
    std::uint32_t s = std::uint32_t(a->value) + b.value;
    if (s >= a->modulus) s -= a->modulus;
    return Scalar(Residue{static_cast<std::uint16_t>(s), a->modulus});
  }
  return Scalar(Rational(std::get<Rational>(value_) + std::get<Rational>(rhs.value_)));
}

Scalar Scalar::operator-() const {
  if (const auto* a = std::get_if<Residue>(&value_)) {
    const std::uint16_t v = a->value == 0 ? 0 : static_cast<std::uint16_t>(a->modulus - a->value);
    return Scalar(Residue{v, a->modulus});
  }
  return Scalar(Rational(-std::get<Rational>(value_)));
}

Scalar Scalar::operator-(const Scalar& rhs) const { return *this + (-rhs); }

Scalar Scalar::operator*(const Scalar& rhs) const {
  require_same_field(rhs);
  if (const auto* a = std::get_if<Residue>(&value_)) {
    const auto& b = std::get<Residue>(rhs.value_);
    const std::uint32_t m = (std::uint32_t(a->value) * b.value) % a->modulus;
    return Scalar(Residue{static_cast<std::uint16_t>(m), a->modulus});
  }
  return Scalar(Rational(std::get<Rational>(value_) * std::get<Rational>(rhs.value_)));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (const auto* a = std::get_if<Residue>(&value_)) {
    // Extended Euclid on (value, p).
    long long t = 0, new_t = 1, r = a->modulus, new_r = a->value;
    while (new_r != 0) {
      const long long q = r / new_r;
      t = std::exchange(new_t, t - q * new_t);
      r = std::exchange(new_r, r - q * new_r);
    }
    if (t < 0) t += a->modulus;
    return Scalar(Residue{static_cast<std::uint16_t>(t), a->modulus});
  }
  return Scalar(Rational(1 / std::get<Rational>(value_)));
}

Scalar Scalar::operator/(const Scalar& rhs) const {
  require_same_field(rhs);
  return *this * rhs.inverse();
}

std::string Scalar::to_string() const {
  if (const auto* a = std::get_if<Residue>(&value_)) return std::to_string(a->value);
  return std::get<Rational>(value_).str();
}

std::uint32_t Scalar::residue() const {
  if (const auto* a = std::get_if<Residue>(&value_)) return a->value;
  throw UsageError("residue() called on a rational scalar");
}

bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }

Vector zero_vector(FieldSpec field, std::size_t n) { return Vector(n, Scalar::zero(field)); }

Vector unit_vector(FieldSpec field, std::size_t n, std::size_t i) {
  Vector v = zero_vector(field, n);
  v.at(i) = Scalar::one(field);
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& s : v) {
    if (!s.is_zero()) return false;
  }
  return true;
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw UsageError("vector length mismatch");
  Vector out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] + b[i]);
  return out;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw UsageError("vector length mismatch");
  Vector out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] - b[i]);
  return out;
}

Vector operator*(const Scalar& s, const Vector& v) {
  Vector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(s * x);
  return out;
}

void axpy(Vector& y, const Scalar& a, const Vector& x) {
  if (y.size() != x.size()) throw UsageError("vector length mismatch");
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (!x[i].is_zero()) y[i] += a * x[i];
  }
}

std::string to_string(const Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].to_string();
  }
  return out + ")";
}

}  // namespace dialg
