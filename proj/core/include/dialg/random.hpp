#pragma once

#include <cstdint>
#include <random>

#include "dialg/field.hpp"

namespace dialg {

/// Seeded generator with a platform-independent output mapping (no
/// std::uniform_*_distribution, whose results are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform-ish integer in [lo, hi].
  long long range(long long lo, long long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long long>(engine_() % span);
  }
  bool chance(unsigned percent) { return engine_() % 100 < percent; }

  /// Over Q: an integer in [-magnitude, magnitude]; over F_p: a uniform residue.
  Scalar scalar(FieldSpec field, long long magnitude = 3) {
    if (field.is_rational()) return Scalar::from_int(field, range(-magnitude, magnitude));
    return Scalar::from_int(field, range(0, field.characteristic() - 1));
  }
  Scalar nonzero_scalar(FieldSpec field, long long magnitude = 3) {
    while (true) {
      Scalar s = scalar(field, magnitude);
      if (!s.is_zero()) return s;
    }
  }
  Vector vector(FieldSpec field, std::size_t n, long long magnitude = 3) {
    Vector v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) v.push_back(scalar(field, magnitude));
    return v;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace dialg
