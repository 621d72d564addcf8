#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "dialg/field.hpp"

namespace dialg {

/// Dense three-index array of scalars, entry (a, b, c) at [(a * d1 + b) * d2 + c].
class Tensor3 {
 public:
  Tensor3(FieldSpec field, std::size_t d0, std::size_t d1, std::size_t d2)
      : field_(field), extents_{d0, d1, d2}, data_(d0 * d1 * d2, Scalar::zero(field)) {}
  static Tensor3 cube(FieldSpec field, std::size_t n) { return Tensor3(field, n, n, n); }

  FieldSpec field() const { return field_; }
  std::size_t extent(std::size_t axis) const { return extents_.at(axis); }
  const std::array<std::size_t, 3>& extents() const { return extents_; }

  Scalar& at(std::size_t a, std::size_t b, std::size_t c) {
    check(a, b, c);
    return data_[(a * extents_[1] + b) * extents_[2] + c];
  }
  const Scalar& at(std::size_t a, std::size_t b, std::size_t c) const {
    check(a, b, c);
    return data_[(a * extents_[1] + b) * extents_[2] + c];
  }
  /// Unchecked access for inner loops.
  const Scalar& operator()(std::size_t a, std::size_t b, std::size_t c) const {
    return data_[(a * extents_[1] + b) * extents_[2] + c];
  }

  bool is_zero() const {
    for (const auto& s : data_) {
      if (!s.is_zero()) return false;
    }
    return true;
  }

  friend bool operator==(const Tensor3&, const Tensor3&) = default;

 private:
  void check(std::size_t a, std::size_t b, std::size_t c) const {
    if (a >= extents_[0] || b >= extents_[1] || c >= extents_[2]) {
      throw UsageError("tensor index out of range");
    }
  }

  FieldSpec field_;
  std::array<std::size_t, 3> extents_;
  std::vector<Scalar> data_;
};

}  // namespace dialg
