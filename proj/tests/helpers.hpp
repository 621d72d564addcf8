#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "dialg/algebra.hpp"

namespace testing_helpers {

inline const dialg::FieldSpec kQ = dialg::FieldSpec::rationals();
inline const dialg::FieldSpec kF2 = dialg::FieldSpec::prime(2);
inline const dialg::FieldSpec kF3 = dialg::FieldSpec::prime(3);

inline dialg::Vector vec(dialg::FieldSpec f, std::initializer_list<long long> xs) {
  dialg::Vector v;
  for (long long x : xs) v.push_back(dialg::Scalar::from_int(f, x));
  return v;
}

inline dialg::Matrix mat(dialg::FieldSpec f, std::initializer_list<std::initializer_list<long long>> rows) {
  std::vector<dialg::Vector> rs;
  for (const auto& r : rows) rs.push_back(vec(f, r));
  return dialg::Matrix::from_rows(f, rs, rs.empty() ? 0 : rs.front().size());
}

inline dialg::Subspace span(dialg::FieldSpec f, std::size_t n, std::initializer_list<std::initializer_list<long long>> vs) {
  std::vector<dialg::Vector> out;
  for (const auto& v : vs) out.push_back(vec(f, v));
  return dialg::Subspace::span(f, n, out);
}

inline dialg::Vector e(dialg::FieldSpec f, std::size_t n, std::size_t i) { return dialg::unit_vector(f, n, i); }

}  // namespace testing_helpers
