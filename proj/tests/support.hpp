#pragma once

#include "octqft/catalog.hpp"

namespace octqft::testing {

inline FieldSpec Q() { return FieldSpec::rational(); }

/// Full matrix algebra M_n with basis e_pq at index p n + q.
inline Algebra matrix_algebra(FieldSpec f, std::size_t n) {
  std::vector<StructureConstant> mul;
  Element unit = zero_vector(f, n * n);
  for (std::size_t p = 0; p < n; ++p) {
    unit[p * n + p] = Scalar::one(f);
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t r = 0; r < n; ++r) mul.push_back({p * n + q, q * n + r, p * n + r, Scalar::one(f)});
  }
  return make_algebra(f, n * n, mul, unit);
}

/// k[Z/n] without the characteristic check.
inline Algebra raw_cyclic_algebra(FieldSpec f, std::size_t n) {
  std::vector<StructureConstant> mul;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) mul.push_back({a, b, (a + b) % n, Scalar::one(f)});
  return make_algebra(f, n, mul, unit_vector(f, n, 0));
}

inline Scalar q(long a, long b = 1) { return Scalar(Q(), a, b); }

}  // namespace octqft::testing
