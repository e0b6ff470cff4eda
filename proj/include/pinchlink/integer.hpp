#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <cstdint>

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpz_class;
  using Nested = mpz_class;
  using Literal = mpz_class;

  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 60
  };

  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace pinchlink {

/// Arbitrary precision integer used for every homology computation.
using Integer = mpz_class;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;
using IntVector = Vector<Integer>;

// Scalar helpers so the lattice templates work for both machine integers
// and GMP integers. mpz_class division truncates toward zero like int64_t.
inline Integer abs_value(const Integer& x) { return abs(x); }
inline std::int64_t abs_value(std::int64_t x) { return x < 0 ? -x : x; }

inline bool is_zero(const Integer& x) { return sgn(x) == 0; }
inline bool is_zero(std::int64_t x) { return x == 0; }

inline int sign_of(const Integer& x) { return sgn(x); }
inline int sign_of(std::int64_t x) { return (x > 0) - (x < 0); }

}  // namespace pinchlink
