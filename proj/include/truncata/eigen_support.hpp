#pragma once

#include <Eigen/Core>

#include "truncata/ratfunc.hpp"
#include "truncata/rational.hpp"

namespace Eigen {

// Exact scalars: epsilon and dummy_precision are genuinely zero, and none of
// Eigen's fuzzy predicates are used on these types.
template <>
struct NumTraits<truncata::Rational> : GenericNumTraits<truncata::Rational> {
  typedef truncata::Rational Real;
  typedef truncata::Rational NonInteger;
  typedef truncata::Rational Nested;
  static inline Real epsilon() { return truncata::Rational(0); }
  static inline Real dummy_precision() { return truncata::Rational(0); }
  static inline int digits10() { return 0; }
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 32,
    MulCost = 32
  };
};

template <>
struct NumTraits<truncata::RatFuncQ> : GenericNumTraits<truncata::RatFuncQ> {
  typedef truncata::RatFuncQ Real;
  typedef truncata::RatFuncQ NonInteger;
  typedef truncata::RatFuncQ Nested;
  static inline Real epsilon() { return truncata::RatFuncQ(0); }
  static inline Real dummy_precision() { return truncata::RatFuncQ(0); }
  static inline int digits10() { return 0; }
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 128,
    MulCost = 256
  };
};

}  // namespace Eigen

namespace truncata {

template <typename S>
using DenseMat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

using MatQ = DenseMat<Rational>;
using MatQq = DenseMat<RatFuncQ>;

}  // namespace truncata
