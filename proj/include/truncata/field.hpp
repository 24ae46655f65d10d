#pragma once

#include "truncata/ratfunc.hpp"
#include "truncata/rational.hpp"

namespace truncata {

/// Static properties of the two coefficient fields (Q and Q(q)).
template <typename S>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static constexpr const char* name = "Q";
  static Rational from_rational(const Rational& r) { return r; }
};

template <>
struct FieldTraits<RatFuncQ> {
  static constexpr const char* name = "Q(q)";
  static RatFuncQ from_rational(const Rational& r) { return RatFuncQ(r); }
};

template <typename S>
S scalar_pow(const S& x, long e) {
  return pow(x, e);
}

}  // namespace truncata
