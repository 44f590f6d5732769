#pragma once

#include <type_traits>

#include "khv/interval.hpp"
#include "khv/jet.hpp"

// Power series of -ln cos t and 1 - t cot t with certified remainders, and a
// few smooth cofactors used to evaluate expressions with removable
// singularities at 0.
namespace khv::series {

inline constexpr int kMaxBernoulli = 20;  // |B_2| ... |B_40|

// |B_{2k}| for k = 1..20.
Interval bernoulli_abs(int k);

// -ln cos t = sum_{k>=1} c_k t^{2k}, c_k = 2^{2k-1}(2^{2k}-1)|B_{2k}| / (k (2k)!).
Interval lncos_coeff(int k);

// 1 - t cot t = sum_{k>=1} e_k t^{2k}, e_k = 2^{2k}|B_{2k}| / (2k)!.
Interval cot_coeff(int k);

// (-ln cos t - sum_{k<m} c_k t^{2k}) / t^{2m}; finite at t = 0.
// Needs t in [0, 1.5]; K terms plus a geometric remainder bound.
Interval lncos_rem(const Interval& t, int m, int K = kMaxBernoulli);

// (1 - t cot t - sum_{k<m} e_k t^{2k}) / t^{2m}; t in [0, 3].
Interval cot_rem(const Interval& t, int m, int K = kMaxBernoulli);

// Two-sided -ln cos t for t in [0, pi/2), accurate near 0.
Interval neg_ln_cos(const Interval& t);

// (1 - e^{-y}) / y, y >= 0 (value 1 at 0).
Interval phi1(const Interval& y);

// (e^{-z} - 1 + z) / z^2, z >= 0 (value 1/2 at 0).
Interval e2(const Interval& z);

// Lift an interval into a jet type: value kept, derivatives unknown.
template <class T>
T lift(const Interval& v) {
  if constexpr (std::is_same_v<T, Interval>) {
    return v;
  } else {
    using Inner = decltype(T{}.v);
    T r(lift<Inner>(v));
    for (auto& di : r.d) di = lift<Inner>(Interval::entire());
    return r;
  }
}

template <class T>
T lncos_rem(const T& t, int m) requires is_jet_v<T> {
  return lift<T>(lncos_rem(base(t), m));
}
template <class T>
T cot_rem(const T& t, int m) requires is_jet_v<T> {
  return lift<T>(cot_rem(base(t), m));
}
template <class T>
T phi1(const T& y) requires is_jet_v<T> {
  return lift<T>(phi1(base(y)));
}
template <class T>
T e2(const T& z) requires is_jet_v<T> {
  return lift<T>(e2(base(z)));
}

// -ln cos t through log1p for jets as well (exact derivative tan t).
template <class T>
T neg_ln_cos(const T& t) requires is_jet_v<T> {
  T s = sin(t * 0.5);
  return -log1p(-2.0 * s * s);
}

}  // namespace khv::series
