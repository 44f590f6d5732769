#pragma once

#include <array>
#include <type_traits>

#include "khv/interval.hpp"

namespace khv {

// Forward-mode derivative carrier: a value and N partial derivatives, all of
// type T. With T = Interval every component is an enclosure; nesting
// Jet<Jet<Interval,1>,1> yields second derivatives.
template <class T, int N>
struct Jet {
  T v{};
  std::array<T, N> d{};

  Jet() = default;
  Jet(double c) : v(c) {}  // NOLINT
  Jet(const Interval& c) requires(!std::is_same_v<T, Interval>) : v(c) {}  // NOLINT
  Jet(const T& c) : v(c) {}  // NOLINT

  static Jet variable(const T& x, int i) {
    Jet j(x);
    j.d[i] = T(1.0);
    return j;
  }
};

template <class>
struct is_jet : std::false_type {};
template <class T, int N>
struct is_jet<Jet<T, N>> : std::true_type {};
template <class T>
inline constexpr bool is_jet_v = is_jet<std::decay_t<T>>::value;

inline const Interval& base(const Interval& x) { return x; }
template <class T, int N>
const Interval& base(const Jet<T, N>& x) {
  return base(x.v);
}

namespace detail {

// Chain rule: value f and outer derivative fp applied to the partials of x.
template <class T, int N>
Jet<T, N> chain(const Jet<T, N>& x, const T& f, const T& fp) {
  Jet<T, N> r(f);
  for (int i = 0; i < N; ++i) r.d[i] = fp * x.d[i];
  return r;
}

}  // namespace detail

template <class T, int N>
Jet<T, N> operator-(const Jet<T, N>& a) {
  Jet<T, N> r(-a.v);
  for (int i = 0; i < N; ++i) r.d[i] = -a.d[i];
  return r;
}

template <class T, int N>
Jet<T, N> operator+(const Jet<T, N>& a, const Jet<T, N>& b) {
  Jet<T, N> r(a.v + b.v);
  for (int i = 0; i < N; ++i) r.d[i] = a.d[i] + b.d[i];
  return r;
}

template <class T, int N>
Jet<T, N> operator-(const Jet<T, N>& a, const Jet<T, N>& b) {
  Jet<T, N> r(a.v - b.v);
  for (int i = 0; i < N; ++i) r.d[i] = a.d[i] - b.d[i];
  return r;
}

template <class T, int N>
Jet<T, N> operator*(const Jet<T, N>& a, const Jet<T, N>& b) {
  Jet<T, N> r(a.v * b.v);
  for (int i = 0; i < N; ++i) r.d[i] = a.d[i] * b.v + a.v * b.d[i];
  return r;
}

template <class T, int N>
Jet<T, N> operator/(const Jet<T, N>& a, const Jet<T, N>& b) {
  T q = a.v / b.v;
  Jet<T, N> r(q);
  for (int i = 0; i < N; ++i) r.d[i] = (a.d[i] - q * b.d[i]) / b.v;
  return r;
}

// Mixed operations with constants (double or Interval).
template <class T, int N, class C>
  requires(std::is_arithmetic_v<C> || std::is_same_v<C, Interval>)
Jet<T, N> operator+(const Jet<T, N>& a, const C& c) {
  Jet<T, N> r = a;
  r.v = a.v + T(c);
  return r;
}
template <class T, int N, class C>
  requires(std::is_arithmetic_v<C> || std::is_same_v<C, Interval>)
Jet<T, N> operator+(const C& c, const Jet<T, N>& a) {
  return a + c;
}
template <class T, int N, class C>
  requires(std::is_arithmetic_v<C> || std::is_same_v<C, Interval>)
Jet<T, N> operator-(const Jet<T, N>& a, const C& c) {
  Jet<T, N> r = a;
  r.v = a.v - T(c);
  return r;
}
template <class T, int N, class C>
  requires(std::is_arithmetic_v<C> || std::is_same_v<C, Interval>)
Jet<T, N> operator-(const C& c, const Jet<T, N>& a) {
  return -a + c;
}
template <class T, int N, class C>
  requires(std::is_arithmetic_v<C> || std::is_same_v<C, Interval>)
Jet<T, N> operator*(const Jet<T, N>& a, const C& c) {
  T cc(c);
  Jet<T, N> r(a.v * cc);
  for (int i = 0; i < N; ++i) r.d[i] = a.d[i] * cc;
  return r;
}
template <class T, int N, class C>
  requires(std::is_arithmetic_v<C> || std::is_same_v<C, Interval>)
Jet<T, N> operator*(const C& c, const Jet<T, N>& a) {
  return a * c;
}
template <class T, int N, class C>
  requires(std::is_arithmetic_v<C> || std::is_same_v<C, Interval>)
Jet<T, N> operator/(const Jet<T, N>& a, const C& c) {
  T cc(c);
  Jet<T, N> r(a.v / cc);
  for (int i = 0; i < N; ++i) r.d[i] = a.d[i] / cc;
  return r;
}
template <class T, int N, class C>
  requires(std::is_arithmetic_v<C> || std::is_same_v<C, Interval>)
Jet<T, N> operator/(const C& c, const Jet<T, N>& a) {
  return Jet<T, N>(T(c)) / a;
}

template <class T, int N>
Jet<T, N> exp(const Jet<T, N>& x) {
  T e = exp(x.v);
  return detail::chain(x, e, e);
}

template <class T, int N>
Jet<T, N> expm1(const Jet<T, N>& x) {
  return detail::chain(x, expm1(x.v), exp(x.v));
}

template <class T, int N>
Jet<T, N> ln(const Jet<T, N>& x) {
  return detail::chain(x, ln(x.v), T(1.0) / x.v);
}

template <class T, int N>
Jet<T, N> log1p(const Jet<T, N>& x) {
  return detail::chain(x, log1p(x.v), T(1.0) / (x.v + T(1.0)));
}

template <class T, int N>
Jet<T, N> sqrt(const Jet<T, N>& x) {
  T s = sqrt(x.v);
  return detail::chain(x, s, T(0.5) / s);
}

template <class T, int N>
Jet<T, N> sin(const Jet<T, N>& x) {
  return detail::chain(x, sin(x.v), cos(x.v));
}

template <class T, int N>
Jet<T, N> cos(const Jet<T, N>& x) {
  return detail::chain(x, cos(x.v), -sin(x.v));
}

template <class T, int N>
Jet<T, N> tan(const Jet<T, N>& x) {
  T t = tan(x.v);
  return detail::chain(x, t, T(1.0) + t * t);
}

template <class T, int N>
Jet<T, N> arccos(const Jet<T, N>& x) {
  return detail::chain(x, arccos(x.v), T(-1.0) / sqrt(T(1.0) - x.v * x.v));
}

template <class T, int N>
Jet<T, N> abs(const Jet<T, N>& x) {
  const Interval& b = base(x);
  if (b.lo() >= 0) return x;
  if (b.hi() <= 0) return -x;
  return detail::chain(x, abs(x.v), T(Interval(-1.0, 1.0)));
}

template <class T, int N>
Jet<T, N> sqr(const Jet<T, N>& x) {
  return x * x;
}

template <class T, int N>
Jet<T, N> pown(const Jet<T, N>& x, int n) {
  if (n == 0) return Jet<T, N>(1.0);
  if (n == 1) return x;
  return detail::chain(x, pown(x.v, n), T(static_cast<double>(n)) * pown(x.v, n - 1));
}

template <class T, int N>
Jet<T, N> pow_real(const Jet<T, N>& x, const Interval& s) {
  return detail::chain(x, pow_real(x.v, s), T(s) * pow_real(x.v, s - Interval(1.0)));
}

}  // namespace khv
