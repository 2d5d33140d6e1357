#pragma once

/*
 * Scalar layer.  All computations are exact: the default scalar is an
 * arbitrary-precision rational (GMP), and any field of characteristic
 * other than 2 or 3 can be substituted through field_traits.  Fp<P>
 * provides prime fields with P >= 5.
 */

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "ftsys/error.hpp"

namespace ftsys {

using Rational = mpq_class;

/// Reduced fraction num/den.
inline Rational rational(long num, long den = 1) {
  ensure(den != 0, errc::parse_error, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

template <class S>
struct field_traits;

template <>
struct field_traits<Rational> {
  static constexpr long characteristic = 0;
  static Rational from_int(long n) { return Rational(n); }
  static Rational from_fraction(long num, long den) { return rational(num, den); }
  static bool is_zero(const Rational& r) { return sgn(r) == 0; }
  static std::string str(const Rational& r) { return r.get_str(); }

  // Writes sqrt(r) to out when r is the square of a rational.
  static bool exact_sqrt(const Rational& r, Rational& out) {
    if (sgn(r) < 0) return false;
    mpz_class num = r.get_num(), den = r.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
      return false;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    out = Rational(sn) / Rational(sd);
    return true;
  }
};

/// Prime field Z/P with P >= 5 prime.
template <unsigned long P>
struct Fp {
  static_assert(P >= 5, "characteristic must not be 2 or 3");
  unsigned long v = 0;

  Fp() = default;
  Fp(long n) {  // NOLINT: implicit by design, mirrors Rational(long)
    long m = n % static_cast<long>(P);
    if (m < 0) m += static_cast<long>(P);
    v = static_cast<unsigned long>(m);
  }

  friend Fp operator+(Fp a, Fp b) { return from_raw((a.v + b.v) % P); }
  friend Fp operator-(Fp a, Fp b) { return from_raw((a.v + P - b.v) % P); }
  friend Fp operator*(Fp a, Fp b) { return from_raw((a.v * b.v) % P); }
  friend Fp operator/(Fp a, Fp b) {
    ensure(b.v != 0, errc::zero_scalar, "division by zero in Fp");
    return a * b.inverse();
  }
  Fp operator-() const { return from_raw(v == 0 ? 0 : P - v); }
  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }
  Fp& operator/=(Fp o) { return *this = *this / o; }
  friend bool operator==(Fp a, Fp b) { return a.v == b.v; }
  friend bool operator!=(Fp a, Fp b) { return a.v != b.v; }
  friend bool operator<(Fp a, Fp b) { return a.v < b.v; }  // representative order

  Fp inverse() const {
    // Fermat: v^(P-2); P is small enough that v*v fits in 64 bits.
    Fp r(1), b = *this;
    unsigned long e = P - 2;
    while (e) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }

  static Fp from_raw(unsigned long raw) {
    Fp f;
    f.v = raw;
    return f;
  }
};

template <unsigned long P>
struct field_traits<Fp<P>> {
  static constexpr long characteristic = static_cast<long>(P);
  static Fp<P> from_int(long n) { return Fp<P>(n); }
  static Fp<P> from_fraction(long num, long den) { return Fp<P>(num) / Fp<P>(den); }
  static bool is_zero(Fp<P> x) { return x.v == 0; }
  static std::string str(Fp<P> x) { return std::to_string(x.v) + " mod " + std::to_string(P); }

  static bool exact_sqrt(Fp<P> x, Fp<P>& out) {
    for (unsigned long s = 0; s < P; ++s) {
      if ((s * s) % P == x.v) {
        out = Fp<P>::from_raw(s);
        return true;
      }
    }
    return false;
  }
};

/// base^e with e possibly negative; the base must be invertible when e < 0.
template <class S>
S scalar_pow(const S& base, long e) {
  if (e < 0) {
    ensure(!field_traits<S>::is_zero(base), errc::zero_scalar, "negative power of zero");
    return field_traits<S>::from_int(1) / scalar_pow(base, -e);
  }
  S r = field_traits<S>::from_int(1);
  S b = base;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

}  // namespace ftsys
