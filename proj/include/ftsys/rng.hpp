#pragma once

/*
 * Seeded, reproducible random generation for the verification suites.
 * Raw mt19937_64 output is reduced by modulus so the streams are
 * identical across platforms and standard libraries.  Random g_1
 * elements have sparse support (at most 6 root vectors) and small
 * numerators and denominators, keeping exact arithmetic fast while
 * still exercising cross terms.
 */

#include <cstdint>
#include <random>

#include "ftsys/fts.hpp"

namespace ftsys {

struct Rng {
  std::mt19937_64 eng;

  explicit Rng(std::uint64_t seed) : eng(seed) {}

  std::uint64_t next() { return eng(); }

  long range(long lo, long hi) {  // inclusive bounds
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

template <class S>
S random_scalar(Rng& rng) {
  return field_traits<S>::from_fraction(rng.range(-10, 10), rng.range(1, 10));
}

template <class S>
S random_nonzero_scalar(Rng& rng) {
  for (;;) {
    S s = random_scalar<S>(rng);
    if (!field_traits<S>::is_zero(s)) return s;
  }
}

template <class S>
G1Element<S> random_g1(const FtsContext& ctx, Rng& rng, int max_support = 6) {
  int support = static_cast<int>(rng.range(1, max_support));
  G1Element<S> e = ctx.zero_g1<S>();
  for (int k = 0; k < support; ++k) {
    int b = ctx.g1_indices()[rng.range(0, ctx.g1_dim() - 1)];
    S coeff = field_traits<S>::from_fraction(rng.range(-10, 10), rng.range(1, 10));
    auto it = e.entries.find(b);
    if (it == e.entries.end())
      e.entries.emplace(b, coeff);
    else
      it->second = it->second + coeff;
  }
  e.prune();
  return e;
}

template <class S>
G1Element<S> random_nonzero_g1(const FtsContext& ctx, Rng& rng, int max_support = 6) {
  for (;;) {
    G1Element<S> e = random_g1<S>(ctx, rng, max_support);
    if (!e.is_zero()) return e;
  }
}

/// Random sparse element of the whole Lie algebra (for bracket tests).
template <class S>
LieElement<S> random_lie(const ChevalleyBasis& cb, Rng& rng, int max_support = 6) {
  LieElement<S> e = cb.zero<S>();
  int support = static_cast<int>(rng.range(1, max_support));
  for (int k = 0; k < support; ++k) {
    int i = static_cast<int>(rng.range(0, cb.roots().num_roots() - 1));
    S coeff = field_traits<S>::from_fraction(rng.range(-10, 10), rng.range(1, 10));
    auto it = e.xs.find(i);
    if (it == e.xs.end())
      e.xs.emplace(i, coeff);
    else
      it->second = it->second + coeff;
  }
  for (int k = 0; k < cb.roots().rank(); ++k)
    if (rng.range(0, 3) == 0) e.h[k] = random_scalar<S>(rng);
  e.prune();
  return e;
}

}  // namespace ftsys
