#pragma once

/*
 * Rank and orbit-level classification of g_1 elements.
 *
 * The rank of x follows the vanishing chain
 *   rank 0: x = 0
 *   rank 1: x strictly regular (xxy in Fx for all y; equivalently xx g_1
 *           is one-dimensional)
 *   rank 2: xxx = 0, x not rank <= 1
 *   rank 3: q(x) = 0, xxx != 0
 *   rank 4: q(x) != 0
 * For types B, D and F the rank-2 level collects more than one orbit; the
 * report flags this.  Every rank-4 element splits as a sum of two strictly
 * regular elements in exactly one way, recovered here from
 * xxx = 3<v,u>(u - v) and q(x) = 6<v,u>^2 when q(x)/6 has a square root
 * in the scalar field.
 */

#include <optional>
#include <utility>
#include <vector>

#include "ftsys/fts.hpp"

namespace ftsys {

template <class S>
struct RankReport {
  int rank = 0;
  bool level2_several_orbits = false;  // set at rank 2 for types B, D, F
  bool strictly_regular = false;
  bool xxx_nonzero = false;
  S q_value = S(0);
};

struct EigenDecomposition {
  // Root indices of the g_1 basis split by the eigenvalue of
  // ad(h_{rho-alpha} - h_alpha); the +-3 spaces are one-dimensional.
  std::vector<int> minus3, minus1, plus1, plus3;
};

/// xxy for all basis y lies in the line F x.
template <class S>
bool is_strictly_regular(const FtsContext& ctx, const G1Element<S>& x) {
  ensure(!x.is_zero(), errc::zero_element, "strict regularity is defined for nonzero elements");
  const int pivot = x.entries.begin()->first;
  const S& pv = x.entries.begin()->second;
  for (int b : ctx.g1_indices()) {
    G1Element<S> p = triple_product(ctx, x, x, ctx.template g1_basis_vector<S>(b));
    // p must equal (p_pivot / x_pivot) * x; equivalently all 2x2 minors of
    // [x | p] vanish.
    auto it = p.entries.find(pivot);
    S lambda = it == p.entries.end() ? field_traits<S>::from_int(0) : it->second / pv;
    G1Element<S> diff = p;
    diff.add_scaled(x, -lambda);
    if (!diff.is_zero()) return false;
  }
  return true;
}

/// xx g_1 is exactly one-dimensional.
template <class S>
bool is_rank_one(const FtsContext& ctx, const G1Element<S>& x) {
  ensure(!x.is_zero(), errc::zero_element, "rank one is defined for nonzero elements");
  // Gaussian elimination over the exact scalars on the vectors xx x_b.
  std::vector<G1Element<S>> rows;
  for (int b : ctx.g1_indices()) {
    G1Element<S> p = triple_product(ctx, x, x, ctx.template g1_basis_vector<S>(b));
    if (p.is_zero()) continue;
    for (const auto& r : rows) {
      if (p.is_zero()) break;
      int lead = r.entries.begin()->first;
      auto it = p.entries.find(lead);
      if (it != p.entries.end()) p.add_scaled(r, -(it->second / r.entries.begin()->second));
    }
    if (!p.is_zero()) {
      rows.push_back(std::move(p));
      if (rows.size() > 1) return false;
    }
  }
  return rows.size() == 1;
}

template <class S>
RankReport<S> rank_classify(const FtsContext& ctx, const G1Element<S>& x) {
  RankReport<S> rep;
  if (x.is_zero()) {
    rep.rank = 0;
    return rep;
  }
  rep.q_value = quartic(ctx, x);
  G1Element<S> xxx = triple_product(ctx, x, x, x);
  rep.xxx_nonzero = !xxx.is_zero();
  rep.strictly_regular = is_strictly_regular(ctx, x);
  if (rep.strictly_regular) {
    rep.rank = 1;
  } else if (!rep.xxx_nonzero) {
    rep.rank = 2;
    rep.level2_several_orbits = (ctx.type().family != Family::E);
  } else if (field_traits<S>::is_zero(rep.q_value)) {
    rep.rank = 3;
  } else {
    rep.rank = 4;
  }
  return rep;
}

/*
 * Unique decomposition of a rank-4 element as u + v with u, v strictly
 * regular: s = sqrt(q(x)/6) gives u, v = (x +- xxx/(3s)) / 2.  The pair is
 * unordered; a deterministic order makes the result reproducible.
 */
template <class S>
std::pair<G1Element<S>, G1Element<S>> decompose_rank4(const FtsContext& ctx,
                                                      const G1Element<S>& x) {
  S q = quartic(ctx, x);
  ensure(!field_traits<S>::is_zero(q), errc::not_rank4, "q(x) = 0");
  S ratio = q / field_traits<S>::from_int(6);
  S s = field_traits<S>::from_int(0);
  ensure(field_traits<S>::exact_sqrt(ratio, s), errc::not_a_square,
         "q(x)/6 has no square root in the scalar field");

  G1Element<S> xxx = triple_product(ctx, x, x, x);
  S half = field_traits<S>::from_int(1) / field_traits<S>::from_int(2);
  S inv3s = field_traits<S>::from_int(1) / (field_traits<S>::from_int(3) * s);
  G1Element<S> u = x;
  u.add_scaled(xxx, inv3s);
  u.scale(half);
  G1Element<S> v = x;
  v.add_scaled(xxx, -inv3s);
  v.scale(half);

  ensure(!u.is_zero() && !v.is_zero() && is_strictly_regular(ctx, u) &&
             is_strictly_regular(ctx, v),
         errc::internal_error, "decomposition parts are not strictly regular");
  if (v.entries < u.entries) std::swap(u, v);
  return {u, v};
}

/*
 * Eigenspace decomposition of g_1 under ad(h_{rho-alpha} - h_alpha) for
 * the simply-laced types: eigenvalue <rho-2alpha, beta>, which is -3 only
 * for beta = alpha, +3 only for beta = rho-alpha, and +-1 equally often.
 */
inline EigenDecomposition eigen_decompose(const FtsContext& ctx) {
  ensure(ctx.type().simply_laced(), errc::not_simply_laced,
         "the eigenspace decomposition needs type D or E");
  const RootSystem& rs = ctx.roots();
  Coords r2a = rs.rho();
  r2a[rs.alpha_simple_index()] -= 2;
  EigenDecomposition dec;
  for (int b : ctx.g1_indices()) {
    int ev = rs.pairing(r2a, rs.root(b).coords);
    switch (ev) {
      case -3: dec.minus3.push_back(b); break;
      case -1: dec.minus1.push_back(b); break;
      case 1:  dec.plus1.push_back(b); break;
      case 3:  dec.plus3.push_back(b); break;
      default: fail(errc::internal_error, "unexpected eigenvalue");
    }
  }
  return dec;
}

namespace detail {
template <class S>
S cubic_form(const FtsContext& ctx, int anchor_root, bool want_plus1, const G1Element<S>& a) {
  const RootSystem& rs = ctx.roots();
  // Support must lie in the +1 (resp. -1) eigenspace: <alpha, beta> = 0
  // (resp. 1) for every support root.
  for (const auto& [i, v] : a.entries) {
    int p = rs.pairing_roots(rs.alpha_root_index(), i);
    ensure(p == (want_plus1 ? 0 : 1), errc::not_in_eigenspace,
           "support outside the required eigenspace");
  }
  S q = quadrilinear(ctx, ctx.template g1_basis_vector<S>(anchor_root), a, a, a);
  return q / field_traits<S>::from_int(6);
}
}  // namespace detail

/// f_1(a) = 1/6 q(x_alpha, a, a, a) on the +1 eigenspace A.
template <class S>
S cubic_f1(const FtsContext& ctx, const G1Element<S>& a) {
  ensure(ctx.type().simply_laced(), errc::not_simply_laced, "cubic forms need type D or E");
  return detail::cubic_form(ctx, ctx.roots().alpha_root_index(), true, a);
}

/// f_2(b) = 1/6 q(x_{rho-alpha}, b, b, b) on the -1 eigenspace B.
template <class S>
S cubic_f2(const FtsContext& ctx, const G1Element<S>& b) {
  ensure(ctx.type().simply_laced(), errc::not_simply_laced, "cubic forms need type D or E");
  return detail::cubic_form(ctx, ctx.partner(ctx.roots().alpha_root_index()), false, b);
}

}  // namespace ftsys
