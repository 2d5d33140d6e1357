#pragma once

/*
 * The Freudenthal triple system carried by g_1.
 *
 * With x_rho and x_{-rho} the canonical basis vectors of g_2 and g_-2:
 *
 *   bilinear form   [x, y] = <x, y> x_rho            (skew, nondegenerate)
 *   quartic form    (ad x)^4 (x_{-rho}) = q(x) x_rho
 *   4-linear form   full symmetrization of q, q(x,x,x,x) = q(x)
 *   triple product  the unique xyz in g_1 with <w, xyz> = q(w,x,y,z)
 *
 * The Gram matrix of <-,-> in the root-vector basis is monomial:
 * <x_b, x_g> = c(b, g) when b + g = rho and 0 otherwise.  Everything is
 * evaluated exactly over the chosen scalar field.
 */

#include <array>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "ftsys/chevalley.hpp"

namespace ftsys {

/// Exact sparse vector supported on the alpha-height-1 root vectors.
template <class S>
struct G1Element {
  std::uint64_t basis_id = 0;
  std::map<int, S> entries;  // height-1 root index -> coefficient, no zeros

  bool is_zero() const { return entries.empty(); }

  void prune() {
    for (auto it = entries.begin(); it != entries.end();)
      it = field_traits<S>::is_zero(it->second) ? entries.erase(it) : std::next(it);
  }

  G1Element& operator+=(const G1Element& o) {
    for (const auto& [k, v] : o.entries) {
      auto it = entries.find(k);
      if (it == entries.end())
        entries.emplace(k, v);
      else
        it->second = it->second + v;
    }
    prune();
    return *this;
  }

  G1Element& add_scaled(const G1Element& o, const S& t) {
    for (const auto& [k, v] : o.entries) {
      auto it = entries.find(k);
      if (it == entries.end())
        entries.emplace(k, v * t);
      else
        it->second = it->second + v * t;
    }
    prune();
    return *this;
  }

  G1Element& scale(const S& t) {
    for (auto& [k, v] : entries) v = v * t;
    prune();
    return *this;
  }

  friend bool operator==(const G1Element& a, const G1Element& b) {
    return a.basis_id == b.basis_id && a.entries == b.entries;
  }
};

class FtsContext {
 public:
  static FtsContext build(const DynkinType& type) {
    return FtsContext(ChevalleyBasis::build(RootSystem::build(type)));
  }
  static FtsContext build(ChevalleyBasis cb) { return FtsContext(std::move(cb)); }

  const ChevalleyBasis& basis() const { return cb_; }
  const RootSystem& roots() const { return cb_.roots(); }
  const DynkinType& type() const { return cb_.roots().type(); }

  int x_rho_index() const { return rho_idx_; }
  int x_minus_rho_index() const { return minus_rho_idx_; }

  /// Height-1 root indices in canonical order: the basis of g_1.
  const std::vector<int>& g1_indices() const { return g1_; }
  int g1_dim() const { return static_cast<int>(g1_.size()); }
  int g1_position(int root_idx) const { return pos_[root_idx]; }

  /// Root index of rho - beta, the Gram partner of beta.
  int partner(int root_idx) const { return partner_[root_idx]; }
  /// The single nonzero Gram entry <x_beta, x_{rho-beta}> = c(beta, rho-beta).
  int gram(int root_idx) const { return gram_[root_idx]; }

  template <class S>
  G1Element<S> zero_g1() const {
    G1Element<S> e;
    e.basis_id = cb_.id();
    return e;
  }

  template <class S>
  G1Element<S> g1_basis_vector(int root_idx) const {
    ensure(roots().alpha_height_idx(root_idx) == 1, errc::not_height1,
           "basis vector must have alpha-height 1");
    G1Element<S> e = zero_g1<S>();
    e.entries.emplace(root_idx, field_traits<S>::from_int(1));
    return e;
  }

  template <class S>
  G1Element<S> g1_basis_vector(const Coords& beta) const {
    int i = roots().index_of(beta);
    ensure(i >= 0, errc::not_a_root, "not a root");
    return g1_basis_vector<S>(i);
  }

  /// Builds an element from (root, coefficient) pairs; keys must be height 1.
  template <class S>
  G1Element<S> g1_element(const std::vector<std::pair<Coords, S>>& terms) const {
    G1Element<S> e = zero_g1<S>();
    for (const auto& [coords, coeff] : terms) {
      int i = roots().index_of(coords);
      ensure(i >= 0, errc::not_a_root, "not a root");
      ensure(roots().alpha_height_idx(i) == 1, errc::not_height1,
             "coefficient on a root of alpha-height != 1");
      auto it = e.entries.find(i);
      if (it == e.entries.end())
        e.entries.emplace(i, coeff);
      else
        it->second = it->second + coeff;
    }
    e.prune();
    return e;
  }

  template <class S>
  LieElement<S> lift(const G1Element<S>& x) const {
    ensure(x.basis_id == cb_.id(), errc::mixed_basis, "element from a different basis");
    LieElement<S> e = cb_.zero<S>();
    e.xs.insert(x.entries.begin(), x.entries.end());
    return e;
  }

  /// Projects a Lie element known to lie in g_1 back to a G1Element.
  template <class S>
  G1Element<S> project_g1(const LieElement<S>& e) const {
    for (const S& v : e.h)
      ensure(field_traits<S>::is_zero(v), errc::internal_grading, "element has an h component");
    G1Element<S> r = zero_g1<S>();
    for (const auto& [i, v] : e.xs) {
      ensure(roots().alpha_height_idx(i) == 1, errc::internal_grading,
             "element has support outside g_1");
      r.entries.emplace(i, v);
    }
    return r;
  }

 private:
  explicit FtsContext(ChevalleyBasis cb) : cb_(std::move(cb)) {
    const RootSystem& rs = cb_.roots();
    rho_idx_ = rs.rho_index();
    minus_rho_idx_ = rs.neg_index(rho_idx_);
    g1_ = rs.height1_indices();
    pos_.assign(rs.num_roots(), -1);
    partner_.assign(rs.num_roots(), -1);
    gram_.assign(rs.num_roots(), 0);
    for (int p = 0; p < static_cast<int>(g1_.size()); ++p) pos_[g1_[p]] = p;
    for (int i : g1_) {
      partner_[i] = rs.rho_complement(i);
      gram_[i] = cb_.constant_idx(i, partner_[i]);
      ensure(gram_[i] != 0, errc::internal_error, "Gram entry vanishes");
    }
  }

  ChevalleyBasis cb_;
  std::vector<int> g1_;
  std::vector<int> pos_;
  std::vector<int> partner_;
  std::vector<int> gram_;
  int rho_idx_ = -1;
  int minus_rho_idx_ = -1;
};

/// <x, y>: the coefficient of x_rho in [x, y].
template <class S>
S bilinear(const FtsContext& ctx, const G1Element<S>& x, const G1Element<S>& y) {
  ensure(x.basis_id == ctx.basis().id() && y.basis_id == ctx.basis().id(), errc::mixed_basis,
         "elements from a different basis");
  S acc = field_traits<S>::from_int(0);
  for (const auto& [i, xi] : x.entries) {
    auto it = y.entries.find(ctx.partner(i));
    if (it != y.entries.end())
      acc = acc + xi * it->second * field_traits<S>::from_int(ctx.gram(i));
  }
  return acc;
}

/// Bilinear form of a G1Element against a Lie element lying in g_1.
template <class S>
S bilinear_with_lie(const FtsContext& ctx, const G1Element<S>& x, const LieElement<S>& y) {
  S acc = field_traits<S>::from_int(0);
  for (const auto& [i, xi] : x.entries) {
    auto it = y.xs.find(ctx.partner(i));
    if (it != y.xs.end())
      acc = acc + xi * it->second * field_traits<S>::from_int(ctx.gram(i));
  }
  return acc;
}

/// q(x): the coefficient of x_rho in (ad x)^4 (x_{-rho}).
template <class S>
S quartic(const FtsContext& ctx, const G1Element<S>& x) {
  const ChevalleyBasis& cb = ctx.basis();
  LieElement<S> xl = ctx.lift(x);
  LieElement<S> e = cb.root_vector<S>(ctx.x_minus_rho_index());
  for (int step = 0; step < 4; ++step) e = bracket(cb, xl, e);
  // The result must land in g_2 = F x_rho.
  S value = field_traits<S>::from_int(0);
  for (const auto& [i, v] : e.xs) {
    if (i == ctx.x_rho_index())
      value = v;
    else
      fail(errc::internal_grading, "(ad x)^4(x_-rho) is not a multiple of x_rho");
  }
  for (const S& v : e.h)
    ensure(field_traits<S>::is_zero(v), errc::internal_grading,
           "(ad x)^4(x_-rho) has an h component");
  return value;
}

/*
 * Fully symmetric 4-linear form: 1/24 times the sum over all 24 orders of
 * applying ad w, ad x, ad y, ad z to x_{-rho}, reading off x_rho.  This is
 * the polarization of q and the reference oracle for the closed form.
 */
template <class S>
S quadrilinear(const FtsContext& ctx, const G1Element<S>& w, const G1Element<S>& x,
               const G1Element<S>& y, const G1Element<S>& z) {
  const ChevalleyBasis& cb = ctx.basis();
  std::array<LieElement<S>, 4> args = {ctx.lift(w), ctx.lift(x), ctx.lift(y), ctx.lift(z)};
  LieElement<S> start = cb.root_vector<S>(ctx.x_minus_rho_index());
  std::array<int, 4> perm = {0, 1, 2, 3};
  S acc = field_traits<S>::from_int(0);
  do {
    LieElement<S> e = start;
    for (int k = 3; k >= 0; --k) e = bracket(cb, args[perm[k]], e);
    auto it = e.xs.find(ctx.x_rho_index());
    if (it != e.xs.end()) acc = acc + it->second;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc / field_traits<S>::from_int(24);
}

/*
 * Closed-form value of q(x_{b1},...,x_{b4}) for long height-1 roots in the
 * simply-laced types, dispatching on the shape of the quadruple:
 *   sum != 2*rho                 -> 0
 *   {b, b, rho-b, rho-b}         -> 1
 *   {b, rho-b, g, rho-g}, b _|_ g -> -1/2 c(b,-rho) c(g,-rho)
 *   mutually orthogonal          -> c(b1,b4-rho) c(b2,b1-rho) c(b3,b4-rho) c(b4,b1-rho)
 */
inline Rational quartic_closed_form(const FtsContext& ctx, const Coords& b1, const Coords& b2,
                                    const Coords& b3, const Coords& b4) {
  ensure(ctx.type().simply_laced(), errc::not_simply_laced,
         "closed form applies to types D and E only");
  const RootSystem& rs = ctx.roots();
  const ChevalleyBasis& cb = ctx.basis();
  QuadrupleClass qc = rs.classify_quadruple(b1, b2, b3, b4);
  switch (qc.kind) {
    case QuadKind::NotTwoRho:
      return rational(0);
    case QuadKind::EqualPairs:
      return rational(1);
    case QuadKind::RhoPairs: {
      int bi = rs.index_of(qc.ortho_beta), gi = rs.index_of(qc.ortho_gamma);
      int minus_rho = rs.neg_index(rs.rho_index());
      long prod = static_cast<long>(cb.constant_idx(bi, minus_rho)) *
                  cb.constant_idx(gi, minus_rho);
      return rational(-prod, 2);
    }
    case QuadKind::MutuallyOrthogonal: {
      std::array<int, 4> q = {rs.index_of(b1), rs.index_of(b2), rs.index_of(b3),
                              rs.index_of(b4)};
      auto minus = [&](int i) { return rs.neg_index(rs.rho_complement(i)); };  // b_i - rho
      long prod = static_cast<long>(cb.constant_idx(q[0], minus(q[3]))) *
                  cb.constant_idx(q[1], minus(q[0])) * cb.constant_idx(q[2], minus(q[3])) *
                  cb.constant_idx(q[3], minus(q[0]));
      return rational(prod);
    }
  }
  fail(errc::internal_error, "unreachable quadruple class");
}

/*
 * Triple product, evaluated through bracket identities: summing the four
 * insertion positions of w over each ordering (u1,u2,u3) of (x,y,z) and
 * using [a,b] = <a,b> x_rho on g_1 collapses the 24-term polarization to
 *
 *   24 xyz = sum over the 6 orderings of
 *            4 [u1,[u2,[u3,x_{-rho}]]] - 3 mu u1 - 2 <u1,P> u2 + <u1,u2> u3,
 *
 * with P = [x_rho,[u3,x_{-rho}]] and mu the x_rho-component functional of
 * [x_rho, [u2,[u3,x_{-rho}]]].  Agreement with the coefficientwise solve
 * (triple_product_gram) and with quadrilinear is covered by tests.
 */
template <class S>
G1Element<S> triple_product(const FtsContext& ctx, const G1Element<S>& x, const G1Element<S>& y,
                            const G1Element<S>& z) {
  const ChevalleyBasis& cb = ctx.basis();
  const RootSystem& rs = ctx.roots();
  std::array<const G1Element<S>*, 3> g1args = {&x, &y, &z};
  std::array<LieElement<S>, 3> lifted = {ctx.lift(x), ctx.lift(y), ctx.lift(z)};
  LieElement<S> xminus = cb.root_vector<S>(ctx.x_minus_rho_index());
  LieElement<S> xplus = cb.root_vector<S>(ctx.x_rho_index());

  LieElement<S> acc = cb.zero<S>();
  auto add_scaled_lie = [](LieElement<S>& a, const LieElement<S>& b, const S& t) {
    for (const auto& [k, v] : b.xs) {
      auto it = a.xs.find(k);
      if (it == a.xs.end())
        a.xs.emplace(k, v * t);
      else
        it->second = it->second + v * t;
    }
  };

  std::array<int, 3> perm = {0, 1, 2};
  do {
    const LieElement<S>& u1 = lifted[perm[0]];
    const LieElement<S>& u2 = lifted[perm[1]];
    const LieElement<S>& u3 = lifted[perm[2]];
    LieElement<S> r1 = bracket(cb, u3, xminus);
    LieElement<S> r2 = bracket(cb, u2, r1);
    LieElement<S> r3 = bracket(cb, u1, r2);
    LieElement<S> p = bracket(cb, xplus, r1);

    S mu = field_traits<S>::from_int(0);
    for (int k = 0; k < rs.rank(); ++k)
      if (!field_traits<S>::is_zero(r2.h[k]))
        mu = mu - r2.h[k] *
                      field_traits<S>::from_int(rs.pairing_with_simple(ctx.x_rho_index(), k));

    S u1p = bilinear_with_lie(ctx, *g1args[perm[0]], p);
    S u12 = bilinear(ctx, *g1args[perm[0]], *g1args[perm[1]]);

    add_scaled_lie(acc, r3, field_traits<S>::from_int(4));
    add_scaled_lie(acc, u1, field_traits<S>::from_int(-3) * mu);
    add_scaled_lie(acc, u2, field_traits<S>::from_int(-2) * u1p);
    add_scaled_lie(acc, u3, u12);
  } while (std::next_permutation(perm.begin(), perm.end()));

  acc.prune();
  S inv24 = field_traits<S>::from_int(1) / field_traits<S>::from_int(24);
  for (auto& [k, v] : acc.xs) v = v * inv24;
  return ctx.project_g1(acc);
}

/// Reference triple product: solves <x_b, xyz> = q(x_b, x, y, z) entry by
/// entry using the monomial Gram structure.
template <class S>
G1Element<S> triple_product_gram(const FtsContext& ctx, const G1Element<S>& x,
                                 const G1Element<S>& y, const G1Element<S>& z) {
  G1Element<S> r = ctx.template zero_g1<S>();
  for (int b : ctx.g1_indices()) {
    S num = quadrilinear(ctx, ctx.template g1_basis_vector<S>(b), x, y, z);
    if (field_traits<S>::is_zero(num)) continue;
    r.entries.emplace(ctx.partner(b), num / field_traits<S>::from_int(ctx.gram(b)));
  }
  r.prune();
  return r;
}

/// The defining identity 2(xxx)xy = <y,x> xxx + <y,xxx> x, tested exactly.
template <class S>
bool check_fts_axiom(const FtsContext& ctx, const G1Element<S>& x, const G1Element<S>& y) {
  G1Element<S> xxx = triple_product(ctx, x, x, x);
  G1Element<S> lhs = triple_product(ctx, xxx, x, y);
  lhs.scale(field_traits<S>::from_int(2));
  G1Element<S> rhs = ctx.template zero_g1<S>();
  rhs.add_scaled(xxx, bilinear(ctx, y, x));
  rhs.add_scaled(x, bilinear(ctx, y, xxx));
  return lhs == rhs;
}

}  // namespace ftsys
