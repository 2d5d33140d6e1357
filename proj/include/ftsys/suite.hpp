#pragma once

/*
 * Named verification suites.  Each suite evaluates a family of exact
 * identities over one root system and reports every violation; a correct
 * build produces empty failure lists.  Exhaustive mode enumerates all
 * applicable tuples (intended for the small types D4, D5, E6); sampled
 * mode draws a reproducible stream from (seed, count).
 */

#include <string>

#include "ftsys/classify.hpp"
#include "ftsys/rng.hpp"

namespace ftsys {

namespace detail {

inline std::string coords_str(const RootSystem& rs, int idx) {
  std::string s = "(";
  for (int k = 0; k < rs.rank(); ++k)
    s += (k ? "," : "") + std::to_string(rs.root(idx).coords[k]);
  return s + ")";
}

inline std::string tuple_str(const RootSystem& rs, std::initializer_list<int> idxs) {
  std::string s;
  for (int i : idxs) s += coords_str(rs, i) + " ";
  if (!s.empty()) s.pop_back();
  return s;
}

}  // namespace detail

/*
 * Forms suite: nondegeneracy of <-,->, the special values of the 4-linear
 * form, the vanishing off sum 2*rho, agreement of the closed form with the
 * 24-term polarization, the pairing identities for quadruples summing to
 * 2*rho, and the orthogonal-pair structure-constant product.
 */
inline SuiteReport run_forms_suite(const FtsContext& ctx, const SuiteMode& mode) {
  const RootSystem& rs = ctx.roots();
  const ChevalleyBasis& cb = ctx.basis();
  SuiteReport rep;
  rep.suite = "forms";
  rep.type_label = type_label(rs.type());
  rep.mode = mode;

  const auto& g1 = ctx.g1_indices();
  const int dim = static_cast<int>(g1.size());
  const bool simply_laced = rs.type().simply_laced();
  const int minus_rho = rs.neg_index(rs.rho_index());

  {  // Gram matrix is monomial: each basis vector has exactly one partner.
    CheckResult c{"gram_monomial", "<x_b, x_g> nonzero exactly when b+g = rho", 0, {}};
    for (int b : g1) {
      ++c.tuples_checked;
      int nonzero = 0;
      for (int g : g1)
        if (cb.sum_index(b, g) == rs.rho_index()) ++nonzero;
      int p = ctx.partner(b);
      if (nonzero != 1 || ctx.partner(p) != b || ctx.gram(b) == 0)
        c.failures.push_back(detail::coords_str(rs, b));
    }
    rep.checks.push_back(std::move(c));
  }

  {  // q(x_b, x_b, x_{rho-b}, x_{rho-b}) = 1 for long b.
    CheckResult c{"equal_pair_value", "q(x_b,x_b,x_rb,x_rb) = 1 for long height-1 b", 0, {}};
    for (int b : g1) {
      if (!rs.is_long_idx(b)) continue;
      ++c.tuples_checked;
      auto xb = ctx.g1_basis_vector<Rational>(b);
      auto xp = ctx.g1_basis_vector<Rational>(ctx.partner(b));
      if (quadrilinear(ctx, xb, xb, xp, xp) != 1)
        c.failures.push_back(detail::coords_str(rs, b));
    }
    rep.checks.push_back(std::move(c));
  }

  {  // q(x_b, x_g, x_{rho-b}, x_{rho-g}) = -1/2 c(b,-rho) c(g,-rho), orthogonal long b, g.
    CheckResult c{"orthogonal_pair_value",
                  "q(x_b,x_g,x_rb,x_rg) = -1/2 c(b,-r)c(g,-r) for orthogonal long pairs", 0, {}};
    auto check_pair = [&](int b, int g) {
      ++c.tuples_checked;
      Rational expect = rational(-static_cast<long>(cb.constant_idx(b, minus_rho)) *
                                     cb.constant_idx(g, minus_rho),
                                 2);
      auto v = quadrilinear(ctx, ctx.g1_basis_vector<Rational>(b),
                            ctx.g1_basis_vector<Rational>(g),
                            ctx.g1_basis_vector<Rational>(ctx.partner(b)),
                            ctx.g1_basis_vector<Rational>(ctx.partner(g)));
      if (v != expect || sgn(v) == 0) c.failures.push_back(detail::tuple_str(rs, {b, g}));
    };
    if (mode.exhaustive) {
      for (int b : g1)
        for (int g : g1)
          if (b < g && rs.is_long_idx(b) && rs.is_long_idx(g) && rs.pairing_roots(b, g) == 0)
            check_pair(b, g);
    } else {
      Rng rng(mode.seed);
      long done = 0;
      while (done < mode.count) {
        int b = g1[rng.range(0, dim - 1)], g = g1[rng.range(0, dim - 1)];
        if (b == g || !rs.is_long_idx(b) || !rs.is_long_idx(g) || rs.pairing_roots(b, g) != 0)
          continue;
        check_pair(b, g);
        ++done;
      }
    }
    rep.checks.push_back(std::move(c));
  }

  {  // aux2: the four structure constants of an orthogonal pair multiply to 1.
    CheckResult c{"orthogonal_pair_constants",
                  "c(b,g-r) c(g,b-r) c(b,-r) c(g,-r) = 1 for orthogonal long pairs", 0, {}};
    auto check_pair = [&](int b, int g) {
      ++c.tuples_checked;
      if (cb.aux2_product(rs.root(b).coords, rs.root(g).coords) != 1)
        c.failures.push_back(detail::tuple_str(rs, {b, g}));
    };
    if (mode.exhaustive) {
      for (int b : g1)
        for (int g : g1)
          if (b < g && rs.is_long_idx(b) && rs.is_long_idx(g) && rs.pairing_roots(b, g) == 0)
            check_pair(b, g);
    } else {
      Rng rng(mode.seed + 1);
      long done = 0;
      while (done < mode.count) {
        int b = g1[rng.range(0, dim - 1)], g = g1[rng.range(0, dim - 1)];
        if (b == g || !rs.is_long_idx(b) || !rs.is_long_idx(g) || rs.pairing_roots(b, g) != 0)
          continue;
        check_pair(b, g);
        ++done;
      }
    }
    rep.checks.push_back(std::move(c));
  }

  {  // Vanishing off 2*rho and closed-form agreement on 2*rho quadruples.
    CheckResult cv{"vanishing_off_two_rho",
                   "q(x_b1,..,x_b4) = 0 when b1+b2+b3+b4 != 2 rho", 0, {}};
    CheckResult ca{"closed_form_agreement",
                   "closed-form quartic equals the 24-term polarization", 0, {}};
    Coords tworho = rs.rho();
    for (int& v : tworho) v *= 2;
    auto check_quad = [&](int a, int b, int c, int d) {
      Coords sum(rs.rank(), 0);
      for (int idx : {a, b, c, d})
        for (int k = 0; k < rs.rank(); ++k) sum[k] += rs.root(idx).coords[k];
      auto value = quadrilinear(ctx, ctx.g1_basis_vector<Rational>(a),
                                ctx.g1_basis_vector<Rational>(b),
                                ctx.g1_basis_vector<Rational>(c),
                                ctx.g1_basis_vector<Rational>(d));
      if (sum != tworho) {
        ++cv.tuples_checked;
        if (sgn(value) != 0) cv.failures.push_back(detail::tuple_str(rs, {a, b, c, d}));
      } else if (simply_laced) {
        ++ca.tuples_checked;
        Rational closed = quartic_closed_form(ctx, rs.root(a).coords, rs.root(b).coords,
                                              rs.root(c).coords, rs.root(d).coords);
        if (value != closed || sgn(value) == 0)
          ca.failures.push_back(detail::tuple_str(rs, {a, b, c, d}));
      }
    };
    if (mode.exhaustive) {
      // All ordered triples; the fourth root is 2*rho - (a+b+c) when it is
      // a height-1 root, and a deterministic off-sum witness otherwise.
      for (int a : g1)
        for (int b : g1)
          for (int c : g1) {
            Coords rest(rs.rank(), 0);
            for (int k = 0; k < rs.rank(); ++k)
              rest[k] = tworho[k] - rs.root(a).coords[k] - rs.root(b).coords[k] -
                        rs.root(c).coords[k];
            int d = rs.index_of(rest);
            if (d >= 0 && rs.alpha_height_idx(d) == 1)
              check_quad(a, b, c, d);
            else
              check_quad(a, b, c, a);  // sum necessarily != 2*rho
          }
    } else {
      Rng rng(mode.seed + 2);
      for (long t = 0; t < mode.count; ++t) {
        int a = g1[rng.range(0, dim - 1)], b = g1[rng.range(0, dim - 1)],
            c = g1[rng.range(0, dim - 1)];
        // Half the draws target the 2*rho stratum through the complement.
        if (rng.range(0, 1) == 0) {
          Coords rest(rs.rank(), 0);
          for (int k = 0; k < rs.rank(); ++k)
            rest[k] = tworho[k] - rs.root(a).coords[k] - rs.root(b).coords[k] -
                      rs.root(c).coords[k];
          int d = rs.index_of(rest);
          check_quad(a, b, c, d >= 0 && rs.alpha_height_idx(d) == 1 ? d : a);
        } else {
          check_quad(a, b, c, g1[rng.range(0, dim - 1)]);
        }
      }
    }
    rep.checks.push_back(std::move(cv));
    if (simply_laced) rep.checks.push_back(std::move(ca));
  }

  {  // Pairing identities for long quadruples summing to 2*rho.
    CheckResult c{"two_rho_pairing_identities",
                  "<b1,b2>+<b1,b3>+<b1,b4> = 0 and <b1,b2> = <b3,b4> when sum = 2 rho", 0, {}};
    Coords tworho = rs.rho();
    for (int& v : tworho) v *= 2;
    auto check_quad = [&](int a, int b, int cc, int d) {
      if (!rs.is_long_idx(a) || !rs.is_long_idx(b) || !rs.is_long_idx(cc) || !rs.is_long_idx(d))
        return;
      ++c.tuples_checked;
      int s = rs.pairing_roots(a, b) + rs.pairing_roots(a, cc) + rs.pairing_roots(a, d);
      if (s != 0 || rs.pairing_roots(a, b) != rs.pairing_roots(cc, d))
        c.failures.push_back(detail::tuple_str(rs, {a, b, cc, d}));
    };
    auto fourth = [&](int a, int b, int cc) {
      Coords rest(rs.rank(), 0);
      for (int k = 0; k < rs.rank(); ++k)
        rest[k] =
            tworho[k] - rs.root(a).coords[k] - rs.root(b).coords[k] - rs.root(cc).coords[k];
      int d = rs.index_of(rest);
      return (d >= 0 && rs.alpha_height_idx(d) == 1) ? d : -1;
    };
    if (mode.exhaustive) {
      for (int a : g1)
        for (int b : g1)
          for (int cc : g1)
            if (int d = fourth(a, b, cc); d >= 0) check_quad(a, b, cc, d);
    } else {
      Rng rng(mode.seed + 3);
      long done = 0;
      while (done < mode.count) {
        int a = g1[rng.range(0, dim - 1)], b = g1[rng.range(0, dim - 1)],
            cc = g1[rng.range(0, dim - 1)];
        int d = fourth(a, b, cc);
        if (d < 0) continue;
        check_quad(a, b, cc, d);
        ++done;
      }
    }
    rep.checks.push_back(std::move(c));
  }

  return rep;
}

/*
 * FTS suite: the defining triple-product identity on random pairs, the
 * strictly-regular evaluation rules on long basis vectors, xx g_1 != 0
 * for nonzero samples, the golden value q(x_a + x_{rho-a}) = 6, and the
 * rank ladder of the canonical orbit representatives.
 */
inline SuiteReport run_fts_suite(const FtsContext& ctx, const SuiteMode& mode) {
  const RootSystem& rs = ctx.roots();
  SuiteReport rep;
  rep.suite = "fts";
  rep.type_label = type_label(rs.type());
  rep.mode = mode;
  const long count = mode.count > 0 ? mode.count : 100;
  const auto& g1 = ctx.g1_indices();

  {  // 2(xxx)xy = <y,x> xxx + <y,xxx> x on seeded random pairs.
    CheckResult c{"triple_identity", "2(xxx)xy = <y,x>xxx + <y,xxx>x exactly", 0, {}};
    Rng rng(mode.seed);
    for (long t = 0; t < count; ++t) {
      auto x = random_g1<Rational>(ctx, rng);
      auto y = random_g1<Rational>(ctx, rng);
      ++c.tuples_checked;
      if (!check_fts_axiom(ctx, x, y)) c.failures.push_back("pair " + std::to_string(t));
    }
    rep.checks.push_back(std::move(c));
  }

  {  // xxy = <y,x> x and q(x,x,y,z) = <y,x><z,x> for long basis x.
    CheckResult c5a{"strictly_regular_product", "xxy = <y,x>x for long basis x", 0, {}};
    CheckResult c5b{"strictly_regular_form", "q(x,x,y,z) = <y,x><z,x> for long basis x", 0, {}};
    Rng rng(mode.seed + 1);
    const long per_root = std::max<long>(1, count / 10);
    for (int b : g1) {
      if (!rs.is_long_idx(b)) continue;
      auto xb = ctx.g1_basis_vector<Rational>(b);
      for (long t = 0; t < per_root; ++t) {
        auto y = random_g1<Rational>(ctx, rng);
        auto z = random_g1<Rational>(ctx, rng);
        ++c5a.tuples_checked;
        auto lhs = triple_product(ctx, xb, xb, y);
        auto rhs = ctx.zero_g1<Rational>();
        rhs.add_scaled(xb, bilinear(ctx, y, xb));
        if (!(lhs == rhs)) c5a.failures.push_back(detail::coords_str(rs, b));
        ++c5b.tuples_checked;
        if (quadrilinear(ctx, xb, xb, y, z) != bilinear(ctx, y, xb) * bilinear(ctx, z, xb))
          c5b.failures.push_back(detail::coords_str(rs, b));
      }
    }
    rep.checks.push_back(std::move(c5a));
    rep.checks.push_back(std::move(c5b));
  }

  {  // xx g_1 != 0 for nonzero x.
    CheckResult c{"xx_nonzero", "x != 0 implies xx g_1 != 0", 0, {}};
    Rng rng(mode.seed + 2);
    for (long t = 0; t < count; ++t) {
      auto x = random_nonzero_g1<Rational>(ctx, rng);
      ++c.tuples_checked;
      bool nonzero = false;
      for (int b : g1) {
        if (!triple_product(ctx, x, x, ctx.g1_basis_vector<Rational>(b)).is_zero()) {
          nonzero = true;
          break;
        }
      }
      if (!nonzero) c.failures.push_back("sample " + std::to_string(t));
    }
    rep.checks.push_back(std::move(c));
  }

  {  // q(x_alpha + x_{rho-alpha}) = 6.
    CheckResult c{"golden_quartic", "q(x_a + x_{rho-a}) = 6", 1, {}};
    auto x = ctx.g1_basis_vector<Rational>(rs.alpha_root_index());
    x += ctx.g1_basis_vector<Rational>(ctx.partner(rs.alpha_root_index()));
    if (quartic(ctx, x) != 6) c.failures.push_back("value != 6");
    rep.checks.push_back(std::move(c));
  }

  {  // Canonical representatives classify to ranks 0..4.
    CheckResult c{"rank_ladder", "sum of k orthogonal basis vectors has rank k", 5, {}};
    int ai = rs.alpha_root_index();
    int other = -1;
    for (int b : g1)
      if (b != ai && rs.pairing_roots(ai, b) == 0) { other = b; break; }
    auto quad = rs.extend_orthogonal_pair(rs.root(ai).coords, rs.root(other).coords);
    for (int k = 0; k <= 4; ++k) {
      auto x = ctx.zero_g1<Rational>();
      if (k < 4) {
        for (int i = 0; i < k; ++i) x += ctx.g1_basis_vector<Rational>(quad[i]);
      } else {
        x += ctx.g1_basis_vector<Rational>(ai);
        x += ctx.g1_basis_vector<Rational>(ctx.partner(ai));
      }
      if (rank_classify(ctx, x).rank != k)
        c.failures.push_back("representative of rank " + std::to_string(k));
    }
    rep.checks.push_back(std::move(c));
  }

  return rep;
}

/*
 * Stabilizer-ingredients suite: scalar (mu_4) behaviour of both forms,
 * invariance under the height-0 torus, the eigenspace dimensions, the
 * cubic forms on the +-1 eigenspaces, and for D4 the triality action.
 */
inline SuiteReport run_stabilizer_ingredients_suite(const FtsContext& ctx,
                                                    const SuiteMode& mode) {
  const RootSystem& rs = ctx.roots();
  const ChevalleyBasis& cb = ctx.basis();
  SuiteReport rep;
  rep.suite = "stab";
  rep.type_label = type_label(rs.type());
  rep.mode = mode;
  const long count = mode.count > 0 ? mode.count : 100;
  const bool is_d4 = rs.type().family == Family::D && rs.type().rank == 4;

  {  // q(tx) = t^4 q(x) and <tx,ty> = t^2 <x,y>; over F_13 with i = 5 this
     // gives the mu_4 facts q(ix) = q(x) and <ix,iy> = -<x,y>.
    CheckResult c{"scalar_scaling", "q(tx) = t^4 q(x), <tx,ty> = t^2 <x,y>", 0, {}};
    Rng rng(mode.seed);
    for (long t = 0; t < count; ++t) {
      auto x = random_g1<Rational>(ctx, rng);
      auto y = random_g1<Rational>(ctx, rng);
      Rational lam = random_nonzero_scalar<Rational>(rng);
      auto xs = x, ys = y;
      xs.scale(lam);
      ys.scale(lam);
      ++c.tuples_checked;
      bool ok = quartic(ctx, xs) == lam * lam * lam * lam * quartic(ctx, x) &&
                bilinear(ctx, xs, ys) == lam * lam * bilinear(ctx, x, y);
      if (!ok) c.failures.push_back("sample " + std::to_string(t));
    }
    rep.checks.push_back(std::move(c));

    CheckResult ci{"fourth_root_of_unity",
                   "over F_13 with i = 5: q(ix) = q(x) and <ix,iy> = -<x,y>", 0, {}};
    using F = Fp<13>;
    F i = F(5);  // i^2 = 25 = -1 mod 13
    Rng rng13(mode.seed + 7);
    for (long t = 0; t < count; ++t) {
      auto x = random_g1<F>(ctx, rng13);
      auto y = random_g1<F>(ctx, rng13);
      auto xi = x, yi = y;
      xi.scale(i);
      yi.scale(i);
      ++ci.tuples_checked;
      bool ok = i * i == F(-1) && quartic(ctx, xi) == quartic(ctx, x) &&
                bilinear(ctx, xi, yi) == F(0) - bilinear(ctx, x, y);
      if (!ok) ci.failures.push_back("sample " + std::to_string(t));
    }
    rep.checks.push_back(std::move(ci));
  }

  {  // One-parameter torus along a height-0 coroot preserves both forms.
    CheckResult c{"height0_torus_invariance",
                  "torus scaling along a height-0 coroot preserves q and <-,->", 0, {}};
    std::vector<int> h0 = rs.roots_of_alpha_height(0);
    Rng rng(mode.seed + 1);
    for (long t = 0; t < count; ++t) {
      int gi = h0[rng.range(0, static_cast<long>(h0.size()) - 1)];
      std::vector<long> lambda(cb.coroot_coords(gi).begin(), cb.coroot_coords(gi).end());
      Rational tt = random_nonzero_scalar<Rational>(rng);
      auto x = random_g1<Rational>(ctx, rng);
      auto y = random_g1<Rational>(ctx, rng);
      auto sx = ctx.project_g1(torus_scale(cb, lambda, tt, ctx.lift(x)));
      auto sy = ctx.project_g1(torus_scale(cb, lambda, tt, ctx.lift(y)));
      ++c.tuples_checked;
      if (quartic(ctx, sx) != quartic(ctx, x) || bilinear(ctx, sx, sy) != bilinear(ctx, x, y))
        c.failures.push_back("sample " + std::to_string(t));
    }
    rep.checks.push_back(std::move(c));
  }

  if (rs.type().simply_laced()) {
    {  // Eigenspace dimensions (1, n, n, 1).
      CheckResult c{"eigenspace_dimensions", "ad(h_{rho-a} - h_a) splits g_1 as (1,n,n,1)", 1,
                    {}};
      auto dec = eigen_decompose(ctx);
      size_t n = (ctx.g1_indices().size() - 2) / 2;
      bool ok = dec.minus3.size() == 1 && dec.plus3.size() == 1 && dec.minus1.size() == n &&
                dec.plus1.size() == n && dec.minus3[0] == rs.alpha_root_index() &&
                dec.plus3[0] == ctx.partner(rs.alpha_root_index());
      if (!ok) c.failures.push_back("unexpected eigenspace sizes");
      rep.checks.push_back(std::move(c));
    }

    {  // f_1 does not vanish on A; for D4 it is the monomial e l1 l2 l3.
      CheckResult c{"cubic_forms", "f_1 nonzero on A; f_2 nonzero on B", 0, {}};
      auto dec = eigen_decompose(ctx);
      int ai = rs.alpha_root_index();
      // A triple of mutually orthogonal +1 roots completing alpha.
      int b1 = -1, b2 = -1, b3 = -1;
      for (int b : dec.plus1) {
        if (rs.pairing_roots(ai, b) != 0) continue;
        b1 = b;
        break;
      }
      auto quad = rs.extend_orthogonal_pair(rs.root(ai).coords, rs.root(b1).coords);
      b2 = rs.index_of(quad[2]);
      b3 = rs.index_of(quad[3]);
      auto a = ctx.g1_basis_vector<Rational>(b1);
      a += ctx.g1_basis_vector<Rational>(b2);
      a += ctx.g1_basis_vector<Rational>(b3);
      ++c.tuples_checked;
      if (sgn(cubic_f1(ctx, a)) == 0) c.failures.push_back("f_1 vanishes on the triple");
      // Mirror triple in B.
      auto b = ctx.g1_basis_vector<Rational>(ctx.partner(b1));
      b += ctx.g1_basis_vector<Rational>(ctx.partner(b2));
      b += ctx.g1_basis_vector<Rational>(ctx.partner(b3));
      ++c.tuples_checked;
      if (sgn(cubic_f2(ctx, b)) == 0) c.failures.push_back("f_2 vanishes on the triple");

      if (is_d4) {
        // f_1(l1 x_b1 + l2 x_b2 + l3 x_b3) = e l1 l2 l3 with a fixed sign e.
        Rational eps = cubic_f1(ctx, a);
        Rng rng(mode.seed + 2);
        for (long t = 0; t < count; ++t) {
          Rational l1 = random_scalar<Rational>(rng), l2 = random_scalar<Rational>(rng),
                   l3 = random_scalar<Rational>(rng);
          auto e = ctx.zero_g1<Rational>();
          e.add_scaled(ctx.g1_basis_vector<Rational>(b1), l1);
          e.add_scaled(ctx.g1_basis_vector<Rational>(b2), l2);
          e.add_scaled(ctx.g1_basis_vector<Rational>(b3), l3);
          ++c.tuples_checked;
          if (cubic_f1(ctx, e) != eps * l1 * l2 * l3)
            c.failures.push_back("monomial form, sample " + std::to_string(t));
        }
        if (eps != 1 && eps != -1) c.failures.push_back("epsilon is not a unit");
      }
      rep.checks.push_back(std::move(c));
    }
  }

  if (is_d4) {  // Triality: all six diagram automorphisms.
    CheckResult c{"triality",
                  "diagram automorphisms are bracket homomorphisms fixing x_rho, x_-rho, "
                  "preserving q",
                  0, {}};
    const std::array<std::array<int, 3>, 6> perms = {
        {{1, 3, 4}, {1, 4, 3}, {3, 1, 4}, {3, 4, 1}, {4, 1, 3}, {4, 3, 1}}};
    Rng rng(mode.seed + 3);
    for (const auto& p : perms) {
      auto aut = diagram_automorphism_d4(cb, p);
      // Bracket homomorphism on every basis pair.
      bool hom = true;
      const int m = rs.num_roots();
      std::vector<LieElement<Rational>> basis;
      for (int i = 0; i < m; ++i) basis.push_back(cb.root_vector<Rational>(i));
      for (int k = 0; k < rs.rank(); ++k) basis.push_back(cb.coroot_vector<Rational>(k));
      for (size_t i = 0; i < basis.size() && hom; ++i)
        for (size_t j = 0; j < basis.size(); ++j) {
          auto lhs = aut.apply(cb, bracket(cb, basis[i], basis[j]));
          auto rhs = bracket(cb, aut.apply(cb, basis[i]), aut.apply(cb, basis[j]));
          if (!(lhs == rhs)) { hom = false; break; }
        }
      ++c.tuples_checked;
      if (!hom) c.failures.push_back("homomorphism fails");
      auto xr = cb.root_vector<Rational>(rs.rho_index());
      auto xmr = cb.root_vector<Rational>(rs.neg_index(rs.rho_index()));
      ++c.tuples_checked;
      if (!(aut.apply(cb, xr) == xr) || !(aut.apply(cb, xmr) == xmr))
        c.failures.push_back("x_rho not fixed");
      for (long t = 0; t < count; ++t) {
        auto x = random_g1<Rational>(ctx, rng);
        auto sx = ctx.project_g1(aut.apply(cb, ctx.lift(x)));
        ++c.tuples_checked;
        if (quartic(ctx, sx) != quartic(ctx, x))
          c.failures.push_back("q not preserved, sample " + std::to_string(t));
      }
    }
    rep.checks.push_back(std::move(c));
  }

  return rep;
}

inline SuiteReport run_suite(const FtsContext& ctx, const std::string& name,
                             const SuiteMode& mode) {
  if (name == "forms") return run_forms_suite(ctx, mode);
  if (name == "fts") return run_fts_suite(ctx, mode);
  if (name == "stab") return run_stabilizer_ingredients_suite(ctx, mode);
  fail(errc::parse_error, "unknown suite '" + name + "'");
}

}  // namespace ftsys
