#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace ftsys;
using testutil::coords;
using testutil::ctx_for;
using testutil::orthogonal_quadruple;

namespace {

G1Element<Rational> canonical_rank4(const FtsContext& ctx) {
  int ai = ctx.roots().alpha_root_index();
  auto x = ctx.g1_basis_vector<Rational>(ai);
  x += ctx.g1_basis_vector<Rational>(ctx.partner(ai));
  return x;
}

}  // namespace

TEST_CASE("bilinear form: monomial Gram matrix, skew, nondegenerate") {
  for (const char* label : {"d4", "b4", "e6", "f4"}) {
    INFO(label);
    auto& ctx = ctx_for(label);
    for (int b : ctx.g1_indices()) {
      int partners = 0;
      for (int g : ctx.g1_indices()) {
        Rational v = bilinear(ctx, ctx.g1_basis_vector<Rational>(b),
                              ctx.g1_basis_vector<Rational>(g));
        bool is_partner = (g == ctx.partner(b));
        CHECK(is_partner == (sgn(v) != 0));
        if (is_partner) {
          ++partners;
          CHECK(v == Rational(ctx.basis().constant_idx(b, g)));
        }
      }
      CHECK(partners == 1);  // monomial, hence invertible
    }
    // Skew-symmetry on random elements.
    Rng rng(2);
    for (int t = 0; t < 10; ++t) {
      auto x = random_g1<Rational>(ctx, rng);
      auto y = random_g1<Rational>(ctx, rng);
      CHECK(sgn(bilinear(ctx, x, x)) == 0);
      CHECK(bilinear(ctx, x, y) == -bilinear(ctx, y, x));
    }
  }
}

TEST_CASE("bilinear gram entries are units in the simply-laced types") {
  auto& ctx = ctx_for("e6");
  for (int b : ctx.g1_indices()) CHECK((ctx.gram(b) == 1 || ctx.gram(b) == -1));
}

TEST_CASE("quartic golden values") {
  for (const char* label : {"b4", "b5", "d4", "d5", "e6", "e7", "e8", "f4"}) {
    INFO(label);
    auto& ctx = ctx_for(label);
    CHECK(quartic(ctx, canonical_rank4(ctx)) == 6);
    auto xa = ctx.g1_basis_vector<Rational>(ctx.roots().alpha_root_index());
    CHECK(sgn(quartic(ctx, xa)) == 0);
  }
}

TEST_CASE("quartic vanishes on sums of up to three orthogonal root vectors") {
  for (const char* label : {"d4", "e6"}) {
    INFO(label);
    auto& ctx = ctx_for(label);
    auto quad = orthogonal_quadruple(ctx);
    auto x = ctx.zero_g1<Rational>();
    for (int k = 0; k < 3; ++k) {
      x += ctx.g1_basis_vector<Rational>(quad[k]);
      CHECK(sgn(quartic(ctx, x)) == 0);
    }
    x += ctx.g1_basis_vector<Rational>(quad[3]);
    CHECK(sgn(quartic(ctx, x)) != 0);  // the full quadruple is rank 4
  }
}

TEST_CASE("quartic is homogeneous of degree 4 and matches its polarization") {
  for (const char* label : {"d4", "b4", "e7"}) {
    INFO(label);
    auto& ctx = ctx_for(label);
    Rng rng(4);
    for (int t = 0; t < 8; ++t) {
      auto x = random_g1<Rational>(ctx, rng);
      Rational lam = random_nonzero_scalar<Rational>(rng);
      auto sx = x;
      sx.scale(lam);
      CHECK(quartic(ctx, sx) == lam * lam * lam * lam * quartic(ctx, x));
      CHECK(quartic(ctx, x) == quadrilinear(ctx, x, x, x, x));
    }
  }
}

TEST_CASE("equal-pair value of the 4-linear form is 1") {
  for (const char* label : {"b4", "d4", "d5", "e6", "f4"}) {
    INFO(label);
    auto& ctx = ctx_for(label);
    auto& rs = ctx.roots();
    for (int b : ctx.g1_indices()) {
      if (!rs.root(b).is_long) continue;
      auto xb = ctx.g1_basis_vector<Rational>(b);
      auto xp = ctx.g1_basis_vector<Rational>(ctx.partner(b));
      CHECK(quadrilinear(ctx, xb, xb, xp, xp) == 1);
    }
  }
}

TEST_CASE("orthogonal-pair value of the 4-linear form (d4 exhaustive)") {
  auto& ctx = ctx_for("d4");
  auto& rs = ctx.roots();
  auto& cb = ctx.basis();
  int minus_rho = rs.neg_index(rs.rho_index());
  long pairs = 0;
  for (int b : ctx.g1_indices())
    for (int g : ctx.g1_indices()) {
      if (b >= g || rs.pairing_roots(b, g) != 0) continue;
      Rational v = quadrilinear(ctx, ctx.g1_basis_vector<Rational>(b),
                                ctx.g1_basis_vector<Rational>(g),
                                ctx.g1_basis_vector<Rational>(ctx.partner(b)),
                                ctx.g1_basis_vector<Rational>(ctx.partner(g)));
      Rational expect = rational(
          -static_cast<long>(cb.constant_idx(b, minus_rho)) * cb.constant_idx(g, minus_rho), 2);
      CHECK(v == expect);
      CHECK(sgn(v) != 0);
      ++pairs;
    }
  CHECK(pairs == 12);  // 8 height-1 roots, orthogonal pairs
}

TEST_CASE("4-linear form vanishes off the 2 rho stratum") {
  auto& ctx = ctx_for("e6");
  auto& rs = ctx.roots();
  Coords tworho = rs.rho();
  for (int& v : tworho) v *= 2;
  Rng rng(6);
  long off = 0;
  while (off < 60) {
    std::array<int, 4> q;
    for (int& i : q) i = ctx.g1_indices()[rng.range(0, ctx.g1_dim() - 1)];
    Coords sum(rs.rank(), 0);
    for (int i : q)
      for (int k = 0; k < rs.rank(); ++k) sum[k] += rs.root(i).coords[k];
    if (sum == tworho) continue;
    CHECK(sgn(quadrilinear(ctx, ctx.g1_basis_vector<Rational>(q[0]),
                           ctx.g1_basis_vector<Rational>(q[1]),
                           ctx.g1_basis_vector<Rational>(q[2]),
                           ctx.g1_basis_vector<Rational>(q[3]))) == 0);
    ++off;
  }
}

TEST_CASE("4-linear form is symmetric in its arguments") {
  auto& ctx = ctx_for("d5");
  Rng rng(8);
  for (int t = 0; t < 5; ++t) {
    auto w = random_g1<Rational>(ctx, rng);
    auto x = random_g1<Rational>(ctx, rng);
    auto y = random_g1<Rational>(ctx, rng);
    auto z = random_g1<Rational>(ctx, rng);
    Rational v = quadrilinear(ctx, w, x, y, z);
    CHECK(v == quadrilinear(ctx, x, w, y, z));
    CHECK(v == quadrilinear(ctx, z, y, x, w));
    CHECK(v == quadrilinear(ctx, y, z, w, x));
  }
}

TEST_CASE("closed-form quartic: case values and d4 oracle agreement") {
  auto& ctx = ctx_for("d4");
  auto& rs = ctx.roots();

  Coords alpha = coords({0, 1, 0, 0});
  Coords ra = coords({1, 1, 1, 1});
  CHECK(quartic_closed_form(ctx, alpha, alpha, ra, ra) == 1);
  CHECK(quartic_closed_form(ctx, alpha, alpha, alpha, alpha) == 0);

  auto quad = orthogonal_quadruple(ctx);
  Rational v = quartic_closed_form(ctx, quad[0], quad[1], quad[2], quad[3]);
  CHECK((v == 1 || v == -1));

  // RhoPairs: the value is -1/2 times a product of two units.
  Coords beta = coords({1, 1, 1, 0});
  Coords gamma = coords({1, 1, 0, 1});
  Coords rb = rs.root(ctx.partner(rs.index_of(beta))).coords;
  Coords rg = rs.root(ctx.partner(rs.index_of(gamma))).coords;
  Rational vr = quartic_closed_form(ctx, beta, gamma, rb, rg);
  CHECK((vr == rational(1, 2) || vr == rational(-1, 2)));

  // Exhaustive agreement with the 24-term polarization over all ordered
  // quadruples of g_1 basis vectors.
  const auto& g1 = ctx.g1_indices();
  long checked = 0;
  for (int a : g1)
    for (int b : g1)
      for (int c : g1)
        for (int d : g1) {
          Rational closed = quartic_closed_form(ctx, rs.root(a).coords, rs.root(b).coords,
                                                rs.root(c).coords, rs.root(d).coords);
          Rational oracle = quadrilinear(ctx, ctx.g1_basis_vector<Rational>(a),
                                         ctx.g1_basis_vector<Rational>(b),
                                         ctx.g1_basis_vector<Rational>(c),
                                         ctx.g1_basis_vector<Rational>(d));
          CHECK(closed == oracle);
          ++checked;
        }
  CHECK(checked == 4096);

  CHECK_THROWS_AS(quartic_closed_form(ctx_for("b4"), coords({1, 1, 0, 0}),
                                      coords({1, 1, 0, 0}), coords({1, 1, 0, 0}),
                                      coords({1, 1, 0, 0})),
                  Error);
}

TEST_CASE("triple product: basis rules") {
  auto& ctx = ctx_for("d4");
  // x_b x_b x_g = 0 unless b + g = rho.
  for (int b : ctx.g1_indices())
    for (int g : ctx.g1_indices()) {
      auto p = triple_product(ctx, ctx.g1_basis_vector<Rational>(b),
                              ctx.g1_basis_vector<Rational>(b),
                              ctx.g1_basis_vector<Rational>(g));
      if (g == ctx.partner(b))
        CHECK(!p.is_zero());
      else
        CHECK(p.is_zero());
    }
}

TEST_CASE("triple product of the rank-4 representative") {
  for (const char* label : {"d4", "b4", "e6"}) {
    INFO(label);
    auto& ctx = ctx_for(label);
    int ai = ctx.roots().alpha_root_index();
    auto xa = ctx.g1_basis_vector<Rational>(ai);
    auto xra = ctx.g1_basis_vector<Rational>(ctx.partner(ai));
    auto x = xa;
    x += xra;
    // xxx = 3 <x_{rho-a}, x_a> (x_a - x_{rho-a})
    Rational s = bilinear(ctx, xra, xa);
    auto expect = ctx.zero_g1<Rational>();
    expect.add_scaled(xa, 3 * s);
    expect.add_scaled(xra, -3 * s);
    CHECK(triple_product(ctx, x, x, x) == expect);
  }
}

TEST_CASE("triple product: fast path equals the Gram solve and the contract") {
  for (const char* label : {"d4", "b4", "f4", "e6", "e7"}) {
    INFO(label);
    auto& ctx = ctx_for(label);
    Rng rng(10);
    for (int t = 0; t < 6; ++t) {
      auto x = random_g1<Rational>(ctx, rng);
      auto y = random_g1<Rational>(ctx, rng);
      auto z = random_g1<Rational>(ctx, rng);
      auto fast = triple_product(ctx, x, y, z);
      CHECK(fast == triple_product_gram(ctx, x, y, z));
      // Symmetry in the three arguments.
      CHECK(fast == triple_product(ctx, z, x, y));
      CHECK(fast == triple_product(ctx, y, z, x));
      // Defining contract <w, xyz> = q(w, x, y, z) on every basis vector.
      for (int b : ctx.g1_indices()) {
        auto w = ctx.g1_basis_vector<Rational>(b);
        CHECK(bilinear(ctx, w, fast) == quadrilinear(ctx, w, x, y, z));
      }
    }
  }
}

TEST_CASE("fts axiom") {
  for (const char* label : {"b4", "d4", "d5", "e6", "f4"}) {
    INFO(label);
    auto& ctx = ctx_for(label);
    // x = x_alpha + x_{rho-alpha} against every basis vector.
    auto x = canonical_rank4(ctx);
    for (int b : ctx.g1_indices())
      CHECK(check_fts_axiom(ctx, x, ctx.g1_basis_vector<Rational>(b)));
    // Zero element.
    CHECK(check_fts_axiom(ctx, ctx.zero_g1<Rational>(), x));
    // Random pairs.
    Rng rng(12);
    for (int t = 0; t < 10; ++t)
      CHECK(check_fts_axiom(ctx, random_g1<Rational>(ctx, rng), random_g1<Rational>(ctx, rng)));
  }
}

TEST_CASE("forms over a prime field") {
  using F = Fp<13>;
  auto& ctx = ctx_for("d4");
  int ai = ctx.roots().alpha_root_index();
  auto x = ctx.g1_basis_vector<F>(ai);
  x += ctx.g1_basis_vector<F>(ctx.partner(ai));
  CHECK(quartic(ctx, x) == F(6));

  // i = 5 satisfies i^2 = -1 in F_13: mu_4 scaling of both forms.
  F i = F(5);
  REQUIRE(i * i == F(-1));
  Rng rng(14);
  for (int t = 0; t < 10; ++t) {
    auto u = random_g1<F>(ctx, rng);
    auto v = random_g1<F>(ctx, rng);
    auto iu = u, iv = v;
    iu.scale(i);
    iv.scale(i);
    CHECK(quartic(ctx, iu) == quartic(ctx, u));
    CHECK(bilinear(ctx, iu, iv) == F(0) - bilinear(ctx, u, v));
    CHECK(check_fts_axiom(ctx, u, v));
    CHECK(triple_product(ctx, u, u, v) == triple_product_gram(ctx, u, u, v));
  }

  // A second prime field as the swap-in sanity check.
  using F7 = Fp<7>;
  auto x7 = ctx.g1_basis_vector<F7>(ai);
  x7 += ctx.g1_basis_vector<F7>(ctx.partner(ai));
  CHECK(quartic(ctx, x7) == F7(6));
}

TEST_CASE("g1 element validation") {
  auto& ctx = ctx_for("d4");
  CHECK_THROWS_AS(ctx.g1_element<Rational>({{coords({1, 0, 0, 0}), Rational(1)}}), Error);
  CHECK_THROWS_AS(ctx.g1_element<Rational>({{coords({2, 0, 0, 1}), Rational(1)}}), Error);
  // Zero coefficients are pruned.
  auto e = ctx.g1_element<Rational>(
      {{coords({0, 1, 0, 0}), Rational(2)}, {coords({0, 1, 0, 0}), Rational(-2)}});
  CHECK(e.is_zero());
}

TEST_CASE("mixed contexts are rejected by the forms") {
  auto ctx1 = FtsContext::build(parse_type_label("d4"));
  auto ctx2 = FtsContext::build(parse_type_label("d4"));
  auto x = ctx1.g1_basis_vector<Rational>(ctx1.roots().alpha_root_index());
  auto y = ctx2.g1_basis_vector<Rational>(ctx2.roots().alpha_root_index());
  CHECK_THROWS_AS(bilinear(ctx1, x, y), Error);
}

TEST_CASE("g1 json round trip") {
  auto& ctx = ctx_for("e7");
  Rng rng(16);
  for (int t = 0; t < 5; ++t) {
    auto x = random_g1<Rational>(ctx, rng);
    auto j = g1_to_json(ctx, x);
    CHECK(g1_from_json(ctx, j) == x);
  }
  // String-encoded big integers survive.
  json j = {{"type", "e7"},
            {"entries",
             {{{"root_coords", json(ctx.roots().root(ctx.g1_indices()[0]).coords)},
               {"numerator", "123456789012345678901234567890"},
               {"denominator", 7}}}}};
  auto x = g1_from_json(ctx, j);
  Rational expect(mpz_class("123456789012345678901234567890"), mpz_class(7));
  expect.canonicalize();
  CHECK(x.entries.begin()->second == expect);
  CHECK(g1_from_json(ctx, g1_to_json(ctx, x)) == x);

  // Type mismatch and malformed coordinates are parse errors.
  json bad = {{"type", "d4"}, {"entries", json::array()}};
  CHECK_THROWS_AS(g1_from_json(ctx, bad), Error);
  json bad2 = {{"type", "e7"},
               {"entries", {{{"root_coords", {9, 9, 9, 9, 9, 9, 9}}, {"numerator", 1}}}}};
  CHECK_THROWS_AS(g1_from_json(ctx, bad2), Error);
}
