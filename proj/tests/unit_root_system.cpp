#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace ftsys;
using testutil::coords;
using testutil::ctx_for;

TEST_CASE("enumeration counts and distinguished roots") {
  struct Row {
    const char* label;
    int roots, height1, alpha_node;  // alpha_node is 1-based Bourbaki
  };
  // |roots| = dim(g) - rank; e.g. 240 = 248 - 8 for E8, 24 = 28 - 4 for D4.
  const Row rows[] = {
      {"b4", 32, 10, 2},  {"b5", 50, 14, 2}, {"d4", 24, 8, 2},  {"d5", 40, 12, 2},
      {"d6", 60, 16, 2},  {"e6", 72, 20, 2}, {"e7", 126, 32, 1}, {"e8", 240, 56, 8},
      {"f4", 48, 14, 1},
  };
  for (const Row& row : rows) {
    INFO(row.label);
    auto rs = build_root_system(parse_type_label(row.label));
    CHECK(rs.num_roots() == row.roots);
    CHECK(static_cast<int>(rs.height1_indices().size()) == row.height1);
    CHECK(rs.alpha_simple_index() == row.alpha_node - 1);
    CHECK(rs.root(rs.alpha_root_index()).is_long);

    int c2 = 0, cm2 = 0;
    for (int i = 0; i < rs.num_roots(); ++i) {
      int h = rs.alpha_height_idx(i);
      CHECK((h >= -2 && h <= 2));
      if (h == 2) ++c2;
      if (h == -2) ++cm2;
    }
    CHECK(c2 == 1);
    CHECK(cm2 == 1);
    CHECK(rs.alpha_height(rs.rho()) == 2);
  }
}

TEST_CASE("e8 has 126 roots of alpha-height zero") {
  auto& rs = ctx_for("e8").roots();
  CHECK(rs.roots_of_alpha_height(0).size() == 126);
}

TEST_CASE("rejected types") {
  CHECK_THROWS_AS(parse_type_label("a3"), Error);
  CHECK_THROWS_AS(parse_type_label("c4"), Error);
  CHECK_THROWS_AS(parse_type_label("g2"), Error);
  CHECK_THROWS_AS(parse_type_label("b3"), Error);
  CHECK_THROWS_AS(parse_type_label("d3"), Error);
  CHECK_THROWS_AS(parse_type_label("e9"), Error);
  CHECK_THROWS_AS(parse_type_label("x7"), Error);
  try {
    parse_type_label("a3");
  } catch (const Error& e) {
    CHECK(e.code() == errc::unsupported_type);
  }
}

TEST_CASE("pairing values") {
  auto& rs = ctx_for("d4").roots();
  CHECK(rs.pairing(rs.rho(), rs.rho()) == 2);
  // D4: alpha = alpha_2, <alpha_2, rho> = 1.
  CHECK(rs.pairing(coords({0, 1, 0, 0}), rs.rho()) == 1);
  // <rho - 2 alpha, alpha + alpha_1> = -1.
  Coords r2a = rs.rho();
  r2a[1] -= 2;
  CHECK(rs.pairing(r2a, coords({1, 1, 0, 0})) == -1);
  CHECK_THROWS_AS(rs.pairing(rs.rho(), coords({0, 0, 0, 0})), Error);

  // Symmetry for pairs of long roots.
  for (int i = 0; i < rs.num_roots(); ++i)
    for (int j = 0; j < rs.num_roots(); ++j)
      CHECK(rs.pairing_roots(i, j) == rs.pairing_roots(j, i));  // D4 is simply laced
}

TEST_CASE("pairing asymmetry across lengths in b4") {
  auto& rs = ctx_for("b4").roots();
  int nlong = 0, nshort = 0;
  for (int i = 0; i < rs.num_roots(); ++i) rs.root(i).is_long ? ++nlong : ++nshort;
  CHECK(nlong == 24);
  CHECK(nshort == 8);
  bool asym_seen = false;
  for (int i = 0; i < rs.num_roots(); ++i)
    for (int j = 0; j < rs.num_roots(); ++j) {
      if (rs.root(i).is_long && rs.root(j).is_long)
        CHECK(rs.pairing_roots(i, j) == rs.pairing_roots(j, i));
      else if (rs.pairing_roots(i, j) != rs.pairing_roots(j, i))
        asym_seen = true;
    }
  CHECK(asym_seen);
}

TEST_CASE("alpha heights") {
  auto& rs = ctx_for("d4").roots();
  CHECK(rs.alpha_height(rs.rho()) == 2);
  Coords minus_rho = rs.rho();
  for (int& v : minus_rho) v = -v;
  CHECK(rs.alpha_height(minus_rho) == -2);
  CHECK(rs.alpha_height(coords({1, 0, 0, 0})) == 0);
  CHECK_THROWS_AS(rs.alpha_height(coords({1, 1, 1, 2})), Error);
}

TEST_CASE("height-1 roots pair up under beta -> rho - beta") {
  for (const char* label : {"b4", "d4", "d5", "e6", "e7", "e8", "f4"}) {
    INFO(label);
    auto& rs = ctx_for(label).roots();
    auto& ctx = ctx_for(label);
    for (int b : ctx.g1_indices()) {
      int p = ctx.partner(b);
      CHECK(rs.alpha_height_idx(p) == 1);
      CHECK(p != b);                       // no fixed points
      CHECK(ctx.partner(p) == b);          // involution
      CHECK(rs.root(p).is_long == rs.root(b).is_long);  // same length class
    }
  }
}

TEST_CASE("orthogonality survives beta -> rho - beta") {
  auto& ctx = ctx_for("e6");
  auto& rs = ctx.roots();
  for (int b : ctx.g1_indices())
    for (int g : ctx.g1_indices())
      if (rs.pairing_roots(b, g) == 0)
        CHECK(rs.pairing_roots(ctx.partner(b), ctx.partner(g)) == 0);
}

TEST_CASE("d4 eigenvalue table for height-1 roots") {
  auto& rs = ctx_for("d4").roots();
  Coords r2a = rs.rho();
  r2a[1] -= 2;
  std::map<int, std::set<Coords>> by_ev;
  for (int b : ctx_for("d4").g1_indices())
    by_ev[rs.pairing(r2a, rs.root(b).coords)].insert(rs.root(b).coords);

  CHECK(by_ev[3] == std::set<Coords>{coords({1, 1, 1, 1})});   // rho - alpha
  CHECK(by_ev[1] == std::set<Coords>{coords({1, 1, 1, 0}), coords({1, 1, 0, 1}),
                                     coords({0, 1, 1, 1})});
  CHECK(by_ev[-1] == std::set<Coords>{coords({1, 1, 0, 0}), coords({0, 1, 1, 0}),
                                      coords({0, 1, 0, 1})});
  CHECK(by_ev[-3] == std::set<Coords>{coords({0, 1, 0, 0})});  // alpha
}

TEST_CASE("extend_orthogonal_pair: d4 example and contracts") {
  auto& rs = ctx_for("d4").roots();
  auto quad = rs.extend_orthogonal_pair(coords({1, 1, 1, 0}), coords({1, 1, 0, 1}));
  std::set<Coords> got(quad.begin(), quad.end());
  std::set<Coords> expect = {coords({0, 1, 0, 0}), coords({1, 1, 1, 0}), coords({1, 1, 0, 1}),
                             coords({0, 1, 1, 1})};
  CHECK(got == expect);

  CHECK_THROWS_AS(rs.extend_orthogonal_pair(coords({0, 1, 0, 0}), coords({1, 1, 1, 1})), Error);
  CHECK_THROWS_AS(rs.extend_orthogonal_pair(coords({1, 0, 0, 0}), coords({0, 0, 1, 0})), Error);
}

TEST_CASE("orthogonal quadruples sum to 2 rho and are long") {
  // Exhaustive over all mutually orthogonal 4-subsets of height-1 roots.
  for (const char* label : {"d4", "e6"}) {
    INFO(label);
    auto& ctx = ctx_for(label);
    auto& rs = ctx.roots();
    Coords tworho = rs.rho();
    for (int& v : tworho) v *= 2;
    long quads = 0;
    const auto& g1 = ctx.g1_indices();
    auto orth = [&](int i, int j) { return rs.pairing_roots(g1[i], g1[j]) == 0; };
    for (size_t a = 0; a < g1.size(); ++a)
      for (size_t b = a + 1; b < g1.size(); ++b) {
        if (!orth(a, b)) continue;
        for (size_t c = b + 1; c < g1.size(); ++c) {
          if (!orth(a, c) || !orth(b, c)) continue;
          for (size_t d = c + 1; d < g1.size(); ++d) {
            if (!orth(a, d) || !orth(b, d) || !orth(c, d)) continue;
            Coords sum(rs.rank(), 0);
            for (size_t i : {a, b, c, d})
              for (int k = 0; k < rs.rank(); ++k) sum[k] += rs.root(g1[i]).coords[k];
            CHECK(sum == tworho);
            for (size_t i : {a, b, c, d}) CHECK(rs.root(g1[i]).is_long);
            ++quads;
          }
        }
      }
    CHECK(quads > 0);
    // Every orthogonal pair extends to such a quadruple.
    for (size_t a = 0; a < g1.size(); ++a)
      for (size_t b = a + 1; b < g1.size(); ++b) {
        if (!orth(a, b)) continue;
        auto quad = rs.extend_orthogonal_pair(rs.root(g1[a]).coords, rs.root(g1[b]).coords);
        Coords sum(rs.rank(), 0);
        for (const Coords& c : quad)
          for (int k = 0; k < rs.rank(); ++k) sum[k] += c[k];
        CHECK(sum == tworho);
      }
  }
  // Sampled in the bigger types.
  for (const char* label : {"e7", "e8"}) {
    INFO(label);
    auto& ctx = ctx_for(label);
    auto& rs = ctx.roots();
    Rng rng(11);
    Coords tworho = rs.rho();
    for (int& v : tworho) v *= 2;
    for (int t = 0; t < 50; ++t) {
      int a = ctx.g1_indices()[rng.range(0, ctx.g1_dim() - 1)];
      int b = ctx.g1_indices()[rng.range(0, ctx.g1_dim() - 1)];
      if (a == b || rs.pairing_roots(a, b) != 0) continue;
      auto quad = rs.extend_orthogonal_pair(rs.root(a).coords, rs.root(b).coords);
      Coords sum(rs.rank(), 0);
      for (const Coords& c : quad)
        for (int k = 0; k < rs.rank(); ++k) sum[k] += c[k];
      CHECK(sum == tworho);
    }
  }
}

TEST_CASE("classify_quadruple cases") {
  auto& ctx = ctx_for("d4");
  auto& rs = ctx.roots();
  Coords alpha = coords({0, 1, 0, 0});
  Coords ra = coords({1, 1, 1, 1});

  CHECK(rs.classify_quadruple(alpha, alpha, ra, ra).kind == QuadKind::EqualPairs);
  CHECK(rs.classify_quadruple(alpha, ra, alpha, ra).kind == QuadKind::EqualPairs);
  CHECK(rs.classify_quadruple(alpha, alpha, alpha, alpha).kind == QuadKind::NotTwoRho);
  CHECK(rs.classify_quadruple(coords({0, 1, 0, 0}), coords({1, 1, 1, 0}), coords({1, 1, 0, 1}),
                              coords({0, 1, 1, 1}))
            .kind == QuadKind::MutuallyOrthogonal);

  // beta, rho-beta, gamma, rho-gamma with beta and gamma orthogonal.
  Coords beta = coords({1, 1, 1, 0});
  Coords rb = coords({0, 1, 0, 1});
  Coords gamma = coords({1, 1, 0, 1});
  Coords rg = coords({0, 1, 1, 0});
  auto qc = rs.classify_quadruple(beta, rb, gamma, rg);
  REQUIRE(qc.kind == QuadKind::RhoPairs);
  CHECK(rs.pairing(qc.ortho_beta, qc.ortho_gamma) == 0);
  std::set<Coords> quad = {beta, rb, gamma, rg};
  CHECK(quad.count(qc.ortho_beta) == 1);
  CHECK(quad.count(qc.ortho_gamma) == 1);

  // Short roots are rejected in B4.
  auto& rsb = ctx_for("b4").roots();
  Coords short_root = coords({1, 1, 1, 1});  // e1 in B4, short
  REQUIRE(!rsb.root(rsb.index_of(short_root)).is_long);
  CHECK(rsb.alpha_height(short_root) == 1);
  CHECK_THROWS_AS(
      rsb.classify_quadruple(short_root, short_root, short_root, short_root), Error);
}

TEST_CASE("every sum-2rho quadruple lands in exactly one class (d4 exhaustive)") {
  auto& ctx = ctx_for("d4");
  auto& rs = ctx.roots();
  Coords tworho = rs.rho();
  for (int& v : tworho) v *= 2;
  const auto& g1 = ctx.g1_indices();
  long n_equal = 0, n_rho = 0, n_orth = 0, n_not = 0;
  for (int a : g1)
    for (int b : g1)
      for (int c : g1)
        for (int d : g1) {
          auto qc = rs.classify_quadruple(rs.root(a).coords, rs.root(b).coords,
                                          rs.root(c).coords, rs.root(d).coords);
          Coords sum(rs.rank(), 0);
          for (int idx : {a, b, c, d})
            for (int k = 0; k < rs.rank(); ++k) sum[k] += rs.root(idx).coords[k];
          if (sum != tworho) {
            CHECK(qc.kind == QuadKind::NotTwoRho);
            ++n_not;
            continue;
          }
          switch (qc.kind) {
            case QuadKind::EqualPairs: ++n_equal; break;
            case QuadKind::RhoPairs: ++n_rho; break;
            case QuadKind::MutuallyOrthogonal: ++n_orth; break;
            case QuadKind::NotTwoRho: FAIL("sum is 2rho"); break;
          }
          // Pairing identities for quadruples summing to 2 rho.
          CHECK(rs.pairing_roots(a, b) + rs.pairing_roots(a, c) + rs.pairing_roots(a, d) == 0);
          CHECK(rs.pairing_roots(a, b) == rs.pairing_roots(c, d));
        }
  CHECK(n_equal > 0);
  CHECK(n_rho > 0);
  CHECK(n_orth > 0);
  CHECK(n_not > 0);
  CHECK(n_equal + n_rho + n_orth + n_not == 8L * 8 * 8 * 8);
}

TEST_CASE("root table json") {
  auto& ctx = ctx_for("d4");
  json j = root_table_json(ctx.roots());
  CHECK(j["type"] == "d4");
  CHECK(j["rank"] == 4);
  CHECK(j["roots"].size() == 24);
  CHECK(j["rho"] == json({1, 2, 1, 1}));
  CHECK(j["alpha"] == json({0, 1, 0, 0}));
  int h1 = 0;
  for (auto& r : j["roots"])
    if (r["alpha_height"] == 1) ++h1;
  CHECK(h1 == 8);
}
