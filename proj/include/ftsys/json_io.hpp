#pragma once

/*
 * JSON interchange formats.
 *
 *   root table          {type, rank, roots: [{coords, alpha_height, long}],
 *                        rho, alpha}
 *   structure constants {type, constants: [{beta, gamma, c}]} in canonical
 *                        order
 *   g_1 element         {type, entries: [{root_coords, numerator,
 *                        denominator}]}
 *   suite report        {suite, type, mode, checks: [...], failures_total}
 *
 * Roots are always given by simple-root coordinates, never by index, so
 * files survive any reordering of the internal tables.  Numerators and
 * denominators are written as JSON integers when they fit and as decimal
 * strings otherwise; both forms are accepted on input.
 */

#include <string>

#include <json.hpp>

#include "ftsys/fts.hpp"
#include "ftsys/report.hpp"

namespace ftsys {

using nlohmann::json;

inline json coords_json(const Coords& c) { return json(c); }

inline json root_table_json(const RootSystem& rs) {
  json roots = json::array();
  for (int i = 0; i < rs.num_roots(); ++i) {
    const RootInfo& r = rs.root(i);
    roots.push_back(
        {{"coords", coords_json(r.coords)}, {"alpha_height", r.alpha_height}, {"long", r.is_long}});
  }
  return json{{"type", type_label(rs.type())},
              {"rank", rs.rank()},
              {"roots", roots},
              {"rho", coords_json(rs.rho())},
              {"alpha", coords_json(rs.alpha())}};
}

inline json structure_constants_json(const ChevalleyBasis& cb) {
  const RootSystem& rs = cb.roots();
  json entries = json::array();
  for (int i = 0; i < rs.num_roots(); ++i)
    for (int j = 0; j < rs.num_roots(); ++j)
      if (cb.sum_index(i, j) >= 0)
        entries.push_back({{"beta", coords_json(rs.root(i).coords)},
                           {"gamma", coords_json(rs.root(j).coords)},
                           {"c", cb.constant_idx(i, j)}});
  return json{{"type", type_label(rs.type())}, {"constants", entries}};
}

inline json integer_json(const mpz_class& z) {
  if (z.fits_slong_p()) return json(z.get_si());
  return json(z.get_str());
}

inline json g1_to_json(const FtsContext& ctx, const G1Element<Rational>& x) {
  json entries = json::array();
  for (const auto& [i, v] : x.entries)
    entries.push_back({{"root_coords", coords_json(ctx.roots().root(i).coords)},
                       {"numerator", integer_json(v.get_num())},
                       {"denominator", integer_json(v.get_den())}});
  return json{{"type", type_label(ctx.type())}, {"entries", entries}};
}

inline mpz_class integer_from_json(const json& j) {
  if (j.is_number_integer()) return mpz_class(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return mpz_class(j.get<std::string>());
  fail(errc::parse_error, "expected an integer or a decimal string");
}

inline G1Element<Rational> g1_from_json(const FtsContext& ctx, const json& j) {
  ensure(j.is_object() && j.contains("entries") && j["entries"].is_array(), errc::parse_error,
         "element must be an object with an 'entries' array");
  if (j.contains("type"))
    ensure(j["type"].get<std::string>() == type_label(ctx.type()), errc::parse_error,
           "element type does not match the requested root system");
  G1Element<Rational> e = ctx.zero_g1<Rational>();
  for (const json& entry : j["entries"]) {
    ensure(entry.contains("root_coords") && entry["root_coords"].is_array(), errc::parse_error,
           "entry needs root_coords");
    Coords c;
    for (const json& v : entry["root_coords"]) {
      ensure(v.is_number_integer(), errc::parse_error, "root coordinates must be integers");
      c.push_back(v.get<int>());
    }
    ensure(static_cast<int>(c.size()) == ctx.roots().rank(), errc::parse_error,
           "root coordinate vector has wrong length");
    int idx = ctx.roots().index_of(c);
    ensure(idx >= 0, errc::parse_error, "coordinates do not name a root");
    ensure(ctx.roots().alpha_height_idx(idx) == 1, errc::parse_error,
           "root does not have alpha-height 1");
    mpz_class num = integer_from_json(entry.value("numerator", json(1)));
    mpz_class den = integer_from_json(entry.value("denominator", json(1)));
    ensure(sgn(den) != 0, errc::parse_error, "zero denominator");
    Rational coeff(num, den);
    coeff.canonicalize();
    auto it = e.entries.find(idx);
    if (it == e.entries.end())
      e.entries.emplace(idx, coeff);
    else
      it->second = it->second + coeff;
  }
  e.prune();
  return e;
}

inline json report_json(const SuiteReport& rep) {
  json checks = json::array();
  for (const CheckResult& c : rep.checks) {
    checks.push_back({{"check_id", c.check_id},
                      {"detail", c.detail},
                      {"tuples_checked", c.tuples_checked},
                      {"failures", json(c.failures)}});
  }
  json mode;
  if (rep.mode.exhaustive) {
    mode = json{{"kind", "exhaustive"}};
  } else {
    mode = json{{"kind", "sampled"}, {"seed", rep.mode.seed}, {"count", rep.mode.count}};
  }
  return json{{"suite", rep.suite},
              {"type", rep.type_label},
              {"mode", mode},
              {"checks", checks},
              {"failures_total", rep.total_failures()}};
}

}  // namespace ftsys
