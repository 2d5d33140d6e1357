/*
 * ftsys command-line driver.
 *
 *   ftsys table  --type d4 [--out FILE]           root and constant tables
 *   ftsys eval   --type d4 X [Y [Z]] [--json]     q(x); <x,y>; xyz
 *   ftsys rank   --type e7 X [--json]             rank report for an element
 *   ftsys verify --type d4 --suite forms          run a verification suite
 *                [--exhaustive] [--seed N] [--count N] [--json] [--out FILE]
 *
 * Elements are JSON files in the g_1 schema (see README).  Exit status:
 * 0 success, 1 I/O failure or suite violations, 2 invalid type or
 * malformed input.
 */

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ftsys/ftsys.hpp"

namespace {

using ftsys::json;

int write_output(const json& j, const std::string& out_path) {
  std::string text = j.dump(2);
  if (out_path.empty()) {
    std::cout << text << "\n";
    return 0;
  }
  std::ofstream os(out_path);
  if (!os || !(os << text << "\n")) {
    std::cerr << "error: cannot write to '" << out_path << "'\n";
    return 1;
  }
  return 0;
}

json load_json_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) ftsys::fail(ftsys::errc::parse_error, "cannot open '" + path + "'");
  json j;
  try {
    is >> j;
  } catch (const std::exception& e) {
    ftsys::fail(ftsys::errc::parse_error, std::string("invalid JSON: ") + e.what());
  }
  return j;
}

int cmd_table(const std::string& type_str, const std::string& out_path) {
  auto rs = ftsys::build_root_system(ftsys::parse_type_label(type_str));
  auto cb = ftsys::compute_structure_constants(rs);
  json j{{"root_table", ftsys::root_table_json(rs)},
         {"structure_constants", ftsys::structure_constants_json(cb)}};
  return write_output(j, out_path);
}

int cmd_eval(const std::string& type_str, const std::vector<std::string>& files, bool as_json,
             const std::string& out_path) {
  auto ctx = ftsys::FtsContext::build(ftsys::parse_type_label(type_str));
  std::vector<ftsys::G1Element<ftsys::Rational>> elems;
  for (const auto& f : files) elems.push_back(ftsys::g1_from_json(ctx, load_json_file(f)));

  json j;
  j["q"] = ftsys::quartic(ctx, elems[0]).get_str();
  if (elems.size() >= 2) j["bilinear"] = ftsys::bilinear(ctx, elems[0], elems[1]).get_str();
  if (elems.size() >= 3)
    j["triple_product"] =
        ftsys::g1_to_json(ctx, ftsys::triple_product(ctx, elems[0], elems[1], elems[2]));

  if (as_json || !out_path.empty()) return write_output(j, out_path);
  std::cout << "q(x) = " << j["q"].get<std::string>() << "\n";
  if (j.contains("bilinear")) std::cout << "<x,y> = " << j["bilinear"].get<std::string>() << "\n";
  if (j.contains("triple_product"))
    std::cout << "xyz = " << j["triple_product"].dump() << "\n";
  return 0;
}

int cmd_rank(const std::string& type_str, const std::string& file, bool as_json,
             const std::string& out_path) {
  auto ctx = ftsys::FtsContext::build(ftsys::parse_type_label(type_str));
  auto x = ftsys::g1_from_json(ctx, load_json_file(file));
  auto rep = ftsys::rank_classify(ctx, x);

  json j{{"rank", rep.rank},
         {"q_value", rep.q_value.get_str()},
         {"xxx_nonzero", rep.xxx_nonzero},
         {"strictly_regular", rep.strictly_regular}};
  if (rep.rank == 2 && rep.level2_several_orbits)
    j["note"] = "level 2 (possibly several orbits)";
  if (rep.rank == 4) {
    try {
      auto [u, v] = ftsys::decompose_rank4(ctx, x);
      j["decomposition"] = json{{"u", ftsys::g1_to_json(ctx, u)}, {"v", ftsys::g1_to_json(ctx, v)}};
    } catch (const ftsys::Error& e) {
      if (e.code() != ftsys::errc::not_a_square) throw;
      j["decomposition"] = "requires a field extension (q(x)/6 is not a square)";
    }
  }
  if (as_json || !out_path.empty()) return write_output(j, out_path);
  std::cout << "rank " << rep.rank << ", q(x) = " << rep.q_value.get_str() << "\n";
  return 0;
}

int cmd_verify(const std::string& type_str, const std::string& suite, bool exhaustive,
               std::uint64_t seed, long count, bool as_json, const std::string& out_path) {
  auto ctx = ftsys::FtsContext::build(ftsys::parse_type_label(type_str));
  ftsys::SuiteMode mode;
  mode.exhaustive = exhaustive;
  mode.seed = seed;
  mode.count = count;
  auto rep = ftsys::run_suite(ctx, suite, mode);

  if (as_json || !out_path.empty()) {
    int rc = write_output(ftsys::report_json(rep), out_path);
    if (rc != 0) return rc;
  } else {
    for (const auto& c : rep.checks)
      std::cout << (c.failures.empty() ? "ok   " : "FAIL ") << c.check_id << "  ("
                << c.tuples_checked << " tuples, " << c.failures.size() << " failures)\n";
    std::cout << rep.suite << " suite on " << rep.type_label << ": "
              << (rep.ok() ? "all checks passed" : "violations found") << "\n";
  }
  return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Freudenthal triple systems from split Lie algebras"};
  app.require_subcommand(1);

  std::string type_str, out_path, suite = "forms";
  std::vector<std::string> files;
  bool as_json = false, exhaustive = false;
  std::uint64_t seed = 1;
  long count = 0;

  auto* table = app.add_subcommand("table", "Export root and structure-constant tables");
  table->add_option("--type", type_str, "Root system (b4..bn, d4..dn, e6, e7, e8, f4)")
      ->required();
  table->add_option("--out", out_path, "Output file (default stdout)");

  auto* eval = app.add_subcommand("eval", "Evaluate q, the bilinear form, the triple product");
  eval->add_option("--type", type_str, "Root system")->required();
  eval->add_option("files", files, "Element files (1 to 3)")->expected(1, 3);
  eval->add_flag("--json", as_json, "JSON output");
  eval->add_option("--out", out_path, "Output file");

  auto* rank = app.add_subcommand("rank", "Classify an element by rank");
  rank->add_option("--type", type_str, "Root system")->required();
  rank->add_option("file", files, "Element file")->expected(1);
  rank->add_flag("--json", as_json, "JSON output");
  rank->add_option("--out", out_path, "Output file");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--type", type_str, "Root system")->required();
  verify->add_option("--suite", suite, "forms | fts | stab")->required();
  verify->add_flag("--exhaustive", exhaustive, "Enumerate all tuples (small types)");
  verify->add_option("--seed", seed, "Sampling seed");
  verify->add_option("--count", count, "Sample count (0 = suite default)");
  verify->add_flag("--json", as_json, "JSON report");
  verify->add_option("--out", out_path, "Report file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (table->parsed()) return cmd_table(type_str, out_path);
    if (eval->parsed()) return cmd_eval(type_str, files, as_json, out_path);
    if (rank->parsed()) return cmd_rank(type_str, files[0], as_json, out_path);
    if (verify->parsed())
      return cmd_verify(type_str, suite, exhaustive, seed, count, as_json, out_path);
  } catch (const ftsys::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ftsys::errc::unsupported_type:
      case ftsys::errc::parse_error:
      case ftsys::errc::not_a_root:
      case ftsys::errc::not_height1:
        return 2;
      default:
        return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
