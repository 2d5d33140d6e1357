#pragma once

/*
 * Dynkin types B_n, D_n (n >= 4), E6, E7, E8, F4 with Bourbaki numbering
 * of the simple roots.  Types A, C and G2 are rejected: the construction
 * on g_1 needs a unique long simple root pairing to 1 with the highest
 * root, which those types do not provide.
 */

#include <string>
#include <vector>

#include "ftsys/error.hpp"

namespace ftsys {

enum class Family { B, D, E, F };

struct DynkinType {
  Family family;
  int rank;

  bool simply_laced() const { return family == Family::D || family == Family::E; }

  friend bool operator==(const DynkinType& a, const DynkinType& b) {
    return a.family == b.family && a.rank == b.rank;
  }
};

inline void validate(const DynkinType& t) {
  switch (t.family) {
    case Family::B:
    case Family::D:
      ensure(t.rank >= 4, errc::unsupported_type, "rank must be at least 4");
      // The dense pairing tables grow with the square of the root count.
      ensure(t.rank <= 32, errc::unsupported_type, "rank above 32 is not supported");
      return;
    case Family::E:
      ensure(t.rank >= 6 && t.rank <= 8, errc::unsupported_type, "E rank must be 6, 7 or 8");
      return;
    case Family::F:
      ensure(t.rank == 4, errc::unsupported_type, "F rank must be 4");
      return;
  }
  fail(errc::unsupported_type, "unknown family");
}

/// Parses labels like "b4", "d5", "e8", "f4".
inline DynkinType parse_type_label(const std::string& label) {
  ensure(label.size() >= 2, errc::unsupported_type, "bad type label '" + label + "'");
  char f = label[0];
  int rank = 0;
  for (size_t i = 1; i < label.size(); ++i) {
    ensure(label[i] >= '0' && label[i] <= '9', errc::unsupported_type,
           "bad type label '" + label + "'");
    rank = rank * 10 + (label[i] - '0');
  }
  Family fam;
  switch (f) {
    case 'b': case 'B': fam = Family::B; break;
    case 'd': case 'D': fam = Family::D; break;
    case 'e': case 'E': fam = Family::E; break;
    case 'f': case 'F': fam = Family::F; break;
    default:
      fail(errc::unsupported_type, "unsupported family '" + std::string(1, f) + "'");
  }
  DynkinType t{fam, rank};
  validate(t);
  return t;
}

inline std::string type_label(const DynkinType& t) {
  char f = 0;
  switch (t.family) {
    case Family::B: f = 'b'; break;
    case Family::D: f = 'd'; break;
    case Family::E: f = 'e'; break;
    case Family::F: f = 'f'; break;
  }
  return std::string(1, f) + std::to_string(t.rank);
}

/// Cartan matrix: entry [i][j] is <alpha_i, alpha_j> = 2(a_i,a_j)/(a_j,a_j).
inline std::vector<std::vector<int>> cartan_matrix(const DynkinType& t) {
  validate(t);
  const int n = t.rank;
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto edge = [&](int i, int j) { a[i][j] = -1; a[j][i] = -1; };

  switch (t.family) {
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      a[n - 2][n - 1] = -2;  // alpha_{n-1} long, alpha_n short
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) edge(i, i + 1);
      edge(n - 3, n - 1);
      break;
    case Family::E:
      edge(0, 2);
      edge(1, 3);
      for (int i = 2; i + 1 < n; ++i) edge(i, i + 1);
      break;
    case Family::F:
      edge(0, 1);
      edge(2, 3);
      a[1][2] = -2;  // alpha_2 long, alpha_3 short
      a[2][1] = -1;
      break;
  }
  return a;
}

/// Squared lengths (a_i, a_i) of the simple roots, long roots normalized to 2.
inline std::vector<int> simple_root_len2(const DynkinType& t) {
  validate(t);
  std::vector<int> d(t.rank, 2);
  if (t.family == Family::B) d[t.rank - 1] = 1;
  if (t.family == Family::F) d[2] = d[3] = 1;
  return d;
}

}  // namespace ftsys
