#pragma once

/*
 * Root system enumeration and pairing queries.
 *
 * Roots are integer coordinate vectors over the simple roots (Bourbaki
 * numbering).  The full set is generated by closing the simple roots
 * under the simple reflections, then sorted canonically by (height,
 * lexicographic coordinates).  The symmetrized inner product normalizes
 * long roots to squared length 2; it is kept as a doubled integer so
 * every pairing computation stays integral.
 *
 * rho is the highest root and alpha the unique long simple root with
 * <alpha, rho> = 1.  The alpha-height of a root beta is <beta, rho>,
 * which equals the coefficient of alpha in beta; it lies in {-2..2} and
 * grades g into g_-2 .. g_2.
 */

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "ftsys/dynkin.hpp"
#include "ftsys/error.hpp"

namespace ftsys {

using Coords = std::vector<int>;  // coefficients over the simple roots

struct RootInfo {
  Coords coords;
  int height = 0;        // sum of all coefficients
  int alpha_height = 0;  // coefficient of alpha = <beta, rho>
  bool is_long = false;
};

enum class QuadKind { NotTwoRho, EqualPairs, RhoPairs, MutuallyOrthogonal };

/// classify_quadruple result; for RhoPairs, (ortho_beta, ortho_gamma) is an
/// orthogonal pair such that the four roots are {b, rho-b, g, rho-g}.
struct QuadrupleClass {
  QuadKind kind;
  Coords ortho_beta, ortho_gamma;
};

class RootSystem {
 public:
  /// build_root_system: enumerates the full system and locates rho and alpha.
  static RootSystem build(const DynkinType& type) {
    validate(type);
    RootSystem rs;
    rs.type_ = type;
    rs.cartan_ = cartan_matrix(type);
    rs.len2_ = simple_root_len2(type);
    rs.enumerate();
    rs.finish();
    return rs;
  }

  const DynkinType& type() const { return type_; }
  int rank() const { return type_.rank; }
  int num_roots() const { return static_cast<int>(roots_.size()); }
  const RootInfo& root(int idx) const { return roots_[idx]; }

  int index_of(const Coords& c) const {
    auto it = index_.find(c);
    return it == index_.end() ? -1 : it->second;
  }
  bool is_root(const Coords& c) const { return index_.count(c) != 0; }

  /// Doubled symmetrized product 2*(a, b) for lattice vectors.
  long ip2(const Coords& a, const Coords& b) const {
    long s = 0;
    for (int i = 0; i < rank(); ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; j < rank(); ++j) {
        if (b[j] == 0) continue;
        s += static_cast<long>(a[i]) * b[j] * ip2_[i][j];
      }
    }
    return s;
  }

  /// Cartan integer <b, g> = 2(b,g)/(g,g) for lattice vectors, g nonzero.
  int pairing(const Coords& b, const Coords& g) const {
    ensure(!is_zero(b), errc::zero_root, "pairing with zero vector");
    ensure(!is_zero(g), errc::zero_root, "pairing against zero vector");
    long gg = ip2(g, g);
    long num = 2 * ip2(b, g);
    ensure(num % gg == 0, errc::internal_error, "non-integral Cartan pairing");
    return static_cast<int>(num / gg);
  }

  int pairing_roots(int i, int j) const { return pair_table_[i][j]; }

  /// alpha_height: <beta, rho> for a root beta; errors on non-roots.
  int alpha_height(const Coords& beta) const {
    int idx = index_of(beta);
    ensure(idx >= 0, errc::not_a_root, "alpha_height of a non-root");
    return roots_[idx].alpha_height;
  }

  const Coords& rho() const { return roots_[rho_idx_].coords; }
  int rho_index() const { return rho_idx_; }
  const Coords& alpha() const { return roots_[alpha_root_idx_].coords; }
  int alpha_simple_index() const { return alpha_simple_; }  // 0-based Bourbaki position
  int alpha_root_index() const { return alpha_root_idx_; }

  int neg_index(int idx) const { return neg_index_[idx]; }
  bool is_long_idx(int idx) const { return roots_[idx].is_long; }
  int alpha_height_idx(int idx) const { return roots_[idx].alpha_height; }

  /// <beta_idx, alpha_j> for the j-th simple root; used by the h-action.
  int pairing_with_simple(int idx, int j) const { return pair_simple_[idx][j]; }

  /// height1_roots: all roots of alpha-height 1 in canonical order.
  const std::vector<int>& height1_indices() const { return height1_; }
  std::vector<Coords> height1_roots() const {
    std::vector<Coords> out;
    out.reserve(height1_.size());
    for (int i : height1_) out.push_back(roots_[i].coords);
    return out;
  }

  std::vector<int> roots_of_alpha_height(int h) const {
    std::vector<int> out;
    for (int i = 0; i < num_roots(); ++i)
      if (roots_[i].alpha_height == h) out.push_back(i);
    return out;
  }

  /// Index of rho - beta for a height-1 root; pairs the g_1 basis.
  int rho_complement(int idx) const {
    ensure(roots_[idx].alpha_height == 1, errc::not_height1, "rho_complement needs height 1");
    Coords c = rho();
    for (int i = 0; i < rank(); ++i) c[i] -= roots_[idx].coords[i];
    int j = index_of(c);
    ensure(j >= 0, errc::internal_error, "rho - beta must be a root");
    return j;
  }

  /// extend_orthogonal_pair: completes two orthogonal height-1 roots to the
  /// first mutually orthogonal quadruple in canonical order.  Any such
  /// quadruple sums to 2*rho and consists of long roots.
  std::array<Coords, 4> extend_orthogonal_pair(const Coords& beta, const Coords& gamma) const {
    int bi = checked_height1(beta), gi = checked_height1(gamma);
    ensure(pair_table_[bi][gi] == 0, errc::not_orthogonal, "roots are not orthogonal");
    for (size_t a = 0; a < height1_.size(); ++a) {
      int di = height1_[a];
      if (di == bi || di == gi) continue;
      if (pair_table_[di][bi] != 0 || pair_table_[di][gi] != 0) continue;
      for (size_t b = a + 1; b < height1_.size(); ++b) {
        int ei = height1_[b];
        if (ei == bi || ei == gi) continue;
        if (pair_table_[ei][bi] != 0 || pair_table_[ei][gi] != 0) continue;
        if (pair_table_[di][ei] != 0) continue;
        return {beta, gamma, roots_[di].coords, roots_[ei].coords};
      }
    }
    fail(errc::no_extension, "no orthogonal extension found (internal consistency failure)");
  }

  /// classify_quadruple: four long height-1 roots fall into exactly one of
  /// the cases NotTwoRho / EqualPairs / RhoPairs / MutuallyOrthogonal.
  QuadrupleClass classify_quadruple(const Coords& b1, const Coords& b2, const Coords& b3,
                                    const Coords& b4) const {
    std::array<int, 4> q = {checked_long_height1(b1), checked_long_height1(b2),
                            checked_long_height1(b3), checked_long_height1(b4)};
    Coords sum(rank(), 0);
    for (int idx : q)
      for (int i = 0; i < rank(); ++i) sum[i] += roots_[idx].coords[i];
    Coords tworho = rho();
    for (int& v : tworho) v *= 2;
    if (sum != tworho) return {QuadKind::NotTwoRho, {}, {}};

    bool any_equal = false;
    for (int i = 0; i < 4 && !any_equal; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (q[i] == q[j]) { any_equal = true; break; }
    if (any_equal) {
      // With the sum pinned to 2*rho this must be {b, b, rho-b, rho-b}.
      std::multiset<int> ms(q.begin(), q.end());
      int b = *ms.begin();
      std::multiset<int> expect = {b, b, rho_complement(b), rho_complement(b)};
      ensure(ms == expect, errc::internal_error, "equal-pair case has unexpected shape");
      return {QuadKind::EqualPairs, {}, {}};
    }

    bool all_orth = true;
    for (int i = 0; i < 4 && all_orth; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (pair_table_[q[i]][q[j]] != 0) { all_orth = false; break; }
    if (all_orth) return {QuadKind::MutuallyOrthogonal, {}, {}};

    // Distinct roots, sum 2*rho, not mutually orthogonal: two pairs summing
    // to rho.  The pairings of q[0] against the rest are one each of
    // {-1, 0, +1}; the 0 partner gives the orthogonal representative pair.
    int ortho = -1;
    for (int j = 1; j < 4; ++j)
      if (pair_table_[q[0]][q[j]] == 0) ortho = q[j];
    ensure(ortho >= 0, errc::internal_error, "rho-pair case lacks an orthogonal partner");
    return {QuadKind::RhoPairs, roots_[q[0]].coords, roots_[ortho].coords};
  }

 private:
  bool is_zero(const Coords& c) const {
    return std::all_of(c.begin(), c.end(), [](int v) { return v == 0; });
  }

  int checked_height1(const Coords& c) const {
    int idx = index_of(c);
    ensure(idx >= 0, errc::not_a_root, "not a root");
    ensure(roots_[idx].alpha_height == 1, errc::not_height1, "root is not of alpha-height 1");
    return idx;
  }

  int checked_long_height1(const Coords& c) const {
    int idx = checked_height1(c);
    ensure(roots_[idx].is_long, errc::not_long, "root is not long");
    return idx;
  }

  void enumerate() {
    const int n = rank();
    // ip2[i][j] = 2*(a_i, a_j) = cartan[i][j] * len2[j]; must be symmetric.
    ip2_.assign(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        ip2_[i][j] = static_cast<long>(cartan_[i][j]) * len2_[j];
        if (j < i)
          ensure(ip2_[i][j] == ip2_[j][i], errc::internal_error, "asymmetric inner product");
      }

    std::set<Coords> seen;
    std::vector<Coords> queue;
    for (int i = 0; i < n; ++i) {
      Coords c(n, 0);
      c[i] = 1;
      seen.insert(c);
      queue.push_back(c);
    }
    // Close under simple reflections s_j: b -> b - <b, a_j> a_j.
    while (!queue.empty()) {
      Coords c = queue.back();
      queue.pop_back();
      for (int j = 0; j < n; ++j) {
        long num = 0;
        for (int i = 0; i < n; ++i) num += c[i] * ip2_[i][j];
        int k = static_cast<int>(2 * num / ip2_[j][j]);
        Coords r = c;
        r[j] -= k;
        if (seen.insert(r).second) queue.push_back(r);
      }
    }

    roots_.clear();
    for (const Coords& c : seen) {
      RootInfo info;
      info.coords = c;
      info.height = 0;
      for (int v : c) info.height += v;
      long l2 = ip2(c, c);
      ensure(l2 == 4 || l2 == 2, errc::internal_error, "unexpected root length");
      info.is_long = (l2 == 4);
      roots_.push_back(std::move(info));
    }
    std::sort(roots_.begin(), roots_.end(), [](const RootInfo& a, const RootInfo& b) {
      if (a.height != b.height) return a.height < b.height;
      return a.coords < b.coords;
    });
  }

  void finish() {
    const int n = rank();
    index_.clear();
    for (int i = 0; i < num_roots(); ++i) index_[roots_[i].coords] = i;

    // Highest root: unique root of maximal height.
    rho_idx_ = num_roots() - 1;
    ensure(roots_[rho_idx_].height > roots_[rho_idx_ - 1].height, errc::internal_error,
           "highest root is not unique");

    // alpha: the unique long simple root with <alpha, rho> = 1.
    alpha_simple_ = -1;
    const Coords& rho = roots_[rho_idx_].coords;
    for (int i = 0; i < n; ++i) {
      Coords simple(n, 0);
      simple[i] = 1;
      long p = 2 * ip2(simple, rho) / ip2(rho, rho);
      if (p == 1 && len2_[i] == 2) {
        ensure(alpha_simple_ < 0, errc::unsupported_type, "alpha is not unique");
        alpha_simple_ = i;
      }
    }
    ensure(alpha_simple_ >= 0, errc::unsupported_type, "no long simple root pairs to 1 with rho");
    {
      Coords a(n, 0);
      a[alpha_simple_] = 1;
      alpha_root_idx_ = index_of(a);
    }

    neg_index_.assign(num_roots(), -1);
    pair_table_.assign(num_roots(), std::vector<int>(num_roots(), 0));
    pair_simple_.assign(num_roots(), std::vector<int>(n, 0));
    for (int i = 0; i < num_roots(); ++i) {
      Coords neg = roots_[i].coords;
      for (int& v : neg) v = -v;
      neg_index_[i] = index_of(neg);
      ensure(neg_index_[i] >= 0, errc::internal_error, "root set not symmetric");
    }
    for (int i = 0; i < num_roots(); ++i) {
      long l2i = ip2(roots_[i].coords, roots_[i].coords);
      for (int j = 0; j < num_roots(); ++j) {
        long l2j = ip2(roots_[j].coords, roots_[j].coords);
        long num = 2 * ip2(roots_[i].coords, roots_[j].coords);
        ensure(num % l2j == 0, errc::internal_error, "non-integral root pairing");
        pair_table_[i][j] = static_cast<int>(num / l2j);
        (void)l2i;
      }
      for (int j = 0; j < n; ++j) {
        Coords simple(n, 0);
        simple[j] = 1;
        long num = 2 * ip2(roots_[i].coords, simple);
        ensure(num % ip2_[j][j] == 0, errc::internal_error, "non-integral simple pairing");
        pair_simple_[i][j] = static_cast<int>(num / ip2_[j][j]);
      }
    }

    // alpha-heights; the coefficient of alpha must agree with <beta, rho>.
    height1_.clear();
    int count2 = 0, countm2 = 0;
    for (int i = 0; i < num_roots(); ++i) {
      int h = pair_table_[i][rho_idx_];
      roots_[i].alpha_height = h;
      ensure(h >= -2 && h <= 2, errc::internal_error, "alpha-height out of range");
      ensure(h == roots_[i].coords[alpha_simple_], errc::internal_error,
             "alpha-height differs from the alpha coefficient");
      if (h == 1) height1_.push_back(i);
      if (h == 2) ++count2;
      if (h == -2) ++countm2;
    }
    ensure(count2 == 1 && countm2 == 1, errc::internal_error,
           "g_2 and g_-2 must be one-dimensional");
  }

  DynkinType type_{Family::D, 4};
  std::vector<std::vector<int>> cartan_;
  std::vector<int> len2_;
  std::vector<std::vector<long>> ip2_;
  std::vector<RootInfo> roots_;
  std::map<Coords, int> index_;
  std::vector<int> neg_index_;
  std::vector<std::vector<int>> pair_table_;
  std::vector<std::vector<int>> pair_simple_;
  std::vector<int> height1_;
  int rho_idx_ = -1;
  int alpha_simple_ = -1;
  int alpha_root_idx_ = -1;
};

/// build_root_system(dynkin) -> RootSystem
inline RootSystem build_root_system(const DynkinType& t) { return RootSystem::build(t); }

}  // namespace ftsys
