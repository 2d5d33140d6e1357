#pragma once

#include <map>
#include <memory>
#include <string>

#include "ftsys/ftsys.hpp"

namespace testutil {

/// Shared contexts so each type is built once per test binary.
inline const ftsys::FtsContext& ctx_for(const std::string& label) {
  static std::map<std::string, std::unique_ptr<ftsys::FtsContext>> cache;
  auto it = cache.find(label);
  if (it == cache.end()) {
    auto ctx = std::make_unique<ftsys::FtsContext>(
        ftsys::FtsContext::build(ftsys::parse_type_label(label)));
    it = cache.emplace(label, std::move(ctx)).first;
  }
  return *it->second;
}

inline ftsys::Coords coords(std::initializer_list<int> v) { return ftsys::Coords(v); }

/// First mutually orthogonal quadruple of height-1 roots through alpha.
inline std::array<ftsys::Coords, 4> orthogonal_quadruple(const ftsys::FtsContext& ctx) {
  const auto& rs = ctx.roots();
  int ai = rs.alpha_root_index();
  for (int b : ctx.g1_indices()) {
    if (b == ai || rs.pairing_roots(ai, b) != 0) continue;
    return rs.extend_orthogonal_pair(rs.root(ai).coords, rs.root(b).coords);
  }
  throw std::runtime_error("no orthogonal partner for alpha");
}

}  // namespace testutil
