#pragma once

#include <string>
#include <vector>

#include "anncoh/expr.hpp"

namespace support {

/// Every expression with exactly n leaves over 0, 1 and `atoms`, repeats allowed.
inline std::vector<anncoh::ObjExpr> with_leaves(std::size_t n, const std::vector<std::string>& atoms) {
  using anncoh::ObjExpr;
  std::vector<ObjExpr> out;
  if (n == 1) {
    out.push_back(ObjExpr::zero());
    out.push_back(ObjExpr::one());
    for (const auto& a : atoms) out.push_back(ObjExpr::var(a));
    return out;
  }
  for (std::size_t k = 1; k < n; ++k) {
    const auto left = with_leaves(k, atoms);
    const auto right = with_leaves(n - k, atoms);
    for (const auto& l : left) {
      for (const auto& r : right) {
        out.push_back(l + r);
        out.push_back(l * r);
      }
    }
  }
  return out;
}

inline std::vector<anncoh::ObjExpr> up_to_leaves(std::size_t n, const std::vector<std::string>& atoms) {
  std::vector<anncoh::ObjExpr> out;
  for (std::size_t k = 1; k <= n; ++k) {
    auto layer = with_leaves(k, atoms);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

inline anncoh::ObjExpr v(const char* name) { return anncoh::ObjExpr::var(name); }

inline std::vector<anncoh::ObjExpr> vars(std::initializer_list<const char*> names) {
  std::vector<anncoh::ObjExpr> out;
  for (auto n : names) out.push_back(v(n));
  return out;
}

/// name1, name2, ..., nameN
inline std::vector<anncoh::ObjExpr> indexed(const std::string& stem, std::size_t n) {
  std::vector<anncoh::ObjExpr> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(anncoh::ObjExpr::var(stem + std::to_string(i)));
  return out;
}

}  // namespace support
