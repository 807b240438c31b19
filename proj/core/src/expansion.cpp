#include "anncoh/expansion.hpp"

#include <algorithm>

namespace anncoh {

Expansion expansion_of(const ObjExpr& y) {
  switch (y.kind()) {
    case ExprKind::Zero:
      return {};
    case ExprKind::One:
      return {Monomial{}};
    case ExprKind::Var:
      return {Monomial{y.atom().name()}};
    case ExprKind::Plus: {
      Expansion e = expansion_of(y.lhs());
      Expansion r = expansion_of(y.rhs());
      e.insert(e.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
      return e;
    }
    case ExprKind::Times: {
      const Expansion l = expansion_of(y.lhs());
      const Expansion r = expansion_of(y.rhs());
      Expansion e;
      e.reserve(l.size() * r.size());
      for (const auto& a : l) {
        for (const auto& b : r) {
          Monomial m = a;
          m.insert(m.end(), b.begin(), b.end());
          e.push_back(std::move(m));
        }
      }
      return e;
    }
  }
  return {};
}

std::size_t expansion_size(const ObjExpr& y) {
  switch (y.kind()) {
    case ExprKind::Zero:
      return 0;
    case ExprKind::One:
    case ExprKind::Var:
      return 1;
    case ExprKind::Plus:
      return expansion_size(y.lhs()) + expansion_size(y.rhs());
    case ExprKind::Times:
      return expansion_size(y.lhs()) * expansion_size(y.rhs());
  }
  return 0;
}

ObjExpr canonical_sum(std::span<const ObjExpr> parts) {
  if (parts.empty()) return ObjExpr::zero();
  ObjExpr acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = ObjExpr::plus(acc, parts[i]);
  return acc;
}

ObjExpr monomial_expr(const Monomial& m) {
  if (m.empty()) return ObjExpr::one();
  ObjExpr acc = ObjExpr::var(m.front());
  for (std::size_t i = 1; i < m.size(); ++i) acc = ObjExpr::times(acc, ObjExpr::var(m[i]));
  return acc;
}

ObjExpr expansion_expr(const Expansion& e) {
  std::vector<ObjExpr> parts;
  parts.reserve(e.size());
  for (const auto& m : e) parts.push_back(monomial_expr(m));
  return canonical_sum(parts);
}

std::string to_string(const Monomial& m) {
  if (m.empty()) return "1";
  std::string out = m.front();
  for (std::size_t i = 1; i < m.size(); ++i) {
    out += '*';
    out += m[i];
  }
  return out;
}

std::string to_string(const Expansion& e) {
  std::string out = "[";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) out += ", ";
    out += to_string(e[i]);
  }
  out += ']';
  return out;
}

bool has_distinct_monomials(const Expansion& e) {
  Expansion sorted = e;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

}  // namespace anncoh
