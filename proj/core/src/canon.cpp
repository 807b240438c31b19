#include "anncoh/canon.hpp"

#include <string>

namespace anncoh {

namespace {

constexpr Mode kStrict = Mode::QuiteStrict;

}  // namespace

MorWord interchange_word(std::span<const ObjExpr> as, std::span<const ObjExpr> bs) {
  if (as.size() != bs.size()) {
    throw ShapeMismatch("interchange needs equally long sums, got " + std::to_string(as.size()) + " and " +
                        std::to_string(bs.size()));
  }
  const std::size_t n = as.size();
  if (n <= 1) return MorWord::id(canonical_sum(as) + canonical_sum(bs));

  const auto as_head = as.first(n - 1);
  const auto bs_head = bs.first(n - 1);
  const ObjExpr& a_last = as.back();
  const ObjExpr& b_last = bs.back();

  // (A' + a) + (B' + b) -> (A' + B') + (a + b)
  MorWord swap = MorWord::oplus(
      MorWord::oplus(MorWord::id(canonical_sum(as_head)), MorWord::c(a_last, canonical_sum(bs_head))),
      MorWord::id(b_last));
  MorWord rest = MorWord::oplus(interchange_word(as_head, bs_head), MorWord::id(a_last + b_last));
  return comp(rest, swap, kStrict);
}

MorWord transpose_word(std::size_t rows, std::size_t cols, std::span<const ObjExpr> entries) {
  if (entries.size() != rows * cols) {
    throw ShapeMismatch("grid of " + std::to_string(rows) + "x" + std::to_string(cols) + " needs " +
                        std::to_string(rows * cols) + " entries, got " + std::to_string(entries.size()));
  }
  auto row = [&](std::size_t i) { return entries.subspan(i * cols, cols); };
  if (rows <= 1 || cols == 0) {
    std::vector<ObjExpr> row_sums;
    for (std::size_t i = 0; i < rows; ++i) row_sums.push_back(canonical_sum(row(i)));
    return MorWord::id(canonical_sum(row_sums));
  }

  const std::size_t head_rows = rows - 1;
  MorWord head = transpose_word(head_rows, cols, entries.first(head_rows * cols));
  MorWord step = MorWord::oplus(head, MorWord::id(canonical_sum(row(head_rows))));

  std::vector<ObjExpr> column_heads;
  std::vector<ObjExpr> last_row;
  for (std::size_t j = 0; j < cols; ++j) {
    std::vector<ObjExpr> column;
    for (std::size_t i = 0; i < head_rows; ++i) column.push_back(entries[i * cols + j]);
    column_heads.push_back(canonical_sum(column));
    last_row.push_back(entries[head_rows * cols + j]);
  }
  return comp(interchange_word(column_heads, last_row), step, kStrict);
}

MorWord left_distribute_word(const ObjExpr& a, std::span<const ObjExpr> bs) {
  if (bs.empty()) throw ShapeMismatch("left distribution over an empty sum");
  if (bs.size() == 1) return MorWord::id(a * bs.front());
  const auto head = bs.first(bs.size() - 1);
  const ObjExpr& last = bs.back();
  MorWord split = MorWord::dist_l(a, canonical_sum(head), last);
  return comp(MorWord::oplus(left_distribute_word(a, head), MorWord::id(a * last)), split, kStrict);
}

MorWord distribute_word(std::span<const ObjExpr> as, std::span<const ObjExpr> bs) {
  if (as.empty()) return MorWord::id(ObjExpr::zero() * canonical_sum(bs));
  if (bs.empty()) return MorWord::lhat(canonical_sum(as));
  MorWord acc = left_distribute_word(as.front(), bs);
  for (std::size_t i = 1; i < as.size(); ++i) acc = MorWord::oplus(acc, left_distribute_word(as[i], bs));
  return acc;
}

MorWord column_distribute_word(std::span<const ObjExpr> as, std::span<const ObjExpr> bs) {
  if (as.empty()) return MorWord::id(ObjExpr::zero() * canonical_sum(bs));
  if (bs.empty()) return MorWord::lhat(canonical_sum(as));
  return left_distribute_word(canonical_sum(as), bs);
}

std::vector<ObjExpr> product_parts(std::span<const ObjExpr> as, std::span<const ObjExpr> bs) {
  std::vector<ObjExpr> out;
  out.reserve(as.size() * bs.size());
  for (const auto& a : as) {
    for (const auto& b : bs) out.push_back(a * b);
  }
  return out;
}

std::vector<ObjExpr> monomial_parts(const Expansion& e) {
  std::vector<ObjExpr> out;
  out.reserve(e.size());
  for (const auto& m : e) out.push_back(monomial_expr(m));
  return out;
}

namespace {

bool is_leaf(const ObjExpr& y) { return !y.is_plus() && !y.is_times(); }

bool is_leaf_sum(const ObjExpr& y) {
  if (is_leaf(y)) return true;
  return y.is_plus() && is_leaf(y.rhs()) && is_leaf_sum(y.lhs());
}

Expansion concat(Expansion a, const Expansion& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Expansion product(const Expansion& a, const Expansion& b) {
  Expansion out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a) {
    for (const auto& y : b) {
      Monomial m = x;
      m.insert(m.end(), y.begin(), y.end());
      out.push_back(std::move(m));
    }
  }
  return out;
}

ExpansionForm expand_strict(const ObjExpr& y) {
  if (is_leaf_sum(y)) return {MorWord::id(y), expansion_of(y)};
  if (y.is_plus()) {
    auto l = expand_strict(y.lhs());
    auto r = expand_strict(y.rhs());
    // Zero summands vanish by strictness of the additive units.
    return {MorWord::oplus(l.word, r.word), concat(std::move(l.result), r.result)};
  }
  auto l = expand_strict(y.lhs());
  auto r = expand_strict(y.rhs());
  MorWord dist = distribute_word(monomial_parts(l.result), monomial_parts(r.result));
  return {comp(dist, MorWord::otimes(l.word, r.word), kStrict), product(l.result, r.result)};
}

// General mode: explicit constraints for every step.
constexpr Mode kGeneral = Mode::General;

Expansion drop_last(const Expansion& e) { return Expansion(e.begin(), e.end() - 1); }

// E(pu) + E(pv) -> E(pu ++ pv)
MorWord concat_word(const Expansion& pu, const Expansion& pv) {
  if (pv.empty()) return MorWord::d(expansion_expr(pu));
  if (pu.empty()) return MorWord::g(expansion_expr(pv));
  const ObjExpr last = monomial_expr(pv.back());
  if (pv.size() == 1) return MorWord::id(expansion_expr(pu) + last);
  const Expansion head = drop_last(pv);
  MorWord assoc = MorWord::assoc_plus(expansion_expr(pu), expansion_expr(head), last);
  return comp(MorWord::oplus(concat_word(pu, head), MorWord::id(last)), assoc, kGeneral);
}

// M(m) * M(n) -> M(m ++ n)
MorWord monomial_word(const Monomial& m, const Monomial& n) {
  if (n.empty()) return MorWord::runit(monomial_expr(m));
  if (m.empty()) return MorWord::lunit(monomial_expr(n));
  if (n.size() == 1) return MorWord::id(monomial_expr(m) * monomial_expr(n));
  const Monomial head(n.begin(), n.end() - 1);
  const ObjExpr last = ObjExpr::var(n.back());
  MorWord assoc = MorWord::assoc_times(monomial_expr(m), monomial_expr(head), last);
  return comp(MorWord::otimes(monomial_word(m, head), MorWord::id(last)), assoc, kGeneral);
}

// E(pu) * E(pv) -> E(pu x pv)
MorWord distribute_general(const Expansion& pu, const Expansion& pv) {
  if (pu.empty()) return MorWord::rhat(expansion_expr(pv));
  if (pv.empty()) return MorWord::lhat(expansion_expr(pu));
  if (pu.size() >= 2) {
    const Expansion head = drop_last(pu);
    const Expansion last{pu.back()};
    MorWord split = MorWord::dist_r(expansion_expr(head), monomial_expr(pu.back()), expansion_expr(pv));
    MorWord parts = MorWord::oplus(distribute_general(head, pv), distribute_general(last, pv));
    return comp(concat_word(product(head, pv), product(last, pv)), comp(parts, split, kGeneral), kGeneral);
  }
  if (pv.size() >= 2) {
    const Expansion head = drop_last(pv);
    const Expansion last{pv.back()};
    MorWord split = MorWord::dist_l(monomial_expr(pu.front()), expansion_expr(head), monomial_expr(pv.back()));
    MorWord parts = MorWord::oplus(distribute_general(pu, head), distribute_general(pu, last));
    return comp(concat_word(product(pu, head), product(pu, last)), comp(parts, split, kGeneral), kGeneral);
  }
  return monomial_word(pu.front(), pv.front());
}

ExpansionForm expand_general(const ObjExpr& y) {
  if (is_leaf(y)) return {MorWord::id(y), expansion_of(y)};
  auto l = expand_general(y.lhs());
  auto r = expand_general(y.rhs());
  if (y.is_plus()) {
    MorWord w = comp(concat_word(l.result, r.result), MorWord::oplus(l.word, r.word), kGeneral);
    return {std::move(w), concat(std::move(l.result), r.result)};
  }
  MorWord w = comp(distribute_general(l.result, r.result), MorWord::otimes(l.word, r.word), kGeneral);
  return {std::move(w), product(l.result, r.result)};
}

}  // namespace

ExpansionForm expand(const ObjExpr& y, Mode mode) {
  return mode == Mode::QuiteStrict ? expand_strict(y) : expand_general(y);
}

}  // namespace anncoh
