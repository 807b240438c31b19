#pragma once

// Canonical isomorphisms of a quite-strict Ann-category, emitted as explicit
// morphism words, and the canonical expansion form of an expression.
//
// Every word built here lives in the quite-strict regime: composites are
// typed modulo strict_normalize. Indexed sums are given as spans of parts;
// the object they stand for is canonical_sum(parts).

#include <cstddef>
#include <span>
#include <vector>

#include "anncoh/expansion.hpp"
#include "anncoh/expr.hpp"
#include "anncoh/morphism.hpp"

namespace anncoh {

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

/// (sum As) + (sum Bs) -> sum_i (As[i] + Bs[i]).
///
/// Identity for at most one index. Otherwise the last pair is moved into
/// place with one whiskered commutativity and the remaining prefix is
/// handled recursively. Built from c, id, (+) and composition only.
/// Throws ShapeMismatch when the lengths differ.
MorWord interchange_word(std::span<const ObjExpr> as, std::span<const ObjExpr> bs);

/// sum_i sum_j E[i][j] -> sum_j sum_i E[i][j] for a row-major grid E of
/// `rows` x `cols` entries. Identity when rows <= 1 or cols == 0; built
/// from c, id, (+) and composition only.
MorWord transpose_word(std::size_t rows, std::size_t cols, std::span<const ObjExpr> entries);

/// a*(sum bs) -> sum_j a*bs[j]; identity for a single part, otherwise
/// a left distributivity splitting off the last part followed by the
/// recursive word on the prefix. Requires a nonempty `bs`.
MorWord left_distribute_word(const ObjExpr& a, std::span<const ObjExpr> bs);

/// (sum as)*(sum bs) -> sum over (i, j) of as[i]*bs[j], i major.
/// Identity when `as` is empty, the left annihilator when `bs` is empty,
/// and otherwise the sum over i of left_distribute_word(as[i], bs).
MorWord distribute_word(std::span<const ObjExpr> as, std::span<const ObjExpr> bs);

/// (sum as)*(sum bs) -> sum_j sum_i as[i]*bs[j], j major.
/// Identity when `as` is empty, the left annihilator when `bs` is empty,
/// and otherwise left_distribute_word applied to the whole left sum.
MorWord column_distribute_word(std::span<const ObjExpr> as, std::span<const ObjExpr> bs);

/// [as[i]*bs[j]] in i-major order.
std::vector<ObjExpr> product_parts(std::span<const ObjExpr> as, std::span<const ObjExpr> bs);

/// The parts of an expansion as monomial expressions.
std::vector<ObjExpr> monomial_parts(const Expansion& e);

struct ExpansionForm {
  /// y -> expansion_expr(result)
  MorWord word;
  Expansion result;
};

/// Canonical expansion form of `y`.
///
/// QuiteStrict: a canonical sum of leaves expands by the identity; a sum
/// expands componentwise; a product `U*V` expands its factors and then
/// applies distribute_word to the two monomial lists. The word uses only
/// identities, left distributivity and the left annihilator, and its
/// target is strict_equal to expansion_expr(result).
///
/// General: every rebracketing, unit and zero step is spelled out with the
/// corresponding constraint, so the target is syntactically
/// expansion_expr(result) and the word validates in General mode.
ExpansionForm expand(const ObjExpr& y, Mode mode);

}  // namespace anncoh
