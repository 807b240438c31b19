#pragma once

// Expansions: flattened sums of monomials.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "anncoh/expr.hpp"

namespace anncoh {

/// A product of atoms, by name; the empty monomial is the object 1.
using Monomial = std::vector<std::string>;

/// An ordered sum of nonzero monomials; the empty expansion is the object 0.
using Expansion = std::vector<Monomial>;

/// The monomial list of `y` after full distribution. Zero summands are
/// dropped and products are listed left factor major: the expansion of
/// `U*V` is `u1 v1, u1 v2, ..., u2 v1, ...`.
Expansion expansion_of(const ObjExpr& y);

/// |expansion_of(y)| without building it.
std::size_t expansion_size(const ObjExpr& y);

/// Left-nested sum of `parts`: `0` for none, the part itself for one.
ObjExpr canonical_sum(std::span<const ObjExpr> parts);

/// Left-nested product of the atoms of `m`, or `1` when empty.
ObjExpr monomial_expr(const Monomial& m);

/// The canonical sum of the monomials of `e`.
ObjExpr expansion_expr(const Expansion& e);

/// `x*y`, `1` for the empty monomial.
std::string to_string(const Monomial& m);

/// `[x*y, z]`.
std::string to_string(const Expansion& e);

/// True when no monomial occurs twice. Index bijections between such
/// expansions are pinned down by the monomial names alone.
bool has_distinct_monomials(const Expansion& e);

}  // namespace anncoh
