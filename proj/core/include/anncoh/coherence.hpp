#pragma once

// Deciding equality of morphism words, diagram verification, and
// exhaustive coherence sweeps over small expressions.
//
// Equality is decided by denotation. On expressions whose expansion has
// pairwise distinct monomials (the formal regime: distinct atoms and no
// duplicated unit summands) this is exact. Outside it two words may
// denote different permutations of equally named monomials, e.g. c{x;x}
// against id{x + x}; such verdicts carry formal_regime = false.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "anncoh/expansion.hpp"
#include "anncoh/expr.hpp"
#include "anncoh/morphism.hpp"

namespace anncoh {

class BoundaryMismatch : public Error {
 public:
  using Error::Error;
};

struct Verdict {
  bool equal = false;
  Denotation lhs;
  Denotation rhs;
  std::size_t words_checked = 0;
  /// First source index where the two permutations disagree.
  std::optional<std::size_t> differing_index;
  /// The shared source expansion has pairwise distinct monomials.
  bool formal_regime = true;
};

/// Throws BoundaryMismatch unless sources and targets are pairwise
/// strict_equal, and CompositionMismatch for an ill-typed word.
Verdict check_equal(const MorWord& w1, const MorWord& w2, Mode mode);

/// Composes each path (first edge first) and compares the composites.
Verdict verify_diagram(std::span<const MorWord> path1, std::span<const MorWord> path2, Mode mode);

/// Embedding of a quite-strict word into its expansion square:
/// den(u) . den(h1) == den(h2) . den(phi), with u built from c, id, (+)
/// and composition only.
struct Square {
  MorWord h1;
  MorWord h2;
  MorWord u;
  Permutation sigma;
};

/// Requires `phi` Inv-free and `mode` QuiteStrict; throws Error otherwise.
/// u is synthesized by bubble-sorting sigma into adjacent transpositions
/// of the canonical sum, each emitted as one whiskered commutativity.
Square to_square(const MorWord& phi, Mode mode);

/// Word on expansion_expr(parts) realising `sigma` by adjacent transpositions.
MorWord permutation_word(const Expansion& parts, const Permutation& sigma);

/// Image of a General word in the quite-strict regime: objects go to their
/// strict normal form, c, left distributivity and the left annihilator map
/// to themselves on normalized parameters, every other constraint becomes
/// the identity on its normalized source, and the combinators map
/// homomorphically. den_QS(canonical_image(w)) == den_G(w).
MorWord canonical_image(const MorWord& w);

/// One rewriting step: a single generator instance applied at some
/// position inside `state`, whiskered by identities.
struct Layer {
  MorWord word;
  ObjExpr result;
};

/// All single-generator steps out of `state`, in a fixed order. Generator
/// sources are matched syntactically. In QuiteStrict mode the caller is
/// expected to pass strict normal forms, on which only commutativity,
/// left distributivity and the left annihilator can match.
std::vector<Layer> layers_from(const ObjExpr& state, Mode mode);

/// An Inv-free word together with its end object (normal form in QuiteStrict mode).
struct Path {
  MorWord word;
  ObjExpr end;
};

/// Every word out of `start` with at most `depth` layers, including the
/// zero-layer identity. In QuiteStrict mode states are kept in strict
/// normal form between layers. Structural duplicates are pruned.
std::vector<Path> enumerate_paths(const ObjExpr& start, Mode mode, std::size_t depth);

/// The words of enumerate_paths whose end matches `y2` (strict_equal in
/// QuiteStrict mode, syntactic in General mode). Throws Error when depth is 0.
std::vector<MorWord> enumerate_words(const ObjExpr& y1, const ObjExpr& y2, Mode mode, std::size_t depth);

/// Every expression with 1..max_leaves leaves drawn from 0, 1 and the
/// first `atom_budget` atoms of atom_pool(), each atom used at most once.
std::vector<ObjExpr> enumerate_expressions(std::size_t atom_budget, std::size_t max_leaves);

/// x, y, z, w, v, u, then a6, a7, ...
std::vector<Atom> atom_pool(std::size_t n);

struct SweepConfig {
  std::size_t atom_budget = 3;
  std::size_t leaf_budget = 3;
  std::size_t depth = 2;
  Mode mode = Mode::QuiteStrict;
  /// Worker threads; the report does not depend on this.
  std::size_t threads = 1;
  /// QuiteStrict: embed every enumerated word into its expansion square.
  bool check_squares = true;
  /// General: compare every enumerated word with its canonical image.
  bool check_images = true;
};

struct Violation {
  ObjExpr y1;
  ObjExpr y2;
  MorWord w1;
  MorWord w2;
};

struct SweepReport {
  SweepConfig config;
  /// Expressions in the search space.
  std::size_t expressions = 0;
  /// Expressions skipped because their expansion repeats a monomial.
  std::size_t outside_formal_regime = 0;
  /// (start, end) pairs with at least one word.
  std::size_t pairs_checked = 0;
  std::size_t words_checked = 0;
  /// Square embeddings checked and failed (QuiteStrict).
  std::size_t squares_checked = 0;
  std::size_t square_failures = 0;
  /// Canonical images checked and failed (General).
  std::size_t images_checked = 0;
  std::size_t image_failures = 0;
  /// Sorted by (y1, y2, w1, w2) printed forms.
  std::vector<Violation> violations;

  bool coherent() const noexcept {
    return violations.empty() && square_failures == 0 && image_failures == 0;
  }
};

SweepReport sweep(const SweepConfig& config);

}  // namespace anncoh
