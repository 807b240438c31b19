#pragma once

// Object expressions of the free Ann-category over a finite atom set.
//
// An ObjExpr is an immutable binary tree over atoms, the constants 0 and 1,
// and the two laws (+) and (*). Nodes are shared; copying an ObjExpr is a
// reference-count bump.

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace anncoh {

/// Base of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A named generating object. `0` and `1` are reserved and rejected.
class Atom {
 public:
  explicit Atom(std::string name);

  const std::string& name() const noexcept { return name_; }

  friend bool operator==(const Atom&, const Atom&) = default;
  friend auto operator<=>(const Atom&, const Atom&) = default;

 private:
  std::string name_;
};

/// Whether `name` is usable as an atom: an ASCII identifier `[a-zA-Z_][a-zA-Z0-9_]*`.
bool is_atom_name(std::string_view name) noexcept;

/// Which constraints are formal non-identities.
///
/// QuiteStrict: only commutativity, left distributivity and the induced
/// left annihilator are non-identities; object equality is taken modulo
/// strict_normalize. General: all eleven constraints are formal and object
/// equality is syntactic.
enum class Mode { QuiteStrict, General };

std::string_view to_string(Mode mode) noexcept;

enum class ExprKind { Zero, One, Var, Plus, Times };

class ObjExpr {
 public:
  /// Default-constructed expression is `0`.
  ObjExpr();

  static ObjExpr zero();
  static ObjExpr one();
  static ObjExpr var(Atom atom);
  static ObjExpr var(std::string name) { return var(Atom(std::move(name))); }
  static ObjExpr plus(ObjExpr lhs, ObjExpr rhs);
  static ObjExpr times(ObjExpr lhs, ObjExpr rhs);

  ExprKind kind() const noexcept;
  bool is_zero() const noexcept { return kind() == ExprKind::Zero; }
  bool is_one() const noexcept { return kind() == ExprKind::One; }
  bool is_var() const noexcept { return kind() == ExprKind::Var; }
  bool is_plus() const noexcept { return kind() == ExprKind::Plus; }
  bool is_times() const noexcept { return kind() == ExprKind::Times; }

  /// Precondition: is_var().
  const Atom& atom() const;
  /// Precondition: is_plus() or is_times().
  const ObjExpr& lhs() const;
  const ObjExpr& rhs() const;

  /// Number of Var leaves.
  std::size_t length() const noexcept;
  /// Number of leaves of any kind.
  std::size_t leaf_count() const noexcept;

  /// Structural equality.
  friend bool operator==(const ObjExpr& a, const ObjExpr& b) noexcept;

  /// Identity of the shared node; equal identities imply structural equality.
  const void* identity() const noexcept { return node_.get(); }

 private:
  struct Node;
  explicit ObjExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

inline ObjExpr operator+(ObjExpr a, ObjExpr b) { return ObjExpr::plus(std::move(a), std::move(b)); }
inline ObjExpr operator*(ObjExpr a, ObjExpr b) { return ObjExpr::times(std::move(a), std::move(b)); }

/// Prints with minimal parentheses: `+` binds loosest and both laws are
/// left-associative, so `(x + y) + z` prints as `x + y + z`.
std::string to_string(const ObjExpr& y);

/// Total order on expressions used for deterministic sorting; compares printed forms.
std::strong_ordering compare(const ObjExpr& a, const ObjExpr& b);

/// Normal form under the equalities that hold in a quite-strict Ann-category:
/// both laws are strictly associative and unital, right distributivity is
/// strict, and `0*A = 0`. `A*0` and `A*(B+C)` stay as they are.
///
/// The result is a left-nested sum of summands; each summand is a
/// left-nested product of atoms optionally closed by a tail factor that is
/// either `0` or a sum of at least two summands. A summand with no atoms
/// and no tail is `1`.
ObjExpr strict_normalize(const ObjExpr& y);

/// Syntactic equality in General mode, equality of normal forms in QuiteStrict mode.
bool strict_equal(const ObjExpr& a, const ObjExpr& b, Mode mode);

/// The Var leaves in left-to-right order.
std::vector<Atom> atoms_of(const ObjExpr& y);

/// Multiplicity of each atom.
std::map<Atom, std::size_t> atom_counts(const ObjExpr& y);

/// True when no atom occurs twice.
bool has_distinct_atoms(const ObjExpr& y);

/// Simultaneous replacement of Var leaves; unbound atoms are left fixed.
ObjExpr subst(const ObjExpr& y, const std::map<Atom, ObjExpr>& bindings);

}  // namespace anncoh
