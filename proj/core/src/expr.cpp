#include "anncoh/expr.hpp"

#include <optional>
#include <utility>

namespace anncoh {

bool is_atom_name(std::string_view name) noexcept {
  if (name.empty()) return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(name.front())) return false;
  for (char c : name.substr(1)) {
    if (!alpha(c) && !digit(c)) return false;
  }
  return true;
}

Atom::Atom(std::string name) : name_(std::move(name)) {
  if (!is_atom_name(name_)) {
    throw Error("invalid atom name '" + name_ + "'");
  }
}

std::string_view to_string(Mode mode) noexcept {
  return mode == Mode::QuiteStrict ? "quite-strict" : "general";
}

struct ObjExpr::Node {
  ExprKind kind;
  std::optional<Atom> atom;
  ObjExpr lhs;
  ObjExpr rhs;
  std::size_t length = 0;
  std::size_t leaves = 1;
};

ObjExpr::ObjExpr() : ObjExpr(zero()) {}

ObjExpr ObjExpr::zero() {
  static const ObjExpr z{std::make_shared<const Node>(Node{ExprKind::Zero, {}, ObjExpr(nullptr), ObjExpr(nullptr), 0, 1})};
  return z;
}

ObjExpr ObjExpr::one() {
  static const ObjExpr o{std::make_shared<const Node>(Node{ExprKind::One, {}, ObjExpr(nullptr), ObjExpr(nullptr), 0, 1})};
  return o;
}

ObjExpr ObjExpr::var(Atom atom) {
  return ObjExpr(std::make_shared<const Node>(
      Node{ExprKind::Var, std::move(atom), ObjExpr(nullptr), ObjExpr(nullptr), 1, 1}));
}

ObjExpr ObjExpr::plus(ObjExpr lhs, ObjExpr rhs) {
  const std::size_t len = lhs.length() + rhs.length();
  const std::size_t leaves = lhs.leaf_count() + rhs.leaf_count();
  return ObjExpr(std::make_shared<const Node>(Node{ExprKind::Plus, {}, std::move(lhs), std::move(rhs), len, leaves}));
}

ObjExpr ObjExpr::times(ObjExpr lhs, ObjExpr rhs) {
  const std::size_t len = lhs.length() + rhs.length();
  const std::size_t leaves = lhs.leaf_count() + rhs.leaf_count();
  return ObjExpr(std::make_shared<const Node>(Node{ExprKind::Times, {}, std::move(lhs), std::move(rhs), len, leaves}));
}

ExprKind ObjExpr::kind() const noexcept { return node_->kind; }

const Atom& ObjExpr::atom() const {
  if (kind() != ExprKind::Var) throw Error("atom() on a non-atom expression");
  return *node_->atom;
}

const ObjExpr& ObjExpr::lhs() const {
  if (kind() != ExprKind::Plus && kind() != ExprKind::Times) throw Error("lhs() on a leaf expression");
  return node_->lhs;
}

const ObjExpr& ObjExpr::rhs() const {
  if (kind() != ExprKind::Plus && kind() != ExprKind::Times) throw Error("rhs() on a leaf expression");
  return node_->rhs;
}

std::size_t ObjExpr::length() const noexcept { return node_ ? node_->length : 0; }
std::size_t ObjExpr::leaf_count() const noexcept { return node_ ? node_->leaves : 0; }

bool operator==(const ObjExpr& a, const ObjExpr& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.kind != y.kind || x.length != y.length || x.leaves != y.leaves) return false;
  switch (x.kind) {
    case ExprKind::Zero:
    case ExprKind::One:
      return true;
    case ExprKind::Var:
      return x.atom == y.atom;
    case ExprKind::Plus:
    case ExprKind::Times:
      return x.lhs == y.lhs && x.rhs == y.rhs;
  }
  return false;
}

namespace {

void print(const ObjExpr& y, std::string& out) {
  switch (y.kind()) {
    case ExprKind::Zero:
      out += '0';
      return;
    case ExprKind::One:
      out += '1';
      return;
    case ExprKind::Var:
      out += y.atom().name();
      return;
    case ExprKind::Plus:
      print(y.lhs(), out);
      out += " + ";
      if (y.rhs().is_plus()) {
        out += '(';
        print(y.rhs(), out);
        out += ')';
      } else {
        print(y.rhs(), out);
      }
      return;
    case ExprKind::Times: {
      const bool wrap_l = y.lhs().is_plus();
      const bool wrap_r = y.rhs().is_plus() || y.rhs().is_times();
      if (wrap_l) out += '(';
      print(y.lhs(), out);
      if (wrap_l) out += ')';
      out += '*';
      if (wrap_r) out += '(';
      print(y.rhs(), out);
      if (wrap_r) out += ')';
      return;
    }
  }
}

// Normal-form model of the strict theory.
struct Summand;
using Sum = std::vector<Summand>;

enum class Tail { None, Zero, Sum };

struct Summand {
  std::vector<std::string> atoms;
  Tail tail = Tail::None;
  Sum sum;  // Tail::Sum only, size >= 2
};

void append(Sum& into, Sum&& more) {
  for (auto& s : more) into.push_back(std::move(s));
}

// atoms (*) S
Sum attach(const std::vector<std::string>& atoms, Sum&& s) {
  if (atoms.empty()) return std::move(s);
  if (s.empty()) return Sum{Summand{atoms, Tail::Zero, {}}};
  if (s.size() == 1) {
    Summand q = std::move(s.front());
    q.atoms.insert(q.atoms.begin(), atoms.begin(), atoms.end());
    return Sum{std::move(q)};
  }
  return Sum{Summand{atoms, Tail::Sum, std::move(s)}};
}

Sum multiply(const Summand& p, const Sum& rhs) {
  switch (p.tail) {
    case Tail::Zero:
      return Sum{p};
    case Tail::Sum: {
      Sum inner;
      for (const auto& q : p.sum) append(inner, multiply(q, rhs));
      return attach(p.atoms, std::move(inner));
    }
    case Tail::None:
      break;
  }
  return attach(p.atoms, Sum(rhs));
}

Sum model(const ObjExpr& y) {
  switch (y.kind()) {
    case ExprKind::Zero:
      return {};
    case ExprKind::One:
      return Sum{Summand{}};
    case ExprKind::Var:
      return Sum{Summand{{y.atom().name()}, Tail::None, {}}};
    case ExprKind::Plus: {
      Sum s = model(y.lhs());
      append(s, model(y.rhs()));
      return s;
    }
    case ExprKind::Times: {
      const Sum lhs = model(y.lhs());
      const Sum rhs = model(y.rhs());
      Sum s;
      for (const auto& p : lhs) append(s, multiply(p, rhs));
      return s;
    }
  }
  return {};
}

ObjExpr reify(const Sum& s);

ObjExpr reify(const Summand& p) {
  ObjExpr acc;
  bool have = false;
  for (const auto& a : p.atoms) {
    ObjExpr v = ObjExpr::var(a);
    acc = have ? ObjExpr::times(acc, v) : v;
    have = true;
  }
  if (p.tail == Tail::None) return have ? acc : ObjExpr::one();
  ObjExpr tail = p.tail == Tail::Zero ? ObjExpr::zero() : reify(p.sum);
  return have ? ObjExpr::times(acc, tail) : tail;
}

ObjExpr reify(const Sum& s) {
  if (s.empty()) return ObjExpr::zero();
  ObjExpr acc = reify(s.front());
  for (std::size_t i = 1; i < s.size(); ++i) acc = ObjExpr::plus(acc, reify(s[i]));
  return acc;
}

void collect_atoms(const ObjExpr& y, std::vector<Atom>& out) {
  switch (y.kind()) {
    case ExprKind::Var:
      out.push_back(y.atom());
      return;
    case ExprKind::Plus:
    case ExprKind::Times:
      collect_atoms(y.lhs(), out);
      collect_atoms(y.rhs(), out);
      return;
    default:
      return;
  }
}

}  // namespace

std::string to_string(const ObjExpr& y) {
  std::string out;
  print(y, out);
  return out;
}

std::strong_ordering compare(const ObjExpr& a, const ObjExpr& b) {
  if (a == b) return std::strong_ordering::equal;
  return to_string(a) <=> to_string(b);
}

ObjExpr strict_normalize(const ObjExpr& y) { return reify(model(y)); }

bool strict_equal(const ObjExpr& a, const ObjExpr& b, Mode mode) {
  if (a == b) return true;
  if (mode == Mode::General) return false;
  return strict_normalize(a) == strict_normalize(b);
}

std::vector<Atom> atoms_of(const ObjExpr& y) {
  std::vector<Atom> out;
  out.reserve(y.length());
  collect_atoms(y, out);
  return out;
}

std::map<Atom, std::size_t> atom_counts(const ObjExpr& y) {
  std::map<Atom, std::size_t> counts;
  for (auto& a : atoms_of(y)) ++counts[a];
  return counts;
}

bool has_distinct_atoms(const ObjExpr& y) {
  for (const auto& [atom, n] : atom_counts(y)) {
    if (n > 1) return false;
  }
  return true;
}

ObjExpr subst(const ObjExpr& y, const std::map<Atom, ObjExpr>& bindings) {
  switch (y.kind()) {
    case ExprKind::Var: {
      auto it = bindings.find(y.atom());
      return it == bindings.end() ? y : it->second;
    }
    case ExprKind::Plus:
      return ObjExpr::plus(subst(y.lhs(), bindings), subst(y.rhs(), bindings));
    case ExprKind::Times:
      return ObjExpr::times(subst(y.lhs(), bindings), subst(y.rhs(), bindings));
    default:
      return y;
  }
}

}  // namespace anncoh
