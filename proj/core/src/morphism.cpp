#include "anncoh/morphism.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <stdexcept>

namespace anncoh {

namespace {

struct GenInfo {
  GenKind kind;
  std::string_view keyword;
  std::size_t arity;
  bool strict;
};

constexpr std::array<GenInfo, 12> kGenerators{{
    {GenKind::Id, "id", 1, false},
    {GenKind::C, "c", 2, false},
    {GenKind::AssocPlus, "assocP", 3, true},
    {GenKind::G, "g", 1, true},
    {GenKind::D, "d", 1, true},
    {GenKind::AssocTimes, "assocT", 3, true},
    {GenKind::LUnit, "lu", 1, true},
    {GenKind::RUnit, "ru", 1, true},
    {GenKind::DistL, "distL", 3, false},
    {GenKind::DistR, "distR", 3, true},
    {GenKind::LHat, "lhat", 1, false},
    {GenKind::RHat, "rhat", 1, true},
}};

const GenInfo& info(GenKind kind) { return kGenerators[static_cast<std::size_t>(kind)]; }

std::atomic<std::uint64_t> g_denotation_checks{0};

}  // namespace

std::string_view keyword(GenKind kind) noexcept { return info(kind).keyword; }

std::optional<GenKind> generator_from_keyword(std::string_view word) noexcept {
  for (const auto& g : kGenerators) {
    if (g.keyword == word) return g.kind;
  }
  return std::nullopt;
}

std::size_t arity(GenKind kind) noexcept { return info(kind).arity; }

bool is_strict_generator(GenKind kind) noexcept { return info(kind).strict; }

struct MorWord::Node {
  WordKind kind;
  GenKind gen = GenKind::Id;
  std::vector<ObjExpr> params;
  std::vector<MorWord> children;
  ObjExpr source;
  ObjExpr target;
  std::size_t size = 1;
};

namespace {

std::pair<ObjExpr, ObjExpr> boundary(GenKind kind, const std::vector<ObjExpr>& p) {
  const ObjExpr zero = ObjExpr::zero();
  const ObjExpr one = ObjExpr::one();
  switch (kind) {
    case GenKind::Id:
      return {p[0], p[0]};
    case GenKind::C:
      return {p[0] + p[1], p[1] + p[0]};
    case GenKind::AssocPlus:
      return {p[0] + (p[1] + p[2]), (p[0] + p[1]) + p[2]};
    case GenKind::G:
      return {zero + p[0], p[0]};
    case GenKind::D:
      return {p[0] + zero, p[0]};
    case GenKind::AssocTimes:
      return {p[0] * (p[1] * p[2]), (p[0] * p[1]) * p[2]};
    case GenKind::LUnit:
      return {one * p[0], p[0]};
    case GenKind::RUnit:
      return {p[0] * one, p[0]};
    case GenKind::DistL:
      return {p[0] * (p[1] + p[2]), p[0] * p[1] + p[0] * p[2]};
    case GenKind::DistR:
      return {(p[0] + p[1]) * p[2], p[0] * p[2] + p[1] * p[2]};
    case GenKind::LHat:
      return {p[0] * zero, zero};
    case GenKind::RHat:
      return {zero * p[0], zero};
  }
  throw std::logic_error("unknown generator");
}

}  // namespace

MorWord MorWord::generator(GenKind kind, std::vector<ObjExpr> params) {
  if (params.size() != arity(kind)) {
    throw Error("generator '" + std::string(keyword(kind)) + "' takes " + std::to_string(arity(kind)) +
                " object parameter(s), got " + std::to_string(params.size()));
  }
  auto [src, tgt] = boundary(kind, params);
  return MorWord(std::make_shared<const Node>(Node{WordKind::Gen, kind, std::move(params), {}, std::move(src), std::move(tgt), 1}));
}

MorWord MorWord::composite(MorWord outer, MorWord inner) {
  ObjExpr src = inner.source();
  ObjExpr tgt = outer.target();
  const std::size_t n = 1 + outer.size() + inner.size();
  return MorWord(std::make_shared<const Node>(
      Node{WordKind::Comp, GenKind::Id, {}, {std::move(outer), std::move(inner)}, std::move(src), std::move(tgt), n}));
}

MorWord MorWord::oplus(MorWord lhs, MorWord rhs) {
  ObjExpr src = lhs.source() + rhs.source();
  ObjExpr tgt = lhs.target() + rhs.target();
  const std::size_t n = 1 + lhs.size() + rhs.size();
  return MorWord(std::make_shared<const Node>(
      Node{WordKind::OPlus, GenKind::Id, {}, {std::move(lhs), std::move(rhs)}, std::move(src), std::move(tgt), n}));
}

MorWord MorWord::otimes(MorWord lhs, MorWord rhs) {
  ObjExpr src = lhs.source() * rhs.source();
  ObjExpr tgt = lhs.target() * rhs.target();
  const std::size_t n = 1 + lhs.size() + rhs.size();
  return MorWord(std::make_shared<const Node>(
      Node{WordKind::OTimes, GenKind::Id, {}, {std::move(lhs), std::move(rhs)}, std::move(src), std::move(tgt), n}));
}

MorWord MorWord::inverse(MorWord w) {
  ObjExpr src = w.target();
  ObjExpr tgt = w.source();
  const std::size_t n = 1 + w.size();
  return MorWord(std::make_shared<const Node>(
      Node{WordKind::Inv, GenKind::Id, {}, {std::move(w)}, std::move(src), std::move(tgt), n}));
}

WordKind MorWord::kind() const noexcept { return node_->kind; }

GenKind MorWord::gen_kind() const {
  if (kind() != WordKind::Gen) throw Error("gen_kind() on a compound word");
  return node_->gen;
}

std::span<const ObjExpr> MorWord::params() const {
  if (kind() != WordKind::Gen) throw Error("params() on a compound word");
  return node_->params;
}

const MorWord& MorWord::outer() const {
  if (kind() != WordKind::Comp) throw Error("outer() on a non-composite word");
  return node_->children[0];
}

const MorWord& MorWord::inner() const {
  if (kind() != WordKind::Comp) throw Error("inner() on a non-composite word");
  return node_->children[1];
}

const MorWord& MorWord::lhs() const {
  if (kind() != WordKind::OPlus && kind() != WordKind::OTimes) throw Error("lhs() on a word that is not a sum or product");
  return node_->children[0];
}

const MorWord& MorWord::rhs() const {
  if (kind() != WordKind::OPlus && kind() != WordKind::OTimes) throw Error("rhs() on a word that is not a sum or product");
  return node_->children[1];
}

const MorWord& MorWord::operand() const {
  if (kind() != WordKind::Inv) throw Error("operand() on a word that is not an inverse");
  return node_->children[0];
}

const ObjExpr& MorWord::source() const noexcept { return node_->source; }
const ObjExpr& MorWord::target() const noexcept { return node_->target; }
std::size_t MorWord::size() const noexcept { return node_->size; }

bool operator==(const MorWord& a, const MorWord& b) noexcept {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.kind != y.kind || x.size != y.size) return false;
  if (x.kind == WordKind::Gen) return x.gen == y.gen && x.params == y.params;
  return x.children == y.children;
}

namespace {

// Precedence: `;` < `(+)` < `(*)` < atoms of the grammar.
void print(const MorWord& w, int ctx, std::string& out) {
  auto open = [&](int prec) {
    if (ctx > prec) out += '(';
  };
  auto close = [&](int prec) {
    if (ctx > prec) out += ')';
  };
  switch (w.kind()) {
    case WordKind::Gen: {
      out += keyword(w.gen_kind());
      out += '{';
      bool first = true;
      for (const auto& p : w.params()) {
        if (!first) out += ';';
        out += to_string(p);
        first = false;
      }
      out += '}';
      return;
    }
    case WordKind::Comp:
      open(0);
      print(w.inner(), 0, out);
      out += " ; ";
      print(w.outer(), 1, out);
      close(0);
      return;
    case WordKind::OPlus:
      open(1);
      print(w.lhs(), 1, out);
      out += " (+) ";
      print(w.rhs(), 2, out);
      close(1);
      return;
    case WordKind::OTimes:
      open(2);
      print(w.lhs(), 2, out);
      out += " (*) ";
      print(w.rhs(), 3, out);
      close(2);
      return;
    case WordKind::Inv:
      out += "inv(";
      print(w.operand(), 0, out);
      out += ')';
      return;
  }
}

void check(const MorWord& w, Mode mode, ValidationReport& report) {
  if (!report.ok()) return;
  switch (w.kind()) {
    case WordKind::Gen:
      if (mode == Mode::QuiteStrict && is_strict_generator(w.gen_kind())) report.redundant.push_back(w);
      return;
    case WordKind::Comp:
      check(w.inner(), mode, report);
      check(w.outer(), mode, report);
      if (report.ok() && !strict_equal(w.inner().target(), w.outer().source(), mode)) {
        report.error.emplace(w, w.inner().target(), w.outer().source(), mode);
      }
      return;
    case WordKind::OPlus:
    case WordKind::OTimes:
      check(w.lhs(), mode, report);
      check(w.rhs(), mode, report);
      return;
    case WordKind::Inv:
      check(w.operand(), mode, report);
      return;
  }
}

}  // namespace

std::string to_string(const MorWord& w) {
  std::string out;
  print(w, 0, out);
  return out;
}

bool is_inverse_free(const MorWord& w) {
  switch (w.kind()) {
    case WordKind::Gen:
      return true;
    case WordKind::Inv:
      return false;
    case WordKind::Comp:
      return is_inverse_free(w.inner()) && is_inverse_free(w.outer());
    case WordKind::OPlus:
    case WordKind::OTimes:
      return is_inverse_free(w.lhs()) && is_inverse_free(w.rhs());
  }
  return false;
}

bool only_uses(const MorWord& w, std::span<const GenKind> gens, std::span<const WordKind> combinators) {
  if (w.kind() == WordKind::Gen) return std::find(gens.begin(), gens.end(), w.gen_kind()) != gens.end();
  if (std::find(combinators.begin(), combinators.end(), w.kind()) == combinators.end()) return false;
  switch (w.kind()) {
    case WordKind::Comp:
      return only_uses(w.inner(), gens, combinators) && only_uses(w.outer(), gens, combinators);
    case WordKind::OPlus:
    case WordKind::OTimes:
      return only_uses(w.lhs(), gens, combinators) && only_uses(w.rhs(), gens, combinators);
    case WordKind::Inv:
      return only_uses(w.operand(), gens, combinators);
    default:
      return false;
  }
}

CompositionMismatch::CompositionMismatch(MorWord subword, ObjExpr inner_target, ObjExpr outer_source, Mode mode)
    : Error("composition mismatch (" + std::string(to_string(mode)) + "): `" + to_string(inner_target) +
            "` vs `" + to_string(outer_source) + "` in `" + to_string(subword) + "`"),
      subword_(std::move(subword)),
      inner_target_(std::move(inner_target)),
      outer_source_(std::move(outer_source)) {}

ValidationReport validate(const MorWord& w, Mode mode) {
  ValidationReport report;
  check(w, mode, report);
  return report;
}

MorWord comp(const MorWord& g, const MorWord& f, Mode mode) {
  MorWord w = MorWord::composite(g, f);
  if (!strict_equal(f.target(), g.source(), mode)) throw CompositionMismatch(w, f.target(), g.source(), mode);
  return w;
}

MorWord oplus(const MorWord& f, const MorWord& g) { return MorWord::oplus(f, g); }
MorWord otimes(const MorWord& f, const MorWord& g) { return MorWord::otimes(f, g); }
MorWord inv(const MorWord& f) { return MorWord::inverse(f); }

MorWord compose_path(std::span<const MorWord> path, Mode mode) {
  if (path.empty()) throw Error("empty diagram path");
  MorWord acc = path.front();
  for (std::size_t i = 1; i < path.size(); ++i) acc = comp(path[i], acc, mode);
  return acc;
}

namespace perm {

Permutation identity(std::size_t n) {
  Permutation p(n);
  for (std::size_t k = 0; k < n; ++k) p[k] = k;
  return p;
}

Permutation compose(const Permutation& after, const Permutation& before) {
  if (after.size() != before.size()) throw std::logic_error("composing permutations of different sizes");
  Permutation p(before.size());
  for (std::size_t k = 0; k < before.size(); ++k) p[k] = after[before[k]];
  return p;
}

Permutation inverse(const Permutation& p) {
  Permutation q(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) q[p[k]] = k;
  return q;
}

Permutation block_sum(const Permutation& a, const Permutation& b) {
  Permutation p = a;
  p.reserve(a.size() + b.size());
  for (std::size_t k : b) p.push_back(a.size() + k);
  return p;
}

Permutation grid(const Permutation& rows, const Permutation& cols) {
  const std::size_t w = cols.size();
  Permutation p(rows.size() * w);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < w; ++j) p[i * w + j] = rows[i] * w + cols[j];
  }
  return p;
}

Permutation block_swap(std::size_t m, std::size_t q) {
  Permutation p(m + q);
  for (std::size_t k = 0; k < m + q; ++k) p[k] = k < m ? q + k : k - m;
  return p;
}

Permutation riffle(std::size_t m, std::size_t p, std::size_t q) {
  Permutation r(m * (p + q));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < p; ++j) r[i * (p + q) + j] = i * p + j;
    for (std::size_t k = 0; k < q; ++k) r[i * (p + q) + p + k] = m * p + i * q + k;
  }
  return r;
}

bool is_identity(const Permutation& p) {
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] != k) return false;
  }
  return true;
}

std::string to_string(const Permutation& p) {
  std::string out = "[";
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k) out += ' ';
    out += std::to_string(p[k]);
  }
  out += ']';
  return out;
}

}  // namespace perm

bool Denotation::well_typed() const {
  if (src.size() != dst.size() || perm.size() != src.size()) return false;
  std::vector<bool> hit(dst.size(), false);
  for (std::size_t k = 0; k < perm.size(); ++k) {
    if (perm[k] >= dst.size() || hit[perm[k]]) return false;
    hit[perm[k]] = true;
    if (src[k] != dst[perm[k]]) return false;
  }
  return true;
}

Permutation denote_permutation(const MorWord& w) {
  switch (w.kind()) {
    case WordKind::Gen: {
      const auto p = w.params();
      switch (w.gen_kind()) {
        case GenKind::C:
          return perm::block_swap(expansion_size(p[0]), expansion_size(p[1]));
        case GenKind::DistL:
          return perm::riffle(expansion_size(p[0]), expansion_size(p[1]), expansion_size(p[2]));
        case GenKind::LHat:
          return {};
        default: {
          // Every other generator has the same expansion on both sides.
          if (is_strict_generator(w.gen_kind()) && expansion_of(w.source()) != expansion_of(w.target())) {
            throw std::logic_error("identity-denoting generator changes the expansion: " + to_string(w));
          }
          return perm::identity(expansion_size(w.source()));
        }
      }
    }
    case WordKind::Comp: {
      Permutation before = denote_permutation(w.inner());
      Permutation after = denote_permutation(w.outer());
      if (before.size() != after.size()) {
        throw CompositionMismatch(w, w.inner().target(), w.outer().source(), Mode::QuiteStrict);
      }
      return perm::compose(after, before);
    }
    case WordKind::OPlus:
      return perm::block_sum(denote_permutation(w.lhs()), denote_permutation(w.rhs()));
    case WordKind::OTimes:
      return perm::grid(denote_permutation(w.lhs()), denote_permutation(w.rhs()));
    case WordKind::Inv:
      return perm::inverse(denote_permutation(w.operand()));
  }
  throw std::logic_error("unknown word kind");
}

Denotation denote(const MorWord& w, Mode mode) {
  auto report = validate(w, mode);
  if (!report.ok()) throw *report.error;
  Denotation d{expansion_of(w.source()), expansion_of(w.target()), denote_permutation(w)};
  g_denotation_checks.fetch_add(1, std::memory_order_relaxed);
  if (!d.well_typed()) {
    throw std::logic_error("ill-typed denotation for `" + to_string(w) + "`: " + to_string(d.src) + " -> " +
                           to_string(d.dst) + " via " + perm::to_string(d.perm));
  }
  return d;
}

std::uint64_t denotation_checks() noexcept { return g_denotation_checks.load(std::memory_order_relaxed); }

}  // namespace anncoh
