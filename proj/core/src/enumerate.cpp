#include <algorithm>
#include <array>
#include <map>
#include <thread>
#include <unordered_set>

#include "anncoh/canon.hpp"
#include "anncoh/coherence.hpp"

namespace anncoh {

namespace {

void matches_at(const ObjExpr& t, Mode mode, std::vector<Layer>& out) {
  const bool general = mode == Mode::General;
  auto add = [&](MorWord w) {
    ObjExpr result = w.target();
    out.push_back({std::move(w), std::move(result)});
  };
  if (t.is_plus()) {
    const ObjExpr& a = t.lhs();
    const ObjExpr& b = t.rhs();
    add(MorWord::c(a, b));
    if (general) {
      if (b.is_plus()) add(MorWord::assoc_plus(a, b.lhs(), b.rhs()));
      if (a.is_zero()) add(MorWord::g(b));
      if (b.is_zero()) add(MorWord::d(a));
    }
  } else if (t.is_times()) {
    const ObjExpr& a = t.lhs();
    const ObjExpr& b = t.rhs();
    if (b.is_plus()) add(MorWord::dist_l(a, b.lhs(), b.rhs()));
    if (b.is_zero()) add(MorWord::lhat(a));
    if (general) {
      if (a.is_plus()) add(MorWord::dist_r(a.lhs(), a.rhs(), b));
      if (a.is_zero()) add(MorWord::rhat(b));
      if (b.is_times()) add(MorWord::assoc_times(a, b.lhs(), b.rhs()));
      if (a.is_one()) add(MorWord::lunit(b));
      if (b.is_one()) add(MorWord::runit(a));
    }
  }
}

}  // namespace

std::vector<Layer> layers_from(const ObjExpr& state, Mode mode) {
  std::vector<Layer> out;
  matches_at(state, mode, out);
  if (!state.is_plus() && !state.is_times()) return out;

  const bool sum = state.is_plus();
  auto combine = [sum](MorWord l, MorWord r) {
    return sum ? MorWord::oplus(std::move(l), std::move(r)) : MorWord::otimes(std::move(l), std::move(r));
  };
  auto rebuild = [sum](ObjExpr l, ObjExpr r) { return sum ? std::move(l) + std::move(r) : std::move(l) * std::move(r); };

  const ObjExpr& a = state.lhs();
  const ObjExpr& b = state.rhs();
  for (auto& inner : layers_from(a, mode)) {
    out.push_back({combine(std::move(inner.word), MorWord::id(b)), rebuild(std::move(inner.result), b)});
  }
  for (auto& inner : layers_from(b, mode)) {
    out.push_back({combine(MorWord::id(a), std::move(inner.word)), rebuild(a, std::move(inner.result))});
  }
  return out;
}

std::vector<Path> enumerate_paths(const ObjExpr& start, Mode mode, std::size_t depth) {
  const bool strict = mode == Mode::QuiteStrict;
  auto settle = [strict](const ObjExpr& y) { return strict ? strict_normalize(y) : y; };

  std::vector<Path> paths{{MorWord::id(start), settle(start)}};
  std::unordered_set<std::string> seen{to_string(paths.front().word)};

  // The first layer has no word to compose with.
  std::vector<std::pair<std::optional<MorWord>, ObjExpr>> frontier{{std::nullopt, settle(start)}};
  for (std::size_t d = 0; d < depth; ++d) {
    decltype(frontier) next;
    for (const auto& [word, state] : frontier) {
      for (auto& layer : layers_from(state, mode)) {
        MorWord w = word ? comp(layer.word, *word, mode) : layer.word;
        if (!seen.insert(to_string(w)).second) continue;
        ObjExpr end = settle(layer.result);
        paths.push_back({w, end});
        next.emplace_back(std::move(w), std::move(end));
      }
    }
    frontier = std::move(next);
  }
  return paths;
}

std::vector<MorWord> enumerate_words(const ObjExpr& y1, const ObjExpr& y2, Mode mode, std::size_t depth) {
  if (depth == 0) throw Error("word enumeration needs depth >= 1");
  const ObjExpr goal = mode == Mode::QuiteStrict ? strict_normalize(y2) : y2;
  std::vector<MorWord> out;
  for (auto& p : enumerate_paths(y1, mode, depth)) {
    if (p.end == goal) out.push_back(std::move(p.word));
  }
  return out;
}

std::vector<Atom> atom_pool(std::size_t n) {
  static const std::array<const char*, 6> kNames{"x", "y", "z", "w", "v", "u"};
  std::vector<Atom> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.emplace_back(i < kNames.size() ? std::string(kNames[i]) : "a" + std::to_string(i));
  }
  return out;
}

namespace {

struct Shaped {
  ObjExpr expr;
  std::uint64_t used;  // bitmask over the atom pool
};

std::vector<Shaped> with_leaves(std::size_t n, std::uint64_t used, const std::vector<Atom>& pool) {
  std::vector<Shaped> out;
  if (n == 1) {
    out.push_back({ObjExpr::zero(), used});
    out.push_back({ObjExpr::one(), used});
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (!(used & (std::uint64_t{1} << i))) out.push_back({ObjExpr::var(pool[i]), used | (std::uint64_t{1} << i)});
    }
    return out;
  }
  for (std::size_t k = 1; k < n; ++k) {
    for (const auto& l : with_leaves(k, used, pool)) {
      for (const auto& r : with_leaves(n - k, l.used, pool)) {
        out.push_back({l.expr + r.expr, r.used});
        out.push_back({l.expr * r.expr, r.used});
      }
    }
  }
  return out;
}

struct PartialReport {
  bool skipped = false;
  std::size_t pairs = 0;
  std::size_t words = 0;
  std::size_t squares = 0;
  std::size_t square_failures = 0;
  std::size_t images = 0;
  std::size_t image_failures = 0;
  std::vector<Violation> violations;
};

constexpr std::array<GenKind, 2> kSquareGenerators{GenKind::C, GenKind::Id};
constexpr std::array<WordKind, 2> kSquareCombinators{WordKind::OPlus, WordKind::Comp};

PartialReport sweep_one(const ObjExpr& y1, const SweepConfig& config) {
  PartialReport r;
  if (!has_distinct_monomials(expansion_of(y1))) {
    r.skipped = true;
    return r;
  }
  const Mode mode = config.mode;
  const auto paths = enumerate_paths(y1, mode, config.depth);
  r.words = paths.size();

  std::map<std::string, std::vector<std::size_t>> by_end;
  std::vector<Permutation> perms;
  perms.reserve(paths.size());
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const MorWord& w = paths[i].word;
    const Denotation d = denote(w, mode);
    perms.push_back(d.perm);
    by_end[to_string(paths[i].end)].push_back(i);

    if (mode == Mode::QuiteStrict && config.check_squares) {
      const Square sq = to_square(w, mode);
      ++r.squares;
      const bool shape_ok = only_uses(sq.u, kSquareGenerators, kSquareCombinators);
      const Permutation lhs = perm::compose(denote(sq.u, mode).perm, denote(sq.h1, mode).perm);
      const Permutation rhs = perm::compose(denote(sq.h2, mode).perm, d.perm);
      if (!shape_ok || lhs != rhs) ++r.square_failures;
    }
    if (mode == Mode::General && config.check_images) {
      const MorWord img = canonical_image(w);
      ++r.images;
      if (denote(img, Mode::QuiteStrict) != d) ++r.image_failures;
    }
  }

  for (const auto& [key, idx] : by_end) {
    ++r.pairs;
    const std::size_t first = idx.front();
    for (std::size_t k = 1; k < idx.size(); ++k) {
      if (perms[idx[k]] != perms[first]) {
        r.violations.push_back({y1, paths[first].end, paths[first].word, paths[idx[k]].word});
      }
    }
  }
  return r;
}

}  // namespace

std::vector<ObjExpr> enumerate_expressions(std::size_t atom_budget, std::size_t max_leaves) {
  if (atom_budget > 64) throw Error("atom budget above 64 is not supported");
  const auto pool = atom_pool(atom_budget);
  std::vector<ObjExpr> out;
  for (std::size_t n = 1; n <= max_leaves; ++n) {
    for (auto& s : with_leaves(n, 0, pool)) out.push_back(std::move(s.expr));
  }
  return out;
}

SweepReport sweep(const SweepConfig& config) {
  SweepReport report;
  report.config = config;
  const auto exprs = enumerate_expressions(config.atom_budget, config.leaf_budget);
  report.expressions = exprs.size();

  std::vector<PartialReport> partial(exprs.size());
  const std::size_t threads = std::max<std::size_t>(1, std::min(config.threads, exprs.size()));
  if (threads == 1) {
    for (std::size_t i = 0; i < exprs.size(); ++i) partial[i] = sweep_one(exprs[i], config);
  } else {
    std::vector<std::jthread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (std::size_t t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (std::size_t i = t; i < exprs.size(); i += threads) partial[i] = sweep_one(exprs[i], config);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    pool.clear();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  for (auto& p : partial) {
    if (p.skipped) {
      ++report.outside_formal_regime;
      continue;
    }
    report.pairs_checked += p.pairs;
    report.words_checked += p.words;
    report.squares_checked += p.squares;
    report.square_failures += p.square_failures;
    report.images_checked += p.images;
    report.image_failures += p.image_failures;
    for (auto& v : p.violations) report.violations.push_back(std::move(v));
  }
  auto key = [](const Violation& v) {
    return std::array<std::string, 4>{to_string(v.y1), to_string(v.y2), to_string(v.w1), to_string(v.w2)};
  };
  std::sort(report.violations.begin(), report.violations.end(),
            [&](const Violation& a, const Violation& b) { return key(a) < key(b); });
  return report;
}

}  // namespace anncoh
