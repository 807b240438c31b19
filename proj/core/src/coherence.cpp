#include "anncoh/coherence.hpp"

#include <algorithm>
#include <array>

#include "anncoh/canon.hpp"

namespace anncoh {

Verdict check_equal(const MorWord& w1, const MorWord& w2, Mode mode) {
  if (!strict_equal(w1.source(), w2.source(), mode) || !strict_equal(w1.target(), w2.target(), mode)) {
    throw BoundaryMismatch("boundary mismatch (" + std::string(to_string(mode)) + "): `" + to_string(w1.source()) +
                           "` -> `" + to_string(w1.target()) + "` vs `" + to_string(w2.source()) + "` -> `" +
                           to_string(w2.target()) + "`");
  }
  Verdict v;
  v.lhs = denote(w1, mode);
  v.rhs = denote(w2, mode);
  v.words_checked = 2;
  v.formal_regime = has_distinct_monomials(v.lhs.src);
  for (std::size_t k = 0; k < v.lhs.perm.size(); ++k) {
    if (v.lhs.perm[k] != v.rhs.perm[k]) {
      v.differing_index = k;
      break;
    }
  }
  v.equal = !v.differing_index && v.lhs == v.rhs;
  return v;
}

Verdict verify_diagram(std::span<const MorWord> path1, std::span<const MorWord> path2, Mode mode) {
  const MorWord lhs = compose_path(path1, mode);
  const MorWord rhs = compose_path(path2, mode);
  Verdict v = check_equal(lhs, rhs, mode);
  v.words_checked = path1.size() + path2.size();
  return v;
}

MorWord permutation_word(const Expansion& parts, const Permutation& sigma) {
  if (sigma.size() != parts.size()) throw Error("permutation size does not match the expansion");
  std::vector<ObjExpr> current = monomial_parts(parts);
  std::vector<std::size_t> origin = perm::identity(parts.size());
  std::optional<MorWord> acc;

  const std::size_t n = parts.size();
  for (std::size_t pass = 0; pass + 1 < n; ++pass) {
    bool swapped = false;
    for (std::size_t p = 0; p + 1 < n - pass; ++p) {
      if (sigma[origin[p]] < sigma[origin[p + 1]]) continue;
      MorWord step = MorWord::c(current[p], current[p + 1]);
      if (p > 0) {
        step = MorWord::oplus(MorWord::id(canonical_sum(std::span(current).first(p))), step);
      }
      if (p + 2 < n) {
        step = MorWord::oplus(step, MorWord::id(canonical_sum(std::span(current).subspan(p + 2))));
      }
      acc = acc ? comp(step, *acc, Mode::QuiteStrict) : step;
      std::swap(current[p], current[p + 1]);
      std::swap(origin[p], origin[p + 1]);
      swapped = true;
    }
    if (!swapped) break;
  }
  return acc ? *acc : MorWord::id(expansion_expr(parts));
}

Square to_square(const MorWord& phi, Mode mode) {
  if (mode != Mode::QuiteStrict) throw Error("expansion squares are built in quite-strict mode");
  if (!is_inverse_free(phi)) throw Error("expansion squares need an Inv-free word");
  const Denotation dphi = denote(phi, mode);
  ExpansionForm e1 = expand(phi.source(), mode);
  ExpansionForm e2 = expand(phi.target(), mode);
  const Permutation h1 = denote_permutation(e1.word);
  const Permutation h2 = denote_permutation(e2.word);
  Permutation sigma = perm::compose(h2, perm::compose(dphi.perm, perm::inverse(h1)));
  MorWord u = permutation_word(e1.result, sigma);
  return Square{std::move(e1.word), std::move(e2.word), std::move(u), std::move(sigma)};
}

namespace {

MorWord image(const MorWord& w) {
  switch (w.kind()) {
    case WordKind::Gen: {
      const auto p = w.params();
      switch (w.gen_kind()) {
        case GenKind::Id:
          return MorWord::id(strict_normalize(p[0]));
        case GenKind::C:
          return MorWord::c(strict_normalize(p[0]), strict_normalize(p[1]));
        case GenKind::DistL:
          return MorWord::dist_l(strict_normalize(p[0]), strict_normalize(p[1]), strict_normalize(p[2]));
        case GenKind::LHat:
          return MorWord::lhat(strict_normalize(p[0]));
        default:
          return MorWord::id(strict_normalize(w.source()));
      }
    }
    case WordKind::Comp:
      return comp(image(w.outer()), image(w.inner()), Mode::QuiteStrict);
    case WordKind::OPlus:
      return MorWord::oplus(image(w.lhs()), image(w.rhs()));
    case WordKind::OTimes:
      return MorWord::otimes(image(w.lhs()), image(w.rhs()));
    case WordKind::Inv:
      return MorWord::inverse(image(w.operand()));
  }
  throw std::logic_error("unknown word kind");
}

}  // namespace

MorWord canonical_image(const MorWord& w) {
  auto report = validate(w, Mode::General);
  if (!report.ok()) throw *report.error;
  return image(w);
}

}  // namespace anncoh
