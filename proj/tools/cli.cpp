#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>

#include "anncoh/canon.hpp"
#include "anncoh/coherence.hpp"
#include "anncoh/dsl.hpp"
#include "anncoh/expansion.hpp"
#include "anncoh/morphism.hpp"

namespace anncoh::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { Text, Json };

struct Options {
  Mode mode = Mode::QuiteStrict;
  Format format = Format::Text;
  std::size_t budget_atoms = 3;
  std::size_t budget_leaves = 3;
  std::size_t budget_depth = 2;
  std::size_t threads = 1;
};

Json strings(const Expansion& e) {
  Json a = Json::array();
  for (const auto& m : e) a.push_back(to_string(m));
  return a;
}

Json numbers(const Permutation& p) {
  Json a = Json::array();
  for (auto k : p) a.push_back(k);
  return a;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int do_expand(const std::string& text, const Options& opt, std::ostream& out) {
  const ObjExpr y = parse_expr(text);
  const ExpansionForm form = expand(y, opt.mode);
  if (opt.format == Format::Json) {
    Json j;
    j["command"] = "expand";
    j["mode"] = to_string(opt.mode);
    j["expression"] = to_string(y);
    j["monomials"] = strings(form.result);
    j["word"] = to_string(form.word);
    emit(out, j);
  } else {
    out << "expression: " << to_string(y) << '\n';
    out << "monomials: " << to_string(form.result) << '\n';
    out << "word: " << to_string(form.word) << '\n';
  }
  return kOk;
}

Json denotation_json(const MorWord& w, const Denotation& d) {
  Json j;
  j["word"] = to_string(w);
  j["source"] = to_string(w.source());
  j["target"] = to_string(w.target());
  j["src"] = strings(d.src);
  j["dst"] = strings(d.dst);
  j["perm"] = numbers(d.perm);
  return j;
}

int do_denote(const std::string& text, const Options& opt, std::ostream& out) {
  const MorWord w = parse_word(text);
  const auto report = validate(w, opt.mode);
  if (!report.ok()) throw *report.error;
  const Denotation d = denote(w, opt.mode);
  if (opt.format == Format::Json) {
    Json j;
    j["command"] = "denote";
    j["mode"] = to_string(opt.mode);
    j.update(denotation_json(w, d));
    Json redundant = Json::array();
    for (const auto& r : report.redundant) redundant.push_back(to_string(r));
    j["redundant"] = redundant;
    emit(out, j);
  } else {
    out << "word: " << to_string(w) << '\n';
    out << "source: " << to_string(w.source()) << '\n';
    out << "target: " << to_string(w.target()) << '\n';
    out << "src: " << to_string(d.src) << '\n';
    out << "dst: " << to_string(d.dst) << '\n';
    out << "perm: " << perm::to_string(d.perm) << '\n';
    for (const auto& r : report.redundant) out << "redundant: " << to_string(r) << '\n';
  }
  return kOk;
}

int report_verdict(const char* command, const MorWord& lhs, const MorWord& rhs, const Verdict& v, const Options& opt,
                   std::ostream& out) {
  if (opt.format == Format::Json) {
    Json j;
    j["command"] = command;
    j["mode"] = to_string(opt.mode);
    j["equal"] = v.equal;
    j["differing_index"] = v.differing_index ? Json(*v.differing_index) : Json(nullptr);
    j["formal_regime"] = v.formal_regime;
    j["words_checked"] = v.words_checked;
    j["lhs"] = denotation_json(lhs, v.lhs);
    j["rhs"] = denotation_json(rhs, v.rhs);
    emit(out, j);
  } else {
    if (v.equal) {
      out << "EQUAL\n";
    } else if (v.differing_index) {
      const std::size_t k = *v.differing_index;
      out << "NOT-EQUAL at index " << k << ": " << k << " -> " << v.lhs.perm[k] << " vs " << k << " -> "
          << v.rhs.perm[k] << '\n';
    } else {
      out << "NOT-EQUAL\n";
    }
    out << "lhs: " << to_string(lhs) << '\n';
    out << "rhs: " << to_string(rhs) << '\n';
    out << "src: " << to_string(v.lhs.src) << '\n';
    out << "lhs perm: " << perm::to_string(v.lhs.perm) << '\n';
    out << "rhs perm: " << perm::to_string(v.rhs.perm) << '\n';
    out << "regime: " << (v.formal_regime ? "formal" : "outside formal regime (repeated monomials)") << '\n';
  }
  return v.equal ? kOk : kNotEqual;
}

int do_check(const std::string& a, const std::string& b, const Options& opt, std::ostream& out) {
  const MorWord w1 = parse_word(a);
  const MorWord w2 = parse_word(b);
  return report_verdict("check", w1, w2, check_equal(w1, w2, opt.mode), opt, out);
}

int do_verify(const std::string& a, const std::string& b, const Options& opt, std::ostream& out) {
  const auto p1 = parse_path(a);
  const auto p2 = parse_path(b);
  const Verdict v = verify_diagram(p1, p2, opt.mode);
  return report_verdict("verify-diagram", compose_path(p1, opt.mode), compose_path(p2, opt.mode), v, opt, out);
}

int do_sweep(const Options& opt, std::ostream& out) {
  SweepConfig cfg;
  cfg.atom_budget = opt.budget_atoms;
  cfg.leaf_budget = opt.budget_leaves;
  cfg.depth = opt.budget_depth;
  cfg.mode = opt.mode;
  cfg.threads = opt.threads;
  const SweepReport r = sweep(cfg);
  if (opt.format == Format::Json) {
    Json j;
    j["command"] = "sweep";
    j["mode"] = to_string(opt.mode);
    j["budgets"] = Json{{"atoms", cfg.atom_budget}, {"leaves", cfg.leaf_budget}, {"depth", cfg.depth}};
    j["expressions"] = r.expressions;
    j["outside_formal_regime"] = r.outside_formal_regime;
    j["pairs_checked"] = r.pairs_checked;
    j["words_checked"] = r.words_checked;
    j["squares_checked"] = r.squares_checked;
    j["square_failures"] = r.square_failures;
    j["images_checked"] = r.images_checked;
    j["image_failures"] = r.image_failures;
    Json vs = Json::array();
    for (const auto& v : r.violations) {
      vs.push_back(Json{{"y1", to_string(v.y1)}, {"y2", to_string(v.y2)}, {"w1", to_string(v.w1)}, {"w2", to_string(v.w2)}});
    }
    j["violations"] = vs;
    emit(out, j);
  } else {
    out << "mode: " << to_string(opt.mode) << '\n';
    out << "budgets: atoms=" << cfg.atom_budget << " leaves=" << cfg.leaf_budget << " depth=" << cfg.depth << '\n';
    out << "expressions: " << r.expressions << '\n';
    out << "outside formal regime: " << r.outside_formal_regime << '\n';
    out << "pairs_checked: " << r.pairs_checked << '\n';
    out << "words_checked: " << r.words_checked << '\n';
    out << "squares_checked: " << r.squares_checked << " (failures: " << r.square_failures << ")\n";
    out << "images_checked: " << r.images_checked << " (failures: " << r.image_failures << ")\n";
    out << "violations: " << r.violations.size() << '\n';
    for (const auto& v : r.violations) {
      out << "  " << to_string(v.y1) << " -> " << to_string(v.y2) << ": " << to_string(v.w1) << " | "
          << to_string(v.w2) << '\n';
    }
  }
  return r.coherent() ? kOk : kNotEqual;
}

int do_strictify(const std::string& text, const Options& opt, std::ostream& out) {
  const MorWord w = parse_word(text);
  const MorWord img = canonical_image(w);
  if (opt.format == Format::Json) {
    Json j;
    j["command"] = "strictify";
    j["word"] = to_string(w);
    j["image"] = to_string(img);
    j["source"] = to_string(img.source());
    j["target"] = to_string(img.target());
    emit(out, j);
  } else {
    out << "word: " << to_string(w) << '\n';
    out << "image: " << to_string(img) << '\n';
  }
  return kOk;
}

int run_file(const std::string& path, const std::vector<std::string>& prefix, std::ostream& out, std::ostream& err) {
  std::ifstream in(path);
  if (!in) {
    err << "error: cannot open '" << path << "'\n";
    return kInputError;
  }
  int worst = kOk;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::vector<std::string> args = prefix;
    for (auto& a : split_command_line(line)) args.push_back(std::move(a));
    worst = std::max(worst, run(args, out, err));
  }
  return worst;
}

}  // namespace

std::vector<std::string> split_command_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool have = false;
  char quote = 0;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (c == '\\' && i + 1 < line.size() && quote != '\'') {
      cur += line[++i];
      have = true;
    } else if (quote) {
      if (c == quote) {
        quote = 0;
      } else {
        cur += c;
      }
    } else if (c == '"' || c == '\'') {
      quote = c;
      have = true;
    } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      if (have) out.push_back(std::move(cur));
      cur.clear();
      have = false;
    } else {
      cur += c;
      have = true;
    }
  }
  if (have) out.push_back(std::move(cur));
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coherence checker for the free Ann-category", "anncoh"};
  app.fallthrough();
  app.require_subcommand(0, 1);

  Options opt;
  std::string mode = "quite-strict";
  std::string format = "text";
  std::string in_path;
  app.add_option("--mode", mode, "quite-strict | general")->check(CLI::IsMember({"quite-strict", "general"}));
  app.add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--budget-atoms", opt.budget_atoms, "sweep: distinct atoms")->check(CLI::Range(1, 64));
  app.add_option("--budget-leaves", opt.budget_leaves, "sweep: leaves per expression")->check(CLI::Range(1, 16));
  app.add_option("--budget-depth", opt.budget_depth, "sweep: layers per word")->check(CLI::Range(1, 16));
  app.add_option("--threads", opt.threads, "sweep: worker threads")->check(CLI::Range(1, 256));
  app.add_option("--in", in_path, "file with one command per line");
  // Flags on a line of an --in file override the outer ones.
  for (auto* o : app.get_options()) o->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  std::string a;
  std::string b;
  auto* expand_cmd = app.add_subcommand("expand", "canonical expansion form of an expression");
  expand_cmd->add_option("expr", a)->required();
  auto* denote_cmd = app.add_subcommand("denote", "permutation denoted by a word");
  denote_cmd->add_option("word", a)->required();
  auto* check_cmd = app.add_subcommand("check", "decide whether two words are equal");
  check_cmd->add_option("lhs", a)->required();
  check_cmd->add_option("rhs", b)->required();
  auto* verify_cmd = app.add_subcommand("verify-diagram", "compare the composites of two ';'-separated paths");
  verify_cmd->add_option("path1", a)->required();
  verify_cmd->add_option("path2", b)->required();
  auto* sweep_cmd = app.add_subcommand("sweep", "exhaustive coherence check over small expressions");
  auto* strictify_cmd = app.add_subcommand("strictify", "quite-strict image of a general word");
  strictify_cmd->add_option("word", a)->required();

  // CLI11 consumes arguments in reverse order.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  opt.mode = mode == "general" ? Mode::General : Mode::QuiteStrict;
  opt.format = format == "json" ? Format::Json : Format::Text;

  if (!in_path.empty()) {
    if (!app.get_subcommands().empty()) {
      err << "error: --in cannot be combined with a subcommand\n";
      return kInputError;
    }
    std::vector<std::string> prefix{"--mode", mode, "--format", format};
    return run_file(in_path, prefix, out, err);
  }
  if (app.get_subcommands().empty()) {
    err << "error: expected one subcommand: expand, denote, check, verify-diagram, sweep, strictify\n";
    return kInputError;
  }

  try {
    if (*expand_cmd) return do_expand(a, opt, out);
    if (*denote_cmd) return do_denote(a, opt, out);
    if (*check_cmd) return do_check(a, b, opt, out);
    if (*verify_cmd) return do_verify(a, b, opt, out);
    if (*sweep_cmd) return do_sweep(opt, out);
    if (*strictify_cmd) return do_strictify(a, opt, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace anncoh::cli
