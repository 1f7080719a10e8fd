// Command line front end for the timed-logic workbench: evaluate formulas
// over timed words, compile the event logic down to unary metric logic,
// play interval-menu games, and reproduce the separation experiments.
//
// Exit codes: 0 for a positive verdict (true, duplicator, all checks pass),
// 1 for a negative one, 2 for any error.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tlwb/ef_game.hpp"
#include "tlwb/errors.hpp"
#include "tlwb/formula.hpp"
#include "tlwb/logic_ops.hpp"
#include "tlwb/parse.hpp"
#include "tlwb/print.hpp"
#include "tlwb/semantics.hpp"
#include "tlwb/separations.hpp"
#include "tlwb/timed_word.hpp"
#include "tlwb/ttl2mitl.hpp"

namespace {

using namespace tlwb;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void spill(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write " + path.string());
  out << content;
}

const char* yn(bool b) { return b ? "yes" : "no"; }

IntervalFamilyKind parse_kind(const std::string& name) {
  if (name == "int") return IntervalFamilyKind::Int;
  if (name == "extint") return IntervalFamilyKind::ExtInt;
  if (name == "bint") return IntervalFamilyKind::BInt;
  if (name == "bextint") return IntervalFamilyKind::BExtInt;
  throw DomainError("unknown menu kind '" + name +
                    "' (want int, extint, bint or bextint)");
}

GameVariant parse_variant(const std::string& name) {
  if (name == "us") return GameVariant::US;
  if (name == "fp") return GameVariant::FP;
  throw DomainError("unknown game variant '" + name + "' (want us or fp)");
}

// ---------------------------------------------------------------------------
// eval
// ---------------------------------------------------------------------------

struct EvalArgs {
  std::string word_file, formula_file;
  std::string logic = "mtl";
  long long position = 0;  // 0 means language membership
};

int run_eval(const EvalArgs& a) {
  TimedWord w = parse_word(slurp(a.word_file));
  std::string text = slurp(a.formula_file);
  if (a.position < 0 ||
      (a.position != 0 && static_cast<std::size_t>(a.position) > w.size()))
    throw DomainError("position out of range for a word of " +
                      std::to_string(w.size()) + " events");
  std::size_t pos = static_cast<std::size_t>(a.position);
  bool verdict;
  if (a.logic == "mtl") {
    mtl::Ptr f = parse_mtl(text);
    verdict = pos == 0 ? lang_member(w, f) : eval_mtl(w, pos, f);
  } else if (a.logic == "tptl") {
    tptl::Ptr f = parse_tptl(text);
    verdict = pos == 0 ? lang_member(w, f) : eval_tptl(w, pos, Valuation{}, f);
  } else if (a.logic == "ttl") {
    ttl::Ptr f = parse_ttl(text);
    verdict = pos == 0 ? lang_member(w, f) : eval_ttl(w, pos, Valuation{}, f);
  } else {
    throw DomainError("unknown logic '" + a.logic +
                      "' (want mtl, tptl or ttl)");
  }
  std::cout << (verdict ? "true" : "false") << "\n";
  return verdict ? 0 : 1;
}

// ---------------------------------------------------------------------------
// translate
// ---------------------------------------------------------------------------

struct TranslateArgs {
  std::string formula_file;
  bool literal = false;
  bool strict = false;
  bool porcelain = false;
};

int run_translate(const TranslateArgs& a) {
  if (a.literal && a.strict)
    throw DomainError("--literal and --strict-punctuality conflict");
  GuardMode mode = a.literal ? GuardMode::Literal
                             : a.strict ? GuardMode::Strict : GuardMode::Patched;
  const char* mode_name =
      a.literal ? "literal" : a.strict ? "strict-punctuality" : "patched";
  ttl::Ptr f = parse_ttl(slurp(a.formula_file));
  TtlCompilation c = compile_ttl(f, mode);
  FragmentInfo fi = classify_formula(c.beta_root);
  if (a.porcelain) {
    std::cout << "formula\t" << print(c.beta_root) << "\n";
    std::cout << "mode\t" << mode_name << "\n";
    std::cout << "fragment\tunary\t" << yn(fi.unary) << "\n";
    std::cout << "fragment\tbounded\t" << yn(fi.bounded) << "\n";
    std::cout << "fragment\tnon-punctual\t" << yn(fi.non_punctual) << "\n";
    std::cout << "fragment\tmax-constant\t" << fi.max_constant << "\n";
    std::cout << "stat\tpunctuality-leaks\t" << c.stats.punctual_leaks << "\n";
    std::cout << "stat\there-patches\t" << c.stats.here_patches << "\n";
    std::cout << "stat\tbehind-patches\t" << c.stats.behind_patches << "\n";
    std::cout << "stat\tzero-strict-rewrites\t" << c.stats.zero_strict_rewrites
              << "\n";
    std::cout << "stat\tanchor-patches\t" << c.stats.anchor_patches << "\n";
  } else {
    std::cout << print(c.beta_root) << "\n";
    std::cout << "mode: " << mode_name << "\n";
    std::cout << "fragment: unary=" << yn(fi.unary)
              << " bounded=" << yn(fi.bounded)
              << " non-punctual=" << yn(fi.non_punctual)
              << " max-constant=" << fi.max_constant << "\n";
    std::cout << "patches: here=" << c.stats.here_patches
              << " behind=" << c.stats.behind_patches
              << " zero-strict-rewrites=" << c.stats.zero_strict_rewrites
              << " anchor=" << c.stats.anchor_patches << "\n";
    std::cout << "punctuality-leaks: " << c.stats.punctual_leaks << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// game
// ---------------------------------------------------------------------------

struct GameArgs {
  std::string word0_file, word1_file;
  int rounds = 1;
  std::string menu = "int";
  long long k = 1;
  std::string variant = "us";
  bool porcelain = false;
};

std::string describe_move(const MoveRecord& mv) {
  std::ostringstream os;
  os << "round " << mv.round << ": spoiler " << (mv.until_move ? "U" : "S")
     << mv.ivl.str() << " in word " << mv.delta << " from (" << mv.from0
     << "," << mv.from1 << ") to " << mv.spoiler_to;
  if (mv.dup_to == 0) {
    os << "; duplicator is stuck";
    return os.str();
  }
  os << "; duplicator answers " << mv.dup_to;
  if (mv.part == 'F' || mv.part == 'P') {
    os << "; " << mv.part << "-part";
  } else if (mv.part == 'U' || mv.part == 'S') {
    os << "; " << mv.part << "-part";
    if (mv.mid_spoiler == 0)
      os << " settled by adjacency";
    else
      os << ", spoiler between-pick " << mv.mid_spoiler << ", duplicator "
         << mv.mid_dup;
  }
  return os.str();
}

int run_game(const GameArgs& a) {
  TimedWord w0 = parse_word(slurp(a.word0_file));
  TimedWord w1 = parse_word(slurp(a.word1_file));
  IntervalMenu menu = build_menu(parse_kind(a.menu), a.k);
  GameOutcome out = duplicator_wins(w0, w1, 1, 1, a.rounds, menu,
                                    parse_variant(a.variant));
  const char* who =
      out.winner == Winner::Duplicator ? "duplicator" : "spoiler";
  if (a.porcelain) {
    std::cout << "winner\t" << who << "\n";
    for (const MoveRecord& mv : out.trace)
      std::cout << "move\t" << mv.round << "\t" << mv.delta << "\t"
                << (mv.until_move ? "U" : "S") << "\t" << mv.ivl.str() << "\t"
                << mv.from0 << "\t" << mv.from1 << "\t" << mv.spoiler_to
                << "\t" << mv.dup_to << "\t" << mv.part << "\t"
                << mv.mid_spoiler << "\t" << mv.mid_dup << "\n";
    if (!out.end_note.empty()) std::cout << "note\t" << out.end_note << "\n";
    std::cout << "cap\t" << (out.menu_cap_ok ? "ok" : "short") << "\n";
  } else {
    std::cout << who << "\n";
    for (const MoveRecord& mv : out.trace)
      std::cout << "  " << describe_move(mv) << "\n";
    if (!out.end_note.empty()) std::cout << "  " << out.end_note << "\n";
    if (!out.menu_cap_ok)
      std::cout << "  note: menu constant does not clear the last timestamp; "
                   "the finite menu may miss distinguishing intervals\n";
  }
  return out.winner == Winner::Duplicator ? 0 : 1;
}

// ---------------------------------------------------------------------------
// gen
// ---------------------------------------------------------------------------

struct GenArgs {
  std::string case_name;
  long long n = 1, k = 1, m = 1;
  std::size_t length = 6;
  std::string out_dir = ".";
};

int run_gen(const GenArgs& a) {
  std::optional<CaseId> id = case_from_name(a.case_name);
  if (!id) throw DomainError("unknown case '" + a.case_name + "'");
  std::filesystem::path dir(a.out_dir);
  std::filesystem::create_directories(dir);
  std::vector<std::pair<std::string, std::string>> files;
  switch (*id) {
    case CaseId::Thm2: {
      Thm2Family fam = gen_thm2(a.m, a.k);
      files.emplace_back("thm2_a.word", serialize_word(fam.a));
      files.emplace_back("thm2_b.word", serialize_word(fam.b));
      files.emplace_back("thm2.formula", print(fam.phi) + "\n");
      break;
    }
    case CaseId::Thm3: {
      Thm3Family fam = gen_thm3(a.n);
      files.emplace_back("thm3_a.word", serialize_word(fam.a));
      files.emplace_back("thm3_b.word", serialize_word(fam.b));
      files.emplace_back("thm3.formula", print(fam.phi) + "\n");
      break;
    }
    case CaseId::Thm5: {
      Thm5Family fam = gen_thm5(a.n, a.k);
      files.emplace_back("thm5_a.word", serialize_word(fam.a));
      files.emplace_back("thm5_b.word", serialize_word(fam.b));
      files.emplace_back("thm5.formula", print(fam.phi) + "\n");
      break;
    }
    case CaseId::TtlI: {
      TtlIFamily fam = gen_ttl_i(a.n);
      files.emplace_back("ttl_i_w.word", serialize_word(fam.w));
      files.emplace_back("ttl_i_v.word", serialize_word(fam.v));
      files.emplace_back("ttl_i.formula", print(fam.phi) + "\n");
      break;
    }
    case CaseId::TtlII: {
      TtlIIFamily fam = gen_ttl_ii(a.m);
      files.emplace_back("ttl_ii_w.word", serialize_word(fam.w));
      for (std::size_t j = 0; j < fam.alts.size(); ++j)
        files.emplace_back("ttl_ii_v" + std::to_string(j + 1) + ".word",
                           serialize_word(fam.alts[j]));
      files.emplace_back("ttl_ii.formula", print(fam.phi) + "\n");
      break;
    }
    case CaseId::Instantaneous:
      files.emplace_back(
          "instantaneous.word",
          serialize_word(gen_instantaneous(a.length, {"a", "b", "c"})));
      break;
    case CaseId::Unitary:
      files.emplace_back("unitary.word", serialize_word(gen_unitary(
                                             a.length, {"a", "b", "c"})));
      break;
  }
  for (const auto& [name, content] : files) {
    std::filesystem::path path = dir / name;
    spill(path, content);
    std::cout << "wrote " << path.string() << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// check
// ---------------------------------------------------------------------------

struct CheckArgs {
  std::string case_name;
  SeparationParams params;
  bool small = false;
  bool porcelain = false;
};

int run_check(const CheckArgs& a) {
  if (a.case_name == "all") {
    std::vector<SeparationReport> reports = run_all_small(a.params.seed);
    bool all_pass = true;
    for (const SeparationReport& r : reports) {
      std::cout << render_report(r, a.porcelain);
      if (!a.porcelain) std::cout << "\n";
      all_pass = all_pass && r.passed();
    }
    std::cout << render_summary(reports, a.porcelain);
    return all_pass ? 0 : 1;
  }
  std::optional<CaseId> id = case_from_name(a.case_name);
  if (!id) throw DomainError("unknown case '" + a.case_name + "'");
  SeparationReport r = run_separation(*id, a.params);
  std::cout << render_report(r, a.porcelain);
  return r.passed() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// fragment
// ---------------------------------------------------------------------------

struct FragmentArgs {
  std::string formula_file;
  std::string logic = "mtl";
  bool porcelain = false;
};

template <typename Row>
void emit_rows(const std::vector<Row>& rows, bool porcelain) {
  for (const auto& [key, value] : rows) {
    if (porcelain)
      std::cout << "fragment\t" << key << "\t" << value << "\n";
    else
      std::cout << key << ": " << value << "\n";
  }
}

int run_fragment(const FragmentArgs& a) {
  std::string text = slurp(a.formula_file);
  std::vector<std::pair<std::string, std::string>> rows;
  if (a.logic == "mtl") {
    mtl::Ptr f = parse_mtl(text);
    FragmentInfo fi = classify_formula(f);
    rows = {{"unary", yn(fi.unary)},
            {"bounded", yn(fi.bounded)},
            {"non-punctual", yn(fi.non_punctual)},
            {"max-constant", std::to_string(fi.max_constant)},
            {"modal-depth", std::to_string(modal_depth(f))},
            {"modal-count", std::to_string(modal_count(f))}};
  } else if (a.logic == "tptl") {
    tptl::Ptr f = parse_tptl(text);
    bool future_only = true;
    std::set<std::string> vars;
    auto scan = [&](auto&& self, const tptl::Ptr& g) -> void {
      if (g->op == tptl::Op::Until || g->op == tptl::Op::Since ||
          g->op == tptl::Op::P)
        future_only = false;
      if (g->op == tptl::Op::Freeze) vars.insert(g->var);
      if (g->lhs) self(self, g->lhs);
      if (g->rhs) self(self, g->rhs);
    };
    scan(scan, f);
    rows = {{"future-only", yn(future_only)},
            {"freeze-variables", std::to_string(vars.size())},
            {"modal-depth", std::to_string(modal_depth(f))},
            {"modal-count", std::to_string(modal_count(f))}};
  } else if (a.logic == "ttl") {
    ttl::Ptr f = parse_ttl(text);
    std::set<std::string> vars;
    for (const ttl::Ptr& g : subformulas(f))
      if (g->op == ttl::Op::Freeze) vars.insert(g->var);
    rows = {{"freeze-variables", std::to_string(vars.size())},
            {"modal-depth", std::to_string(modal_depth(f))},
            {"modal-count", std::to_string(modal_count(f))}};
  } else {
    throw DomainError("unknown logic '" + a.logic +
                      "' (want mtl, tptl or ttl)");
  }
  emit_rows(rows, a.porcelain);
  return 0;
}

// ---------------------------------------------------------------------------
// crosscheck
// ---------------------------------------------------------------------------

struct CrosscheckArgs {
  std::size_t pairs = 200;
  int rounds = 2;
  long long max_constant = 2;
  std::size_t max_length = 6;
  std::string variant = "both";
  std::uint64_t seed = 1;
  bool porcelain = false;
};

int run_crosscheck(const CrosscheckArgs& a) {
  Rng rng(a.seed);
  auto rand_ll = [&](long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng);
  };
  WordSampleOpts wo;
  wo.letters = {"a", "b"};
  wo.max_len = a.max_length;
  wo.max_time = 3;
  wo.denominator = 2;
  const IntervalFamilyKind kinds[4] = {
      IntervalFamilyKind::Int, IntervalFamilyKind::ExtInt,
      IntervalFamilyKind::BInt, IntervalFamilyKind::BExtInt};
  std::size_t agreements = 0, capped = 0;
  std::vector<std::string> disagreements;
  for (std::size_t i = 0; i < a.pairs; ++i) {
    TimedWord w0 = sample_word(rng, wo);
    TimedWord w1 = sample_word(rng, wo);
    int rounds = static_cast<int>(rand_ll(1, a.rounds));
    IntervalMenu menu =
        build_menu(kinds[rand_ll(0, 3)], rand_ll(0, a.max_constant));
    GameVariant variant = a.variant == "both"
                              ? (rand_ll(0, 1) == 1 ? GameVariant::US
                                                     : GameVariant::FP)
                              : parse_variant(a.variant);
    CrosscheckReport rep = ef_crosscheck(w0, w1, rounds, menu, variant);
    if (!rep.in_cap) {
      ++capped;
      continue;
    }
    if (rep.agree) {
      ++agreements;
      continue;
    }
    std::ostringstream os;
    os << "game says "
       << (rep.game.winner == Winner::Duplicator ? "duplicator" : "spoiler")
       << ", signatures say "
       << (rep.sig.equivalent ? "equivalent" : "distinguishable") << " on "
       << serialize_word(w0) << " vs " << serialize_word(w1) << " (rounds "
       << rounds << ", menu " << family_name(menu.kind) << "^" << menu.k
       << ", " << (variant == GameVariant::US ? "us" : "fp") << ")";
    disagreements.push_back(os.str());
  }
  if (a.porcelain) {
    std::cout << "crosscheck\tpairs\t" << a.pairs << "\n";
    std::cout << "crosscheck\tagreements\t" << agreements << "\n";
    std::cout << "crosscheck\tcapped\t" << capped << "\n";
    std::cout << "crosscheck\tdisagreements\t" << disagreements.size() << "\n";
    for (const std::string& d : disagreements)
      std::cout << "disagreement\t" << d << "\n";
  } else {
    std::cout << "pairs: " << a.pairs << "  in-cap agreements: " << agreements
              << "  capped: " << capped
              << "  disagreements: " << disagreements.size() << "\n";
    for (const std::string& d : disagreements)
      std::cout << "  " << d << "\n";
  }
  return disagreements.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "workbench for pointwise timed temporal logics: evaluation, "
      "interval-menu games, event-logic translation and separation "
      "experiments"};
  app.require_subcommand(1);

  EvalArgs ea;
  CLI::App* eval_cmd =
      app.add_subcommand("eval", "evaluate a formula on a timed word");
  eval_cmd->add_option("word", ea.word_file, "word file")->required();
  eval_cmd->add_option("formula", ea.formula_file, "formula file")->required();
  eval_cmd->add_option("--logic", ea.logic, "mtl, tptl or ttl")
      ->capture_default_str();
  eval_cmd->add_option(
      "--position", ea.position,
      "1-based position to evaluate at; omit for language membership");

  TranslateArgs ta;
  CLI::App* translate_cmd = app.add_subcommand(
      "translate", "compile an event-logic formula to unary metric logic");
  translate_cmd->add_option("formula", ta.formula_file, "formula file")
      ->required();
  translate_cmd->add_flag("--literal", ta.literal,
                          "use the one-sided guard windows and strict-past "
                          "anchors instead of the patched ones");
  translate_cmd->add_flag("--strict-punctuality", ta.strict,
                          "refuse guards that force a punctual window");
  translate_cmd->add_flag("--porcelain", ta.porcelain,
                          "tab-separated machine-readable output");

  GameArgs ga;
  CLI::App* game_cmd = app.add_subcommand(
      "game", "solve an interval-menu game between two words");
  game_cmd->add_option("word0", ga.word0_file, "first word file")->required();
  game_cmd->add_option("word1", ga.word1_file, "second word file")->required();
  game_cmd->add_option("--rounds", ga.rounds, "number of rounds")
      ->capture_default_str();
  game_cmd->add_option("--menu", ga.menu, "int, extint, bint or bextint")
      ->capture_default_str();
  game_cmd->add_option("--k", ga.k, "menu constant cap")
      ->capture_default_str();
  game_cmd->add_option("--variant", ga.variant, "us or fp")
      ->capture_default_str();
  game_cmd->add_flag("--porcelain", ga.porcelain,
                     "tab-separated machine-readable output");

  GenArgs na;
  CLI::App* gen_cmd = app.add_subcommand(
      "gen", "write a separation case's words and formula to files");
  gen_cmd->add_option("case", na.case_name,
                      "thm2, thm3, thm5, ttl_i, ttl_ii, instantaneous or "
                      "unitary")
      ->required();
  gen_cmd->add_option("--n", na.n, "size parameter")->capture_default_str();
  gen_cmd->add_option("--k", na.k, "constant parameter")
      ->capture_default_str();
  gen_cmd->add_option("--m", na.m, "round or group parameter")
      ->capture_default_str();
  gen_cmd->add_option("--length", na.length,
                      "word length for instantaneous and unitary")
      ->capture_default_str();
  gen_cmd->add_option("--out", na.out_dir, "output directory")
      ->capture_default_str();

  CheckArgs ca;
  CLI::App* check_cmd = app.add_subcommand(
      "check", "run a separation case's evidence checks (or 'all')");
  check_cmd->add_option("case", ca.case_name, "case id or 'all'")->required();
  check_cmd->add_option("--n", ca.params.n, "size parameter")
      ->capture_default_str();
  check_cmd->add_option("--k", ca.params.k, "constant parameter")
      ->capture_default_str();
  check_cmd->add_option("--m", ca.params.m, "round or group parameter")
      ->capture_default_str();
  check_cmd->add_option("--r", ca.params.r, "round count for thm3")
      ->capture_default_str();
  check_cmd->add_option("--samples", ca.params.samples,
                        "sample count for randomized checks")
      ->capture_default_str();
  check_cmd->add_option("--length", ca.params.length,
                        "word length for instantaneous and unitary")
      ->capture_default_str();
  check_cmd->add_option("--seed", ca.params.seed, "random seed")
      ->capture_default_str();
  check_cmd->add_flag("--small", ca.small,
                      "with 'all': smallest parameters for every case (the "
                      "only supported mode, implied)");
  check_cmd->add_flag("--porcelain", ca.porcelain,
                      "tab-separated machine-readable output");

  FragmentArgs fa;
  CLI::App* fragment_cmd =
      app.add_subcommand("fragment", "classify a formula's fragment");
  fragment_cmd->add_option("formula", fa.formula_file, "formula file")
      ->required();
  fragment_cmd->add_option("--logic", fa.logic, "mtl, tptl or ttl")
      ->capture_default_str();
  fragment_cmd->add_flag("--porcelain", fa.porcelain,
                         "tab-separated machine-readable output");

  CrosscheckArgs xa;
  CLI::App* crosscheck_cmd = app.add_subcommand(
      "crosscheck",
      "random game-vs-signature agreement trials on sampled word pairs");
  crosscheck_cmd->add_option("--pairs", xa.pairs, "number of word pairs")
      ->capture_default_str();
  crosscheck_cmd->add_option("--rounds", xa.rounds, "maximum rounds")
      ->capture_default_str();
  crosscheck_cmd
      ->add_option("--max-constant", xa.max_constant, "maximum menu constant")
      ->capture_default_str();
  crosscheck_cmd
      ->add_option("--max-length", xa.max_length, "maximum word length")
      ->capture_default_str();
  crosscheck_cmd->add_option("--variant", xa.variant, "us, fp or both")
      ->capture_default_str();
  crosscheck_cmd->add_option("--seed", xa.seed, "random seed")
      ->capture_default_str();
  crosscheck_cmd->add_flag("--porcelain", xa.porcelain,
                           "tab-separated machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(eval_cmd)) return run_eval(ea);
    if (app.got_subcommand(translate_cmd)) return run_translate(ta);
    if (app.got_subcommand(game_cmd)) return run_game(ga);
    if (app.got_subcommand(gen_cmd)) return run_gen(na);
    if (app.got_subcommand(check_cmd)) return run_check(ca);
    if (app.got_subcommand(fragment_cmd)) return run_fragment(fa);
    if (app.got_subcommand(crosscheck_cmd)) return run_crosscheck(xa);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
