#include "sadic/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sadic/asymptotics.hpp"
#include "sadic/automorphism.hpp"
#include "sadic/fixture.hpp"

namespace sadic {

namespace {

struct Emitter {
  std::ostream& out;
  bool tsv = false;

  void kv(const std::string& key, const std::string& value) {
    out << key << (tsv ? "\t" : "=") << value << "\n";
  }
  void kv(const std::string& key, std::size_t value) { kv(key, std::to_string(value)); }
  void kv(const std::string& key, unsigned long long value) { kv(key, std::to_string(value)); }
  void kv(const std::string& key, bool value) { kv(key, std::string(value ? "true" : "false")); }
};

struct Common {
  std::string fixture_path;
  std::string format = "kv";
  unsigned long long seed = 0;
};

void add_common(CLI::App* cmd, Common& common) {
  cmd->add_option("fixture", common.fixture_path, "fixture file")->required();
  cmd->add_option("--format", common.format, "report format")
      ->check(CLI::IsMember({"kv", "tsv"}));
  cmd->add_option("--seed", common.seed, "seed recorded in the report header");
}

struct Loaded {
  FixtureSpec spec;
  DirectiveSequence sequence;
  std::string hash;
};

Loaded load(const Common& common) {
  std::ifstream in(common.fixture_path);
  if (!in) throw error("cannot open fixture file: " + common.fixture_path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  FixtureSpec spec = parse_fixture(text, common.fixture_path);
  DirectiveSequence seq = spec.to_sequence();
  return Loaded{std::move(spec), std::move(seq), fixture_hash(text)};
}

Emitter header(std::ostream& out, const Common& common, const Loaded& loaded,
               const std::string& cmd) {
  Emitter emit{out, common.format == "tsv"};
  out << "# sadic " << kVersion << "\n";
  out << "# fixture=" << common.fixture_path << " hash=" << loaded.hash
      << " horizon=" << loaded.spec.horizon << " seed=" << common.seed << "\n";
  out << "# cmd=" << cmd << "\n";
  return emit;
}

std::string join_words(const std::vector<Word>& words) {
  std::string s;
  for (const Word& w : words) {
    if (!s.empty()) s += ' ';
    s += w.str();
  }
  return s;
}

std::string describe(const Interpretation& interp) {
  std::string s = "head=" + interp.head.str();
  s += " blocks=";
  if (interp.blocks.empty()) s += "-";
  for (std::size_t i = 0; i < interp.blocks.size(); ++i)
    s += (i ? "," : "") + interp.blocks[i].str();
  s += " tail=" + (interp.tail.empty() ? std::string("-") : interp.tail.str());
  s += " next=" + interp.head.alphabet().symbol(interp.next);
  s += " head_witness=" + interp.head_witness.str();
  s += " tail_witness=" + interp.tail_witness.str();
  return s;
}

int cmd_lang(const Common& common, int level, std::size_t depth, std::ostream& out) {
  Loaded loaded = load(common);
  Emitter emit = header(out, common, loaded,
                        "lang level=" + std::to_string(level) + " depth=" + std::to_string(depth));
  LanguageTable lang = level_language(loaded.sequence, level, depth);
  emit.kv("lang.level", static_cast<std::size_t>(level));
  emit.kv("lang.cap", lang.cap());
  emit.kv("lang.stabilized_at", static_cast<std::size_t>(lang.stabilized_at()));
  for (std::size_t len = 1; len <= lang.cap(); ++len) {
    emit.kv("lang.count." + std::to_string(len), lang.count_of_length(len));
    emit.kv("lang.words." + std::to_string(len), join_words(lang.words_of_length(len)));
  }
  return 0;
}

int cmd_interp(const Common& common, int level, const std::string& word_text,
               std::ostream& out) {
  Loaded loaded = load(common);
  Emitter emit = header(out, common, loaded,
                        "interp level=" + std::to_string(level) + " word=" + word_text);
  WordSet set = loaded.sequence.level_word_set(level);
  Word d = Word::parse(set.alphabet(), word_text);
  emit.kv("interp.word", d.str());
  emit.kv("interp.set", join_words(set.words()));
  auto interps = enumerate_interpretations(d, set);
  emit.kv("interp.count", interps.size());
  for (std::size_t i = 0; i < interps.size(); ++i)
    emit.kv("interp." + std::to_string(i), describe(interps[i]));
  return 0;
}

int cmd_di(const Common& common, int level, const std::string& word_text, std::ostream& out) {
  Loaded loaded = load(common);
  Emitter emit =
      header(out, common, loaded, "di level=" + std::to_string(level) + " word=" + word_text);
  WordSet set = loaded.sequence.level_word_set(level);
  Word d = Word::parse(set.alphabet(), word_text);
  emit.kv("di.word", d.str());
  auto interps = enumerate_interpretations(d, set);
  std::size_t count = 0, simple_count = 0;
  for (const auto& a : interps)
    for (const auto& b : interps) {
      if (a.next == b.next) continue;
      DoubleInterpretation di{a, b};
      bool simple = is_simple(di, set);
      emit.kv("di." + std::to_string(count),
              "[" + describe(a) + "] / [" + describe(b) + "] simple=" +
                  (simple ? "true" : "false"));
      ++count;
      if (simple) ++simple_count;
    }
  emit.kv("di.count", count);
  emit.kv("di.simple", simple_count);
  return 0;
}

int cmd_reduce(const Common& common, int level, const std::string& word_text,
               std::ostream& out) {
  Loaded loaded = load(common);
  Emitter emit = header(out, common, loaded,
                        "reduce level=" + std::to_string(level) + " word=" + word_text);
  WordSet set = loaded.sequence.level_word_set(level);
  Word d = Word::parse(set.alphabet(), word_text);
  InterpContext ctx(set);
  auto doubles = ctx.simple_doubles(d);
  emit.kv("reduce.word", d.str());
  emit.kv("reduce.simple_count", doubles.size());
  for (std::size_t i = 0; i < doubles.size(); ++i) {
    auto chain = reduction_chain(doubles[i], ctx);
    std::string words;
    for (const auto& step : chain) {
      if (!words.empty()) words += " => ";
      words += step.word().str();
    }
    emit.kv("reduce.chain." + std::to_string(i), words);
    emit.kv("reduce.chain." + std::to_string(i) + ".length", chain.size());
  }
  return 0;
}

int cmd_bounds(const Common& common, int level, std::size_t len_cap, bool exact,
               std::ostream& out) {
  Loaded loaded = load(common);
  Emitter emit = header(out, common, loaded,
                        "bounds level=" + std::to_string(level) +
                            " len-cap=" + std::to_string(len_cap) +
                            (exact ? " exact" : " greedy-allowed"));
  WordSet set = loaded.sequence.level_word_set(level);
  emit.kv("bounds.set", join_words(set.words()));
  emit.kv("bounds.set.size", set.size());
  emit.kv("bounds.set.min_length", set.min_length());
  BSetResult result = build_b_set(set, len_cap, exact);
  emit.kv("bounds.words_scanned", result.interpretable_word_count);
  emit.kv("bounds.simple_doubles", result.simple_double_count);
  emit.kv("bounds.buckets", result.buckets.size());
  for (std::size_t i = 0; i < result.buckets.size(); ++i) {
    const BucketReport& b = result.buckets[i];
    emit.kv("bucket." + std::to_string(i),
            b.profile.str() + " members=" + std::to_string(b.member_count) +
                " irreducible=" + std::to_string(b.irreducible_size) +
                " bound=" + std::to_string(b.per_bucket_bound) +
                " mode=" + (b.exact ? "exact" : "greedy"));
  }
  emit.kv("bounds.max_irreducible", result.max_bucket_irreducible);
  emit.kv("bounds.per_bucket_bound", 61 * set.size());
  emit.kv("bounds.B.size", result.words.size());
  emit.kv("bounds.B.words", join_words(result.words));
  emit.kv("bounds.B.bound", result.cardinality_bound);
  emit.kv("bounds.pass", result.bounds_ok);
  return result.bounds_ok ? 0 : 1;
}

int cmd_asym(const Common& common, std::size_t depth, std::ostream& out) {
  Loaded loaded = load(common);
  Emitter emit = header(out, common, loaded, "asym depth=" + std::to_string(depth));
  std::vector<std::size_t> depths{depth / 4, depth / 2, depth};
  if (depths[0] < 2) throw error("asym depth must be at least 8");
  AsymptoticReport report = count_asymptotic_classes(loaded.sequence, depths);
  for (std::size_t i = 0; i < report.depths.size(); ++i) {
    std::string d = std::to_string(report.depths[i]);
    emit.kv("asym.right_special." + d, report.per_depth_right_special[i]);
    emit.kv("asym.classes." + d, report.per_depth_classes[i]);
  }
  emit.kv("asym.merge_budget", report.merge_budget);
  emit.kv("asym.stabilized", report.stabilized);
  emit.kv("asym.estimate", report.class_count_estimate);
  emit.kv("asym.rank", static_cast<std::size_t>(alphabet_rank(loaded.sequence)));
  emit.kv("asym.bound", report.bound);
  emit.kv("asym.pass", report.bound_ok);
  return report.bound_ok ? 0 : 1;
}

int cmd_aut(const Common& common, std::size_t radius, std::size_t depth, std::ostream& out) {
  Loaded loaded = load(common);
  Emitter emit = header(out, common, loaded,
                        "aut radius=" + std::to_string(radius) +
                            " depth=" + std::to_string(depth));
  if (depth < 2 * radius) throw error("aut depth must be at least 2·radius");
  LanguageTable lang = level_language(loaded.sequence, 0, 2 * radius + 1 + depth);
  auto candidates = enumerate_automorphism_candidates(lang, radius, depth);
  std::size_t census = quotient_census(candidates, lang);
  emit.kv("aut.candidates", candidates.size());
  emit.kv("aut.census", census);
  AsymptoticReport asym = count_asymptotic_classes(loaded.sequence, {32, 64, 128});
  emit.kv("aut.asym_estimate", asym.class_count_estimate);
  emit.kv("aut.asym_stabilized", asym.stabilized);
  FactorialCheck check = check_factorial_bound(census, asym);
  emit.kv("aut.factorial", check.saturated ? std::string("overflow")
                                           : std::to_string(check.factorial));
  emit.kv("aut.pass", check.ok);
  return check.ok ? 0 : 1;
}

int cmd_verify(const Common& common, int level_from, int level_to, std::size_t depth,
               std::size_t len_cap, bool exact, std::ostream& out) {
  Loaded loaded = load(common);
  Emitter emit = header(out, common, loaded,
                        "verify levels=" + std::to_string(level_from) + ".." +
                            std::to_string(level_to) + " depth=" + std::to_string(depth) +
                            " len-cap=" + std::to_string(len_cap));
  std::vector<int> levels;
  for (int n = level_from; n <= level_to; ++n) levels.push_back(n);
  CoveringReport report = verify_covering(loaded.sequence, levels, depth, len_cap, exact);
  for (const CoveringLevel& lvl : report.levels) {
    std::string p = "verify.level." + std::to_string(lvl.level);
    emit.kv(p + ".set_size", lvl.set_size);
    emit.kv(p + ".set_min_length", lvl.set_min_length);
    emit.kv(p + ".set_max_length", lvl.set_max_length);
    emit.kv(p + ".len_cap", lvl.len_cap);
    emit.kv(p + ".B_size", lvl.b_size);
    emit.kv(p + ".B_bound", lvl.b_bound);
    emit.kv(p + ".max_bucket_irreducible", lvl.max_bucket_irreducible);
    emit.kv(p + ".pairs", lvl.pairs_checked);
    emit.kv(p + ".covering_failures", lvl.covering_failures);
    emit.kv(p + ".extractions", lvl.extractions);
    emit.kv(p + ".extraction_ok", lvl.extraction_ok);
  }
  emit.kv("verify.pass", report.pass);
  return report.pass ? 0 : 1;
}

struct LevelRange {
  int from = 1, to = 1;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"desk-scale verification of word interpretations, reductions and "
               "asymptotic bounds for S-adic subshifts"};
  app.require_subcommand(1);

  Common common;
  int level = 1;
  std::size_t depth = 8;
  std::string word_text;
  std::size_t len_cap = 10;
  std::size_t radius = 1;
  bool exact = false, greedy = false;
  std::string levels_text = "1..1";

  auto* lang_cmd = app.add_subcommand("lang", "level language dump");
  add_common(lang_cmd, common);
  lang_cmd->add_option("--level", level, "level index");
  lang_cmd->add_option("--depth", depth, "factor length cap");

  auto* interp_cmd = app.add_subcommand("interp", "interpretations of a word");
  add_common(interp_cmd, common);
  interp_cmd->add_option("--level", level, "level whose images form the word set");
  interp_cmd->add_option("--word", word_text, "word over the level-0 alphabet")->required();

  auto* di_cmd = app.add_subcommand("di", "double interpretations and simplicity");
  add_common(di_cmd, common);
  di_cmd->add_option("--level", level, "level whose images form the word set");
  di_cmd->add_option("--word", word_text, "word over the level-0 alphabet")->required();

  auto* reduce_cmd = app.add_subcommand("reduce", "reduction chains of simple d.i.");
  add_common(reduce_cmd, common);
  reduce_cmd->add_option("--level", level, "level whose images form the word set");
  reduce_cmd->add_option("--word", word_text, "word over the level-0 alphabet")->required();

  auto* bounds_cmd = app.add_subcommand("bounds", "per-bucket irreducible-subset bound");
  add_common(bounds_cmd, common);
  bounds_cmd->add_option("--level", level, "level whose images form the word set");
  bounds_cmd->add_option("--len-cap", len_cap, "maximum interpreted word length");
  bounds_cmd->add_flag("--exact", exact, "force exact subset search");
  bounds_cmd->add_flag("--greedy", greedy, "allow greedy subsets on large buckets");

  auto* asym_cmd = app.add_subcommand("asym", "asymptotic class estimate and bound");
  add_common(asym_cmd, common);
  asym_cmd->add_option("--depth", depth, "deepest window (checks depth/4, depth/2, depth)");

  auto* aut_cmd = app.add_subcommand("aut", "automorphism census and factorial bound");
  add_common(aut_cmd, common);
  aut_cmd->add_option("--radius", radius, "sliding block radius");
  aut_cmd->add_option("--depth", depth, "verification depth");

  auto* verify_cmd = app.add_subcommand("verify", "covering property, end to end");
  add_common(verify_cmd, common);
  verify_cmd->add_option("--levels", levels_text, "level range a..b");
  verify_cmd->add_option("--depth", depth, "disagreement window length");
  verify_cmd->add_option("--len-cap", len_cap, "override per-level word length cap");
  verify_cmd->add_flag("--exact", exact, "force exact subset search");

  std::vector<std::string> argv_copy(args);
  try {
    std::vector<const char*> argv;
    argv.push_back("sadic");
    for (const auto& a : argv_copy) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (lang_cmd->parsed()) return cmd_lang(common, level, depth, out);
    if (interp_cmd->parsed()) return cmd_interp(common, level, word_text, out);
    if (di_cmd->parsed()) return cmd_di(common, level, word_text, out);
    if (reduce_cmd->parsed()) return cmd_reduce(common, level, word_text, out);
    if (bounds_cmd->parsed()) return cmd_bounds(common, level, len_cap, exact, out);
    if (asym_cmd->parsed()) return cmd_asym(common, depth, out);
    if (aut_cmd->parsed()) return cmd_aut(common, radius, depth, out);
    if (verify_cmd->parsed()) {
      auto dots = levels_text.find("..");
      if (dots == std::string::npos) throw error("--levels must look like a..b");
      int from = std::stoi(levels_text.substr(0, dots));
      int to = std::stoi(levels_text.substr(dots + 2));
      if (from < 1 || to < from) throw error("--levels range is empty or invalid");
      return cmd_verify(common, from, to, depth, verify_cmd->count("--len-cap") ? len_cap : 0,
                        exact, out);
    }
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "usage error: no subcommand\n";
  return 2;
}

}  // namespace sadic
