#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "perdoub/classifier.hpp"
#include "perdoub/config.hpp"
#include "perdoub/extremal.hpp"
#include "perdoub/factorization.hpp"
#include "perdoub/fife.hpp"
#include "perdoub/goodness.hpp"
#include "perdoub/serialize.hpp"
#include "perdoub/verify.hpp"
#include "perdoub/word.hpp"

namespace {

using namespace perdoub;

constexpr int kExitOk = 0;
constexpr int kExitFalseVerdict = 1;
constexpr int kExitUsage = 2;
constexpr int kExitModuleError = 3;

const std::string kBinaryWordHint = "must match ^[01]+$";

std::string validate_binary_word(const std::string& s) {
  if (s.empty() || !is_binary_word(s)) return kBinaryWordHint;
  return {};
}

std::string validate_fife_letters(const std::string& s) {
  if (s.empty()) return "must match ^[abg]+$";
  for (char c : s) {
    if (c != 'a' && c != 'b' && c != 'g') return "must match ^[abg]+$";
  }
  return {};
}

void emit(const Json& j) { std::cout << j.dump() << "\n"; }

std::string violation_text(const Violation& v) {
  switch (v.kind) {
    case ViolationKind::factor_11:
      return "factor 11 at " + std::to_string(v.start);
    case ViolationKind::factor_1001:
      return "factor 1001 at " + std::to_string(v.start);
    case ViolationKind::fourth_power:
      return "instance of 0000 at " + std::to_string(v.start) +
             ", X=" + *v.image0;
    case ViolationKind::pattern_00010100:
      return "instance of 00010100 at " + std::to_string(v.start) +
             ", X=" + *v.image0 + ", Y=" + *v.image1;
  }
  return {};
}

std::string witness_text(const PatternWitness& w) {
  std::string out = "(start=" + std::to_string(w.start);
  out += ", X=" + (w.image0 ? *w.image0 : std::string("-"));
  out += ", Y=" + (w.image1 ? *w.image1 : std::string("-"));
  out += ")";
  return out;
}

int run_d(std::size_t length, bool json) {
  const Word w = d_prefix(length);
  if (json) {
    Json j;
    j["length"] = length;
    j["word"] = w;
    emit(j);
  } else {
    std::cout << w << "\n";
  }
  return kExitOk;
}

int run_good(const std::string& word, bool json) {
  const auto v = goodness_violation(word);
  if (json) {
    emit(good_verdict_json(word));
  } else if (v) {
    std::cout << "not good (" << violation_text(*v) << ")\n";
  } else {
    std::cout << "good\n";
  }
  return v ? kExitFalseVerdict : kExitOk;
}

int run_factorize(const std::string& word, bool full, bool json) {
  const Factorization f = factorize(word);
  Json j = factorization_json(f);
  if (full) {
    const Decomposition dec = full_decomposition(word);
    if (json) {
      j["decomposition"] = decomposition_json(dec);
    } else {
      std::cout << "a=\"" << f.a << "\" core=\"" << f.core << "\" b=\"" << f.b
                << "\"\n";
      std::string indent;
      for (const auto& [a, b] : dec.layers) {
        std::cout << indent << "a=\"" << a << "\" b=\"" << b << "\"\n";
        indent += "  ";
      }
      std::cout << indent << "core=\"" << dec.core << "\"\n";
      return kExitOk;
    }
  }
  if (json) {
    emit(j);
  } else {
    std::cout << "a=\"" << f.a << "\" core=\"" << f.core << "\" b=\"" << f.b
              << "\"\n";
  }
  return kExitOk;
}

int run_fife_walk(const std::string& seed, const std::string& letters,
                  bool json) {
  const FifeWord f = parse_fife_word(letters);
  const FifeAutomaton& aut = automaton_for_seed(seed);
  const Word w = bullet(seed, f);
  const int state = aut.walk(f);
  const bool ideal = has_ideal_factor(f);
  if (json) {
    Json j;
    j["seed"] = seed;
    j["letters"] = letters;
    j["word"] = w;
    j["state"] = std::string(aut.state_name(state));
    j["ideal_factor"] = ideal;
    emit(j);
  } else {
    std::cout << "word=" << w << " state=" << aut.state_name(state)
              << " ideal_factor=" << (ideal ? "true" : "false") << "\n";
  }
  return kExitOk;
}

int run_fife_enumerate(const std::string& seed, std::size_t depth, bool json) {
  const auto words = accepted_words(seed, depth);
  if (json) {
    Json j;
    j["seed"] = seed;
    j["depth"] = depth;
    j["words"] = words;
    emit(j);
  } else {
    for (const Word& w : words) std::cout << w << "\n";
  }
  return kExitOk;
}

int run_extremal(Direction dir, std::size_t length, const std::string& mode,
                 std::size_t horizon, bool verify_modes, bool json) {
  const char* dir_name = dir == Direction::least ? "least" : "greatest";
  if (verify_modes) {
    const Word greedy = lex_extremal_prefix(length, dir, horizon);
    const Word fixed = extremal_fixed_point(dir, length);
    const bool agree = greedy == fixed;
    if (json) {
      Json j;
      j["direction"] = dir_name;
      j["length"] = length;
      j["greedy"] = greedy;
      j["fixedpoint"] = fixed;
      j["agree"] = agree;
      emit(j);
    } else {
      std::cout << (agree ? "agree " + greedy
                          : "disagree greedy=" + greedy + " fixedpoint=" + fixed)
                << "\n";
    }
    return agree ? kExitOk : kExitFalseVerdict;
  }
  const Word w = mode == "greedy" ? lex_extremal_prefix(length, dir, horizon)
                                  : extremal_fixed_point(dir, length);
  if (json) {
    Json j;
    j["direction"] = dir_name;
    j["length"] = length;
    j["mode"] = mode;
    j["horizon"] = horizon;
    j["word"] = w;
    emit(j);
  } else {
    std::cout << w << "\n";
  }
  return kExitOk;
}

int run_classify(const std::string& pattern, std::size_t window,
                 std::size_t max_image, bool json) {
  ClassifyOptions opts;
  if (window != 0) {
    opts.factor.window_floor = window;
    opts.witness_window_cap = window;
  }
  if (max_image != 0) opts.witness_max_image = max_image;
  const Classification c = classify(pattern, opts);
  if (json) {
    emit(classification_json(pattern, c));
  } else if (c.encountered) {
    std::cout << "encountered reason=" << reason_name(c.reason)
              << " complemented=" << (c.complemented ? "true" : "false")
              << " witness=" << witness_text(*c.witness) << "\n";
  } else {
    std::cout << "not encountered\n";
  }
  return kExitOk;
}

int run_count_good(std::size_t max_length, bool json) {
  const auto counts = count_good(max_length);
  if (json) {
    Json j;
    j["max_length"] = max_length;
    j["counts"] = counts;
    emit(j);
  } else {
    for (std::size_t n = 0; n < counts.size(); ++n) {
      std::cout << n << " " << counts[n] << "\n";
    }
  }
  return kExitOk;
}

void show_config() {
  const Defaults& c = defaults();
  std::cout << "horizon " << c.horizon << "\n"
            << "slide_horizon " << c.slide_horizon << "\n"
            << "horizon_step " << c.horizon_step << "\n"
            << "factor_window_floor " << c.factor_window_floor << "\n"
            << "factor_window_scale " << c.factor_window_scale << "\n"
            << "factor_query_bound " << c.factor_query_bound << "\n"
            << "witness_max_image " << c.witness_max_image << "\n"
            << "witness_window_cap " << c.witness_window_cap << "\n"
            << "negative_max_image " << c.negative_max_image << "\n"
            << "negative_window " << c.negative_window << "\n"
            << "enum_bound " << good_word_enum_bound() << "\n"
            << "fife_depth_bound " << c.fife_depth_bound << "\n";
}

int run_verify(const std::string& suite, bool show, bool json) {
  if (show) {
    show_config();
    return kExitOk;
  }
  bool all_pass = true;
  Json results = Json::array();
  for (const auto& check : property_checks()) {
    if (!suite.empty() && check.suite != suite) continue;
    std::cerr << "running " << check.suite << "/" << check.name << "\n";
    const CheckOutcome outcome = check.run();
    all_pass = all_pass && outcome.pass;
    if (json) {
      Json j;
      j["suite"] = check.suite;
      j["name"] = check.name;
      j["pass"] = outcome.pass;
      j["detail"] = outcome.detail;
      results.push_back(std::move(j));
    } else {
      std::cout << (outcome.pass ? "PASS " : "FAIL ") << check.suite << "/"
                << check.name
                << (outcome.detail.empty() ? "" : " (" + outcome.detail + ")")
                << "\n";
    }
  }
  if (json) {
    Json j;
    j["results"] = std::move(results);
    j["passed"] = all_pass;
    emit(j);
  }
  return all_pass ? kExitOk : kExitFalseVerdict;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Good binary words and the period-doubling sequence"};
  app.require_subcommand(1);

  bool json = false;
  app.add_flag("--json", json, "emit JSON on stdout");

  auto* d_cmd = app.add_subcommand("d", "print a prefix of the period-doubling word");
  std::size_t d_length = 32;
  d_cmd->add_option("--length", d_length, "prefix length")
      ->required()
      ->check(CLI::PositiveNumber);

  auto* good_cmd = app.add_subcommand("good", "decide whether a word is good");
  std::string good_word;
  good_cmd->add_option("word", good_word, "binary word")
      ->required()
      ->check(CLI::Validator(validate_binary_word, "WORD"));

  auto* fact_cmd = app.add_subcommand("factorize", "split w into a.delta(u).b");
  std::string fact_word;
  bool fact_full = false;
  fact_cmd->add_option("word", fact_word, "binary word")
      ->required()
      ->check(CLI::Validator(validate_binary_word, "WORD"));
  fact_cmd->add_flag("--full", fact_full, "peel layers down to a short core");

  auto* fife_cmd = app.add_subcommand("fife", "suffix-extension operators");
  fife_cmd->require_subcommand(1);
  auto* walk_cmd = fife_cmd->add_subcommand("walk", "fold letters and walk the automaton");
  std::string fife_seed = "01";
  std::string fife_letters;
  walk_cmd->add_option("--seed", fife_seed, "01 or 001")
      ->check(CLI::IsMember({"01", "001"}));
  walk_cmd->add_option("--letters", fife_letters, "word over {a,b,g}")
      ->required()
      ->check(CLI::Validator(validate_fife_letters, "LETTERS"));
  auto* enum_cmd = fife_cmd->add_subcommand("enumerate", "accepted words at a fixed depth");
  std::string enum_seed = "01";
  std::size_t enum_depth = 0;
  enum_cmd->add_option("--seed", enum_seed, "01 or 001")
      ->check(CLI::IsMember({"01", "001"}));
  enum_cmd->add_option("--depth", enum_depth, "operator word length")->required();

  auto* ext_cmd = app.add_subcommand("extremal", "lexicographically extremal good words");
  bool ext_least = false;
  bool ext_greatest = false;
  std::size_t ext_length = 0;
  std::string ext_mode = "greedy";
  std::size_t ext_horizon = defaults().horizon;
  bool ext_verify = false;
  auto* least_flag = ext_cmd->add_flag("--least", ext_least, "least word");
  ext_cmd->add_flag("--greatest", ext_greatest, "greatest word")
      ->excludes(least_flag);
  ext_cmd->add_option("--length", ext_length, "prefix length")
      ->required()
      ->check(CLI::PositiveNumber);
  ext_cmd->add_option("--mode", ext_mode, "greedy or fixedpoint")
      ->check(CLI::IsMember({"greedy", "fixedpoint"}));
  ext_cmd->add_option("--horizon", ext_horizon, "extendability horizon")
      ->check(CLI::PositiveNumber);
  ext_cmd->add_flag("--verify", ext_verify, "run both modes and compare");

  auto* cls_cmd = app.add_subcommand("classify", "does d encounter this pattern?");
  std::string cls_pattern;
  std::size_t cls_window = 0;
  std::size_t cls_max_image = 0;
  cls_cmd->add_option("pattern", cls_pattern, "binary pattern")
      ->required()
      ->check(CLI::Validator(validate_binary_word, "WORD"));
  cls_cmd->add_option("--window", cls_window, "d-prefix window")
      ->check(CLI::PositiveNumber);
  cls_cmd->add_option("--max-image", cls_max_image, "witness image cap")
      ->check(CLI::PositiveNumber);

  auto* count_cmd = app.add_subcommand("count-good", "number of good words per length");
  std::size_t count_max = 0;
  count_cmd->add_option("--max-length", count_max, "largest length")->required();

  auto* verify_cmd = app.add_subcommand("verify", "run the property suites");
  std::string verify_suite;
  bool verify_show_config = false;
  verify_cmd->add_option("--suite", verify_suite, "restrict to one suite");
  verify_cmd->add_flag("--show-config", verify_show_config,
                       "print the finite-proxy defaults and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*d_cmd) return run_d(d_length, json);
    if (*good_cmd) return run_good(good_word, json);
    if (*fact_cmd) return run_factorize(fact_word, fact_full, json);
    if (*walk_cmd) return run_fife_walk(fife_seed, fife_letters, json);
    if (*enum_cmd) return run_fife_enumerate(enum_seed, enum_depth, json);
    if (*ext_cmd) {
      if (ext_least == ext_greatest) {
        std::cerr << "exactly one of --least/--greatest is required\n";
        return kExitUsage;
      }
      return run_extremal(ext_least ? Direction::least : Direction::greatest,
                          ext_length, ext_mode, ext_horizon, ext_verify, json);
    }
    if (*cls_cmd) return run_classify(cls_pattern, cls_window, cls_max_image, json);
    if (*count_cmd) return run_count_good(count_max, json);
    if (*verify_cmd) return run_verify(verify_suite, verify_show_config, json);
  } catch (const Error& e) {
    if (e.code() == Errc::usage || e.code() == Errc::bad_word) {
      std::cerr << "usage error: " << e.what() << "\n";
      return kExitUsage;
    }
    std::cerr << "error: " << e.what() << "\n";
    return kExitModuleError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitModuleError;
  }
  return kExitUsage;
}
