// Acceptance suite: end-to-end checks of the library and CLI, one printed
// verdict per criterion. Exits nonzero if any criterion fails.

#include <array>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "perdoub/classifier.hpp"
#include "perdoub/config.hpp"
#include "perdoub/extremal.hpp"
#include "perdoub/factorization.hpp"
#include "perdoub/fife.hpp"
#include "perdoub/goodness.hpp"
#include "perdoub/word.hpp"

using namespace perdoub;

namespace {

std::string g_cli_path;

struct CliResult {
  int status = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  CliResult result;
  const std::string cmd = g_cli_path + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return result;
  std::array<char, 512> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) {
    result.out.append(buf.data(), n);
  }
  const int raw = pclose(pipe);
  result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return result;
}

template <typename Fn>
void for_each_word(std::size_t len, Fn&& fn) {
  Word w(len, '0');
  const std::uint64_t total = std::uint64_t{1} << len;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    for (std::size_t i = 0; i < len; ++i) {
      w[i] = (bits >> i) & 1 ? '1' : '0';
    }
    fn(w);
  }
}

std::vector<Word> good_words_of_length(std::size_t n) {
  std::vector<Word> out;
  Word w;
  w.reserve(n);
  const std::function<void()> rec = [&] {
    if (w.size() == n) {
      out.push_back(w);
      return;
    }
    for (char c : {'0', '1'}) {
      w.push_back(c);
      if (!suffix_violation(w)) rec();
      w.pop_back();
    }
  };
  rec();
  return out;
}

std::vector<FifeWord> fife_words_of_length(std::size_t len) {
  std::vector<FifeWord> out;
  FifeWord f;
  const std::function<void()> rec = [&] {
    if (f.size() == len) {
      out.push_back(f);
      return;
    }
    for (FifeLetter l :
         {FifeLetter::alpha, FifeLetter::beta, FifeLetter::gamma}) {
      f.push_back(l);
      rec();
      f.pop_back();
    }
  };
  rec();
  return out;
}

// ---------------------------------------------------------------- criteria

std::string criterion_1() {
  const Word expected = "01000101010001000100010101000101";
  const CliResult r = run_cli("d --length 32");
  if (r.status != 0 || r.out != expected + "\n") {
    return "CLI output mismatch: got \"" + r.out + "\"";
  }
  double best_us = 1e9;
  for (int rep = 0; rep < 5; ++rep) {
    const auto t0 = std::chrono::steady_clock::now();
    const Word w = d_prefix(32);
    const auto t1 = std::chrono::steady_clock::now();
    if (w != expected) return "library word mismatch";
    best_us = std::min(
        best_us,
        std::chrono::duration<double, std::micro>(t1 - t0).count());
  }
  if (best_us >= 1000.0) {
    return "generation took " + std::to_string(best_us) + " us";
  }
  return {};
}

std::string criterion_2() {
  for (std::size_t n : {256u, 1024u, 4096u}) {
    if (!is_good(d_prefix(n))) {
      return "d-prefix of length " + std::to_string(n) + " judged not good";
    }
  }
  return {};
}

std::string criterion_3() {
  std::size_t checked = 0;
  std::string detail;
  for (std::size_t n = 1; n <= 12 && detail.empty(); ++n) {
    for_each_word(n, [&](const Word& w) {
      if (!detail.empty()) return;
      ++checked;
      const bool w_good = is_good(w);
      const bool image_good = is_good(apply_morphism(period_doubling(), w));
      if (w_good != image_good) {
        detail = "mismatch for w=" + w;
      }
    });
  }
  if (!detail.empty()) return detail;
  if (checked != 8190) {
    return "expected 8190 words, checked " + std::to_string(checked);
  }
  return {};
}

std::string criterion_4() {
  for (std::size_t n = 4; n <= 14; ++n) {
    for (const Word& w : good_words_of_length(n)) {
      std::vector<Factorization> valid;
      for (const Word& a : {Word(), Word("0"), Word("1")}) {
        for (const Word& b : {Word(), Word("0")}) {
          if (!a.empty() && w.compare(0, 1, a) != 0) continue;
          if (!b.empty() && w.compare(w.size() - 1, 1, b) != 0) continue;
          const Word mid = w.substr(a.size(), w.size() - a.size() - b.size());
          if (auto u = period_doubling_preimage(mid)) {
            valid.push_back(Factorization{a, *u, b});
          }
        }
      }
      if (valid.size() != 1) {
        return std::to_string(valid.size()) + " factorizations of " + w;
      }
      if (!(factorize(w) == valid.front())) {
        return "factorize disagrees for " + w;
      }
      if (!is_good(valid.front().core)) {
        return "core of " + w + " is not good";
      }
    }
  }
  return {};
}

std::string criterion_5() {
  const Word w = "0001000101";
  const struct {
    FifeLetter letter;
    const char* expected;
  } cases[] = {
      {FifeLetter::alpha, "000100010101000100"},
      {FifeLetter::beta, "00010001010100010101000100"},
      {FifeLetter::gamma, "0001000101010001010100010101000100"},
  };
  for (const auto& c : cases) {
    if (apply_fife_letter(w, c.letter) != c.expected) {
      return std::string("expansion mismatch for letter ") +
             static_cast<char>(c.letter);
    }
  }
  return {};
}

std::string criterion_6() {
  const std::size_t horizon = defaults().horizon;
  const auto words = fife_words_of_length(7);
  if (words.size() != 2187) return "expected 2187 operator words";
  for (const Word& seed : {Word("01"), Word("001")}) {
    const FifeAutomaton& aut = automaton_for_seed(seed);
    std::set<std::string> checked_sinks;
    for (const FifeWord& f : words) {
      if (aut.walk(f) != FifeAutomaton::kSink) {
        const Word x = bullet(seed, f);
        if (!is_good(x)) {
          return "accepted " + fife_text(f) + " over " + seed +
                 " gives a non-good word";
        }
        if (!extendable(x, horizon)) {
          return "accepted " + fife_text(f) + " over " + seed +
                 " gives a dead word";
        }
      } else {
        const auto sink_len = aut.first_sink_prefix(f);
        if (!sink_len) return "sink walk without a sink prefix";
        const FifeWord head(f.begin(),
                            f.begin() + static_cast<long>(*sink_len));
        if (!checked_sinks.insert(fife_text(head)).second) continue;
        if (extendable(bullet(seed, head), horizon)) {
          return "rejected prefix " + fife_text(head) + " over " + seed +
                 " is still extendable";
        }
      }
    }
  }
  // Ideal factors force rejection on the 01 automaton (one direction only).
  for (const FifeWord& f : words) {
    if (has_ideal_factor(f) &&
        automaton_01().walk(f) != FifeAutomaton::kSink) {
      return fife_text(f) + " has an ideal factor but the 01 walk accepts";
    }
  }
  // The known one-directional discrepancy on the 001 side.
  const FifeWord babb = parse_fife_word("babb");
  if (!has_ideal_factor(babb)) return "babb should lie in the ideal";
  if (automaton_001().walk(babb) == FifeAutomaton::kSink) {
    return "babb should be accepted by the 001 automaton";
  }
  return {};
}

std::string criterion_7() {
  if (lex_extremal_prefix(4, Direction::least, 64) != "0001") {
    return "least length-4 word is not 0001";
  }
  if (lex_extremal_prefix(1, Direction::greatest, 64) != "1") {
    return "greatest length-1 word is not 1";
  }
  for (Direction dir : {Direction::least, Direction::greatest}) {
    const Word fixed = extremal_fixed_point(dir, 24);
    const Word low = lex_extremal_prefix(24, dir, 64);
    const Word high = lex_extremal_prefix(24, dir, 96);
    if (low != high) return "greedy verdicts differ between horizons 64 and 96";
    if (low != fixed) return "greedy and fixed point disagree at length 24";
  }
  for (std::size_t n = 1; n <= 512; ++n) {
    if (extremal_fixed_point(Direction::least, 2 * n) !=
        apply_morphism(period_doubling(),
                       extremal_fixed_point(Direction::greatest, n))) {
      return "least/greatest identity fails at n=" + std::to_string(n);
    }
    if ("0" + extremal_fixed_point(Direction::greatest, 2 * n - 1) !=
        apply_morphism(period_doubling(),
                       extremal_fixed_point(Direction::least, n))) {
      return "greatest/least identity fails at n=" + std::to_string(n);
    }
  }
  return {};
}

std::string criterion_8() {
  const Defaults& cfg = defaults();
  for (std::size_t n = 1; n <= 9; ++n) {
    std::string detail;
    for_each_word(n, [&](const Word& p) {
      if (!detail.empty()) return;
      const Classification c = classify(p);
      if (c.encountered) {
        if (!c.witness) {
          detail = "no witness attached for " + p;
          return;
        }
        if (!encounter_search_d(p, cfg.witness_window_cap,
                                cfg.witness_max_image, cfg.witness_max_image)) {
          detail = "oracle finds no instance of encountered pattern " + p;
        }
      } else if (encounter_search_d(p, cfg.negative_window,
                                    cfg.negative_max_image,
                                    cfg.negative_max_image)) {
        detail = "oracle finds an instance of unencountered pattern " + p;
      }
    });
    if (!detail.empty()) return detail;
  }
  for (const Word& p : sporadic_patterns()) {
    const Classification c = classify(p);
    if (!c.encountered || !c.witness) {
      return "sporadic pattern " + p + " not classified with a witness";
    }
  }
  for (const Word& p :
       {Word("0000"), Word("00010100"), Word("000111000"),
        Word("0001001001000")}) {
    if (classify(p).encountered) {
      return "pattern " + p + " should classify as not encountered";
    }
  }
  return {};
}

std::string criterion_9() {
  const Word longest = longest_factor_avoiding("010001");
  if (longest != "100010101000") {
    return "longest factor avoiding 010001 is \"" + longest + "\"";
  }
  const Word window = d_prefix(512);
  for (std::size_t s = 0; s < window.size(); ++s) {
    if (window[s] != '0') continue;
    for (std::size_t len = 13; s + len <= window.size(); ++len) {
      Word decoded;
      std::size_t i = s;
      const std::size_t end = s + len;
      while (i < end) {
        if (i + 1 < end && window[i] == '0' && window[i + 1] == '1') {
          decoded.push_back('1');
          i += 2;
        } else {
          decoded.push_back('0');
          i += 1;
        }
      }
      if (decoded.find("1001") == Word::npos) {
        return "factor at (" + std::to_string(s) + "," + std::to_string(len) +
               ") parses without 1001";
      }
    }
  }
  return {};
}

std::string criterion_10() {
  const Word d = d_prefix(4096);
  for (std::size_t k = 1; k <= 12; ++k) {
    std::set<Word> factors;
    for (std::size_t s = 0; s + k <= d.size(); ++s) {
      factors.insert(d.substr(s, k));
    }
    for (const Word& f : factors) {
      if (!factors.count(reverse(f))) {
        return "factor set of length " + std::to_string(k) +
               " not closed under reversal at " + f;
      }
    }
  }
  if (!is_good("00101000")) return "00101000 should be good";
  if (is_good(complement("00101000"))) {
    return "complement of 00101000 should not be good";
  }
  if (is_good(reverse("00101000"))) {
    return "reversal of 00101000 should not be good";
  }
  return {};
}

struct Criterion {
  int number;
  const char* summary;
  std::function<std::string()> run;
};

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--cli") g_cli_path = argv[i + 1];
  }
  if (g_cli_path.empty()) {
    std::cerr << "usage: acceptance --cli <path-to-perdoub>\n";
    return 2;
  }

  const Criterion criteria[] = {
      {1, "d --length 32 prints the expected prefix in under a millisecond",
       criterion_1},
      {2, "d-prefixes of lengths 256, 1024, 4096 are good", criterion_2},
      {3, "goodness of w and of its period-doubling image agree, |w| <= 12",
       criterion_3},
      {4, "good words of length 4..14 factor uniquely with a good core",
       criterion_4},
      {5, "the three worked operator expansions are exact", criterion_5},
      {6, "automata accept exactly the live operator words at length 7",
       criterion_6},
      {7, "extremal words: base cases, greedy/fixed-point agreement, prefix "
          "identities to length 1024",
       criterion_7},
      {8, "classifier agrees with the bounded oracle on all patterns up to "
          "length 9",
       criterion_8},
      {9, "longest 010001-avoiding factor and the 1001-parse property",
       criterion_9},
      {10, "d factors close under reversal; good words do not close under "
           "complement or reversal",
       criterion_10},
  };

  bool all_pass = true;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::string detail = c.run();
    const auto t1 = std::chrono::steady_clock::now();
    const double secs = std::chrono::duration<double>(t1 - t0).count();
    std::ostringstream line;
    line << (detail.empty() ? "PASS" : "FAIL") << " criterion " << c.number
         << ": " << c.summary;
    if (!detail.empty()) line << " -- " << detail;
    line << " [" << secs << "s]";
    std::cout << line.str() << std::endl;
    all_pass = all_pass && detail.empty();
  }
  std::cout << (all_pass ? "acceptance: all criteria passed"
                         : "acceptance: FAILURES present")
            << std::endl;
  return all_pass ? 0 : 1;
}
