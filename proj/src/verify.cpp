#include "perdoub/verify.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "perdoub/classifier.hpp"
#include "perdoub/config.hpp"
#include "perdoub/extremal.hpp"
#include "perdoub/factorization.hpp"
#include "perdoub/fife.hpp"
#include "perdoub/goodness.hpp"
#include "perdoub/word.hpp"

namespace perdoub {

namespace {

CheckOutcome pass(std::string detail = {}) { return {true, std::move(detail)}; }
CheckOutcome fail(std::string detail) { return {false, std::move(detail)}; }

// Enumerates every binary word of the given length into a reused buffer.
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

Word random_word(std::mt19937& rng, std::size_t len) {
  Word w(len, '0');
  for (char& c : w) c = (rng() & 1) ? '1' : '0';
  return w;
}

std::set<Word> factor_set(const Word& w, std::size_t k) {
  std::set<Word> out;
  if (k > w.size()) return out;
  for (std::size_t s = 0; s + k <= w.size(); ++s) out.insert(w.substr(s, k));
  return out;
}

// Test-side oracle, independent of encounters_pattern: enumerate every pair
// of nonempty factors of w as candidate images, build the instance string
// and look for it by plain substring search.
bool naive_encounters(const Word& w, const Word& p) {
  const bool need0 = p.find('0') != Word::npos;
  const bool need1 = p.find('1') != Word::npos;
  std::set<Word> unique;
  for (std::size_t s = 0; s < w.size(); ++s) {
    for (std::size_t len = 1; s + len <= w.size(); ++len) {
      unique.insert(w.substr(s, len));
    }
  }
  std::vector<Word> candidates(unique.begin(), unique.end());
  const Word unused;
  const std::vector<Word> none = {unused};
  const auto build = [&](const Word& x, const Word& y) {
    Word inst;
    for (char c : p) inst += (c == '0') ? x : y;
    return inst;
  };
  for (const Word& x : need0 ? candidates : none) {
    for (const Word& y : need1 ? candidates : none) {
      if (w.find(build(x, y)) != Word::npos) return true;
    }
  }
  return false;
}

// Good words of exactly length n without the configured enumeration bound
// (verify scales are fixed by the suites themselves).
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

std::vector<FifeWord> fife_words_up_to(std::size_t max_len) {
  std::vector<FifeWord> out;
  FifeWord f;
  const std::function<void(std::size_t)> rec = [&](std::size_t left) {
    out.push_back(f);
    if (left == 0) return;
    for (FifeLetter l :
         {FifeLetter::alpha, FifeLetter::beta, FifeLetter::gamma}) {
      f.push_back(l);
      rec(left - 1);
      f.pop_back();
    }
  };
  rec(max_len);
  return out;
}

// ---------------------------------------------------------------- word-core

CheckOutcome check_morphism_homomorphism() {
  std::mt19937 rng(42);
  const Morphism* morphisms[] = {&period_doubling(), &lex_greatest_morphism(),
                                 &lex_least_morphism(), &parse_code_01(),
                                 &parse_code_10()};
  for (int iter = 0; iter < 200; ++iter) {
    const Morphism& m = *morphisms[rng() % 5];
    const Word u = random_word(rng, rng() % 40);
    const Word v = random_word(rng, rng() % 40);
    if (apply_morphism(m, u + v) != apply_morphism(m, u) + apply_morphism(m, v)) {
      return fail("m(uv) != m(u)m(v) for u=" + u + " v=" + v);
    }
  }
  return pass();
}

CheckOutcome check_iterate_prefix_monotone() {
  const std::pair<const Morphism*, char> cases[] = {
      {&period_doubling(), '0'},
      {&lex_greatest_morphism(), '1'},
      {&lex_least_morphism(), '0'}};
  for (const auto& [m, seed] : cases) {
    for (std::size_t n = 0; n <= 64; ++n) {
      const Word shorter = iterate_to_length(*m, seed, n);
      const Word longer = iterate_to_length(*m, seed, n + 1);
      if (longer.compare(0, n, shorter) != 0) {
        return fail("prefix break at n=" + std::to_string(n));
      }
    }
  }
  return pass();
}

CheckOutcome check_involutions() {
  std::mt19937 rng(43);
  for (int iter = 0; iter < 200; ++iter) {
    const Word w = random_word(rng, rng() % 64);
    if (reverse(reverse(w)) != w) return fail("reverse not involutive: " + w);
    if (complement(complement(w)) != w) {
      return fail("complement not involutive: " + w);
    }
  }
  return pass();
}

CheckOutcome check_delta_squared_conjugate() {
  const Morphism& delta = period_doubling();
  const Morphism& h = lex_greatest_morphism();
  for (char a : {'0', '1'}) {
    const Word letter(1, a);
    const Word lhs = apply_morphism(delta, apply_morphism(delta, letter));
    Word rhs = "0" + (a == '0' ? h.image0 : h.image1);
    rhs.pop_back();
    if (lhs != rhs) {
      return fail(std::string("conjugation identity fails for letter ") + a);
    }
  }
  return pass();
}

CheckOutcome check_d_reversal_closure() {
  const Word d = d_prefix(4096);
  for (std::size_t k = 1; k <= 12; ++k) {
    const auto factors = factor_set(d, k);
    for (const Word& f : factors) {
      if (!factors.count(reverse(f))) {
        return fail("reverse of d-factor " + f + " is not a d-factor");
      }
    }
  }
  return pass();
}

// ----------------------------------------------------------------- goodness

CheckOutcome check_factorial_closure() {
  for (std::size_t n = 0; n <= 14; ++n) {
    for (const Word& w : good_words_of_length(n)) {
      for (std::size_t s = 0; s < w.size(); ++s) {
        for (std::size_t len = 1; s + len <= w.size(); ++len) {
          if (!is_good(w.substr(s, len))) {
            return fail("factor " + w.substr(s, len) + " of good word " + w +
                        " is not good");
          }
        }
      }
    }
  }
  return pass();
}

CheckOutcome check_delta_preserves_good() {
  for (std::size_t n = 0; n <= 12; ++n) {
    for (const Word& w : good_words_of_length(n)) {
      if (!is_good(apply_morphism(period_doubling(), w))) {
        return fail("delta image of good word " + w + " is not good");
      }
    }
  }
  return pass();
}

CheckOutcome check_delta_reflects_good() {
  for (std::size_t n = 1; n <= 12; ++n) {
    bool ok = true;
    Word bad;
    for_each_word(n, [&](const Word& w) {
      if (!ok) return;
      if (is_good(apply_morphism(period_doubling(), w)) && !is_good(w)) {
        ok = false;
        bad = w;
      }
    });
    if (!ok) return fail("delta(" + bad + ") good but " + bad + " is not");
  }
  return pass();
}

CheckOutcome check_encounter_naive_oracle() {
  const Word fixed_patterns[] = {"0000", "00010100", "0010100", "1001", "010"};
  for (std::size_t n = 1; n <= 8; ++n) {
    bool ok = true;
    std::string detail;
    for_each_word(n, [&](const Word& w) {
      if (!ok) return;
      for (const Word& p : fixed_patterns) {
        if (encounters_pattern(w, p).has_value() != naive_encounters(w, p)) {
          ok = false;
          detail = "disagreement on w=" + w + " p=" + p;
          return;
        }
      }
    });
    if (!ok) return fail(detail);
  }
  std::mt19937 rng(44);
  for (int iter = 0; iter < 300; ++iter) {
    const Word w = random_word(rng, 1 + rng() % 12);
    const Word p = random_word(rng, 1 + rng() % 8);
    if (encounters_pattern(w, p).has_value() != naive_encounters(w, p)) {
      return fail("disagreement on w=" + w + " p=" + p);
    }
  }
  for (int iter = 0; iter < 60; ++iter) {
    const Word w = random_word(rng, 16);
    const Word p = random_word(rng, 1 + rng() % 8);
    if (encounters_pattern(w, p).has_value() != naive_encounters(w, p)) {
      return fail("disagreement on w=" + w + " p=" + p);
    }
  }
  return pass();
}

CheckOutcome check_fourth_power_coherence() {
  static const Word kZeros = "0000";
  for (std::size_t n = 1; n <= 20; ++n) {
    bool ok = true;
    Word bad;
    for_each_word(n, [&](const Word& w) {
      if (!ok) return;
      const auto special = find_fourth_power(w);
      const auto general = encounters_pattern(w, kZeros);
      if (special.has_value() != general.has_value() ||
          (special && *special != *general)) {
        ok = false;
        bad = w;
      }
    });
    if (!ok) return fail("specialization mismatch on " + bad);
  }
  return pass();
}

CheckOutcome check_slide_counterexample() {
  if (!is_good("1010101")) return fail("1010101 should be good");
  if (is_good("01010101")) return fail("01010101 should not be good");
  return pass();
}

// ------------------------------------------------------------ factorization

CheckOutcome check_factorize_round_trip() {
  for (std::size_t n = 0; n <= 16; ++n) {
    for (const Word& w : good_words_of_length(n)) {
      const Factorization f = factorize(w);
      if (f.a + apply_morphism(period_doubling(), f.core) + f.b != w) {
        return fail("round trip fails for " + w);
      }
    }
  }
  return pass();
}

CheckOutcome check_factorize_uniqueness() {
  for (std::size_t n = 4; n <= 14; ++n) {
    for (const Word& w : good_words_of_length(n)) {
      std::vector<Factorization> valid;
      for (const Word& a : {Word(), Word("0"), Word("1")}) {
        for (const Word& b : {Word(), Word("0")}) {
          if (a.size() + b.size() > w.size()) continue;
          if (!a.empty() && w.compare(0, 1, a) != 0) continue;
          if (!b.empty() && w.compare(w.size() - 1, 1, b) != 0) continue;
          const Word mid = w.substr(a.size(), w.size() - a.size() - b.size());
          if (auto u = period_doubling_preimage(mid)) {
            valid.push_back(Factorization{a, *u, b});
          }
        }
      }
      if (valid.size() != 1) {
        return fail(std::to_string(valid.size()) + " factorizations for " + w);
      }
      if (!(factorize(w) == valid.front())) {
        return fail("factorize disagrees with the unique triple for " + w);
      }
    }
  }
  return pass();
}

CheckOutcome check_goodness_descent() {
  for (std::size_t n = 0; n <= 16; ++n) {
    for (const Word& w : good_words_of_length(n)) {
      if (!is_good(factorize(w).core)) {
        return fail("core of good word " + w + " is not good");
      }
    }
  }
  return pass();
}

CheckOutcome check_preimage_inverts_delta() {
  for (std::size_t n = 0; n <= 12; ++n) {
    bool ok = true;
    Word bad;
    for_each_word(n, [&](const Word& u) {
      if (!ok) return;
      const auto back =
          period_doubling_preimage(apply_morphism(period_doubling(), u));
      if (!back || *back != u) {
        ok = false;
        bad = u;
      }
    });
    if (!ok) return fail("preimage(delta(u)) != u for u=" + bad);
  }
  return pass();
}

// --------------------------------------------------------------------- fife

CheckOutcome check_bullet_prefix_monotone() {
  std::mt19937 rng(45);
  const FifeLetter letters[] = {FifeLetter::alpha, FifeLetter::beta,
                                FifeLetter::gamma};
  for (const Word& seed : {Word("01"), Word("001")}) {
    for (int iter = 0; iter < 100; ++iter) {
      FifeWord f;
      for (std::size_t i = rng() % 7; i > 0; --i) f.push_back(letters[rng() % 3]);
      FifeWord g;
      for (std::size_t i = 1 + rng() % 3; i > 0; --i) g.push_back(letters[rng() % 3]);
      const Word shorter = bullet(seed, f);
      FifeWord fg = f;
      fg.insert(fg.end(), g.begin(), g.end());
      const Word longer = bullet(seed, fg);
      if (longer.size() <= shorter.size() ||
          longer.compare(0, shorter.size(), shorter) != 0) {
        return fail("bullet not prefix-monotone for f=" + fife_text(f) +
                    " g=" + fife_text(g));
      }
    }
  }
  return pass();
}

CheckOutcome check_bullet_composition_identity() {
  const Word seed = "01";
  for (const FifeWord& head : fife_words_up_to(5)) {
    const std::size_t k = head.size();
    Word seed_image = seed;  // delta^k(01)
    for (std::size_t i = 0; i < k; ++i) {
      seed_image = apply_morphism(period_doubling(), seed_image);
    }
    for (FifeLetter l :
         {FifeLetter::alpha, FifeLetter::beta, FifeLetter::gamma}) {
      FifeWord whole = head;
      whole.push_back(l);
      const Word lhs = bullet(seed, whole);

      Word x = bullet(seed, FifeWord{l});
      for (std::size_t i = 0; i < k; ++i) {
        x = apply_morphism(period_doubling(), x);
      }
      if (x.compare(0, seed_image.size(), seed_image) != 0) {
        return fail("delta^k(x) does not start with delta^k(01)");
      }
      const Word rhs = bullet(seed, head) + x.substr(seed_image.size());
      if (lhs != rhs) {
        return fail("composition identity fails for f=" + fife_text(head) +
                    " letter=" + std::string(1, static_cast<char>(l)));
      }
    }
  }
  return pass();
}

CheckOutcome soundness_for(const Word& seed, const FifeAutomaton& aut) {
  const std::size_t horizon = defaults().horizon;
  for (const FifeWord& f : fife_words_up_to(6)) {
    if (aut.walk(f) == FifeAutomaton::kSink) continue;
    const Word w = bullet(seed, f);
    if (!is_good(w)) {
      return fail("accepted f=" + fife_text(f) + " yields non-good word");
    }
    if (!extendable(w, horizon)) {
      return fail("accepted f=" + fife_text(f) + " yields dead word");
    }
  }
  return pass();
}

CheckOutcome dead_for(const Word& seed, const FifeAutomaton& aut) {
  const std::size_t horizon = defaults().horizon;
  std::set<std::string> seen;
  for (const FifeWord& f : fife_words_up_to(6)) {
    const auto sink_len = aut.first_sink_prefix(f);
    if (!sink_len) continue;
    const FifeWord head(f.begin(), f.begin() + static_cast<long>(*sink_len));
    if (!seen.insert(fife_text(head)).second) continue;
    const Word w = bullet(seed, head);
    if (extendable(w, horizon)) {
      return fail("sink prefix f=" + fife_text(head) +
                  " still extendable at horizon " + std::to_string(horizon));
    }
    if (extendable(w, horizon + defaults().horizon_step)) {
      return fail("sink verdict for f=" + fife_text(head) +
                  " unstable between horizons");
    }
  }
  return pass();
}

CheckOutcome check_a01_soundness() { return soundness_for("01", automaton_01()); }
CheckOutcome check_a01_sink_dead() { return dead_for("01", automaton_01()); }

CheckOutcome check_a01_ideal_implies_sink() {
  const FifeAutomaton& aut = automaton_01();
  for (const FifeWord& f : fife_words_up_to(6)) {
    if (has_ideal_factor(f) && aut.walk(f) != FifeAutomaton::kSink) {
      return fail("f=" + fife_text(f) + " has an ideal factor but is accepted");
    }
  }
  return pass();
}

CheckOutcome check_a001_soundness() {
  return soundness_for("001", automaton_001());
}
CheckOutcome check_a001_sink_dead() { return dead_for("001", automaton_001()); }

CheckOutcome check_a001_ideal_report() {
  const FifeAutomaton& aut = automaton_001();
  const FifeWord babb = parse_fife_word("babb");
  if (!has_ideal_factor(babb)) return fail("babb should have an ideal factor");
  if (aut.walk(babb) == FifeAutomaton::kSink) {
    return fail("babb should be accepted by the 001 automaton");
  }
  const FifeWord aaag = parse_fife_word("aaag");
  if (has_ideal_factor(aaag)) return fail("aaag should have no ideal factor");
  if (aut.walk(aaag) != FifeAutomaton::kSink) {
    return fail("aaag should reach the 001 sink");
  }
  std::size_t ideal_accepted = 0;
  for (const FifeWord& f : fife_words_up_to(6)) {
    if (has_ideal_factor(f) && aut.walk(f) != FifeAutomaton::kSink) {
      ++ideal_accepted;
    }
  }
  return pass("ideal-yet-accepted words up to length 6: " +
              std::to_string(ideal_accepted) +
              " (ideal membership and the 001 automaton are knowingly not "
              "equivalent)");
}

CheckOutcome check_slide_property() {
  const std::size_t horizon = defaults().slide_horizon;
  for (std::size_t n = 1; n <= 16; ++n) {
    for (const Word& w : good_words_of_length(n)) {
      if (w.front() != '1') continue;
      if (extendable(w, horizon) != extendable("0" + w, horizon)) {
        return fail("slide mismatch for " + w);
      }
    }
  }
  return pass();
}

CheckOutcome check_delta_of_one_words() {
  for (std::size_t n = 1; n <= 10; ++n) {
    for (const Word& u : good_words_of_length(n)) {
      if (u.front() != '1') continue;
      const Word img = apply_morphism(period_doubling(), u);
      if (extendable(img, 64) != extendable(u, 32)) {
        return fail("extendability of delta image disagrees for " + u);
      }
    }
  }
  return pass();
}

// ----------------------------------------------------------------- extremal

CheckOutcome check_greedy_matches_fixed_point() {
  const std::size_t h1 = defaults().horizon;
  for (Direction dir : {Direction::least, Direction::greatest}) {
    const Word fixed = extremal_fixed_point(dir, 24);
    const Word greedy_low = lex_extremal_prefix(24, dir, h1);
    const Word greedy_high = lex_extremal_prefix(24, dir, 96);
    if (greedy_low != greedy_high) {
      return fail("greedy verdict unstable between horizons 64 and 96");
    }
    if (greedy_low != fixed) {
      return fail("greedy " + greedy_low + " != fixed point " + fixed);
    }
  }
  return pass();
}

CheckOutcome check_least_is_delta_of_greatest() {
  for (std::size_t n = 1; n <= 512; ++n) {
    if (extremal_fixed_point(Direction::least, 2 * n) !=
        apply_morphism(period_doubling(),
                       extremal_fixed_point(Direction::greatest, n))) {
      return fail("prefix identity fails at n=" + std::to_string(n));
    }
  }
  return pass();
}

CheckOutcome check_zero_greatest_is_delta_of_least() {
  for (std::size_t n = 1; n <= 512; ++n) {
    if ("0" + extremal_fixed_point(Direction::greatest, 2 * n - 1) !=
        apply_morphism(period_doubling(),
                       extremal_fixed_point(Direction::least, n))) {
      return fail("prefix identity fails at n=" + std::to_string(n));
    }
  }
  return pass();
}

CheckOutcome check_delta_order_reversing() {
  std::mt19937 rng(46);
  int tested = 0;
  while (tested < 200) {
    const std::size_t len = 1 + rng() % 12;
    Word u = random_word(rng, len);
    Word v = random_word(rng, len);
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    ++tested;
    if (!(apply_morphism(period_doubling(), u) >
          apply_morphism(period_doubling(), v))) {
      return fail("images not order-reversed for u=" + u + " v=" + v);
    }
  }
  return pass();
}

CheckOutcome check_shared_factors() {
  const Word d_small = d_prefix(2048);
  const Word d_large = d_prefix(8192);
  const Word l_small = extremal_fixed_point(Direction::least, 2048);
  const Word l_large = extremal_fixed_point(Direction::least, 8192);
  const Word m_small = extremal_fixed_point(Direction::greatest, 2048);
  const Word m_large = extremal_fixed_point(Direction::greatest, 8192);
  for (std::size_t k = 1; k <= 10; ++k) {
    const auto in_d = factor_set(d_large, k);
    for (const Word& f : factor_set(l_small, k)) {
      if (!in_d.count(f)) return fail("factor " + f + " of l missing from d");
    }
    for (const Word& f : factor_set(m_small, k)) {
      if (!in_d.count(f)) return fail("factor " + f + " of m missing from d");
    }
    const auto in_l = factor_set(l_large, k);
    const auto in_m = factor_set(m_large, k);
    for (const Word& f : factor_set(d_small, k)) {
      if (!in_l.count(f)) return fail("factor " + f + " of d missing from l");
      if (!in_m.count(f)) return fail("factor " + f + " of d missing from m");
    }
  }
  return pass();
}

CheckOutcome check_greedy_prefixes_extendable() {
  for (Direction dir : {Direction::least, Direction::greatest}) {
    const Word w = lex_extremal_prefix(24, dir, defaults().horizon);
    for (std::size_t n = 1; n <= w.size(); ++n) {
      const Word prefix = w.substr(0, n);
      if (!is_good(prefix) || !extendable(prefix, defaults().horizon)) {
        return fail("greedy prefix " + prefix + " not good/extendable");
      }
    }
  }
  return pass();
}

// --------------------------------------------------------------- classifier

struct ClassifyTable {
  std::vector<Word> patterns;
  std::map<Word, Classification> result;
};

const ClassifyTable& classify_table() {
  static const ClassifyTable table = [] {
    ClassifyTable t;
    for (std::size_t n = 1; n <= 9; ++n) {
      for_each_word(n, [&](const Word& p) {
        t.patterns.push_back(p);
        t.result.emplace(p, classify(p));
      });
    }
    return t;
  }();
  return table;
}

CheckOutcome check_complement_symmetry() {
  const auto& t = classify_table();
  for (const Word& p : t.patterns) {
    if (t.result.at(p).encountered != t.result.at(complement(p)).encountered) {
      return fail("complement symmetry fails for " + p);
    }
  }
  return pass();
}

CheckOutcome check_reversal_symmetry() {
  const auto& t = classify_table();
  for (const Word& p : t.patterns) {
    if (t.result.at(p).encountered != t.result.at(reverse(p)).encountered) {
      return fail("reversal symmetry fails for " + p);
    }
  }
  return pass();
}

CheckOutcome check_oracle_positive() {
  const auto& t = classify_table();
  const auto& cfg = defaults();
  for (const Word& p : t.patterns) {
    if (!t.result.at(p).encountered) continue;
    const auto w = encounter_search_d(p, cfg.witness_window_cap,
                                      cfg.witness_max_image,
                                      cfg.witness_max_image);
    if (!w) return fail("no witness for encountered pattern " + p);
  }
  return pass();
}

CheckOutcome check_oracle_negative() {
  const auto& t = classify_table();
  const auto& cfg = defaults();
  for (const Word& p : t.patterns) {
    if (t.result.at(p).encountered) continue;
    const auto w = encounter_search_d(p, cfg.negative_window,
                                      cfg.negative_max_image,
                                      cfg.negative_max_image);
    if (w) {
      return fail("bounded oracle found an instance of unencountered " + p);
    }
  }
  return pass();
}

CheckOutcome check_sporadic_ten() {
  for (const Word& p : sporadic_patterns()) {
    const Classification c = classify(p);
    if (!c.encountered || c.reason != Reason::sporadic || c.complemented ||
        !c.witness) {
      return fail("sporadic pattern " + p + " misclassified");
    }
    for (const Word& q : {p, complement(p)}) {
      if (is_factor_of_d(q) || is_factor_of_preimage(ParseCode::p01, q) ||
          is_factor_of_preimage(ParseCode::p10, q)) {
        return fail("sporadic pattern " + q + " found as a factor");
      }
    }
  }
  return pass();
}

CheckOutcome check_preimage_reencode() {
  const Word d = d_prefix(2 * 2048);
  for (ParseCode code : {ParseCode::p01, ParseCode::p10}) {
    const Morphism& m = parse_code(code);
    for (std::size_t n = 0; n <= 2048; ++n) {
      const Word encoded = apply_morphism(m, preimage_prefix(code, n));
      if (d.compare(0, encoded.size(), encoded) != 0) {
        return fail("re-encode of " + std::to_string(n) +
                    "-letter preimage is not a prefix of d");
      }
    }
  }
  return pass();
}

CheckOutcome check_parse_1001_corollary() {
  const Word window = d_prefix(512);
  for (std::size_t s = 0; s < window.size(); ++s) {
    if (window[s] != '0') continue;
    for (std::size_t len = 13; s + len <= window.size(); ++len) {
      // Forced parse by the code [0,01]: a 1 can only close a token.
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
        return fail("factor at (" + std::to_string(s) + "," +
                    std::to_string(len) + ") parses without factor 1001");
      }
    }
  }
  return pass();
}

}  // namespace

const std::vector<PropertyCheck>& property_checks() {
  static const std::vector<PropertyCheck> checks = {
      {"word-core", "morphism-homomorphism", check_morphism_homomorphism},
      {"word-core", "iterate-prefix-monotone", check_iterate_prefix_monotone},
      {"word-core", "involutions", check_involutions},
      {"word-core", "delta-squared-conjugate", check_delta_squared_conjugate},
      {"word-core", "d-reversal-closure", check_d_reversal_closure},
      {"goodness", "factorial-closure", check_factorial_closure},
      {"goodness", "delta-preserves-good", check_delta_preserves_good},
      {"goodness", "delta-reflects-good", check_delta_reflects_good},
      {"goodness", "encounter-naive-oracle", check_encounter_naive_oracle},
      {"goodness", "fourth-power-coherence", check_fourth_power_coherence},
      {"goodness", "slide-counterexample", check_slide_counterexample},
      {"factorization", "round-trip", check_factorize_round_trip},
      {"factorization", "uniqueness", check_factorize_uniqueness},
      {"factorization", "goodness-descent", check_goodness_descent},
      {"factorization", "preimage-inverts-delta", check_preimage_inverts_delta},
      {"fife", "bullet-prefix-monotone", check_bullet_prefix_monotone},
      {"fife", "bullet-composition-identity", check_bullet_composition_identity},
      {"fife", "a01-soundness", check_a01_soundness},
      {"fife", "a01-ideal-implies-sink", check_a01_ideal_implies_sink},
      {"fife", "a01-sink-implies-dead", check_a01_sink_dead},
      {"fife", "a001-soundness", check_a001_soundness},
      {"fife", "a001-sink-implies-dead", check_a001_sink_dead},
      {"fife", "a001-ideal-report", check_a001_ideal_report},
      {"fife", "slide-property", check_slide_property},
      {"fife", "delta-of-one-words", check_delta_of_one_words},
      {"extremal", "greedy-matches-fixed-point", check_greedy_matches_fixed_point},
      {"extremal", "least-is-delta-of-greatest", check_least_is_delta_of_greatest},
      {"extremal", "zero-greatest-is-delta-of-least",
       check_zero_greatest_is_delta_of_least},
      {"extremal", "delta-order-reversing", check_delta_order_reversing},
      {"extremal", "shared-factors", check_shared_factors},
      {"extremal", "greedy-prefixes-extendable", check_greedy_prefixes_extendable},
      {"classifier", "complement-symmetry", check_complement_symmetry},
      {"classifier", "reversal-symmetry", check_reversal_symmetry},
      {"classifier", "oracle-positive", check_oracle_positive},
      {"classifier", "oracle-negative", check_oracle_negative},
      {"classifier", "sporadic-ten", check_sporadic_ten},
      {"classifier", "preimage-reencode", check_preimage_reencode},
      {"classifier", "parse-1001-corollary", check_parse_1001_corollary},
  };
  return checks;
}

std::vector<std::string> property_suites() {
  std::vector<std::string> suites;
  for (const auto& c : property_checks()) {
    if (std::find(suites.begin(), suites.end(), c.suite) == suites.end()) {
      suites.push_back(c.suite);
    }
  }
  return suites;
}

}  // namespace perdoub
