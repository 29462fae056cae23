#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "perdoub/word.hpp"

namespace perdoub {

// Suffix-extension operators on binary words, written a/b/g in ASCII.
enum class FifeLetter : char { alpha = 'a', beta = 'b', gamma = 'g' };

using FifeWord = std::vector<FifeLetter>;

FifeWord parse_fife_word(std::string_view text);  // [abg]*, throws bad_word
std::string fife_text(const FifeWord& f);

// Largest n such that the n-fold period-doubling image of 01 is a suffix of
// w; absent when no such suffix exists for any n.
std::optional<std::size_t> max_suffix_exponent(const Word& w);

// With n the maximal suffix exponent of w, appends the n-fold image of
// 00 (alpha), 0100 (beta) or 010100 (gamma). Throws Errc::no_suffix_01.
Word apply_fife_letter(const Word& w, FifeLetter letter);

// Left-to-right fold of apply_fife_letter over f, starting from seed. Every
// intermediate word is a proper prefix of the next.
Word bullet(const Word& seed, const FifeWord& f);

// Deterministic walker over one of the two suffix-extension automata. The
// transition tables are data so each entry can be audited: rows are states,
// columns are letters in order alpha, beta, gamma. State 0 is initial; the
// sink is absorbing and the only non-accepting state.
class FifeAutomaton {
 public:
  static constexpr int kSink = 4;

  FifeAutomaton(std::array<std::string_view, 5> names,
                std::array<std::array<int, 3>, 5> next)
      : names_(names), next_(next) {}

  int step(int state, FifeLetter letter) const;
  int walk(const FifeWord& f) const;
  bool accepts(const FifeWord& f) const { return walk(f) != kSink; }
  // Length of the shortest prefix of f that reaches the sink, if any.
  std::optional<std::size_t> first_sink_prefix(const FifeWord& f) const;
  std::string_view state_name(int state) const { return names_[static_cast<std::size_t>(state)]; }

 private:
  std::array<std::string_view, 5> names_;
  std::array<std::array<int, 3>, 5> next_;
};

// Automaton accepting the operator sequences that generate the infinite good
// words with prefix 01 (resp. 001).
const FifeAutomaton& automaton_01();
const FifeAutomaton& automaton_001();
const FifeAutomaton& automaton_for_seed(const Word& seed);

// True iff some factor of f matches (b+g)(aa)*a(g+bb) | g(ab)*ag.
bool has_ideal_factor(const FifeWord& f);

// Finite proxy for "w is a prefix of an infinite good word": depth-first
// search for a good extension of w by `horizon` letters, trying 0 before 1.
bool extendable(const Word& w, std::size_t horizon);

std::size_t fife_depth_bound();  // default 8

// { bullet(seed, f) : f of length depth, accepted by the seed's automaton },
// sorted and deduplicated. Throws Errc::bound_exceeded.
std::vector<Word> accepted_words(const Word& seed, std::size_t depth);

}  // namespace perdoub
