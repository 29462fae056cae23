#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "perdoub/word.hpp"

namespace perdoub {

// Certifies that a word contains an instance g(p) of a binary pattern p,
// where g substitutes image0 for the pattern letter 0 and image1 for 1.
// An image slot is absent exactly when the pattern does not use that letter.
struct PatternWitness {
  std::size_t start = 0;
  std::optional<Word> image0;
  std::optional<Word> image1;

  friend bool operator==(const PatternWitness&, const PatternWitness&) = default;
};

// Exact, complete search for an instance of pattern p inside w. Scans start
// positions in ascending order, then |image0|, then |image1|, and returns
// the first match, so the witness is the smallest in (start, |X|, |Y|)
// lexicographic order. Throws Errc::empty_pattern.
std::optional<PatternWitness> encounters_pattern(const Word& w, const Word& p);

// Same search with the image lengths capped. A positive answer is an exact
// certificate; a negative answer means only "none within the bounds".
std::optional<PatternWitness> encounters_pattern_bounded(const Word& w,
                                                         const Word& p,
                                                         std::size_t max_image0,
                                                         std::size_t max_image1);

// Specialized instance search for the pattern 0000: scan periods
// q = 1..|w|/4 at each start. Present iff encounters_pattern(w, "0000") is.
std::optional<PatternWitness> find_fourth_power(const Word& w);

enum class ViolationKind { factor_11, factor_1001, fourth_power, pattern_00010100 };

struct Violation {
  ViolationKind kind;
  std::size_t start = 0;
  std::optional<Word> image0;
  std::optional<Word> image1;
};

// A word is good when it has no factor 11 or 1001 and encounters neither of
// the patterns 0000 and 00010100. The four conditions are checked in that
// order and the first failure is reported.
std::optional<Violation> goodness_violation(const Word& w);
bool is_good(const Word& w);

// True when a violation ends exactly at the last letter of w. Assuming every
// proper prefix of w is violation-free this decides goodness of w, because a
// new violation introduced by the last letter must end there.
bool suffix_violation(const Word& w);

// Enumeration length cap: default 22, overridden by PERDOUB_MAX_ENUM.
std::size_t good_word_enum_bound();

// All good words of length n, lexicographically sorted. Generated by prefix
// tree search with pruning (goodness is closed under factors, so a pruned
// prefix never extends to a good word). Throws Errc::bound_exceeded.
std::vector<Word> enumerate_good(std::size_t n);

// Number of good words of each length 0..max_n (single pruned tree walk).
std::vector<std::size_t> count_good(std::size_t max_n);

}  // namespace perdoub
