#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "perdoub/errors.hpp"

namespace perdoub {

// Binary words are ASCII strings over '0'/'1'. Every operation treats words
// as immutable values and returns a fresh string.
using Word = std::string;

bool is_binary_word(std::string_view text);

// Validates and copies; throws Errc::bad_word on any non-{0,1} character.
Word parse_word(std::string_view text);

// A non-erasing binary morphism, recorded as the pair of letter images.
struct Morphism {
  Word image0;
  Word image1;
};

// The period-doubling morphism [01, 00].
const Morphism& period_doubling();

// Fixed-point morphisms of the lexicographically extremal infinite good
// words: greatest = [1000, 1010] on seed 1, least = [0001, 0101] on seed 0.
const Morphism& lex_greatest_morphism();
const Morphism& lex_least_morphism();

// Prefix codes used to parse the period-doubling word: [0, 01] and [0, 10].
const Morphism& parse_code_01();
const Morphism& parse_code_10();

Word apply_morphism(const Morphism& m, const Word& w);

// Length-n prefix of the fixed point of m on `seed`. Requires m(seed) to
// begin with seed; throws Errc::insufficient_growth if iteration stalls
// below n letters (cannot happen for growing morphisms).
Word iterate_to_length(const Morphism& m, char seed, std::size_t n);

// Length-n prefix of the period-doubling word d.
Word d_prefix(std::size_t n);

Word complement(const Word& w);
Word reverse(const Word& w);

// Smallest start index of needle inside haystack; the empty needle matches
// at index 0.
std::optional<std::size_t> find_factor(const Word& needle, const Word& haystack);
bool is_factor(const Word& needle, const Word& haystack);

}  // namespace perdoub
