#include "perdoub/word.hpp"

#include <algorithm>

namespace perdoub {

bool is_binary_word(std::string_view text) {
  return std::all_of(text.begin(), text.end(),
                     [](char c) { return c == '0' || c == '1'; });
}

Word parse_word(std::string_view text) {
  if (!is_binary_word(text)) {
    throw Error(Errc::bad_word,
                "not a binary word: \"" + std::string(text) + "\"");
  }
  return Word(text);
}

const Morphism& period_doubling() {
  static const Morphism m{"01", "00"};
  return m;
}

const Morphism& lex_greatest_morphism() {
  static const Morphism m{"1000", "1010"};
  return m;
}

const Morphism& lex_least_morphism() {
  static const Morphism m{"0001", "0101"};
  return m;
}

const Morphism& parse_code_01() {
  static const Morphism m{"0", "01"};
  return m;
}

const Morphism& parse_code_10() {
  static const Morphism m{"0", "10"};
  return m;
}

Word apply_morphism(const Morphism& m, const Word& w) {
  const std::size_t zeros =
      static_cast<std::size_t>(std::count(w.begin(), w.end(), '0'));
  Word out;
  out.reserve(zeros * m.image0.size() + (w.size() - zeros) * m.image1.size());
  for (char c : w) {
    out += (c == '0') ? m.image0 : m.image1;
  }
  return out;
}

Word iterate_to_length(const Morphism& m, char seed, std::size_t n) {
  if (seed != '0' && seed != '1') {
    throw Error(Errc::bad_word, std::string("bad seed letter: ") + seed);
  }
  const Word& seed_image = (seed == '0') ? m.image0 : m.image1;
  if (seed_image.empty() || seed_image.front() != seed) {
    throw Error(Errc::not_prolongable,
                std::string("morphism image of ") + seed +
                    " does not start with " + seed);
  }
  Word w(1, seed);
  while (w.size() < n) {
    Word next = apply_morphism(m, w);
    if (next.size() <= w.size()) {
      throw Error(Errc::insufficient_growth,
                  "iteration stalls at length " + std::to_string(w.size()));
    }
    w = std::move(next);
  }
  w.resize(n);
  return w;
}

Word d_prefix(std::size_t n) { return iterate_to_length(period_doubling(), '0', n); }

Word complement(const Word& w) {
  Word out = w;
  for (char& c : out) c = (c == '0') ? '1' : '0';
  return out;
}

Word reverse(const Word& w) { return Word(w.rbegin(), w.rend()); }

std::optional<std::size_t> find_factor(const Word& needle, const Word& haystack) {
  const std::size_t pos = haystack.find(needle);
  if (pos == Word::npos) return std::nullopt;
  return pos;
}

bool is_factor(const Word& needle, const Word& haystack) {
  return find_factor(needle, haystack).has_value();
}

}  // namespace perdoub
