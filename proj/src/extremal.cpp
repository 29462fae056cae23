#include "perdoub/extremal.hpp"

#include "perdoub/fife.hpp"
#include "perdoub/goodness.hpp"

namespace perdoub {

Word lex_extremal_prefix(std::size_t n, Direction direction,
                         std::size_t horizon) {
  const char first = (direction == Direction::least) ? '0' : '1';
  const char second = (direction == Direction::least) ? '1' : '0';
  Word w;
  w.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    bool placed = false;
    for (char c : {first, second}) {
      w.push_back(c);
      if (!suffix_violation(w) && extendable(w, horizon)) {
        placed = true;
        break;
      }
      w.pop_back();
    }
    if (!placed) {
      throw Error(Errc::dead_end,
                  "no extendable letter after \"" + w + "\"");
    }
  }
  return w;
}

Word extremal_fixed_point(Direction direction, std::size_t n) {
  return direction == Direction::least
             ? iterate_to_length(lex_least_morphism(), '0', n)
             : iterate_to_length(lex_greatest_morphism(), '1', n);
}

}  // namespace perdoub
