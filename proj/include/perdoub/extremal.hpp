#pragma once

#include <cstddef>

#include "perdoub/word.hpp"

namespace perdoub {

enum class Direction { least, greatest };

// Greedy letter-by-letter construction of the length-n prefix of the
// lexicographically least/greatest infinite good word: at each step take the
// preferred letter whose extension stays good and extendable within the
// horizon. Throws Errc::dead_end if neither letter works (cannot happen).
Word lex_extremal_prefix(std::size_t n, Direction direction, std::size_t horizon);

// Length-n prefix of the fixed point of [0001,0101] on 0 (least) or of
// [1000,1010] on 1 (greatest).
Word extremal_fixed_point(Direction direction, std::size_t n);

}  // namespace perdoub
