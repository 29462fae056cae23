#pragma once

#include <stdexcept>
#include <string>

namespace perdoub {

enum class Errc {
  bad_word,            // input is not a word over {0,1}
  not_prolongable,     // morphism image of seed does not start with seed
  insufficient_growth, // iteration cannot reach the requested length
  empty_pattern,
  bound_exceeded,
  forbidden_factor,    // factorization precondition violated
  no_factorization,    // no (a,u,b) triple exists (unreachable for valid input)
  no_suffix_01,        // word has no suffix of the form delta^n(01)
  dead_end,            // greedy extremal construction found no extendable letter
  parse_mismatch,      // prefix of d cannot be tokenized by the parse code
  witness_not_found,   // classified as encountered but no witness in the capped window
  usage,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace perdoub
