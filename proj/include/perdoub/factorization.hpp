#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "perdoub/word.hpp"

namespace perdoub {

// Canonical splitting w = a . delta(core) . b with a in {eps,0,1} and
// b in {eps,0}, unique for |w| >= 4.
struct Factorization {
  Word a;
  Word core;
  Word b;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

// The u with delta(u) = w, when w splits into blocks 01 -> 0 and 00 -> 1;
// absent otherwise.
std::optional<Word> period_doubling_preimage(const Word& w);

// Requires w to avoid the factors 11, 1001 and 0000 (weaker than goodness);
// throws Errc::forbidden_factor naming the factor and its index otherwise.
// For |w| < 4 the triple is not unique; the canonical choice minimizes |a|,
// then |b|.
Factorization factorize(const Word& w);

// Iterated factorization of a good word down to a core of length < 4 (below
// the uniqueness threshold the layers would not be canonical).
struct Decomposition {
  std::vector<std::pair<Word, Word>> layers;  // (a, b) per peeled layer
  Word core;
};

Decomposition full_decomposition(const Word& w);
Word reassemble(const Decomposition& dec);

}  // namespace perdoub
