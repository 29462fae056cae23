#pragma once

#include <array>
#include <cstddef>
#include <optional>

#include "perdoub/config.hpp"
#include "perdoub/goodness.hpp"
#include "perdoub/word.hpp"

namespace perdoub {

// The two prefix codes [0,01] and [0,10] that tokenize the period-doubling
// word (every 1 in d is preceded and followed by 0, so both parses are
// forced and unambiguous).
enum class ParseCode { p01, p10 };

const Morphism& parse_code(ParseCode code);

// First n letters of the decode of d under the given code. A trailing
// partial token is never produced. Throws Errc::parse_mismatch if the
// d-prefix does not tokenize (cannot happen).
Word preimage_prefix(ParseCode code, std::size_t n);

struct FactorSearchOptions {
  std::size_t window_floor = defaults().factor_window_floor;
  std::size_t window_scale = defaults().factor_window_scale;
  std::size_t query_bound = defaults().factor_query_bound;
};

// Factor search within a prefix window of d (resp. of the decoded preimage).
// The window is max(floor, scale*|q|) and the verdict is re-checked against
// the doubled window whenever that window is larger. Throws
// Errc::bound_exceeded when |q| exceeds the query bound.
bool is_factor_of_d(const Word& q, const FactorSearchOptions& opts = {});
bool is_factor_of_preimage(ParseCode code, const Word& q,
                           const FactorSearchOptions& opts = {});

enum class Reason {
  none,
  factor_of_d,
  factor_of_p1_preimage,
  factor_of_p2_preimage,
  sporadic,
};

// The ten patterns encountered by d although neither they, their
// complements, nor either preimage contains them as factors.
const std::array<Word, 10>& sporadic_patterns();

struct Classification {
  bool encountered = false;
  Reason reason = Reason::none;
  bool complemented = false;  // reason applies to the complement of p
  std::optional<PatternWitness> witness;
};

struct ClassifyOptions {
  FactorSearchOptions factor;
  std::size_t witness_max_image = defaults().witness_max_image;
  std::size_t witness_window_cap = defaults().witness_window_cap;
};

// Decides whether d encounters the binary pattern p: p or its complement is
// a factor of d, of the [0,01]-preimage, of the [0,10]-preimage, or belongs
// to the sporadic list. Conditions are consulted in that fixed order, p
// before its complement. When encountered, attaches a witness found inside
// a d-prefix; Errc::witness_not_found is raised if the capped search fails
// (never silently ignored).
Classification classify(const Word& p, const ClassifyOptions& opts = {});

// A maximal-length factor of a d-prefix window avoiding q, ties broken by
// first occurrence.
Word longest_factor_avoiding(const Word& q,
                             std::size_t window = defaults().witness_window_cap);

// Bounded instance search against a d-prefix. Positive answers are exact
// certificates; negative answers mean only "none within the bounds".
std::optional<PatternWitness> encounter_search_d(const Word& p,
                                                 std::size_t prefix_len,
                                                 std::size_t max_image0,
                                                 std::size_t max_image1);

}  // namespace perdoub
