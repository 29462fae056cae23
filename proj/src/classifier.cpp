#include "perdoub/classifier.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

namespace perdoub {

const Morphism& parse_code(ParseCode code) {
  return code == ParseCode::p01 ? parse_code_01() : parse_code_10();
}

Word preimage_prefix(ParseCode code, std::size_t n) {
  // n tokens span at most 2n letters of d; the +4 slack keeps one letter of
  // lookahead available so the final token is never cut.
  const Word d = d_prefix(2 * n + 4);
  Word out;
  out.reserve(n);
  std::size_t i = 0;
  while (out.size() < n) {
    if (code == ParseCode::p01) {
      if (d[i] != '0') {
        throw Error(Errc::parse_mismatch,
                    "token starting with 1 at d index " + std::to_string(i));
      }
      if (d[i + 1] == '1') {
        out.push_back('1');
        i += 2;
      } else {
        out.push_back('0');
        i += 1;
      }
    } else {
      if (d[i] == '1') {
        if (d[i + 1] != '0') {
          throw Error(Errc::parse_mismatch,
                      "token 11 at d index " + std::to_string(i));
        }
        out.push_back('1');
        i += 2;
      } else {
        out.push_back('0');
        i += 1;
      }
    }
  }
  return out;
}

namespace {

std::size_t window_for(const Word& q, const FactorSearchOptions& opts) {
  return std::max(opts.window_floor, opts.window_scale * q.size());
}

void check_query_bound(const Word& q, const FactorSearchOptions& opts) {
  if (q.size() > opts.query_bound) {
    throw Error(Errc::bound_exceeded,
                "factor query of length " + std::to_string(q.size()) +
                    " exceeds bound " + std::to_string(opts.query_bound));
  }
}

// Verdict in the base window, re-checked against the doubled window when the
// doubled window is actually larger. Presence is monotone in the window, so
// a flip can only be absent -> present and means the constants are unsound.
bool windowed_factor_check(const Word& q, const FactorSearchOptions& opts,
                           const std::function<Word(std::size_t)>& prefix_of) {
  const std::size_t w1 = window_for(q, opts);
  const bool verdict = is_factor(q, prefix_of(w1));
  const std::size_t w2 =
      std::max(opts.window_floor, 2 * opts.window_scale * q.size());
  if (w2 > w1 && !verdict && is_factor(q, prefix_of(w2))) {
    throw std::logic_error("factor window self-check failed for \"" + q + "\"");
  }
  return verdict;
}

}  // namespace

bool is_factor_of_d(const Word& q, const FactorSearchOptions& opts) {
  check_query_bound(q, opts);
  return windowed_factor_check(q, opts,
                               [](std::size_t n) { return d_prefix(n); });
}

bool is_factor_of_preimage(ParseCode code, const Word& q,
                           const FactorSearchOptions& opts) {
  check_query_bound(q, opts);
  return windowed_factor_check(
      q, opts, [code](std::size_t n) { return preimage_prefix(code, n); });
}

const std::array<Word, 10>& sporadic_patterns() {
  static const std::array<Word, 10> patterns = {
      Word("0010100"),
      Word("01001001000"),
      Word("00100100100"),
      Word("001001001000"),
      Word("00010010010"),
      Word("000100100100"),
      Word("0010001000100"),
      Word("00100010001000"),
      Word("00010001000100"),
      Word("000100010001000"),
  };
  return patterns;
}

namespace {

bool is_sporadic(const Word& p) {
  const auto& list = sporadic_patterns();
  return std::find(list.begin(), list.end(), p) != list.end();
}

}  // namespace

Classification classify(const Word& p, const ClassifyOptions& opts) {
  if (p.empty()) throw Error(Errc::empty_pattern, "empty pattern");
  if (p.size() > opts.factor.query_bound) {
    throw Error(Errc::bound_exceeded,
                "pattern of length " + std::to_string(p.size()) +
                    " exceeds bound " + std::to_string(opts.factor.query_bound));
  }
  const Word pc = complement(p);

  Reason reason = Reason::none;
  bool complemented = false;
  const auto conclude = [&](Reason r, bool comp) {
    reason = r;
    complemented = comp;
  };
  if (is_factor_of_d(p, opts.factor)) {
    conclude(Reason::factor_of_d, false);
  } else if (is_factor_of_d(pc, opts.factor)) {
    conclude(Reason::factor_of_d, true);
  } else if (is_factor_of_preimage(ParseCode::p01, p, opts.factor)) {
    conclude(Reason::factor_of_p1_preimage, false);
  } else if (is_factor_of_preimage(ParseCode::p01, pc, opts.factor)) {
    conclude(Reason::factor_of_p1_preimage, true);
  } else if (is_factor_of_preimage(ParseCode::p10, p, opts.factor)) {
    conclude(Reason::factor_of_p2_preimage, false);
  } else if (is_factor_of_preimage(ParseCode::p10, pc, opts.factor)) {
    conclude(Reason::factor_of_p2_preimage, true);
  } else if (is_sporadic(p)) {
    conclude(Reason::sporadic, false);
  } else if (is_sporadic(pc)) {
    conclude(Reason::sporadic, true);
  }

  if (reason == Reason::none) {
    return Classification{false, Reason::none, false, std::nullopt};
  }
  auto witness = encounter_search_d(p, opts.witness_window_cap,
                                    opts.witness_max_image,
                                    opts.witness_max_image);
  if (!witness) {
    throw Error(Errc::witness_not_found,
                "pattern \"" + p +
                    "\" is encountered but no witness was found within window " +
                    std::to_string(opts.witness_window_cap) + ", images <= " +
                    std::to_string(opts.witness_max_image));
  }
  return Classification{true, reason, complemented, std::move(witness)};
}

Word longest_factor_avoiding(const Word& q, std::size_t window) {
  const Word d = d_prefix(window);
  if (q.empty()) return Word();
  // Occurrences of q split the window into maximal q-free intervals: each
  // runs from just past the start of one occurrence to just before the end
  // of the next.
  std::vector<std::size_t> occ;
  for (std::size_t pos = d.find(q); pos != Word::npos;
       pos = d.find(q, pos + 1)) {
    occ.push_back(pos);
  }
  if (occ.empty()) return d;
  std::size_t best_start = 0;
  std::size_t best_len = occ.front() + q.size() - 1;
  const auto consider = [&](std::size_t start, std::size_t end) {
    if (end - start > best_len) {
      best_start = start;
      best_len = end - start;
    }
  };
  for (std::size_t k = 0; k + 1 < occ.size(); ++k) {
    consider(occ[k] + 1, occ[k + 1] + q.size() - 1);
  }
  consider(occ.back() + 1, d.size());
  return d.substr(best_start, best_len);
}

std::optional<PatternWitness> encounter_search_d(const Word& p,
                                                 std::size_t prefix_len,
                                                 std::size_t max_image0,
                                                 std::size_t max_image1) {
  return encounters_pattern_bounded(d_prefix(prefix_len), p, max_image0,
                                    max_image1);
}

}  // namespace perdoub
