#include "perdoub/goodness.hpp"

#include "perdoub/config.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <functional>
#include <string_view>

namespace perdoub {

namespace {

constexpr std::size_t kNpos = static_cast<std::size_t>(-1);

// Letterwise check of the instance of p at start s with fixed image lengths.
// The first block of each pattern letter defines the image; later blocks
// must match it. On success *at0/*at1 hold the defining block positions.
bool instance_at(std::string_view w, std::size_t s, std::string_view p,
                 std::size_t len0, std::size_t len1, std::size_t* at0,
                 std::size_t* at1) {
  std::size_t pos = s;
  std::size_t first0 = kNpos;
  std::size_t first1 = kNpos;
  for (char c : p) {
    const std::size_t len = (c == '0') ? len0 : len1;
    if (pos + len > w.size()) return false;
    std::size_t& first = (c == '0') ? first0 : first1;
    if (first == kNpos) {
      first = pos;
    } else if (w.compare(pos, len, w, first, len) != 0) {
      return false;
    }
    pos += len;
  }
  *at0 = first0;
  *at1 = first1;
  return true;
}

}  // namespace

std::optional<PatternWitness> encounters_pattern_bounded(const Word& w,
                                                         const Word& p,
                                                         std::size_t max_image0,
                                                         std::size_t max_image1) {
  if (p.empty()) throw Error(Errc::empty_pattern, "empty pattern");
  const std::size_t n = w.size();
  const std::size_t zeros =
      static_cast<std::size_t>(std::count(p.begin(), p.end(), '0'));
  const std::size_t ones = p.size() - zeros;
  // Length of the leading 0-run of p; its blocks are all equal to the first,
  // which gives a cheap rejection before the inner image1 loop.
  std::size_t lead = 0;
  while (lead < p.size() && p[lead] == '0') ++lead;

  std::size_t at0 = kNpos;
  std::size_t at1 = kNpos;
  for (std::size_t s = 0; s < n; ++s) {
    const std::size_t rem = n - s;
    if (rem < p.size()) break;
    if (zeros > 0 && ones > 0) {
      const std::size_t lx_max = std::min(max_image0, (rem - ones) / zeros);
      for (std::size_t lx = 1; lx <= lx_max; ++lx) {
        bool lead_ok = true;
        for (std::size_t k = 1; k < lead; ++k) {
          if (w.compare(s + k * lx, lx, w, s, lx) != 0) {
            lead_ok = false;
            break;
          }
        }
        if (!lead_ok) continue;
        const std::size_t ly_max = std::min(max_image1, (rem - zeros * lx) / ones);
        for (std::size_t ly = 1; ly <= ly_max; ++ly) {
          if (instance_at(w, s, p, lx, ly, &at0, &at1)) {
            return PatternWitness{s, w.substr(at0, lx), w.substr(at1, ly)};
          }
        }
      }
    } else if (zeros > 0) {
      const std::size_t lx_max = std::min(max_image0, rem / zeros);
      for (std::size_t lx = 1; lx <= lx_max; ++lx) {
        if (instance_at(w, s, p, lx, 0, &at0, &at1)) {
          return PatternWitness{s, w.substr(at0, lx), std::nullopt};
        }
      }
    } else {
      const std::size_t ly_max = std::min(max_image1, rem / ones);
      for (std::size_t ly = 1; ly <= ly_max; ++ly) {
        if (instance_at(w, s, p, 0, ly, &at0, &at1)) {
          return PatternWitness{s, std::nullopt, w.substr(at1, ly)};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<PatternWitness> encounters_pattern(const Word& w, const Word& p) {
  return encounters_pattern_bounded(w, p, w.size(), w.size());
}

std::optional<PatternWitness> find_fourth_power(const Word& w) {
  const std::size_t n = w.size();
  std::string_view v(w);
  for (std::size_t s = 0; s + 4 <= n; ++s) {
    const std::size_t q_max = (n - s) / 4;
    for (std::size_t q = 1; q <= q_max; ++q) {
      if (v.compare(s + q, q, v, s, q) == 0 &&
          v.compare(s + 2 * q, q, v, s, q) == 0 &&
          v.compare(s + 3 * q, q, v, s, q) == 0) {
        return PatternWitness{s, w.substr(s, q), std::nullopt};
      }
    }
  }
  return std::nullopt;
}

std::optional<Violation> goodness_violation(const Word& w) {
  static const Word kFactor11 = "11";
  static const Word kFactor1001 = "1001";
  static const Word kPattern = "00010100";
  if (auto i = find_factor(kFactor11, w)) {
    return Violation{ViolationKind::factor_11, *i, std::nullopt, std::nullopt};
  }
  if (auto i = find_factor(kFactor1001, w)) {
    return Violation{ViolationKind::factor_1001, *i, std::nullopt, std::nullopt};
  }
  if (auto pw = find_fourth_power(w)) {
    return Violation{ViolationKind::fourth_power, pw->start, pw->image0,
                     std::nullopt};
  }
  if (auto pw = encounters_pattern(w, kPattern)) {
    return Violation{ViolationKind::pattern_00010100, pw->start, pw->image0,
                     pw->image1};
  }
  return std::nullopt;
}

bool is_good(const Word& w) { return !goodness_violation(w).has_value(); }

bool suffix_violation(const Word& w) {
  const std::size_t n = w.size();
  std::string_view v(w);
  if (n >= 2 && v.compare(n - 2, 2, "11") == 0) return true;
  if (n >= 4 && v.compare(n - 4, 4, "1001") == 0) return true;
  // Fourth power XXXX ending at the last letter.
  for (std::size_t q = 1; 4 * q <= n; ++q) {
    if (v.compare(n - 2 * q, q, v, n - q, q) == 0 &&
        v.compare(n - 3 * q, q, v, n - q, q) == 0 &&
        v.compare(n - 4 * q, q, v, n - q, q) == 0) {
      return true;
    }
  }
  // Instance X X X Y X Y X X of 00010100 ending at the last letter. The two
  // final X blocks form a square suffix, checked before the image1 loop.
  for (std::size_t lx = 1; 6 * lx + 2 <= n; ++lx) {
    const std::size_t x_at = n - lx;
    if (v.compare(n - 2 * lx, lx, v, x_at, lx) != 0) continue;
    const std::size_t ly_max = (n - 6 * lx) / 2;
    for (std::size_t ly = 1; ly <= ly_max; ++ly) {
      const std::size_t base = n - 6 * lx - 2 * ly;
      const std::size_t y_at = n - 2 * lx - ly;
      if (v.compare(base + 3 * lx, ly, v, y_at, ly) != 0) continue;
      if (v.compare(base + 3 * lx + ly, lx, v, x_at, lx) != 0) continue;
      if (v.compare(base + 2 * lx, lx, v, x_at, lx) != 0) continue;
      if (v.compare(base + lx, lx, v, x_at, lx) != 0) continue;
      if (v.compare(base, lx, v, x_at, lx) != 0) continue;
      return true;
    }
  }
  return false;
}

std::size_t good_word_enum_bound() {
  if (const char* env = std::getenv("PERDOUB_MAX_ENUM")) {
    std::size_t value = 0;
    const char* end = env + std::char_traits<char>::length(env);
    auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec == std::errc() && ptr == end) return value;
  }
  return defaults().enum_bound;
}

namespace {

void good_tree_walk(Word& w, std::size_t depth,
                    const std::function<void(const Word&)>& visit) {
  visit(w);
  if (depth == 0) return;
  for (char c : {'0', '1'}) {
    w.push_back(c);
    if (!suffix_violation(w)) good_tree_walk(w, depth - 1, visit);
    w.pop_back();
  }
}

}  // namespace

std::vector<Word> enumerate_good(std::size_t n) {
  if (n > good_word_enum_bound()) {
    throw Error(Errc::bound_exceeded,
                "enumeration length " + std::to_string(n) + " exceeds bound " +
                    std::to_string(good_word_enum_bound()));
  }
  std::vector<Word> out;
  Word w;
  w.reserve(n);
  good_tree_walk(w, n, [&](const Word& g) {
    if (g.size() == n) out.push_back(g);
  });
  return out;
}

std::vector<std::size_t> count_good(std::size_t max_n) {
  if (max_n > good_word_enum_bound()) {
    throw Error(Errc::bound_exceeded,
                "enumeration length " + std::to_string(max_n) +
                    " exceeds bound " + std::to_string(good_word_enum_bound()));
  }
  std::vector<std::size_t> counts(max_n + 1, 0);
  Word w;
  w.reserve(max_n);
  good_tree_walk(w, max_n, [&](const Word& g) { ++counts[g.size()]; });
  return counts;
}

}  // namespace perdoub
