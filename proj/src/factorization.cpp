#include "perdoub/factorization.hpp"

#include "perdoub/goodness.hpp"

namespace perdoub {

std::optional<Word> period_doubling_preimage(const Word& w) {
  if (w.size() % 2 != 0) return std::nullopt;
  Word u;
  u.reserve(w.size() / 2);
  for (std::size_t i = 0; i < w.size(); i += 2) {
    if (w[i] != '0') return std::nullopt;
    u.push_back(w[i + 1] == '1' ? '0' : '1');
  }
  return u;
}

namespace {

Factorization factorize_small(const Word& w) {
  // Below the uniqueness threshold: enumerate (a, b) choices, minimal |a|
  // first, then minimal |b|.
  for (std::size_t alen : {0u, 1u}) {
    for (std::size_t blen : {0u, 1u}) {
      if (alen + blen > w.size()) continue;
      if (blen == 1 && w.back() != '0') continue;
      if (auto u = period_doubling_preimage(
              w.substr(alen, w.size() - alen - blen))) {
        return Factorization{w.substr(0, alen), std::move(*u),
                             blen ? Word("0") : Word()};
      }
    }
  }
  throw Error(Errc::no_factorization, "no factorization of \"" + w + "\"");
}

}  // namespace

Factorization factorize(const Word& w) {
  static const Word kForbidden[] = {"11", "1001", "0000"};
  for (const Word& f : kForbidden) {
    if (auto i = find_factor(f, w)) {
      throw Error(Errc::forbidden_factor,
                  "forbidden factor " + f + " at index " + std::to_string(*i));
    }
  }
  const std::size_t first1 = w.find('1');
  if (w.size() < 4 || first1 == Word::npos) {
    return factorize_small(w);
  }
  // All 1s of w share the parity of the first one. Inside a delta image the
  // 1s sit at odd 0-based positions, so an even-indexed first 1 forces one
  // letter into a; the trailing letter goes to b whenever the middle would
  // otherwise have odd length.
  const std::size_t alen = (first1 % 2 == 1) ? 0 : 1;
  const std::size_t blen = (w.size() - alen) % 2;
  if (blen == 1 && w.back() != '0') {
    throw Error(Errc::no_factorization,
                "factorization would need b = 1 for \"" + w + "\"");
  }
  auto u = period_doubling_preimage(w.substr(alen, w.size() - alen - blen));
  if (!u) {
    throw Error(Errc::no_factorization, "no factorization of \"" + w + "\"");
  }
  return Factorization{w.substr(0, alen), std::move(*u),
                       blen ? Word("0") : Word()};
}

Decomposition full_decomposition(const Word& w) {
  if (auto v = goodness_violation(w)) {
    throw Error(Errc::forbidden_factor,
                "full_decomposition requires a good word (violation at index " +
                    std::to_string(v->start) + ")");
  }
  Decomposition dec;
  Word cur = w;
  while (cur.size() >= 4) {
    Factorization f = factorize(cur);
    dec.layers.emplace_back(f.a, f.b);
    cur = std::move(f.core);
  }
  dec.core = std::move(cur);
  return dec;
}

Word reassemble(const Decomposition& dec) {
  Word w = dec.core;
  for (auto it = dec.layers.rbegin(); it != dec.layers.rend(); ++it) {
    w = it->first + apply_morphism(period_doubling(), w) + it->second;
  }
  return w;
}

}  // namespace perdoub
