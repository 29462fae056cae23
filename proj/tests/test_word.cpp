#include "doctest.h"

#include <random>

#include "perdoub/word.hpp"

using namespace perdoub;

namespace {

Word random_word(std::mt19937& rng, std::size_t len) {
  Word w(len, '0');
  for (char& c : w) c = (rng() & 1) ? '1' : '0';
  return w;
}

}  // namespace

TEST_CASE("apply_morphism on the period-doubling morphism") {
  const Morphism& delta = period_doubling();
  CHECK(apply_morphism(delta, "11") == "0000");
  CHECK(apply_morphism(delta, "1001") == "00010100");
  CHECK(apply_morphism(delta, "") == "");
}

TEST_CASE("apply_morphism is a monoid homomorphism") {
  std::mt19937 rng(1);
  const Morphism* ms[] = {&period_doubling(), &lex_greatest_morphism(),
                          &lex_least_morphism(), &parse_code_01(),
                          &parse_code_10()};
  for (int iter = 0; iter < 100; ++iter) {
    const Morphism& m = *ms[rng() % 5];
    const Word u = random_word(rng, rng() % 24);
    const Word v = random_word(rng, rng() % 24);
    CHECK(apply_morphism(m, u + v) ==
          apply_morphism(m, u) + apply_morphism(m, v));
  }
}

TEST_CASE("iterate_to_length produces fixed-point prefixes") {
  CHECK(iterate_to_length(period_doubling(), '0', 32) ==
        "01000101010001000100010101000101");
  CHECK(iterate_to_length(period_doubling(), '0', 2) == "01");
  CHECK(iterate_to_length(period_doubling(), '0', 0) == "");

  // Two applications by hand as the oracle for the greatest-word morphism.
  const Morphism& h = lex_greatest_morphism();
  Word twice = apply_morphism(h, apply_morphism(h, "1"));
  twice.resize(16);
  CHECK(iterate_to_length(h, '1', 16) == twice);
  CHECK(iterate_to_length(h, '1', 16) == "1010100010101000");
}

TEST_CASE("iterate_to_length rejects bad seeds") {
  CHECK_THROWS_WITH_AS(iterate_to_length(period_doubling(), '1', 4),
                       doctest::Contains("does not start"), Error);
  const Morphism identityish{"0", "1"};
  CHECK_THROWS_AS(iterate_to_length(identityish, '0', 2), Error);
  // Length below the seed is fine.
  CHECK(iterate_to_length(identityish, '0', 1) == "0");
}

TEST_CASE("iterate_to_length prefix monotonicity") {
  for (std::size_t n = 0; n < 40; ++n) {
    const Word a = d_prefix(n);
    const Word b = d_prefix(n + 1);
    CHECK(b.compare(0, n, a) == 0);
  }
}

TEST_CASE("complement and reverse") {
  CHECK(complement("00101000") == "11010111");
  CHECK(reverse("00101000") == "00010100");
  CHECK(reverse("") == "");
  std::mt19937 rng(2);
  for (int iter = 0; iter < 50; ++iter) {
    const Word w = random_word(rng, rng() % 32);
    CHECK(reverse(reverse(w)) == w);
    CHECK(complement(complement(w)) == w);
  }
}

TEST_CASE("squared period-doubling images are shifted greatest-word images") {
  const Morphism& delta = period_doubling();
  const Morphism& h = lex_greatest_morphism();
  for (char a : {'0', '1'}) {
    const Word lhs = apply_morphism(delta, apply_morphism(delta, Word(1, a)));
    Word rhs = "0" + (a == '0' ? h.image0 : h.image1);
    rhs.pop_back();
    CHECK(lhs == rhs);
  }
}

TEST_CASE("find_factor") {
  CHECK(find_factor("0001", "01000101") == 2);
  CHECK_FALSE(find_factor("11", d_prefix(1024)).has_value());
  CHECK(find_factor("", "01") == 0);
}

TEST_CASE("parse_word validates") {
  CHECK(parse_word("0101") == "0101");
  CHECK(parse_word("") == "");
  CHECK_THROWS_AS(parse_word("01a"), Error);
}
