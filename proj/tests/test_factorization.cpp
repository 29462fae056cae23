#include "doctest.h"

#include "perdoub/factorization.hpp"
#include "perdoub/goodness.hpp"

using namespace perdoub;

TEST_CASE("period_doubling_preimage") {
  CHECK(period_doubling_preimage("0000") == "11");
  CHECK(period_doubling_preimage("0100") == "01");
  CHECK_FALSE(period_doubling_preimage("011").has_value());
  CHECK_FALSE(period_doubling_preimage("10").has_value());
  CHECK(period_doubling_preimage("") == "");
}

TEST_CASE("factorize worked examples") {
  CHECK(factorize("0001") == Factorization{"", "10", ""});
  CHECK(factorize("00101000") == Factorization{"0", "001", "0"});
  CHECK(factorize("0") == Factorization{"", "", "0"});
}

TEST_CASE("factorize rejects forbidden factors") {
  CHECK_THROWS_WITH_AS(factorize("0110"), doctest::Contains("11"), Error);
  CHECK_THROWS_WITH_AS(factorize("1001"), doctest::Contains("1001"), Error);
  CHECK_THROWS_WITH_AS(factorize("00001"), doctest::Contains("0000"), Error);
}

TEST_CASE("factorize round-trips and descends on small good words") {
  for (std::size_t n = 0; n <= 12; ++n) {
    for (const Word& w : enumerate_good(n)) {
      const Factorization f = factorize(w);
      CHECK(f.a.size() <= 1);
      CHECK(f.b.size() <= 1);
      CHECK(f.b != "1");
      CHECK(f.a + apply_morphism(period_doubling(), f.core) + f.b == w);
      CHECK(is_good(f.core));
    }
  }
}

TEST_CASE("factorization is unique from length 4") {
  for (std::size_t n = 4; n <= 10; ++n) {
    for (const Word& w : enumerate_good(n)) {
      int valid = 0;
      Factorization the_one;
      for (const Word& a : {Word(), Word("0"), Word("1")}) {
        for (const Word& b : {Word(), Word("0")}) {
          if (a.size() + b.size() > w.size()) continue;
          if (!a.empty() && w.substr(0, 1) != a) continue;
          if (!b.empty() && w.substr(w.size() - 1) != b) continue;
          const Word mid = w.substr(a.size(), w.size() - a.size() - b.size());
          if (auto u = period_doubling_preimage(mid)) {
            ++valid;
            the_one = Factorization{a, *u, b};
          }
        }
      }
      CHECK(valid == 1);
      CHECK(factorize(w) == the_one);
    }
  }
}

TEST_CASE("full_decomposition") {
  SUBCASE("single layer") {
    const Decomposition dec = full_decomposition("0001");
    REQUIRE(dec.layers.size() == 1);
    CHECK(dec.layers[0] == std::pair<Word, Word>("", ""));
    CHECK(dec.core == "10");
    CHECK(reassemble(dec) == "0001");
  }
  SUBCASE("short words decompose to themselves") {
    const Decomposition dec = full_decomposition("0");
    CHECK(dec.layers.empty());
    CHECK(dec.core == "0");
  }
  SUBCASE("prefixes of d peel to prefixes of d") {
    const Word d16 = d_prefix(16);
    const Decomposition dec = full_decomposition(d16);
    CHECK(reassemble(dec) == d16);
    Word cur = d16;
    for (const auto& layer : dec.layers) {
      CHECK(layer.first == "");
      CHECK((layer.second == "" || layer.second == "0"));
      const Factorization f = factorize(cur);
      cur = f.core;
      CHECK(d_prefix(cur.size()) == cur);
    }
  }
  SUBCASE("round trip across all small good words") {
    for (std::size_t n = 0; n <= 12; ++n) {
      for (const Word& w : enumerate_good(n)) {
        CHECK(reassemble(full_decomposition(w)) == w);
      }
    }
  }
  SUBCASE("rejects non-good input") {
    CHECK_THROWS_AS(full_decomposition("00010100"), Error);
  }
}
