#include <doctest.h>

#include "sadic/errors.hpp"
#include "sadic/language.hpp"
#include "support.hpp"

using namespace sadic;

TEST_CASE("supertile") {
  auto t = fixture("theta011.sadic").sequence();
  CHECK(t.alphabet(0).format(supertile(t, 2, 0)) == "0 1 1 0 0 1 0 0 1");
  CHECK(supertile(t, 0, 1) == Word{1});
  auto f = fixture("tau_theta.sadic").sequence();
  auto img = f.at(0).image(2);
  CHECK(supertile(f, 1, 2) == Word(img.begin(), img.end()));
  CHECK_THROWS_AS(supertile(t, 1, 7), Error);
}

TEST_CASE("supertile recursion") {
  for (const char* name : {"alpha.sadic", "tau_theta.sadic", "durand.sadic"}) {
    auto f = fixture(name);
    for (const auto& [n, ds] : f.sequences)
      for (std::size_t lvl = 0; lvl < 3; ++lvl)
        for (Letter a = 0; a < ds.alphabet(lvl + 1).size(); ++a) {
          Word expect;
          for (Letter b : ds.at(lvl).image(a)) {
            Word s = supertile(ds, lvl, b);
            expect.insert(expect.end(), s.begin(), s.end());
          }
          CHECK(supertile(ds, lvl + 1, a) == expect);
        }
  }
}

TEST_CASE("persistent words") {
  auto f = fixture("alpha.sadic");
  const auto& a = f.sequence("alpha");
  auto lang = persistent_words(a, 1, 2);
  const Alphabet& B = a.alphabet(1);
  CHECK(lang.stabilized);
  CHECK(lang.contains(B.parse("1 0'")));
  CHECK(lang.contains(B.parse("1' 0")));
  CHECK_FALSE(lang.contains(B.parse("1 0")));

  auto letters = persistent_words(a, 1, 1);
  CHECK(letters.words.size() == 4);

  auto t = fixture("theta011.sadic").sequence();
  auto two = persistent_words(t, 0, 2).of_length(2);
  CHECK(two.size() == 4);

  // monotone under max_len
  auto l3 = persistent_words(t, 0, 3), l4 = persistent_words(t, 0, 4);
  for (const Word& w : l3.words) CHECK(l4.contains(w));
  CHECK_THROWS(persistent_words(t, 0, 0));
}

TEST_CASE("limit word seeds") {
  auto t = fixture("theta011.sadic").sequence();
  auto s = limit_word_seed(t, 0);
  CHECK(s.level == 0);
  CHECK(s.letter == 0);
  CHECK(s.telescope_step == 1);

  auto v = fixture("alpha.sadic").sequence("alpha");
  auto sv = limit_word_seed(v, 1);
  CHECK(sv.letter == v.alphabet(1).index_of("0"));
  CHECK(sv.telescope_step == 1);
  CHECK(limit_word_seed(v, 0).level == 1);

  Alphabet ab({"a", "b"});
  Morphism flip = Morphism::from_strings(ab, ab, {"bab", "aab"});
  DirectiveSequence ds({}, {flip});
  auto sf = limit_word_seed(ds, 0);
  CHECK(sf.telescope_step == 2);
  CHECK(sf.letter == 0);
}

TEST_CASE("limit word prefix") {
  auto t = fixture("theta011.sadic").sequence();
  CHECK(t.alphabet(0).format(limit_word_prefix(t, 0, 9)) == "0 1 1 0 0 1 0 0 1");
  CHECK(limit_word_prefix(t, 0, 1) == Word{0});
  auto v = fixture("alpha.sadic").sequence("alpha");
  CHECK(v.alphabet(1).format(limit_word_prefix(v, 1, 3)) == "0 1' 1");

  for (const char* name : {"tau_theta.sadic", "durand.sadic", "quotient3.sadic"}) {
    auto f = fixture(name);
    for (const auto& [n, ds] : f.sequences)
      for (std::size_t lvl = 0; lvl < 4; ++lvl) {
        Word short_ = limit_word_prefix(ds, lvl, 50), long_ = limit_word_prefix(ds, lvl, 500);
        CHECK(std::equal(short_.begin(), short_.end(), long_.begin()));
        // tower identity u^(n) = theta^(n)(u^(n+1))
        Word up = limit_word_prefix(ds, lvl + 1, 200);
        Word down = ds.at(lvl).apply(up);
        down.resize(200);
        CHECK(down == limit_word_prefix(ds, lvl, 200));
      }
  }
}

TEST_CASE("fixed-point identity of the seed composite") {
  auto ds = fixture("tau_theta.sadic").sequence("tail");
  auto s = limit_word_seed(ds, 0);
  Word u = limit_word_prefix(ds, 0, 30);
  Word img = composite(ds, 0, s.telescope_step).apply(u);
  CHECK(img == limit_word_prefix(ds, 0, img.size()));
}

TEST_CASE("return gcd") {
  auto t = fixture("theta011.sadic").sequence();
  CHECK(return_gcd(t, 0, 1000) == 1);
  auto tail = fixture("tau_theta.sadic").sequence("tail");
  CHECK(return_gcd(tail, 0, 100000) % 2 == 0);
  Alphabet ab({"a", "b"});
  Morphism alt = Morphism::from_strings(ab, ab, {"ab", "ab"});
  CHECK(return_gcd(DirectiveSequence({}, {alt}), 0, 64) == 2);
  CHECK_THROWS_WITH_AS(return_gcd(DirectiveSequence({}, {alt}), 0, 1), doctest::Contains("NoReturn"), Error);
  // depth monotonicity
  auto ds = fixture("durand.sadic").sequence("alternating");
  std::uint64_t g1 = return_gcd(ds, 0, 100), g2 = return_gcd(ds, 0, 10000);
  CHECK(g1 % g2 == 0);
}

TEST_CASE("central window") {
  auto f = fixture("alpha.sadic");
  auto w = central_window(f.sequence("alpha"), 0, 14);
  auto h = central_window(f.sequence("alpha_hat"), 0, 14);
  CHECK(w.word.size() == 28);
  CHECK(w.word == h.word);
  auto A = f.sequence("alpha").alphabet(0);
  // ... theta^3(1) . theta^3(0) ...
  Word right(w.word.begin() + 14, w.word.end());
  CHECK(A.format(right) == "0 1 1 0 0 1 0 0 1 0 1 1 0 1");
}
