#include <doctest.h>

#include "sadic/errors.hpp"
#include "sadic/morphism.hpp"
#include "support.hpp"

using namespace sadic;

namespace {

Alphabet bin() { return Alphabet({"0", "1"}); }
Morphism theta() { return Morphism::from_strings(bin(), bin(), {"011", "001"}); }
Alphabet abc() { return Alphabet({"a", "b", "c"}); }

}  // namespace

TEST_CASE("alphabet basics") {
  Alphabet a({"x", "yy", "0'"});
  CHECK(a.size() == 3);
  CHECK(a.index_of("yy") == 1);
  CHECK_FALSE(a.find("z"));
  CHECK_THROWS_AS(a.index_of("z"), Error);
  CHECK(a.parse("x 0' yy") == Word{0, 2, 1});
  CHECK(a.format(Word{2, 0}) == "0' x");
  CHECK_THROWS(Alphabet({"a", "a"}));
  CHECK_THROWS(Alphabet(std::vector<std::string>{}));
  CHECK(Alphabet({"a", "b"}) == Alphabet({"a", "b"}));
  CHECK_FALSE(Alphabet({"a", "b"}) == Alphabet({"b", "a"}));
}

TEST_CASE("morphism construction rejects bad images") {
  CHECK_THROWS(Morphism(bin(), bin(), 2, {{0, 1}, {1}}));
  CHECK_THROWS(Morphism(bin(), bin(), 2, {{0, 1}}));
  CHECK_THROWS(Morphism(bin(), bin(), 0, {{}, {}}));
  CHECK_THROWS(Morphism(bin(), bin(), 1, {{0}, {5}}));
}

TEST_CASE("compose") {
  Morphism t = theta();
  Morphism tt = compose(t, t);
  CHECK(tt.length() == 9);
  CHECK(bin().format(tt.image(0)) == "0 1 1 0 0 1 0 0 1");
  CHECK(compose(Morphism::identity(bin()), t) == t);
  CHECK(compose(t, Morphism::identity(bin())) == t);

  Morphism tau = Morphism::from_strings(abc(), abc(), {"aab", "abc", "aac"});
  Morphism th = Morphism::from_strings(abc(), abc(), {"aba", "bac", "bab"});
  CHECK(compose(tau, th).length() == 9);
  CHECK_THROWS_AS(compose(t, tau), Error);
}

TEST_CASE("columns") {
  auto cols = columns(theta());
  REQUIRE(cols.size() == 3);
  CHECK(cols[0].image_size() == 1);
  CHECK(cols[1].image_size() == 2);
  CHECK(from_columns(bin(), bin(), cols) == theta());

  auto id = columns(Morphism::identity(abc()));
  REQUIRE(id.size() == 1);
  CHECK(id[0].map == std::vector<Letter>{0, 1, 2});

  Morphism durand = Morphism::from_strings(abc(), abc(), {"acb", "bab", "cbc"});
  auto dc = columns(durand);
  CHECK(dc[2].image_size() == 2);
  CHECK(dc[2].map == std::vector<Letter>{1, 1, 2});
}

TEST_CASE("incidence matrix") {
  IncidenceMatrix m = incidence_matrix(theta());
  CHECK(m.at(0, 0) == 1);
  CHECK(m.at(1, 0) == 2);
  CHECK(m.at(0, 1) == 2);
  CHECK(m.at(1, 1) == 1);
  CHECK(incidence_matrix(Morphism::identity(abc())) == IncidenceMatrix::identity(3));
  CHECK(incidence_matrix(compose(theta(), theta())) == m * m);
}

TEST_CASE("primitive power") {
  CHECK(primitive_power(incidence_matrix(theta())) == 1);
  CHECK_FALSE(primitive_power(IncidenceMatrix::identity(2)));
  Morphism durand = Morphism::from_strings(abc(), abc(), {"acb", "bab", "cbc"});
  auto k = primitive_power(incidence_matrix(durand));
  REQUIRE(k);
  CHECK(*k >= 1);
  CHECK(*k <= 5);
  Morphism swap = Morphism::from_strings(bin(), bin(), {"1", "0"});
  CHECK_FALSE(primitive_power(incidence_matrix(swap)));
}

TEST_CASE("letter injectivity") {
  auto f = fixture("alpha.sadic");
  CHECK_FALSE(is_injective_on_letters(f.morphism("rho")));
  CHECK(is_injective_on_letters(f.morphism("vartheta")));
  CHECK(is_injective_on_letters(theta()));
}

TEST_CASE("sliding block recode") {
  Morphism t = theta();
  std::vector<Word> legal1 = {{0}, {1}};
  Morphism r1 = sliding_block_recode(t, 1, legal1);
  CHECK(r1.length() == 3);
  CHECK(r1.source().symbols() == std::vector<std::string>{"(0)", "(1)"});
  CHECK(r1.flat() == t.flat());

  std::vector<Word> legal2 = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  Morphism r2 = sliding_block_recode(t, 2, legal2);
  Letter w01 = r2.source().index_of("(0,1)");
  CHECK(r2.source().format(r2.image(w01)) == "(0,1) (1,1) (1,0)");

  std::vector<Word> missing = {{0, 0}, {0, 1}, {1, 1}};
  CHECK_THROWS_WITH_AS(sliding_block_recode(t, 2, missing), doctest::Contains("IllegalWindow"), Error);
}
