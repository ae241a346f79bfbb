#include <doctest.h>

#include "sadic/injectivize.hpp"
#include "sadic/language.hpp"
#include "support.hpp"

using namespace sadic;

TEST_CASE("quotient of rho") {
  auto f = fixture("alpha.sadic");
  auto [tau, q] = quotient_of(f.morphism("rho"));
  CHECK(q == f.morphism("theta"));
  const Alphabet& B = f.morphism("rho").source();
  CHECK(tau.image(B.index_of("0"))[0] == tau.image(B.index_of("0'"))[0]);
  CHECK(tau.image(B.index_of("1"))[0] == tau.image(B.index_of("1'"))[0]);
  CHECK(tau.target().symbols() == std::vector<std::string>{"0", "1"});
  CHECK(compose(q, tau) == f.morphism("rho"));
}

TEST_CASE("quotient trivial cases") {
  auto f = fixture("alpha.sadic");
  auto [tau, q] = quotient_of(f.morphism("vartheta"));
  CHECK(tau == Morphism::identity(f.morphism("vartheta").source()));
  CHECK(q == f.morphism("vartheta"));

  Alphabet abc({"a", "b", "c"});
  Morphism constant = Morphism::from_strings(abc, abc, {"ab", "ab", "ab"});
  auto [t2, q2] = quotient_of(constant);
  CHECK(t2.target().size() == 1);
  CHECK(q2.source().symbols() == std::vector<std::string>{"a"});
  CHECK(compose(q2, t2) == constant);
}

TEST_CASE("injectivize alpha") {
  auto f = fixture("alpha.sadic");
  auto r = injectivize(f.sequence("alpha"));
  CHECK(r.sequence == f.sequence("alpha_hat"));
  REQUIRE_FALSE(r.steps.empty());
  CHECK(r.steps.front().level == 1);
  CHECK(r.hypothesis_verified);
  for (const auto& s : r.steps) {
    CHECK(compose(s.new_morphism, s.partition) == s.quotiented);
    CHECK(is_injective_on_letters(s.new_morphism));
  }
}

TEST_CASE("already injective input is unchanged") {
  for (const char* name : {"tau_theta.sadic", "durand.sadic", "thue_morse.sadic"}) {
    auto f = fixture(name);
    for (const auto& [n, ds] : f.sequences) {
      auto r = injectivize(ds);
      CHECK(r.sequence == ds);
      CHECK(r.steps.empty());
    }
  }
}

TEST_CASE("three-letter quotient") {
  auto f = fixture("quotient3.sadic");
  const auto& ds = f.sequence();
  auto r = injectivize(ds);
  REQUIRE(r.steps.size() >= 1);
  const auto& s = r.steps.front();
  CHECK(s.level == 1);
  CHECK(s.partition.target().symbols() == std::vector<std::string>{"a", "b"});
  const Alphabet& A = ds.alphabet(1);
  CHECK(s.partition.image(A.index_of("b"))[0] == s.partition.image(A.index_of("c"))[0]);
  CHECK(r.sequence.at(1) == compose(s.partition, ds.at(1)));
  CHECK(is_letter_injective(r.sequence));
}

TEST_CASE("injectivize invariants") {
  for (const char* name : {"alpha.sadic", "quotient3.sadic", "example46.sadic"}) {
    auto f = fixture(name);
    for (const auto& [n, ds] : f.sequences) {
      auto r = injectivize(ds);
      const auto& out = r.sequence;
      CHECK(is_letter_injective(out));
      for (std::size_t k = 0; k < 12; ++k) {
        CHECK(out.length(k) == ds.length(k));
        CHECK(out.alphabet(k + 1).size() <= ds.alphabet(k + 1).size());
      }
      CHECK(injectivize(out).sequence == out);
      CHECK(persistent_words(out, 0, 6).words == persistent_words(ds, 0, 6).words);
      for (std::size_t lvl = 1; lvl <= 4; ++lvl)
        for (Letter a = 0; a < ds.alphabet(lvl).size(); ++a) {
          Word s = supertile(ds, lvl, a);
          bool found = false;
          for (Letter b = 0; b < out.alphabet(lvl).size() && !found; ++b) found = supertile(out, lvl, b) == s;
          CHECK(found);
        }
    }
  }
}
