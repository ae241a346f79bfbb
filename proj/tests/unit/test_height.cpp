#include <doctest.h>

#include "sadic/errors.hpp"
#include "sadic/height.hpp"
#include "sadic/injectivize.hpp"
#include "sadic/language.hpp"
#include "support.hpp"

using namespace sadic;

TEST_CASE("height of the two-level example") {
  auto ds = fixture("tau_theta.sadic").sequence("S");
  auto comb = comb_height(ds, default_depth(ds));
  CHECK(comb.h_comb == 2);
  REQUIRE(comb.table.size() >= 2);
  CHECK(comb.table[0].h == 1);
  CHECK(comb.table[1].h == 2);
  auto r = height(ds, default_depth(ds));
  CHECK(r.h == 2);
  CHECK(r.torsion_free);
  CHECK(r.certificate.level >= 1);
  CHECK(verify_certificate(ds, r.certificate));
}

TEST_CASE("stationary height two") {
  auto ds = fixture("example46.sadic").sequence("stationary");
  auto r = height(ds, default_depth(ds));
  CHECK(r.h == 2);
  CHECK(r.divides_lengths_minus_one);
  CHECK((5 - 1) % r.h == 0);
}

TEST_CASE("trivial heights") {
  for (const char* name : {"theta011.sadic", "durand.sadic", "thue_morse.sadic", "factorial.sadic"}) {
    auto f = fixture(name);
    for (const auto& [n, ds] : f.sequences) {
      auto r = height(ds, default_depth(ds));
      CHECK_MESSAGE(r.h == 1, name, " ", n);
    }
  }
}

TEST_CASE("height six and multiplicativity") {
  auto ds = fixture("height6.sadic").sequence();
  auto r = height(ds, default_depth(ds));
  CHECK(r.h == 6);
  auto c2 = partition_certificate(ds, 0, 2);
  auto c3 = partition_certificate(ds, 0, 3);
  REQUIRE(c2);
  REQUIRE(c3);
  CHECK(verify_certificate(ds, *c2));
  CHECK(verify_certificate(ds, *c3));
  CHECK(c2->h * c3->h == r.h);
  CHECK_FALSE(partition_certificate(ds, 0, 4));
}

TEST_CASE("four-letter height two") {
  auto ds = fixture("height2_four.sadic").sequence();
  auto r = height(ds, default_depth(ds));
  CHECK(r.h == 2);
  auto cls = r.certificate.classes();
  REQUIRE(cls.size() == 2);
  const Alphabet& A = ds.alphabet(r.certificate.level);
  CHECK(cls[0] == std::vector<Letter>{A.index_of("a"), A.index_of("b")});
}

TEST_CASE("not torsion-free gives a combinatorial value only") {
  auto ds = fixture("example46.sadic").sequence("S");
  auto comb = comb_height(ds, 20000);
  CHECK(comb.h_comb >= 1);
  CHECK_THROWS_WITH_AS(pure_base(ds, 20000), doctest::Contains("NotTorsionFree"), Error);
}

TEST_CASE("certificate rejection") {
  auto ds = fixture("theta011.sadic").sequence();
  CHECK_FALSE(partition_certificate(ds, 0, 2));
  auto tm = fixture("thue_morse.sadic").sequence();
  CHECK_FALSE(partition_certificate(tm, 0, 3));
}

namespace {

void check_pure_base(const DirectiveSequence& ds) {
  auto pb = pure_base(ds, default_depth(ds));
  const auto& pure = pb.pure;
  CHECK(pb.trivial_height);
  CHECK(height(pure, default_depth(pure)).h == 1);
  for (std::size_t k = 0; k < 10; ++k) CHECK(pure.length(k) == ds.length(k));
  CHECK(pure.alphabet(0).size() <= pb.h * pb.source.alphabet(0).size() * pb.source.alphabet(0).size() + 64);
  REQUIRE_FALSE(pb.codings.empty());
  const Coding& c0 = pb.codings.front();
  CHECK(c0.level == 0);
  // decode(pure limit word) is a factor of the source limit word's language
  Word u = limit_word_prefix(pure, 0, 40);
  Word d = decode(c0, u);
  CHECK(d.size() == 40 * pb.h);
  auto lang = persistent_words(pb.source, 0, 6);
  for (std::size_t i = 0; i + 6 <= d.size(); i += 5) CHECK(lang.contains(Word(d.begin() + i, d.begin() + i + 6)));
}

}  // namespace

TEST_CASE("pure base postconditions") {
  check_pure_base(fixture("tau_theta.sadic").sequence("S"));
  check_pure_base(fixture("example46.sadic").sequence("stationary"));
  check_pure_base(fixture("height2_four.sadic").sequence());
  check_pure_base(fixture("height6.sadic").sequence());
  check_pure_base(fixture("theta011.sadic").sequence());
}

TEST_CASE("pure base of trivial height is the injectivization") {
  auto f = fixture("alpha.sadic");
  auto pb = pure_base(f.sequence("alpha"), 50000);
  CHECK(pb.h == 1);
  CHECK(pb.pure == f.sequence("alpha_hat"));
}
