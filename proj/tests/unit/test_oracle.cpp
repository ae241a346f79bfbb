#include <doctest.h>

#include "sadic/column.hpp"
#include "sadic/errors.hpp"
#include "sadic/injectivize.hpp"
#include "sadic/language.hpp"
#include "sadic/oracle.hpp"
#include "support.hpp"

using namespace sadic;

TEST_CASE("empirical column cardinality") {
  auto t = fixture("theta011.sadic").sequence();
  CHECK(oracle::empirical_column_cardinality(t, 0, 1, 0) == 1);
  CHECK(oracle::empirical_column_cardinality(t, 0, 0, 0) == 2);
  auto f = fixture("alpha.sadic");
  const auto& a = f.sequence("alpha");
  for (std::uint64_t j = 0; j < 9; j += 4)
    CHECK(oracle::empirical_column_cardinality(a, 1, 3, j) == column_map(a, 1, 3, j).image_size());
  CHECK_THROWS(oracle::empirical_column_cardinality(t, 0, 9, 0));
}

TEST_CASE("occurrence residues") {
  auto tail = fixture("tau_theta.sadic").sequence("tail");
  Word w = limit_word_prefix(tail, 1, 12);
  auto r = oracle::occurrence_residues(tail, 1, w, 20000, {1, 2, 3});
  CHECK(r[1] == std::set<std::uint64_t>{0});
  CHECK(r[2].size() == 1);

  auto d = fixture("durand.sadic").sequence("alternating");
  Word dw = limit_word_prefix(d, 0, 6);
  auto rd = oracle::occurrence_residues(d, 0, dw, 20000, {2});
  CHECK(rd[2].size() == 2);

}

TEST_CASE("occurrence residue upward consistency") {
  auto ds = fixture("height6.sadic").sequence();
  Word w = limit_word_prefix(ds, 0, 10);
  auto r = oracle::occurrence_residues(ds, 0, w, 50000, {2, 3, 6});
  CHECK(r[6].size() == 1);
  CHECK(r[2].size() == 1);
  CHECK(r[3].size() == 1);
  auto t = fixture("theta011.sadic").sequence();
  CHECK_THROWS_WITH_AS(oracle::occurrence_residues(t, 0, Word{1, 1, 1, 1}, 5000, {2}),
                       doctest::Contains("NoOccurrence"), Error);
}

TEST_CASE("desubstitution counts") {
  auto f = fixture("alpha.sadic");
  auto win = central_window(f.sequence("alpha"), 0, 14);
  CHECK(oracle::desubstitution_count(f.sequence("alpha"), 0, win.word, win.origin) == 2);
  CHECK(oracle::desubstitution_count(f.sequence("alpha_hat"), 0, win.word, win.origin) == 1);
  // monotone in the width
  std::size_t prev = SIZE_MAX;
  for (std::size_t r = 2; r <= 14; r += 3) {
    auto w = central_window(f.sequence("alpha"), 0, r);
    auto k = oracle::desubstitution_count(f.sequence("alpha"), 0, w.word, w.origin);
    CHECK(k >= 1);
    CHECK(k <= prev);
    prev = k;
  }
  auto t = fixture("theta011.sadic").sequence();
  CHECK_THROWS_WITH_AS(oracle::desubstitution_count(t, 0, Word{1, 1, 1, 1}, 2), doctest::Contains("WindowNotFound"),
                       Error);
}

TEST_CASE("fibre counts at the column witness") {
  for (const char* name : {"theta011.sadic", "thue_morse.sadic", "tau_theta.sadic", "durand.sadic"}) {
    auto f = fixture(name);
    for (const auto& [nm, raw] : f.sequences) {
      auto ds = injectivize(raw).sequence;
      auto n = naive_column_number(ds);
      const auto& w = n.witness;
      if (w.n - w.m > oracle::kMaxLevels) continue;
      std::vector<std::pair<BigInt, BigInt>> res;
      // a residue at p_m pinned to 0, and the witness column at p_n
      res.push_back({ds.p(w.m), 0});
      res.push_back({ds.p(w.n), w.j * ds.p(w.m)});
      CHECK_MESSAGE(oracle::fibre_count(ds, res, 100000) == n.value, name, " ", nm);
    }
  }
}

TEST_CASE("incoherent residues") {
  auto t = fixture("theta011.sadic").sequence();
  std::vector<std::pair<BigInt, BigInt>> res{{3, 1}, {9, 3}};
  CHECK_THROWS_WITH_AS(oracle::fibre_count(t, res, 1000), doctest::Contains("IncoherentResidues"), Error);
}
