#include <doctest.h>

#include "sadic/column.hpp"
#include "sadic/height.hpp"
#include "sadic/oracle.hpp"
#include "support.hpp"

using namespace sadic;

TEST_CASE("column maps") {
  auto ds = fixture("theta011.sadic").sequence();
  auto c = column_map(ds, 0, 1, 0);
  CHECK(c.map == std::vector<Letter>{0, 0});
  CHECK(c.image_size() == 1);
  CHECK(column_map(ds, 0, 1, 1).image_size() == 2);
  CHECK(column_map(ds, 3, 3, 0).image_size() == 2);
  CHECK_THROWS(column_map(ds, 2, 1, 0));
  auto f = fixture("alpha.sadic");
  const auto& a = f.sequence("alpha");
  for (unsigned j = 0; j < 9; ++j)
    CHECK(column_map(a, 1, 3, j).map == columns(composite(a, 1, 3))[j].map);
}

TEST_CASE("column sets shrink along the tower") {
  auto ds = fixture("tau_theta.sadic").sequence("S");
  auto s = initial_column_set(ds, 0);
  std::size_t prev = s.min_cardinality();
  std::size_t least = SIZE_MAX;
  for (const auto& c : columns(ds.at(0))) least = std::min(least, c.image_size());
  CHECK(prev == least);
  for (int i = 0; i < 6; ++i) {
    s = advance(ds, s);
    CHECK(s.min_cardinality() <= prev);
    prev = s.min_cardinality();
    for (const auto& [map, j] : s.maps) {
      auto direct = column_map(ds, 0, s.current_level, j);
      CHECK(direct.map == map);
    }
  }
}

TEST_CASE("column numbers") {
  auto t = fixture("theta011.sadic").sequence();
  auto n = naive_column_number(t);
  CHECK(n.value == 1);
  CHECK(column_number(t, default_depth(t)).c == 1);

  auto tm = fixture("thue_morse.sadic").sequence();
  CHECK(naive_column_number(tm).value == 2);
  CHECK(column_number(tm, default_depth(tm)).c == 2);

  auto f = fixture("alpha.sadic");
  CHECK(column_number(f.sequence("alpha"), 50000).c == 1);
  for (std::size_t m = 1; m <= 3; ++m) CHECK(c_at(f.sequence("alpha"), m, ColumnMode::Raw).c == 2);
  CHECK(c_at(f.sequence("alpha"), 1).c == 1);
}

TEST_CASE("column number on the pure base") {
  auto h2 = fixture("height2_four.sadic").sequence();
  CHECK(naive_column_number(h2).value == 4);
  auto cn = column_number(h2, default_depth(h2));
  CHECK(cn.h == 2);
  CHECK(cn.c == 2);
  auto h6 = fixture("height6.sadic").sequence();
  CHECK(column_number(h6, default_depth(h6)).c == 1);
}

TEST_CASE("witness agrees with the oracle") {
  for (const char* name : {"theta011.sadic", "thue_morse.sadic", "tau_theta.sadic"}) {
    auto f = fixture(name);
    for (const auto& [nm, ds] : f.sequences) {
      auto n = naive_column_number(ds);
      const auto& w = n.witness;
      if (w.n - w.m > oracle::kMaxLevels) continue;
      CHECK(oracle::empirical_column_cardinality(ds, w.m, w.n, w.j.convert_to<std::uint64_t>()) == n.value);
    }
  }
}
