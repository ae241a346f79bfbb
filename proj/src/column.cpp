#include "sadic/column.hpp"

#include <set>

#include "sadic/errors.hpp"
#include "sadic/height.hpp"
#include "sadic/injectivize.hpp"
#include "sadic/kernels.hpp"

namespace sadic {

namespace {

constexpr std::size_t kStateCap = 100000;

std::size_t image_size(const std::vector<Letter>& f) {
  std::set<Letter> s(f.begin(), f.end());
  return s.size();
}

}  // namespace

std::size_t ColumnMapSet::min_cardinality() const {
  std::size_t best = SIZE_MAX;
  for (const auto& [f, j] : maps) best = std::min(best, image_size(f));
  return best;
}

ColumnMapSet initial_column_set(const DirectiveSequence& ds, std::size_t m) {
  ColumnMapSet s;
  s.base_level = m;
  s.current_level = m + 1;
  s.span = ds.length(m);
  for (auto& col : columns(ds.at(m))) s.maps.emplace(std::move(col.map), col.index);
  return s;
}

ColumnMapSet advance(const DirectiveSequence& ds, const ColumnMapSet& s) {
  const Morphism& th = ds.at(s.current_level);
  std::vector<std::vector<Letter>> outer;
  std::vector<BigInt> outer_index;
  for (const auto& [f, j] : s.maps) {
    outer.push_back(f);
    outer_index.push_back(j);
  }
  auto cols = columns(th);
  std::vector<std::vector<Letter>> inner;
  for (const auto& c : cols) inner.push_back(c.map);
  auto composed = kernels::compose_all(outer, inner);

  ColumnMapSet next;
  next.base_level = s.base_level;
  next.current_level = s.current_level + 1;
  next.span = s.span * th.length();
  for (std::size_t t = 0; t < composed.size(); ++t) {
    BigInt idx = BigInt(cols[t % cols.size()].index) * s.span + outer_index[t / cols.size()];
    auto [it, fresh] = next.maps.emplace(std::move(composed[t]), idx);
    if (!fresh && idx < it->second) it->second = idx;
  }
  return next;
}

ColumnMap column_map(const DirectiveSequence& ds, std::size_t m, std::size_t n, const BigInt& j) {
  if (m > n) fail(ErrorCode::InvalidArgument, "column_map needs m <= n");
  if (j < 0 || j >= ds.span_length(m, n)) fail(ErrorCode::InvalidArgument, "column index out of range");
  std::vector<std::size_t> digits;
  BigInt rest = j;
  for (std::size_t k = m; k < n; ++k) {
    digits.push_back(static_cast<std::size_t>(rest % ds.length(k)));
    rest /= ds.length(k);
  }
  ColumnMap out;
  out.index = j <= BigInt(SIZE_MAX) ? j.convert_to<std::size_t>() : SIZE_MAX;
  const std::size_t size = ds.alphabet(n).size();
  out.map.resize(size);
  for (Letter a = 0; a < size; ++a) {
    Letter x = a;
    for (std::size_t k = n; k-- > m;) x = ds.at(k).at(x, digits[k - m]);
    out.map[a] = x;
  }
  return out;
}

ColumnLevel c_at(const DirectiveSequence& ds, std::size_t m, ColumnMode mode) {
  if (mode == ColumnMode::Injectivized && !is_letter_injective(ds))
    return c_at(injectivize(ds).sequence, m, ColumnMode::Raw);
  ColumnLevel out;
  out.m = m;
  out.c = SIZE_MAX;
  std::set<std::pair<std::size_t, std::vector<std::vector<Letter>>>> seen;
  ColumnMapSet s = initial_column_set(ds, m);
  for (;;) {
    std::vector<std::vector<Letter>> key;
    for (const auto& [f, j] : s.maps) key.push_back(f);
    if (!seen.emplace(ds.canonical_level(s.current_level), std::move(key)).second) break;
    if (seen.size() > kStateCap) fail(ErrorCode::BudgetExceeded, "column map sets did not revisit");
    for (const auto& [f, j] : s.maps) {
      std::size_t k = image_size(f);
      if (k < out.c || (k == out.c && out.witness.n == s.current_level && j < out.witness.j)) {
        out.c = k;
        out.witness = {m, s.current_level, j};
      }
    }
    s = advance(ds, s);
  }
  out.states = seen.size();
  return out;
}

NaiveColumnNumber naive_column_number(const DirectiveSequence& ds, ColumnMode mode) {
  if (mode == ColumnMode::Injectivized && !is_letter_injective(ds))
    return naive_column_number(injectivize(ds).sequence, ColumnMode::Raw);
  NaiveColumnNumber out;
  for (std::size_t m = 0; m < ds.prefix_size() + ds.period(); ++m) {
    out.levels.push_back(c_at(ds, m, ColumnMode::Raw));
    if (out.levels.back().c > out.value) {
      out.value = out.levels.back().c;
      out.witness = out.levels.back().witness;
    }
  }
  return out;
}

ColumnNumber column_number(const DirectiveSequence& ds, std::size_t depth) {
  PureBaseResult pb = pure_base(ds, depth);
  ColumnNumber out;
  out.h = pb.h;
  out.on_pure_base = naive_column_number(pb.pure);
  out.c = out.on_pure_base.value;
  return out;
}

}  // namespace sadic
