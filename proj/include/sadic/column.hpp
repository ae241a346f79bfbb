#pragma once

#include <map>
#include <vector>

#include "sadic/directive.hpp"

namespace sadic {

struct ColumnWitness {
  std::size_t m = 0, n = 0;
  BigInt j = 0;  // column index of composite(m, n)
};

// Deduplicated column maps of composite(base_level, current_level), each with
// its least column index.
struct ColumnMapSet {
  std::size_t base_level = 0;
  std::size_t current_level = 0;
  BigInt span = 1;  // p(base_level, current_level)
  std::map<std::vector<Letter>, BigInt> maps;

  std::size_t min_cardinality() const;
};

ColumnMapSet initial_column_set(const DirectiveSequence& ds, std::size_t m);
ColumnMapSet advance(const DirectiveSequence& ds, const ColumnMapSet& s);

// column J of composite(m, n) by mixed-radix digits, without expanding
ColumnMap column_map(const DirectiveSequence& ds, std::size_t m, std::size_t n, const BigInt& j);

enum class ColumnMode { Injectivized, Raw };

struct ColumnLevel {
  std::size_t m = 0;
  std::size_t c = 0;
  ColumnWitness witness;
  std::size_t states = 0;  // map-sets visited before the revisit
};

ColumnLevel c_at(const DirectiveSequence& ds, std::size_t m, ColumnMode mode = ColumnMode::Injectivized);

struct NaiveColumnNumber {
  std::size_t value = 0;
  ColumnWitness witness;
  std::vector<ColumnLevel> levels;
};

NaiveColumnNumber naive_column_number(const DirectiveSequence& ds,
                                      ColumnMode mode = ColumnMode::Injectivized);

struct ColumnNumber {
  std::size_t c = 0;
  std::uint64_t h = 1;
  NaiveColumnNumber on_pure_base;
};

ColumnNumber column_number(const DirectiveSequence& ds, std::size_t depth);

}  // namespace sadic
