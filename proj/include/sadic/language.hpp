#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "sadic/directive.hpp"

namespace sadic {

Word supertile(const DirectiveSequence& ds, std::size_t n, Letter a);

struct PersistentLanguage {
  std::size_t level = 0;
  std::size_t max_len = 0;
  std::set<Word> words;
  bool stabilized = false;

  bool contains(const Word& w) const { return words.count(w) > 0; }
  std::vector<Word> of_length(std::size_t k) const;
};

PersistentLanguage persistent_words(const DirectiveSequence& ds, std::size_t level,
                                    std::size_t max_len);

// composite(level, level + telescope_step) sends letter to a word starting with it.
// level is always a tail level (>= prefix size) and telescope_step a multiple of
// the cycle length.
struct LimitWordSeed {
  std::size_t level = 0;
  Letter letter = 0;
  std::size_t telescope_step = 1;
  friend bool operator==(const LimitWordSeed&, const LimitWordSeed&) = default;
};

// every seed at the tail level serving `level`, ordered by (step, letter)
std::vector<LimitWordSeed> limit_word_seeds(const DirectiveSequence& ds, std::size_t level);
LimitWordSeed limit_word_seed(const DirectiveSequence& ds, std::size_t level);

// exactly min_len symbols of the one-sided limit word at `level`
Word limit_word_prefix(const DirectiveSequence& ds, std::size_t level, std::size_t min_len,
                       std::optional<LimitWordSeed> seed = std::nullopt);

// nonzero gcd; throws NoReturn
std::uint64_t return_gcd(const DirectiveSequence& ds, std::size_t level, std::size_t depth,
                         std::optional<LimitWordSeed> seed = std::nullopt);

// window u[-radius, radius) of a two-sided limit word; origin = radius
struct CentralWindow {
  Word word;
  std::size_t origin = 0;
  Letter left_seed = 0, right_seed = 0;
};
CentralWindow central_window(const DirectiveSequence& ds, std::size_t level, std::size_t radius);

// prefix (suffix) of length <= len of composite(to, from)(w), w over the level `from` alphabet
Word expand_prefix(const DirectiveSequence& ds, std::size_t to, std::size_t from, Word w,
                   std::size_t len);
Word expand_suffix(const DirectiveSequence& ds, std::size_t to, std::size_t from, Word w,
                   std::size_t len);

}  // namespace sadic
