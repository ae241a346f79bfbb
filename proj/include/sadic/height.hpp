#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sadic/directive.hpp"
#include "sadic/language.hpp"

namespace sadic {

struct HeightCertificate {
  std::size_t level = 0;
  std::uint64_t h = 1;
  std::vector<std::uint32_t> class_of;  // per letter of the level alphabet
  std::vector<Word> evidence;           // persistent 2-words
  bool persistent_approximate = true;

  std::vector<std::vector<Letter>> classes() const;
};

// BFS labelling of the persistent 2-word graph; gcd of the label defects.
// 0 when every edge is consistent (no finite constraint).
std::optional<std::uint64_t> two_word_period(const DirectiveSequence& ds, std::size_t level);
std::optional<HeightCertificate> partition_certificate(const DirectiveSequence& ds,
                                                       std::size_t level, std::uint64_t d);
// advances-by-one check on the evidence, plus coprimality with the tail lengths
bool verify_certificate(const DirectiveSequence& ds, const HeightCertificate& cert);

struct SeedHeight {
  LimitWordSeed seed;
  std::uint64_t gcd = 0;
  std::uint64_t h = 1;
};

struct LevelHeight {
  std::size_t level = 0;
  std::uint64_t h = 1;
  std::size_t depth = 0;
  std::vector<SeedHeight> seeds;
  bool seeds_disagree = false;
  std::optional<HeightCertificate> certificate;

  bool estimate_only() const { return !certificate.has_value(); }
};

struct CombHeight {
  std::uint64_t h_comb = 1;
  std::vector<LevelHeight> table;
};

struct HeightResult {
  std::uint64_t h = 1;
  HeightCertificate certificate;
  bool torsion_free = false;  // false: combinatorial value only
  bool divides_lengths_minus_one = true;
  CombHeight comb;
};

std::size_t default_depth(const DirectiveSequence& ds);

// All three run on the injectivization of ds.
LevelHeight comb_height_at(const DirectiveSequence& ds, std::size_t n, std::size_t depth);
CombHeight comb_height(const DirectiveSequence& ds, std::size_t depth);
HeightResult height(const DirectiveSequence& ds, std::size_t depth);

struct Coding {
  std::size_t level = 0;
  Alphabet coded;
  std::vector<Word> words;  // words[b] is the length-h word over the level alphabet coded by b
};

struct PureBaseResult {
  DirectiveSequence pure;
  DirectiveSequence source;  // the injectivization the codings refer to
  std::vector<Coding> codings;
  std::uint64_t h = 1;
  bool trivial_height = false;
  bool torsion_free = false;
  bool alphabet_bound = false;
};

PureBaseResult pure_base(const DirectiveSequence& ds, std::size_t depth);

// letterwise decoding of a word over the level-n coded alphabet
Word decode(const Coding& coding, const Word& w);

}  // namespace sadic
