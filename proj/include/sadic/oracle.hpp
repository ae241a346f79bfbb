#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "sadic/directive.hpp"

// Brute-force counterparts of the fast paths. Deliberately naive and capped.
namespace sadic::oracle {

constexpr std::size_t kMaxAlphabet = 8;
constexpr std::size_t kMaxLevels = 5;
constexpr std::size_t kMaxSymbols = 1000000;

// |{ block j of composite(m, n)(a) : a in A_n }| by full expansion
std::vector<std::size_t> empirical_column_cardinalities(const DirectiveSequence& ds, std::size_t m,
                                                        std::size_t n);
std::size_t empirical_column_cardinality(const DirectiveSequence& ds, std::size_t m, std::size_t n,
                                         std::uint64_t j);

// d -> { position mod d : word occurs at position in the limit word prefix }
std::map<std::uint64_t, std::set<std::uint64_t>> occurrence_residues(
    const DirectiveSequence& ds, std::size_t level, const Word& word, std::size_t depth,
    const std::vector<std::uint64_t>& candidates);

// centred representations of the window: pairs (k, preimage) where the origin sits
// at offset k of its tile and the fully covered tiles come from a persistent
// level+1 word that extends consistently over the partial edge tiles
std::size_t desubstitution_count(const DirectiveSequence& ds, std::size_t level, const Word& window,
                                 std::size_t anchor);

// (p_n, r) pairs, coherent; distinct central supertiles of the first level found
// inside supertiles of the last level at the given position
std::size_t fibre_count(const DirectiveSequence& ds,
                        const std::vector<std::pair<BigInt, BigInt>>& residues, std::size_t depth);

}  // namespace sadic::oracle
