#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sadic/arith.hpp"
#include "sadic/morphism.hpp"

namespace sadic {

// theta^(0), theta^(1), ... read as prefix then the cycle repeated forever.
// theta^(n) maps the level n+1 alphabet to words over the level n alphabet.
class DirectiveSequence {
 public:
  static constexpr std::size_t kMaxAlphabet = 64;

  DirectiveSequence(std::vector<Morphism> prefix, std::vector<Morphism> cycle);

  const std::vector<Morphism>& prefix() const { return prefix_; }
  const std::vector<Morphism>& cycle() const { return cycle_; }
  std::size_t prefix_size() const { return prefix_.size(); }
  std::size_t period() const { return cycle_.size(); }

  const Morphism& at(std::size_t n) const;
  // representative level with the same tail: n itself inside the prefix
  std::size_t canonical_level(std::size_t n) const;
  const Alphabet& alphabet(std::size_t n) const { return at(n).target(); }
  std::size_t length(std::size_t n) const { return at(n).length(); }
  // product of lengths over [m, n)
  BigInt span_length(std::size_t m, std::size_t n) const;
  BigInt p(std::size_t n) const { return span_length(0, n); }
  BigInt cycle_product() const;
  // distinct lengths q_N, N >= n
  std::vector<std::uint64_t> tail_lengths(std::size_t n) const;

  friend bool operator==(const DirectiveSequence&, const DirectiveSequence&) = default;

 private:
  std::vector<Morphism> prefix_, cycle_;
};

const Morphism& morphism_at(const DirectiveSequence& ds, std::size_t n);
Morphism composite(const DirectiveSequence& ds, std::size_t m, std::size_t n);

// Cut points initial_cuts, then repeat adding repeating_gaps in order.
struct CutSchedule {
  std::vector<std::size_t> initial_cuts;
  std::vector<std::size_t> repeating_gaps;
};
DirectiveSequence telescope(const DirectiveSequence& ds, const CutSchedule& cuts);

SupernaturalNumber length_supernatural(const DirectiveSequence& ds);

enum class TorsionClause { None, PrimeSupport, CycleProduct, NotPrimitive, Periodic };

struct AperiodicityScreen {
  bool periodic = false;
  std::optional<std::size_t> period;
  std::size_t prefix_length = 0;
  std::size_t max_period = 0;
  bool truncated = false;
};

struct TorsionVerdict {
  bool torsion_free = false;
  TorsionClause failing = TorsionClause::None;
  std::vector<std::uint64_t> offending_primes;
  std::optional<AperiodicityScreen> screen;
  std::string explanation;

  explicit operator bool() const { return torsion_free; }
  std::optional<std::uint64_t> offending_prime() const {
    if (offending_primes.empty()) return std::nullopt;
    return offending_primes.front();
  }
};

TorsionVerdict is_torsion_free(const DirectiveSequence& ds);
bool is_primitive(const DirectiveSequence& ds);
AperiodicityScreen aperiodicity_screen(const DirectiveSequence& ds);

}  // namespace sadic
