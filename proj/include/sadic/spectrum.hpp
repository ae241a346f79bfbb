#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sadic/directive.hpp"
#include "sadic/height.hpp"

namespace sadic {

// odometer x Z/hZ
struct MEFDescriptor {
  SupernaturalNumber odometer;
  std::uint64_t height = 1;
  HeightCertificate certificate;
  std::string to_string() const;
};

MEFDescriptor mef(const DirectiveSequence& ds, std::size_t depth);
bool mef_invariants_hold(const DirectiveSequence& ds, const MEFDescriptor& d);

struct CobhamResult {
  bool obstruction = false;  // X1 cannot be a factor of X2
  std::optional<std::uint64_t> witness;
  bool reverse_obstruction = false;
  std::optional<std::uint64_t> reverse_witness;
};

std::vector<std::uint64_t> length_primes(const DirectiveSequence& ds);
CobhamResult cobham_obstruction(const DirectiveSequence& ds1, const DirectiveSequence& ds2);

enum class SpectralTag { AlmostAutomorphic_c1, MixedOrDiscontinuous_cGt1 };
std::string_view to_string(SpectralTag tag);

struct SpectralClassification {
  SpectralTag tag = SpectralTag::AlmostAutomorphic_c1;
  std::size_t c = 1;
  std::vector<std::string> assumptions;
  std::string conclusion;
  std::string conjecture;
};

SpectralClassification classification_for(std::size_t c);
SpectralClassification classify(const DirectiveSequence& ds, std::size_t depth);

}  // namespace sadic
