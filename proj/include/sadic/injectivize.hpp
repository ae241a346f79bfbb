#pragma once

#include <utility>
#include <vector>

#include "sadic/directive.hpp"

namespace sadic {

struct QuotientStep {
  std::size_t level = 0;   // n: partition lives on the level-n alphabet
  Morphism quotiented;     // the map that was factored, tau_{n-1} o theta^(n-1)
  Morphism partition;      // tau_n, length 1
  Morphism new_morphism;   // injective factor; quotiented = new_morphism o partition
};

struct Injectivization {
  DirectiveSequence sequence;
  std::vector<QuotientStep> steps;
  bool hypothesis_verified = false;  // input passed the torsion-free test
};

// (tau, injective) with m = injective o tau; classes named by their least member
std::pair<Morphism, Morphism> quotient_of(const Morphism& m);

Injectivization injectivize(const DirectiveSequence& ds);
bool is_letter_injective(const DirectiveSequence& ds);

}  // namespace sadic
