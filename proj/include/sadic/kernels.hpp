#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sadic/morphism.hpp"

// Data-parallel kernels. Each has a serial reference used by the tests and
// the benchmark; the default entry points pick the OpenMP version when built
// with it.
namespace sadic::kernels {

enum class Exec { Serial, Parallel };

bool openmp_enabled();
int max_threads();

// gcd of the k in (0, |u|) with u[k] == u[0]; 0 when there is none.
std::uint64_t return_gcd(std::span<const Letter> u, Exec exec = Exec::Parallel);

// least P in [1, max_period] with u[i] == u[i+P] for every valid i.
std::optional<std::size_t> smallest_period(std::span<const Letter> u, std::size_t max_period,
                                           Exec exec = Exec::Parallel);

// result[f * |inner| + g][x] = outer[f][inner[g][x]]
std::vector<std::vector<Letter>> compose_all(const std::vector<std::vector<Letter>>& outer,
                                             const std::vector<std::vector<Letter>>& inner,
                                             Exec exec = Exec::Parallel);

// starting positions of pattern in text, ascending
std::vector<std::size_t> occurrences(std::span<const Letter> text, std::span<const Letter> pattern,
                                     Exec exec = Exec::Parallel);

// sorted distinct factors of the given length
std::vector<Word> distinct_factors(std::span<const Letter> text, std::size_t len,
                                   Exec exec = Exec::Parallel);

}  // namespace sadic::kernels
