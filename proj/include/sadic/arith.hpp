#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sadic {

using BigInt = boost::multiprecision::cpp_int;

// prime -> multiplicity
std::map<std::uint64_t, std::uint64_t> factorize(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);  // ascending

// prime -> exponent, nullopt meaning infinity
class SupernaturalNumber {
 public:
  SupernaturalNumber() = default;

  void multiply(std::uint64_t n);
  void set_infinite(std::uint64_t p);

  std::optional<std::uint64_t> exponent(std::uint64_t p) const;  // nullopt = infinite
  bool is_infinite(std::uint64_t p) const;
  std::vector<std::uint64_t> support() const;
  std::vector<std::uint64_t> infinite_primes() const;
  std::string to_string() const;

  friend bool operator==(const SupernaturalNumber&, const SupernaturalNumber&) = default;

 private:
  std::map<std::uint64_t, std::uint64_t> finite_;
  std::set<std::uint64_t> infinite_;
};

}  // namespace sadic
