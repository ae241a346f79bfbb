#include "sadic/arith.hpp"

#include <algorithm>

namespace sadic {

std::map<std::uint64_t, std::uint64_t> factorize(std::uint64_t n) {
  std::map<std::uint64_t, std::uint64_t> f;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      ++f[p];
      n /= p;
    }
  if (n > 1) ++f[n];
  return f;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> d;
  for (std::uint64_t k = 1; k * k <= n; ++k)
    if (n % k == 0) {
      d.push_back(k);
      if (k * k != n) d.push_back(n / k);
    }
  std::sort(d.begin(), d.end());
  return d;
}

void SupernaturalNumber::multiply(std::uint64_t n) {
  for (auto [p, k] : factorize(n))
    if (!infinite_.count(p)) finite_[p] += k;
}

void SupernaturalNumber::set_infinite(std::uint64_t p) {
  finite_.erase(p);
  infinite_.insert(p);
}

std::optional<std::uint64_t> SupernaturalNumber::exponent(std::uint64_t p) const {
  if (infinite_.count(p)) return std::nullopt;
  auto it = finite_.find(p);
  return it == finite_.end() ? 0 : it->second;
}

bool SupernaturalNumber::is_infinite(std::uint64_t p) const { return infinite_.count(p) > 0; }

std::vector<std::uint64_t> SupernaturalNumber::support() const {
  std::set<std::uint64_t> s(infinite_);
  for (auto [p, k] : finite_) s.insert(p);
  return {s.begin(), s.end()};
}

std::vector<std::uint64_t> SupernaturalNumber::infinite_primes() const {
  return {infinite_.begin(), infinite_.end()};
}

std::string SupernaturalNumber::to_string() const {
  std::string out = "{";
  bool first = true;
  for (auto p : support()) {
    if (!first) out += ", ";
    first = false;
    out += std::to_string(p) + "^";
    auto e = exponent(p);
    out += e ? std::to_string(*e) : std::string("inf");
  }
  return out + "}";
}

}  // namespace sadic
