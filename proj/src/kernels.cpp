#include "sadic/kernels.hpp"

#include <algorithm>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sadic::kernels {

namespace {

constexpr std::size_t kGrain = 1 << 14;

bool go_parallel(Exec exec, std::size_t work) {
#ifdef _OPENMP
  return exec == Exec::Parallel && work >= kGrain;
#else
  (void)exec;
  (void)work;
  return false;
#endif
}

bool has_period(std::span<const Letter> u, std::size_t p) {
  for (std::size_t i = 0; i + p < u.size(); ++i)
    if (u[i] != u[i + p]) return false;
  return true;
}

}  // namespace

bool openmp_enabled() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::uint64_t return_gcd(std::span<const Letter> u, Exec exec) {
  if (u.empty()) return 0;
  const Letter a = u[0];
  const std::int64_t n = static_cast<std::int64_t>(u.size());
  std::uint64_t g = 0;
  if (!go_parallel(exec, u.size())) {
    for (std::int64_t k = 1; k < n; ++k)
      if (u[k] == a) {
        g = std::gcd(g, static_cast<std::uint64_t>(k));
        if (g == 1) break;
      }
    return g;
  }
  // Blocks so that a gcd of 1 stops the scan early, as in the serial loop.
  const std::int64_t block = static_cast<std::int64_t>(kGrain) * 4;
  for (std::int64_t lo = 1; lo < n && g != 1; lo += block) {
    const std::int64_t hi = std::min(n, lo + block);
#pragma omp parallel
    {
      std::uint64_t local = 0;
#pragma omp for schedule(static) nowait
      for (std::int64_t k = lo; k < hi; ++k)
        if (local != 1 && u[k] == a) local = std::gcd(local, static_cast<std::uint64_t>(k));
#pragma omp critical
      g = std::gcd(g, local);
    }
  }
  return g;
}

std::optional<std::size_t> smallest_period(std::span<const Letter> u, std::size_t max_period,
                                           Exec exec) {
  max_period = std::min(max_period, u.size() > 0 ? u.size() - 1 : 0);
  if (!go_parallel(exec, u.size() * max_period / 64)) {
    for (std::size_t p = 1; p <= max_period; ++p)
      if (has_period(u, p)) return p;
    return std::nullopt;
  }
  const std::int64_t m = static_cast<std::int64_t>(max_period);
  std::int64_t best = m + 1;
#pragma omp parallel for schedule(dynamic, 1) reduction(min : best)
  for (std::int64_t p = 1; p <= m; ++p)
    if (p < best && has_period(u, static_cast<std::size_t>(p))) best = p;
  if (best > m) return std::nullopt;
  return static_cast<std::size_t>(best);
}

std::vector<std::vector<Letter>> compose_all(const std::vector<std::vector<Letter>>& outer,
                                             const std::vector<std::vector<Letter>>& inner,
                                             Exec exec) {
  const std::size_t ni = inner.size();
  const std::size_t width = ni ? inner[0].size() : 0;
  std::vector<std::vector<Letter>> out(outer.size() * ni, std::vector<Letter>(width));
  const std::int64_t total = static_cast<std::int64_t>(out.size());
  auto body = [&](std::int64_t t) {
    const auto& f = outer[static_cast<std::size_t>(t) / ni];
    const auto& g = inner[static_cast<std::size_t>(t) % ni];
    auto& r = out[static_cast<std::size_t>(t)];
    for (std::size_t x = 0; x < width; ++x) r[x] = f[g[x]];
  };
  if (!go_parallel(exec, out.size() * width)) {
    for (std::int64_t t = 0; t < total; ++t) body(t);
    return out;
  }
#pragma omp parallel for schedule(static)
  for (std::int64_t t = 0; t < total; ++t) body(t);
  return out;
}

std::vector<std::size_t> occurrences(std::span<const Letter> text, std::span<const Letter> pattern,
                                     Exec exec) {
  std::vector<std::size_t> hits;
  if (pattern.empty() || pattern.size() > text.size()) return hits;
  const std::int64_t last = static_cast<std::int64_t>(text.size() - pattern.size());
  auto match = [&](std::int64_t i) {
    return std::equal(pattern.begin(), pattern.end(), text.begin() + i);
  };
  if (!go_parallel(exec, text.size())) {
    for (std::int64_t i = 0; i <= last; ++i)
      if (match(i)) hits.push_back(static_cast<std::size_t>(i));
    return hits;
  }
  std::vector<char> flag(static_cast<std::size_t>(last + 1), 0);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i <= last; ++i) flag[static_cast<std::size_t>(i)] = match(i);
  for (std::size_t i = 0; i < flag.size(); ++i)
    if (flag[i]) hits.push_back(i);
  return hits;
}

std::vector<Word> distinct_factors(std::span<const Letter> text, std::size_t len, Exec exec) {
  std::vector<Word> out;
  if (len == 0 || len > text.size()) return out;
  const std::int64_t count = static_cast<std::int64_t>(text.size() - len + 1);
  if (!go_parallel(exec, text.size() * len)) {
    for (std::int64_t i = 0; i < count; ++i) out.emplace_back(text.begin() + i, text.begin() + i + len);
  } else {
    int nt = max_threads();
    std::vector<std::vector<Word>> parts(static_cast<std::size_t>(nt));
#pragma omp parallel
    {
#ifdef _OPENMP
      auto& mine = parts[static_cast<std::size_t>(omp_get_thread_num())];
#else
      auto& mine = parts[0];
#endif
#pragma omp for schedule(static)
      for (std::int64_t i = 0; i < count; ++i) mine.emplace_back(text.begin() + i, text.begin() + i + len);
      std::sort(mine.begin(), mine.end());
      mine.erase(std::unique(mine.begin(), mine.end()), mine.end());
    }
    for (auto& p : parts) out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace sadic::kernels
