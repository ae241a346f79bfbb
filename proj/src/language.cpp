#include "sadic/language.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "sadic/errors.hpp"
#include "sadic/kernels.hpp"

namespace sadic {

namespace {

constexpr std::size_t kTransferCap = 10000;

std::size_t blocks_needed(std::size_t len, const BigInt& span) {
  if (span >= len) return 1;
  BigInt q = (BigInt(len) + span - 1) / span;
  return q.convert_to<std::size_t>();
}

void add_factors(const Word& w, std::size_t max_len, std::set<Word>& out) {
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t k = 1; k <= max_len && i + k <= w.size(); ++k)
      out.emplace(w.begin() + i, w.begin() + i + k);
}

std::set<Word> transfer(const Morphism& m, const std::set<Word>& words, std::size_t max_len) {
  std::set<Word> out;
  for (const Word& w : words) add_factors(m.apply(w), max_len, out);
  return out;
}

std::set<Word> letters(std::size_t n) {
  std::set<Word> s;
  for (Letter a = 0; a < n; ++a) s.insert({a});
  return s;
}

std::set<Word> intersect(const std::set<Word>& x, const std::set<Word>& y) {
  std::set<Word> r;
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::inserter(r, r.end()));
  return r;
}

// first (or last) letter map of composite(m, m + c)
std::vector<Letter> end_letter_map(const DirectiveSequence& ds, std::size_t m, std::size_t c,
                                   bool last) {
  const std::size_t n = ds.alphabet(m + c).size();
  std::vector<Letter> f(n);
  for (Letter a = 0; a < n; ++a) {
    Letter x = a;
    for (std::size_t k = m + c; k-- > m;) {
      const Morphism& th = ds.at(k);
      x = th.at(x, last ? th.length() - 1 : 0);
    }
    f[a] = x;
  }
  return f;
}

// minimal j >= 1 with f^j(a) = a
std::optional<std::size_t> return_time(const std::vector<Letter>& f, Letter a) {
  Letter x = a;
  for (std::size_t j = 1; j <= f.size(); ++j) {
    x = f[x];
    if (x == a) return j;
  }
  return std::nullopt;
}

}  // namespace

std::vector<Word> PersistentLanguage::of_length(std::size_t k) const {
  std::vector<Word> out;
  for (const Word& w : words)
    if (w.size() == k) out.push_back(w);
  return out;
}

Word supertile(const DirectiveSequence& ds, std::size_t n, Letter a) {
  if (a >= ds.alphabet(n).size()) fail(ErrorCode::UnknownSymbol, "letter index out of range");
  Word w{a};
  for (std::size_t k = n; k-- > 0;) w = ds.at(k).apply(w);
  return w;
}

Word expand_prefix(const DirectiveSequence& ds, std::size_t to, std::size_t from, Word w,
                   std::size_t len) {
  for (std::size_t k = from; k-- > to;) {
    std::size_t need = blocks_needed(len, ds.span_length(to, k + 1));
    if (w.size() > need) w.resize(need);
    w = ds.at(k).apply(w);
  }
  if (w.size() > len) w.resize(len);
  return w;
}

Word expand_suffix(const DirectiveSequence& ds, std::size_t to, std::size_t from, Word w,
                   std::size_t len) {
  for (std::size_t k = from; k-- > to;) {
    std::size_t need = blocks_needed(len, ds.span_length(to, k + 1));
    if (w.size() > need) w.erase(w.begin(), w.end() - static_cast<std::ptrdiff_t>(need));
    w = ds.at(k).apply(w);
  }
  if (w.size() > len) w.erase(w.begin(), w.end() - static_cast<std::ptrdiff_t>(len));
  return w;
}

PersistentLanguage persistent_words(const DirectiveSequence& ds, std::size_t level,
                                    std::size_t max_len) {
  if (max_len == 0) fail(ErrorCode::InvalidArgument, "max_len must be at least 1");
  PersistentLanguage out;
  out.level = level;
  out.max_len = max_len;
  out.stabilized = true;
  const std::size_t c = ds.period();
  const std::size_t t0 = std::max(level, ds.prefix_size());
  bool first = true;
  for (std::size_t s = 0; s < c; ++s) {
    const std::size_t base = t0 + s;
    std::map<std::set<Word>, std::size_t> seen;
    std::vector<std::set<Word>> history;
    std::set<Word> cur = letters(ds.alphabet(base).size());
    std::size_t start = 0;
    bool found = false;
    for (std::size_t it = 0; it < kTransferCap; ++it) {
      auto [pos, fresh] = seen.emplace(cur, history.size());
      if (!fresh) {
        start = pos->second;
        found = true;
        break;
      }
      history.push_back(cur);
      std::set<Word> next = std::move(cur);
      for (std::size_t k = base + c; k-- > base;) next = transfer(ds.at(k), next, max_len);
      cur = std::move(next);
    }
    if (!found) {
      out.stabilized = false;
      start = history.size() - 1;
    }
    for (std::size_t i = start; i < history.size(); ++i) {
      std::set<Word> w = history[i];
      for (std::size_t k = base; k-- > level;) w = transfer(ds.at(k), w, max_len);
      out.words = first ? std::move(w) : intersect(out.words, w);
      first = false;
    }
  }
  return out;
}

std::vector<LimitWordSeed> limit_word_seeds(const DirectiveSequence& ds, std::size_t level) {
  const std::size_t m = std::max(level, ds.prefix_size());
  const std::size_t c = ds.period();
  auto f = end_letter_map(ds, m, c, false);
  std::vector<LimitWordSeed> seeds;
  for (Letter a = 0; a < f.size(); ++a)
    if (auto j = return_time(f, a)) seeds.push_back({m, a, *j * c});
  std::sort(seeds.begin(), seeds.end(), [](const auto& x, const auto& y) {
    return std::pair(x.telescope_step, x.letter) < std::pair(y.telescope_step, y.letter);
  });
  return seeds;
}

LimitWordSeed limit_word_seed(const DirectiveSequence& ds, std::size_t level) {
  auto seeds = limit_word_seeds(ds, level);
  if (seeds.empty()) fail(ErrorCode::NoSeed, "no periodic first letter at level " + std::to_string(level));
  return seeds.front();
}

Word limit_word_prefix(const DirectiveSequence& ds, std::size_t level, std::size_t min_len,
                       std::optional<LimitWordSeed> seed) {
  LimitWordSeed s = seed ? *seed : limit_word_seed(ds, level);
  const std::size_t m = s.level, t = s.telescope_step;
  if (m < ds.prefix_size() || t == 0 || t % ds.period() != 0)
    fail(ErrorCode::InvalidArgument, "seed is not at a tail level");
  if (min_len == 0) return {};
  std::size_t lvl = level;
  if (lvl > m) lvl = m + (lvl - m) % t;
  // the tower at lvl is read off u^(m) through [lvl, m) or [lvl, m + t)
  const std::size_t top = lvl <= m ? m : m + t;
  const std::size_t need = blocks_needed(min_len, ds.span_length(lvl, top));
  Word w{s.letter};
  while (w.size() < need) {
    Word next = expand_prefix(ds, m, m + t, w, need);
    if (next.size() <= w.size()) fail(ErrorCode::NoSeed, "limit word does not grow");
    w = std::move(next);
  }
  w.resize(need);
  return expand_prefix(ds, lvl, top, std::move(w), min_len);
}

std::uint64_t return_gcd(const DirectiveSequence& ds, std::size_t level, std::size_t depth,
                         std::optional<LimitWordSeed> seed) {
  Word u = limit_word_prefix(ds, level, depth, seed);
  std::uint64_t g = kernels::return_gcd(u);
  if (g == 0)
    fail(ErrorCode::NoReturn, "first letter does not return within depth " + std::to_string(depth));
  return g;
}

CentralWindow central_window(const DirectiveSequence& ds, std::size_t level, std::size_t radius) {
  const std::size_t m = std::max(level, ds.prefix_size());
  const std::size_t c = ds.period();
  auto f = end_letter_map(ds, m, c, false);
  auto g = end_letter_map(ds, m, c, true);
  auto two = persistent_words(ds, m, 2).of_length(2);
  struct Cand {
    std::size_t j;
    Letter a, b;
  };
  std::optional<Cand> best;
  for (const Word& w : two) {
    Letter b = w[0], a = w[1];
    auto jb = return_time(g, b), ja = return_time(f, a);
    if (!jb || !ja) continue;
    Cand cand{std::lcm(*jb, *ja), a, b};
    if (!best || std::tuple(cand.j, cand.a, cand.b) < std::tuple(best->j, best->a, best->b)) best = cand;
  }
  if (!best) fail(ErrorCode::NoSeed, "no two-sided seed at level " + std::to_string(m));
  const std::size_t t = best->j * c;
  const std::size_t need = blocks_needed(std::max<std::size_t>(radius, 1), ds.span_length(level, m));
  Word left{best->b}, right{best->a};
  while (left.size() < need || right.size() < need) {
    left = expand_suffix(ds, m, m + t, left, need);
    right = expand_prefix(ds, m, m + t, right, need);
  }
  CentralWindow out;
  out.left_seed = best->b;
  out.right_seed = best->a;
  left = expand_suffix(ds, level, m, left, radius);
  right = expand_prefix(ds, level, m, right, radius);
  out.word = std::move(left);
  out.word.insert(out.word.end(), right.begin(), right.end());
  out.origin = radius;
  return out;
}

AperiodicityScreen aperiodicity_screen(const DirectiveSequence& ds) {
  constexpr std::size_t kCap = std::size_t{1} << 20;
  AperiodicityScreen s;
  BigInt p2 = ds.p(2), p3 = ds.p(3);
  BigInt want = std::max<BigInt>(4 * p3, BigInt(4096));
  s.truncated = want > kCap;
  s.prefix_length = s.truncated ? kCap : want.convert_to<std::size_t>();
  BigInt maxp = std::min<BigInt>(p2, BigInt(s.prefix_length / 2));
  s.max_period = maxp.convert_to<std::size_t>();
  Word u = limit_word_prefix(ds, 0, s.prefix_length);
  s.period = kernels::smallest_period(u, s.max_period);
  s.periodic = s.period.has_value();
  return s;
}

}  // namespace sadic
