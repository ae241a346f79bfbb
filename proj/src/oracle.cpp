#include "sadic/oracle.hpp"

#include <functional>

#include "sadic/errors.hpp"
#include "sadic/kernels.hpp"
#include "sadic/language.hpp"

namespace sadic::oracle {

namespace {

void check_alphabet(const Alphabet& a) {
  if (a.size() > kMaxAlphabet)
    fail(ErrorCode::BudgetExceeded, "oracle alphabet cap is " + std::to_string(kMaxAlphabet));
}

void check_symbols(const BigInt& n, std::size_t cap = kMaxSymbols) {
  if (n > cap) fail(ErrorCode::BudgetExceeded, "oracle expansion exceeds " + std::to_string(cap) + " symbols");
}

}  // namespace

std::vector<std::size_t> empirical_column_cardinalities(const DirectiveSequence& ds, std::size_t m,
                                                        std::size_t n) {
  if (m > n) fail(ErrorCode::InvalidArgument, "need m <= n");
  if (n - m > kMaxLevels) fail(ErrorCode::BudgetExceeded, "oracle level cap exceeded");
  const Alphabet& top = ds.alphabet(n);
  check_alphabet(top);
  const BigInt span = ds.span_length(m, n);
  check_symbols(span * top.size());
  std::vector<Word> expanded;
  for (Letter a = 0; a < top.size(); ++a) {
    Word w{a};
    for (std::size_t k = n; k-- > m;) w = ds.at(k).apply(w);
    expanded.push_back(std::move(w));
  }
  std::vector<std::size_t> out(span.convert_to<std::size_t>());
  for (std::size_t j = 0; j < out.size(); ++j) {
    std::set<Letter> seen;
    for (const Word& w : expanded) seen.insert(w[j]);
    out[j] = seen.size();
  }
  return out;
}

std::size_t empirical_column_cardinality(const DirectiveSequence& ds, std::size_t m, std::size_t n,
                                         std::uint64_t j) {
  if (m <= n && j >= ds.span_length(m, n)) fail(ErrorCode::InvalidArgument, "column index out of range");
  return empirical_column_cardinalities(ds, m, n)[j];
}

std::map<std::uint64_t, std::set<std::uint64_t>> occurrence_residues(
    const DirectiveSequence& ds, std::size_t level, const Word& word, std::size_t depth,
    const std::vector<std::uint64_t>& candidates) {
  check_symbols(depth);
  Word u = limit_word_prefix(ds, level, depth);
  auto hits = kernels::occurrences(u, word);
  if (hits.empty()) fail(ErrorCode::NoOccurrence, "word does not occur within depth " + std::to_string(depth));
  std::map<std::uint64_t, std::set<std::uint64_t>> out;
  for (auto d : candidates) {
    if (d == 0) fail(ErrorCode::InvalidArgument, "candidate modulus must be positive");
    auto& s = out[d];
    for (auto pos : hits) s.insert(pos % d);
  }
  return out;
}

std::size_t desubstitution_count(const DirectiveSequence& ds, std::size_t level, const Word& window,
                                 std::size_t anchor) {
  if (anchor > window.size()) fail(ErrorCode::InvalidArgument, "anchor outside the window");
  if (window.empty()) fail(ErrorCode::InvalidArgument, "empty window");
  const Morphism& th = ds.at(level);
  check_alphabet(th.source());
  const auto q = static_cast<std::ptrdiff_t>(th.length());
  const auto width = static_cast<std::ptrdiff_t>(window.size());
  const std::size_t tiles_max = window.size() / th.length() + 2;
  const PersistentLanguage lang = persistent_words(ds, level + 1, tiles_max);

  const auto a_hi = static_cast<std::ptrdiff_t>(std::min(anchor, window.size() - 1));
  const std::ptrdiff_t a_lo = anchor > 0 ? static_cast<std::ptrdiff_t>(anchor) - 1 : 0;
  std::set<std::pair<std::ptrdiff_t, Word>> reps;
  for (std::ptrdiff_t k = 0; k < q; ++k) {
    std::ptrdiff_t start = static_cast<std::ptrdiff_t>(anchor) - k;
    while (start > 0) start -= q;
    std::vector<std::ptrdiff_t> tiles;
    for (std::ptrdiff_t s = start; s < width; s += q) tiles.push_back(s);
    if (tiles.empty()) tiles.push_back(start);
    auto fits = [&](Letter b, std::ptrdiff_t s) {
      auto im = th.image(b);
      for (std::ptrdiff_t i = 0; i < q; ++i) {
        std::ptrdiff_t p = s + i;
        if (p >= 0 && p < width && im[static_cast<std::size_t>(i)] != window[static_cast<std::size_t>(p)])
          return false;
      }
      return true;
    };
    Word v;
    std::function<void(std::size_t)> dfs = [&](std::size_t t) {
      if (t == tiles.size()) {
        // Project onto the tiles touching the two cells next to the origin.
        Word centre;
        for (std::size_t i = 0; i < tiles.size(); ++i)
          if (tiles[i] <= a_hi && tiles[i] + q > a_lo) centre.push_back(v[i]);
        reps.emplace(k, std::move(centre));
        return;
      }
      for (Letter b = 0; b < th.source().size(); ++b) {
        if (!fits(b, tiles[t])) continue;
        v.push_back(b);
        if (lang.contains(v)) dfs(t + 1);
        v.pop_back();
      }
    };
    dfs(0);
  }
  if (reps.empty()) fail(ErrorCode::WindowNotFound, "window admits no centred representation");
  return reps.size();
}

std::size_t fibre_count(const DirectiveSequence& ds,
                        const std::vector<std::pair<BigInt, BigInt>>& residues, std::size_t depth) {
  if (residues.empty()) fail(ErrorCode::IncoherentResidues, "no residues given");
  std::vector<std::size_t> levels;
  std::size_t next = 0;
  for (const auto& [mod, r] : residues) {
    std::size_t n = next;
    while (ds.p(n) < mod && n < next + 64) ++n;
    if (ds.p(n) != mod)
      fail(ErrorCode::IncoherentResidues, "modulus " + mod.str() + " is not a partial length product");
    if (r < 0 || r >= mod) fail(ErrorCode::IncoherentResidues, "residue out of range");
    if (!levels.empty()) {
      const BigInt& prev_mod = residues[levels.size() - 1].first;
      if (r % prev_mod != residues[levels.size() - 1].second)
        fail(ErrorCode::IncoherentResidues, "residue does not reduce to the previous one");
    }
    levels.push_back(n);
    next = n + 1;
  }
  const std::size_t lo = levels.front(), hi = levels.back();
  const Alphabet& top = ds.alphabet(hi);
  check_alphabet(top);
  check_symbols(ds.p(hi) * top.size(), std::min(depth, kMaxSymbols));
  const std::size_t plo = ds.p(lo).convert_to<std::size_t>();
  const std::size_t block = (residues.back().second / ds.p(lo)).convert_to<std::size_t>();
  std::set<Word> central;
  for (Letter a = 0; a < top.size(); ++a) {
    Word w = supertile(ds, hi, a);
    central.emplace(w.begin() + static_cast<std::ptrdiff_t>(block * plo),
                    w.begin() + static_cast<std::ptrdiff_t>((block + 1) * plo));
  }
  return central.size();
}

}  // namespace sadic::oracle
