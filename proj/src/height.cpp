#include "sadic/height.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "sadic/errors.hpp"
#include "sadic/injectivize.hpp"
#include "sadic/kernels.hpp"

namespace sadic {

namespace {

DirectiveSequence injective_form(const DirectiveSequence& ds) {
  if (is_letter_injective(ds)) return ds;
  return injectivize(ds).sequence;
}

std::uint64_t strip_primes(std::uint64_t g, const std::vector<std::uint64_t>& lengths) {
  for (auto q : lengths)
    for (auto [p, k] : factorize(q))
      while (g % p == 0) g /= p;
  return g;
}

bool coprime_to_all(std::uint64_t d, const std::vector<std::uint64_t>& lengths) {
  return std::all_of(lengths.begin(), lengths.end(), [d](auto q) { return std::gcd(d, q) == 1; });
}

std::size_t scan_levels(const DirectiveSequence& ds) { return ds.prefix_size() + ds.period(); }

LevelHeight level_height(const DirectiveSequence& inj, std::size_t n, std::size_t depth) {
  LevelHeight out;
  out.level = n;
  out.depth = depth;
  const auto lengths = inj.tail_lengths(n);
  for (const auto& seed : limit_word_seeds(inj, n)) {
    SeedHeight s{seed, return_gcd(inj, n, depth, seed), 1};
    s.h = strip_primes(s.gcd, lengths);
    out.seeds.push_back(s);
  }
  if (out.seeds.empty()) fail(ErrorCode::NoSeed, "no limit word at level " + std::to_string(n));
  for (const auto& s : out.seeds) {
    out.h = std::max(out.h, s.h);
    if (s.h != out.seeds.front().h) out.seeds_disagree = true;
  }
  out.certificate = partition_certificate(inj, n, out.h);
  return out;
}

CombHeight comb_height_injective(const DirectiveSequence& inj, std::size_t depth) {
  if (!is_primitive(inj)) fail(ErrorCode::NotPrimitive, "directive sequence is not primitive");
  CombHeight out;
  for (std::size_t n = 0; n < scan_levels(inj); ++n) {
    out.table.push_back(level_height(inj, n, depth));
    out.h_comb = std::max(out.h_comb, out.table.back().h);
  }
  return out;
}

}  // namespace

std::vector<std::vector<Letter>> HeightCertificate::classes() const {
  std::vector<std::vector<Letter>> c(h);
  for (Letter a = 0; a < class_of.size(); ++a) c[class_of[a]].push_back(a);
  return c;
}

std::optional<std::uint64_t> two_word_period(const DirectiveSequence& ds, std::size_t level) {
  const std::size_t n = ds.alphabet(level).size();
  auto two = persistent_words(ds, level, 2).of_length(2);
  std::vector<std::vector<Letter>> adj(n);
  for (const Word& w : two) {
    adj[w[0]].push_back(w[1]);
    adj[w[1]].push_back(w[0]);
  }
  std::vector<std::int64_t> lvl(n, 0);
  std::vector<char> done(n, 0);
  std::deque<Letter> queue{0};
  done[0] = 1;
  while (!queue.empty()) {
    Letter a = queue.front();
    queue.pop_front();
    for (const Word& w : two) {
      if (w[0] == a && !done[w[1]]) {
        lvl[w[1]] = lvl[a] + 1;
        done[w[1]] = 1;
        queue.push_back(w[1]);
      } else if (w[1] == a && !done[w[0]]) {
        lvl[w[0]] = lvl[a] - 1;
        done[w[0]] = 1;
        queue.push_back(w[0]);
      }
    }
  }
  if (std::find(done.begin(), done.end(), 0) != done.end()) return std::nullopt;
  std::uint64_t p = 0;
  for (const Word& w : two) {
    std::int64_t defect = lvl[w[0]] + 1 - lvl[w[1]];
    p = std::gcd(p, static_cast<std::uint64_t>(defect < 0 ? -defect : defect));
  }
  return p;
}

std::optional<HeightCertificate> partition_certificate(const DirectiveSequence& ds,
                                                       std::size_t level, std::uint64_t d) {
  if (d == 0) fail(ErrorCode::InvalidArgument, "certificate divisor must be positive");
  if (!coprime_to_all(d, ds.tail_lengths(level))) return std::nullopt;
  const std::size_t n = ds.alphabet(level).size();
  auto two = persistent_words(ds, level, 2).of_length(2);
  HeightCertificate cert;
  cert.level = level;
  cert.h = d;
  cert.evidence = two;
  if (d == 1) {
    cert.class_of.assign(n, 0);
    return cert;
  }
  auto period = two_word_period(ds, level);
  if (!period || (*period != 0 && *period % d != 0)) return std::nullopt;
  // relabel from scratch: BFS labels are only defined up to the period
  std::vector<std::int64_t> lvl(n, -1);
  lvl[0] = 0;
  bool grew = true;
  while (grew) {
    grew = false;
    for (const Word& w : two) {
      const auto sd = static_cast<std::int64_t>(d);
      if (lvl[w[0]] >= 0 && lvl[w[1]] < 0) {
        lvl[w[1]] = (lvl[w[0]] + 1) % sd;
        grew = true;
      } else if (lvl[w[1]] >= 0 && lvl[w[0]] < 0) {
        lvl[w[0]] = (lvl[w[1]] + sd - 1) % sd;
        grew = true;
      }
    }
  }
  cert.class_of.resize(n);
  std::vector<char> used(d, 0);
  for (std::size_t a = 0; a < n; ++a) {
    cert.class_of[a] = static_cast<std::uint32_t>(lvl[a]);
    used[static_cast<std::size_t>(lvl[a])] = 1;
  }
  if (std::find(used.begin(), used.end(), 0) != used.end()) return std::nullopt;
  if (!verify_certificate(ds, cert)) return std::nullopt;
  return cert;
}

bool verify_certificate(const DirectiveSequence& ds, const HeightCertificate& cert) {
  if (cert.h == 0 || cert.class_of.size() != ds.alphabet(cert.level).size()) return false;
  if (!coprime_to_all(cert.h, ds.tail_lengths(cert.level))) return false;
  for (auto c : cert.class_of)
    if (c >= cert.h) return false;
  for (const Word& w : cert.evidence)
    if (cert.class_of[w[1]] != (cert.class_of[w[0]] + 1) % cert.h) return false;
  return true;
}

std::size_t default_depth(const DirectiveSequence& ds) {
  constexpr std::size_t kMin = 100000, kCap = std::size_t{1} << 22;
  BigInt want = 64 * ds.p(scan_levels(ds));
  if (want > kCap) return kCap;
  return std::max(kMin, want.convert_to<std::size_t>());
}

LevelHeight comb_height_at(const DirectiveSequence& ds, std::size_t n, std::size_t depth) {
  DirectiveSequence inj = injective_form(ds);
  if (!is_primitive(inj)) fail(ErrorCode::NotPrimitive, "directive sequence is not primitive");
  return level_height(inj, n, depth);
}

CombHeight comb_height(const DirectiveSequence& ds, std::size_t depth) {
  return comb_height_injective(injective_form(ds), depth);
}

HeightResult height(const DirectiveSequence& ds, std::size_t depth) {
  HeightResult out;
  out.torsion_free = is_torsion_free(ds).torsion_free;
  DirectiveSequence inj = injective_form(ds);
  out.comb = comb_height_injective(inj, depth);
  out.h = out.comb.h_comb;
  std::optional<HeightCertificate> cert;
  for (const auto& row : out.comb.table)
    if (row.certificate && row.certificate->h == out.h) {
      cert = row.certificate;
      break;
    }
  for (std::size_t n = 0; !cert && n < scan_levels(inj); ++n) cert = partition_certificate(inj, n, out.h);
  if (!cert)
    fail(ErrorCode::CertificateNotFound,
         "no alphabet partition certifies height " + std::to_string(out.h) + " on the scanned levels");
  out.certificate = *cert;
  if (out.h > 1)
    for (const auto& m : inj.cycle())
      if ((m.length() - 1) % out.h != 0) out.divides_lengths_minus_one = false;
  return out;
}

Word decode(const Coding& coding, const Word& w) {
  Word out;
  for (Letter b : w) out.insert(out.end(), coding.words.at(b).begin(), coding.words.at(b).end());
  return out;
}

PureBaseResult pure_base(const DirectiveSequence& ds, std::size_t depth) {
  if (!is_torsion_free(ds).torsion_free)
    fail(ErrorCode::NotTorsionFree, "pure base needs a torsion-free directive sequence");
  DirectiveSequence inj = injective_form(ds);
  const std::uint64_t h = height(inj, depth).h;
  std::vector<Coding> codings;
  std::vector<Morphism> prefix, cycle;

  if (h == 1) {
    for (std::size_t n = 0; n < scan_levels(inj); ++n) {
      Coding c{n, inj.alphabet(n), {}};
      for (Letter a = 0; a < c.coded.size(); ++a) c.words.push_back({a});
      codings.push_back(std::move(c));
    }
    prefix = inj.prefix();
    cycle = inj.cycle();
  } else {
    if (depth < h) fail(ErrorCode::NotClosed, "depth is smaller than the height");
    const LimitWordSeed seed = limit_word_seed(inj, inj.prefix_size());
    const std::size_t m = seed.level, top = m + seed.telescope_step;
    const std::size_t len = depth - depth % h;
    std::vector<std::set<Word>> words(top);
    for (std::size_t n = 0; n < top; ++n) {
      Word u = limit_word_prefix(inj, n, len, seed);
      for (std::size_t k = 0; k + h <= u.size(); k += h) words[n].emplace(u.begin() + k, u.begin() + k + h);
    }
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t n = top; n-- > 0;) {
        const auto& above = words[n + 1 == top ? m : n + 1];
        std::vector<Word> fresh;
        for (const Word& w : above) {
          Word img = inj.at(n).apply(w);
          for (std::size_t k = 0; k < img.size(); k += h) {
            Word block(img.begin() + k, img.begin() + k + h);
            if (!words[n].count(block)) fresh.push_back(std::move(block));
          }
        }
        for (auto& b : fresh) changed |= words[n].insert(std::move(b)).second;
      }
    }
    for (std::size_t n = 0; n < top; ++n) {
      Coding c;
      c.level = n;
      c.words.assign(words[n].begin(), words[n].end());
      std::vector<std::string> names;
      for (const Word& w : c.words) {
        std::string name;
        for (std::size_t i = 0; i < w.size(); ++i) {
          if (i) name += '.';
          name += inj.alphabet(n).symbol(w[i]);
        }
        names.push_back(std::move(name));
      }
      c.coded = Alphabet(std::move(names));
      codings.push_back(std::move(c));
    }
    for (std::size_t n = 0; n < top; ++n) {
      const Coding& below = codings[n];
      const Coding& above = codings[n + 1 == top ? m : n + 1];
      std::map<Word, Letter> index;
      for (Letter b = 0; b < below.words.size(); ++b) index.emplace(below.words[b], b);
      std::vector<Word> images;
      for (const Word& w : above.words) {
        Word img = inj.at(n).apply(w), coded;
        for (std::size_t k = 0; k < img.size(); k += h) {
          auto it = index.find(Word(img.begin() + k, img.begin() + k + h));
          if (it == index.end()) fail(ErrorCode::NotClosed, "coded word set is not closed");
          coded.push_back(it->second);
        }
        images.push_back(std::move(coded));
      }
      Morphism bar(above.coded, below.coded, inj.length(n), std::move(images));
      (n < m ? prefix : cycle).push_back(std::move(bar));
    }
  }

  PureBaseResult out{DirectiveSequence(std::move(prefix), std::move(cycle)), inj, std::move(codings), h};
  out.torsion_free = is_torsion_free(out.pure).torsion_free;
  out.trivial_height = comb_height(out.pure, depth).h_comb == 1;
  out.alphabet_bound = true;
  for (const auto& c : out.codings) {
    BigInt bound = pow(BigInt(inj.alphabet(c.level).size()), static_cast<unsigned>(h));
    if (BigInt(c.words.size()) > bound) out.alphabet_bound = false;
  }
  return out;
}

}  // namespace sadic
