#include "sadic/injectivize.hpp"

#include <map>

#include "sadic/errors.hpp"

namespace sadic {

std::pair<Morphism, Morphism> quotient_of(const Morphism& m) {
  const Alphabet& src = m.source();
  std::map<Word, Letter> cls;
  std::vector<Letter> rep;  // class -> least member
  std::vector<Word> tau(src.size());
  for (Letter a = 0; a < src.size(); ++a) {
    auto im = m.image(a);
    Word key(im.begin(), im.end());
    auto [it, fresh] = cls.emplace(key, static_cast<Letter>(rep.size()));
    if (fresh) rep.push_back(a);
    tau[a] = {it->second};
  }
  std::vector<std::string> names;
  std::vector<Word> images;
  for (Letter r : rep) {
    names.push_back(src.symbol(r));
    auto im = m.image(r);
    images.emplace_back(im.begin(), im.end());
  }
  Alphabet quotient = rep.size() == src.size() ? src : Alphabet(names);
  return {Morphism(src, quotient, 1, std::move(tau)),
          Morphism(quotient, m.target(), m.length(), std::move(images))};
}

bool is_letter_injective(const DirectiveSequence& ds) {
  for (const auto& m : ds.prefix())
    if (!is_injective_on_letters(m)) return false;
  for (const auto& m : ds.cycle())
    if (!is_injective_on_letters(m)) return false;
  return true;
}

Injectivization injectivize(const DirectiveSequence& ds) {
  std::vector<Morphism> out;
  std::vector<QuotientStep> steps;
  // state at index k: (cycle position, tau_k images) for k >= prefix size
  std::map<std::pair<std::size_t, Word>, std::size_t> seen;
  Morphism tau = Morphism::identity(ds.alphabet(0));
  std::size_t cut;
  for (std::size_t k = 0;; ++k) {
    if (k >= ds.prefix_size()) {
      auto [it, fresh] = seen.emplace(std::pair(ds.canonical_level(k), tau.flat()), k);
      if (!fresh) {
        cut = it->second;
        std::vector<Morphism> prefix(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(cut));
        std::vector<Morphism> cycle(out.begin() + static_cast<std::ptrdiff_t>(cut), out.end());
        Injectivization r{DirectiveSequence(std::move(prefix), std::move(cycle)), std::move(steps),
                          false};
        r.hypothesis_verified = is_torsion_free(ds).torsion_free;
        return r;
      }
    }
    Morphism eta = compose(tau, ds.at(k));
    auto [next_tau, hat] = quotient_of(eta);
    if (next_tau.target().size() != next_tau.source().size())
      steps.push_back({k + 1, eta, next_tau, hat});
    out.push_back(std::move(hat));
    tau = std::move(next_tau);
  }
}

}  // namespace sadic
