#include "sadic/directive.hpp"

#include <algorithm>
#include <set>

#include "sadic/errors.hpp"

namespace sadic {

namespace {

void check_chain(const Morphism& outer, const Morphism& inner, const std::string& where) {
  if (!(inner.target() == outer.source()))
    fail(ErrorCode::AlphabetMismatch, "morphisms do not chain at " + where);
}

void check_size(const Morphism& m) {
  if (m.source().size() > DirectiveSequence::kMaxAlphabet ||
      m.target().size() > DirectiveSequence::kMaxAlphabet)
    fail(ErrorCode::InvalidSequence,
         "alphabet larger than " + std::to_string(DirectiveSequence::kMaxAlphabet) + " symbols");
}

// 0/1 pattern of the product
IncidenceMatrix bool_product(const IncidenceMatrix& x, const IncidenceMatrix& y) {
  IncidenceMatrix r(x.rows(), y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t k = 0; k < x.cols(); ++k)
      if (x.at(i, k))
        for (std::size_t j = 0; j < y.cols(); ++j)
          if (y.at(k, j)) r.at(i, j) = 1;
  return r;
}

}  // namespace

DirectiveSequence::DirectiveSequence(std::vector<Morphism> prefix, std::vector<Morphism> cycle)
    : prefix_(std::move(prefix)), cycle_(std::move(cycle)) {
  if (cycle_.empty()) fail(ErrorCode::InvalidSequence, "cycle must be non-empty");
  for (const auto& m : prefix_) check_size(m);
  for (const auto& m : cycle_) check_size(m);
  for (std::size_t i = 0; i < prefix_.size(); ++i) {
    const Morphism& next = i + 1 < prefix_.size() ? prefix_[i + 1] : cycle_.front();
    check_chain(prefix_[i], next, "level " + std::to_string(i));
  }
  for (std::size_t i = 0; i < cycle_.size(); ++i)
    check_chain(cycle_[i], cycle_[(i + 1) % cycle_.size()],
                "level " + std::to_string(prefix_.size() + i));
  if (cycle_product() < 2) fail(ErrorCode::InvalidSequence, "cycle length product must be at least 2");
}

const Morphism& DirectiveSequence::at(std::size_t n) const {
  if (n < prefix_.size()) return prefix_[n];
  return cycle_[(n - prefix_.size()) % cycle_.size()];
}

std::size_t DirectiveSequence::canonical_level(std::size_t n) const {
  if (n < prefix_.size()) return n;
  return prefix_.size() + (n - prefix_.size()) % cycle_.size();
}

BigInt DirectiveSequence::span_length(std::size_t m, std::size_t n) const {
  BigInt r = 1;
  for (std::size_t k = m; k < n; ++k) r *= length(k);
  return r;
}

BigInt DirectiveSequence::cycle_product() const {
  BigInt r = 1;
  for (const auto& m : cycle_) r *= m.length();
  return r;
}

std::vector<std::uint64_t> DirectiveSequence::tail_lengths(std::size_t n) const {
  std::set<std::uint64_t> s;
  for (std::size_t k = n; k < prefix_.size(); ++k) s.insert(prefix_[k].length());
  for (const auto& m : cycle_) s.insert(m.length());
  return {s.begin(), s.end()};
}

const Morphism& morphism_at(const DirectiveSequence& ds, std::size_t n) { return ds.at(n); }

Morphism composite(const DirectiveSequence& ds, std::size_t m, std::size_t n) {
  if (m >= n) fail(ErrorCode::InvalidArgument, "composite needs m < n");
  Morphism r = ds.at(m);
  for (std::size_t k = m + 1; k < n; ++k) r = compose(r, ds.at(k));
  return r;
}

DirectiveSequence telescope(const DirectiveSequence& ds, const CutSchedule& cuts) {
  if (cuts.repeating_gaps.empty()) fail(ErrorCode::BadCuts, "no repeating gaps");
  std::size_t last = 0;
  for (std::size_t c : cuts.initial_cuts) {
    if (c <= last) fail(ErrorCode::BadCuts, "cut points must be strictly increasing and positive");
    last = c;
  }
  std::size_t sum = 0;
  for (std::size_t g : cuts.repeating_gaps) {
    if (g == 0) fail(ErrorCode::BadCuts, "gaps must be positive");
    sum += g;
  }
  if (sum % ds.period() != 0)
    fail(ErrorCode::BadCuts, "gap sum " + std::to_string(sum) + " is not a multiple of the cycle length " +
                                 std::to_string(ds.period()));
  std::vector<std::size_t> points(cuts.initial_cuts);
  std::size_t boundary = last;
  while (boundary < ds.prefix_size()) {
    for (std::size_t g : cuts.repeating_gaps) points.push_back(points.empty() ? g : points.back() + g);
    boundary = points.back();
  }
  std::size_t prefix_blocks = points.size();
  for (std::size_t g : cuts.repeating_gaps) points.push_back(points.empty() ? g : points.back() + g);

  std::vector<Morphism> prefix, cycle;
  std::size_t prev = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    Morphism block = composite(ds, prev, points[i]);
    (i < prefix_blocks ? prefix : cycle).push_back(std::move(block));
    prev = points[i];
  }
  return DirectiveSequence(std::move(prefix), std::move(cycle));
}

SupernaturalNumber length_supernatural(const DirectiveSequence& ds) {
  SupernaturalNumber s;
  for (const auto& m : ds.prefix()) s.multiply(m.length());
  for (const auto& m : ds.cycle())
    for (auto [p, k] : factorize(m.length())) s.set_infinite(p);
  return s;
}

bool is_primitive(const DirectiveSequence& ds) {
  IncidenceMatrix m = incidence_matrix(ds.cycle().front());
  for (std::size_t i = 1; i < ds.period(); ++i)
    m = bool_product(m, incidence_matrix(ds.cycle()[i]));
  if (m.rows() != m.cols()) return false;
  return primitive_power(m).has_value();
}

TorsionVerdict is_torsion_free(const DirectiveSequence& ds) {
  TorsionVerdict v;
  std::set<std::uint64_t> cycle_primes, offending;
  for (const auto& m : ds.cycle())
    for (auto [p, k] : factorize(m.length())) cycle_primes.insert(p);
  for (const auto& m : ds.prefix())
    for (auto [p, k] : factorize(m.length()))
      if (!cycle_primes.count(p)) offending.insert(p);
  if (!offending.empty()) {
    v.failing = TorsionClause::PrimeSupport;
    v.offending_primes.assign(offending.begin(), offending.end());
    v.explanation = "prime " + std::to_string(v.offending_primes.front()) +
                    " divides a prefix length but no cycle length, so it divides only finitely many lengths";
    return v;
  }
  if (ds.cycle_product() < 2) {
    v.failing = TorsionClause::CycleProduct;
    v.explanation = "cycle length product is 1";
    return v;
  }
  if (!is_primitive(ds)) {
    v.failing = TorsionClause::NotPrimitive;
    v.explanation = "cycle composite is not primitive, minimality is not established";
    return v;
  }
  v.screen = aperiodicity_screen(ds);
  if (v.screen->periodic) {
    v.failing = TorsionClause::Periodic;
    v.explanation = "level-0 limit word prefix has period " + std::to_string(*v.screen->period);
    return v;
  }
  v.torsion_free = true;
  v.explanation = "every prime divides infinitely many lengths; primitive; aperiodicity not refuted";
  return v;
}

}  // namespace sadic
