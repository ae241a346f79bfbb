#include "sadic/spectrum.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "sadic/column.hpp"
#include "sadic/errors.hpp"

namespace sadic {

namespace {

void require_torsion_free(const DirectiveSequence& ds) {
  auto v = is_torsion_free(ds);
  if (!v.torsion_free) fail(ErrorCode::NotTorsionFree, v.explanation);
}

}  // namespace

std::string MEFDescriptor::to_string() const {
  std::string s = "odometer " + odometer.to_string();
  if (height > 1) s += " x Z/" + std::to_string(height) + "Z";
  return s;
}

MEFDescriptor mef(const DirectiveSequence& ds, std::size_t depth) {
  require_torsion_free(ds);
  HeightResult h = height(ds, depth);
  MEFDescriptor d{length_supernatural(ds), h.h, h.certificate};
  if (!mef_invariants_hold(ds, d))
    fail(ErrorCode::CertificateNotFound, "height " + std::to_string(d.height) +
                                             " violates coprimality or divisibility of lengths minus one");
  return d;
}

bool mef_invariants_hold(const DirectiveSequence& ds, const MEFDescriptor& d) {
  for (auto p : d.odometer.infinite_primes())
    if (std::gcd(p, d.height) != 1) return false;
  if (d.height > 1)
    for (const auto& m : ds.cycle())
      if ((m.length() - 1) % d.height != 0) return false;
  return true;
}

std::vector<std::uint64_t> length_primes(const DirectiveSequence& ds) {
  std::set<std::uint64_t> s;
  for (auto q : ds.tail_lengths(0))
    for (auto [p, k] : factorize(q)) s.insert(p);
  return {s.begin(), s.end()};
}

CobhamResult cobham_obstruction(const DirectiveSequence& ds1, const DirectiveSequence& ds2) {
  require_torsion_free(ds1);
  require_torsion_free(ds2);
  auto p1 = length_primes(ds1), p2 = length_primes(ds2);
  auto missing = [](const std::vector<std::uint64_t>& from, const std::vector<std::uint64_t>& in)
      -> std::optional<std::uint64_t> {
    for (auto p : from)
      if (!std::binary_search(in.begin(), in.end(), p)) return p;
    return std::nullopt;
  };
  CobhamResult r;
  r.witness = missing(p1, p2);
  r.obstruction = r.witness.has_value();
  r.reverse_witness = missing(p2, p1);
  r.reverse_obstruction = r.reverse_witness.has_value();
  return r;
}

std::string_view to_string(SpectralTag tag) {
  switch (tag) {
    case SpectralTag::AlmostAutomorphic_c1: return "AlmostAutomorphic_c1";
    case SpectralTag::MixedOrDiscontinuous_cGt1: return "MixedOrDiscontinuous_cGt1";
  }
  return "?";
}

SpectralClassification classification_for(std::size_t c) {
  SpectralClassification s;
  s.c = c;
  s.assumptions = {
      "regularity of the directive sequence: not verified",
      "unique ergodicity: not verified",
      "aperiodicity: finite screen only, a period was not found",
  };
  if (c == 1) {
    s.tag = SpectralTag::AlmostAutomorphic_c1;
    s.conclusion = "conditional: almost automorphic, discrete spectrum with continuous eigenfunctions";
  } else {
    s.tag = SpectralTag::MixedOrDiscontinuous_cGt1;
    s.conclusion = "conditional: mixed spectrum or some eigenfunction is discontinuous";
  }
  s.conjecture = "open: c > 1 forces mixed spectrum (not computed, not assumed)";
  return s;
}

SpectralClassification classify(const DirectiveSequence& ds, std::size_t depth) {
  require_torsion_free(ds);
  return classification_for(column_number(ds, depth).c);
}

}  // namespace sadic
