#include "sadic/report.hpp"

#include <sstream>

#include "sadic/column.hpp"
#include "sadic/errors.hpp"
#include "sadic/height.hpp"
#include "sadic/injectivize.hpp"
#include "sadic/spectrum.hpp"

namespace sadic {

namespace {

using nlohmann::json;

json unavailable(const std::string& why) { return json{{"unavailable", why}}; }

std::string sequence_summary(const DirectiveSequence& ds) {
  std::string s = "prefix [";
  for (std::size_t i = 0; i < ds.prefix_size(); ++i) s += (i ? "; " : "") + describe(ds.prefix()[i]);
  s += "] cycle [";
  for (std::size_t i = 0; i < ds.period(); ++i) s += (i ? "; " : "") + describe(ds.cycle()[i]);
  return s + "]";
}

}  // namespace

std::string empirical(std::size_t depth) { return "empirical(depth=" + std::to_string(depth) + ")"; }

const ReportField& AnalysisReport::at(const std::string& key) const {
  for (const auto& f : fields)
    if (f.key == key) return f;
  fail(ErrorCode::InvalidArgument, "no report field '" + key + "'");
}

json AnalysisReport::to_json() const {
  json j = json::object();
  for (const auto& f : fields) j[f.key] = {{"value", f.value}, {"provenance", f.provenance}};
  return j;
}

std::string AnalysisReport::to_text() const {
  std::ostringstream out;
  for (const auto& f : fields) {
    out << f.key << ": ";
    if (f.value.is_string())
      out << f.value.get<std::string>();
    else
      out << f.value.dump();
    out << "  [" << f.provenance << "]\n";
  }
  return out.str();
}

AnalysisReport analysis_report(const DirectiveSequence& ds, std::size_t depth) {
  AnalysisReport r;
  auto add = [&](std::string key, json value, std::string prov) {
    r.fields.push_back({std::move(key), std::move(value), std::move(prov)});
  };

  const TorsionVerdict tv = is_torsion_free(ds);
  {
    json v = {{"torsion_free", tv.torsion_free}, {"explanation", tv.explanation}};
    std::string prov = "exact";
    if (tv.screen) {
      v["aperiodicity_screen"] = tv.screen->periodic ? "periodic" : "aperiodicity not refuted";
      prov = empirical(tv.screen->prefix_length);
    }
    add("torsion_free", v, prov);
    add("primes_offending", tv.offending_primes, "exact");
  }

  const Injectivization inj = injectivize(ds);
  add("injectivization",
      {{"letter_injective_input", is_letter_injective(ds)},
       {"sequence", sequence_summary(inj.sequence)},
       {"quotient_steps", inj.steps.size()},
       {"hypothesis_verified", inj.hypothesis_verified}},
      "exact");

  std::optional<CombHeight> comb;
  try {
    comb = comb_height(inj.sequence, depth);
  } catch (const Error& e) {
    add("h_table", unavailable(e.what()), "exact");
    add("h_comb", unavailable(e.what()), "exact");
  }
  bool seeds_disagree = false;
  if (comb) {
    json table = json::array();
    bool all_certified = true, top_certified = false;
    for (const auto& row : comb->table) {
      table.push_back({{"level", row.level}, {"h", row.h}, {"certified", !row.estimate_only()}});
      all_certified &= !row.estimate_only();
      if (row.h == comb->h_comb && !row.estimate_only()) top_certified = true;
      seeds_disagree |= row.seeds_disagree;
    }
    add("h_table", table, all_certified ? "certified" : empirical(depth));
    add("h_comb", comb->h_comb, top_certified ? "certified" : empirical(depth));
  }

  std::optional<HeightResult> hr;
  try {
    hr = height(inj.sequence, depth);
  } catch (const Error& e) {
    add("height_certified", unavailable(e.what()), "exact");
  }
  if (hr) {
    json classes = json::array();
    const auto& alpha = inj.sequence.alphabet(hr->certificate.level);
    for (const auto& cls : hr->certificate.classes()) {
      json names = json::array();
      for (Letter a : cls) names.push_back(alpha.symbol(a));
      classes.push_back(names);
    }
    add("height_certified",
        {{"certified", true}, {"level", hr->certificate.level}, {"classes", classes}},
        "certified");
  }

  const SupernaturalNumber odo = length_supernatural(ds);
  add("odometer_primes", {{"supernatural", odo.to_string()}, {"infinite", odo.infinite_primes()}}, "exact");

  std::optional<std::uint64_t> h_value;
  if (!tv.torsion_free) {
    add("height", unavailable("not torsion-free: " + tv.explanation), "exact");
  } else if (hr) {
    h_value = hr->h;
    MEFDescriptor d{odo, hr->h, hr->certificate};
    add("height",
        {{"h", hr->h},
         {"divides_cycle_lengths_minus_one", hr->divides_lengths_minus_one},
         {"mef", d.to_string()},
         {"mef_invariants", mef_invariants_hold(ds, d)}},
        "certified");
  } else {
    add("height", unavailable("no certificate"), "exact");
  }

  std::optional<NaiveColumnNumber> naive;
  try {
    naive = naive_column_number(inj.sequence, ColumnMode::Raw);
    add("c_naive",
        {{"c", naive->value},
         {"witness", {{"m", naive->witness.m}, {"n", naive->witness.n}, {"j", naive->witness.j.str()}}}},
        "exact");
  } catch (const Error& e) {
    add("c_naive", unavailable(e.what()), "exact");
  }

  std::optional<std::size_t> c_true;
  if (tv.torsion_free && hr) {
    try {
      c_true = column_number(ds, depth).c;
      add("c_true", *c_true, "certified");
    } catch (const Error& e) {
      add("c_true", unavailable(e.what()), "exact");
    }
  } else {
    add("c_true", unavailable("needs a torsion-free sequence with certified height"), "exact");
  }

  if (c_true) {
    auto sc = classification_for(*c_true);
    add("classification", {{"tag", to_string(sc.tag)}, {"c", sc.c}, {"conclusion", sc.conclusion}}, "exact");
    add("assumptions", sc.assumptions, "exact");
  } else {
    add("classification", unavailable("column number unavailable"), "exact");
    add("assumptions", classification_for(1).assumptions, "exact");
  }

  json obs = json::array();
  if (h_value && naive)
    obs.push_back("h " + std::string(naive->value % *h_value == 0 ? "divides" : "does not divide") +
                  " c_naive (" + std::to_string(*h_value) + ", " + std::to_string(naive->value) + ")");
  if (seeds_disagree) obs.push_back("limit word seeds disagree on some level height");
  if (!inj.steps.empty())
    obs.push_back("input is not letter-injective; " + std::to_string(inj.steps.size()) + " quotient steps");
  obs.push_back(classification_for(1).conjecture);
  add("observations", obs, "exact");
  return r;
}

}  // namespace sadic
