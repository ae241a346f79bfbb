#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "sadic/directive.hpp"

namespace sadic {

struct ReportField {
  std::string key;
  nlohmann::json value;
  std::string provenance;  // exact | certified | empirical(depth=N)
};

struct AnalysisReport {
  std::vector<ReportField> fields;

  const ReportField& at(const std::string& key) const;
  nlohmann::json to_json() const;
  std::string to_text() const;
};

std::string empirical(std::size_t depth);

AnalysisReport analysis_report(const DirectiveSequence& ds, std::size_t depth);

}  // namespace sadic
