#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "weightlab/hypergeometric.hpp"
#include "weightlab/spectrum.hpp"
#include "weightlab/unitarity.hpp"

namespace weightlab {

// Real values serialise as numbers, complex ones as [re, im].
struct ReportEntry {
  std::string kind;
  std::map<std::string, Complex> params;
  std::string generator_kind;
  std::vector<Complex> coefficients_head;

  bool operator==(const ReportEntry&) const = default;
};

struct Report {
  std::string command;
  std::map<std::string, Complex> params;
  std::vector<ReportEntry> entries;
  std::vector<std::string> diagnostics;

  bool operator==(const Report&) const = default;
};

inline constexpr long kCoefficientsHead = 10;

nlohmann::json to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);

Report classify_report(const Scalar& a1, const Scalar& a2, const SeriesLabel& label);
Report spectrum_report(const SpectrumReport& sr);
Report hyp2f1_report(const Hyp2F1Params& p, Complex z, Complex value);

std::string render_text(const Report& r);

}  // namespace weightlab
