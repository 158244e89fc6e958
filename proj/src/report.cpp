#include "weightlab/report.hpp"

#include <iomanip>
#include <sstream>

#include "weightlab/errors.hpp"

namespace weightlab {

using nlohmann::json;

namespace {

json encode(Complex z) {
  if (z.imag() == 0.0) return z.real();
  return json::array({z.real(), z.imag()});
}

Complex decode(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2) return {j[0].get<double>(), j[1].get<double>()};
  throw Error(ErrorCode::ParseError, "expected a number or [re, im]");
}

json encode(const std::map<std::string, Complex>& m) {
  json out = json::object();
  for (const auto& [k, v] : m) out[k] = encode(v);
  return out;
}

std::map<std::string, Complex> decode_map(const json& j) {
  std::map<std::string, Complex> out;
  for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = decode(it.value());
  return out;
}

std::string format(Complex z) {
  std::ostringstream os;
  os << std::setprecision(12) << z.real();
  if (z.imag() != 0.0) os << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

}  // namespace

json to_json(const Report& r) {
  json entries = json::array();
  for (const auto& e : r.entries) {
    json head = json::array();
    for (Complex c : e.coefficients_head) head.push_back(encode(c));
    entries.push_back({{"kind", e.kind},
                       {"params", encode(e.params)},
                       {"generator", {{"kind", e.generator_kind}, {"coefficients_head", head}}}});
  }
  return {{"command", r.command}, {"params", encode(r.params)}, {"entries", entries}, {"diagnostics", r.diagnostics}};
}

Report report_from_json(const json& j) {
  try {
    Report r;
    r.command = j.at("command").get<std::string>();
    r.params = decode_map(j.at("params"));
    for (const auto& e : j.at("entries")) {
      ReportEntry entry;
      entry.kind = e.at("kind").get<std::string>();
      entry.params = decode_map(e.at("params"));
      entry.generator_kind = e.at("generator").at("kind").get<std::string>();
      for (const auto& c : e.at("generator").at("coefficients_head")) entry.coefficients_head.push_back(decode(c));
      r.entries.push_back(std::move(entry));
    }
    r.diagnostics = j.at("diagnostics").get<std::vector<std::string>>();
    return r;
  } catch (const json::exception& ex) {
    throw Error(ErrorCode::ParseError, ex.what());
  }
}

Report classify_report(const Scalar& a1, const Scalar& a2, const SeriesLabel& label) {
  Report r;
  r.command = "classify";
  r.params = {{"a1", a1.value()}, {"a2", a2.value()}};
  ReportEntry e;
  e.kind = series_name(label.kind);
  switch (label.kind) {
    case Series::Principal:
      e.params = {{"x", label.x}, {"y", label.y}};
      break;
    case Series::Complementary:
      e.params = {{"b1", label.b1.value()}, {"b2", label.b2.value()}};
      break;
    case Series::HighestWeight:
    case Series::LowestWeight:
      e.params = {{"lambda", label.lambda.value()}};
      break;
    default:
      break;
  }
  r.entries.push_back(e);
  if (label.boundary) r.diagnostics.push_back("decision within tolerance of a branch boundary");
  return r;
}

Report spectrum_report(const SpectrumReport& sr) {
  Report r;
  r.command = "spectrum";
  r.params = {{"a1", sr.a1.value()}, {"a2", sr.a2.value()}, {"a", sr.a.value()}};
  TensorSpec spec(ModuleSpec(sr.a1, sr.a2), sr.a);
  for (const auto& d : sr.entries) {
    ReportEntry e;
    e.kind = entry_kind_name(d.kind);
    e.params = {{"b1", d.b1.value()}, {"b2", d.b2.value()}, {"n0", double(d.n0)}};
    if (d.kind == EntryKind::Complementary) e.params["xi"] = d.xi;
    e.generator_kind = generator_kind_name(d.generator);
    for (const auto& c : generator_coefficients(spec, d, kCoefficientsHead)) e.coefficients_head.push_back(c.value());
    r.entries.push_back(std::move(e));
  }
  r.diagnostics = sr.diagnostics;
  return r;
}

Report hyp2f1_report(const Hyp2F1Params& p, Complex z, Complex value) {
  Report r;
  r.command = "hyp2f1";
  r.params = {{"alpha", p.alpha}, {"beta", p.beta}, {"gamma", p.gamma}, {"z", z}};
  ReportEntry e;
  e.kind = "value";
  e.params = {{"value", value}};
  r.entries.push_back(e);
  return r;
}

std::string render_text(const Report& r) {
  std::ostringstream os;
  os << r.command;
  for (const auto& [k, v] : r.params) os << " " << k << "=" << format(v);
  os << "\n";
  for (const auto& e : r.entries) {
    os << e.kind;
    for (const auto& [k, v] : e.params) os << " " << k << "=" << format(v);
    if (!e.generator_kind.empty()) {
      os << " generator=" << e.generator_kind << " [";
      for (std::size_t i = 0; i < e.coefficients_head.size(); ++i) {
        os << (i ? ", " : "") << format(e.coefficients_head[i]);
      }
      os << "]";
    }
    os << "\n";
  }
  if (r.entries.empty()) os << "(no entries)\n";
  return os.str();
}

}  // namespace weightlab
