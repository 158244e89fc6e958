#include "weightlab/cli.hpp"

#include <string>

#include "CLI11.hpp"
#include "weightlab/errors.hpp"
#include "weightlab/report.hpp"
#include "weightlab/verify.hpp"

namespace weightlab {

namespace {

struct RunConfig {
  std::string a1 = "0", a2 = "0", a = "-1";
  std::string alpha, beta, gamma, z;
  std::string suite = "all";
  long K = 20;
  std::string format = "human";
  double eps = 0.0;
};

void emit(const Report& r, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.format == "json") {
    out << to_json(r).dump(2) << "\n";
    return;
  }
  out << render_text(r);
  for (const auto& d : r.diagnostics) err << "note: " << d << "\n";
}

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotUnitarizable:
    case ErrorCode::DivergentAtBoundary:
    case ErrorCode::GammaPole:
      return 1;
    default:
      return 2;
  }
}

int cmd_classify(const RunConfig& cfg, const Tolerance& tol, std::ostream& out, std::ostream& err) {
  Scalar a1 = parse_scalar(cfg.a1), a2 = parse_scalar(cfg.a2);
  SeriesLabel label = classify(a1, a2, tol);
  emit(classify_report(a1, a2, label), cfg, out, err);
  return label.unitarizable() ? 0 : 1;
}

int cmd_spectrum(const RunConfig& cfg, const Tolerance& tol, std::ostream& out, std::ostream& err) {
  ModuleSpec left(parse_scalar(cfg.a1), parse_scalar(cfg.a2), tol);
  SpectrumReport sr = full_spectrum(left, parse_scalar(cfg.a));
  emit(spectrum_report(sr), cfg, out, err);
  return 0;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  auto results = run_verify(cfg.suite, cfg.K);
  Report r;
  r.command = "verify";
  r.params = {{"K", double(cfg.K)}};
  bool all = true;
  for (const auto& v : results) {
    all &= v.passed;
    r.entries.push_back({v.suite, {{"passed", v.passed ? 1.0 : 0.0}}, "", {}});
    for (const auto& line : v.lines) r.diagnostics.push_back(v.suite + ": " + line);
  }
  if (cfg.format == "json") {
    emit(r, cfg, out, err);
  } else {
    for (const auto& v : results) {
      for (const auto& line : v.lines) out << "  " << line << "\n";
      out << v.suite << ": " << (v.passed ? "pass" : "FAIL") << "\n";
    }
  }
  return all ? 0 : 1;
}

int cmd_hyp2f1(const RunConfig& cfg, const Tolerance& tol, std::ostream& out, std::ostream& err) {
  Hyp2F1Params p{parse_scalar(cfg.alpha).value(), parse_scalar(cfg.beta).value(), parse_scalar(cfg.gamma).value()};
  Complex z = parse_scalar(cfg.z).value();
  emit(hyp2f1_report(p, z, hyp2f1(p, z, tol)), cfg, out, err);
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"weight modules of sl(2) and tensor-product spectra"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "human or json")->check(CLI::IsMember({"human", "json"}));
    sub->add_option("--eps", cfg.eps, "absolute tolerance (overrides WEIGHTLAB_EPS)")->check(CLI::PositiveNumber);
  };

  auto* classify_cmd = app.add_subcommand("classify", "unitarizability of N(a1, a2)");
  classify_cmd->add_option("--a1", cfg.a1)->required();
  classify_cmd->add_option("--a2", cfg.a2)->required();
  common(classify_cmd);

  auto* spectrum_cmd = app.add_subcommand("spectrum", "discrete spectrum of N(a1, a2) (x) N(a, 0)");
  spectrum_cmd->add_option("--a1", cfg.a1)->required();
  spectrum_cmd->add_option("--a2", cfg.a2)->required();
  spectrum_cmd->add_option("--a", cfg.a)->required();
  common(spectrum_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
  verify_cmd->add_option("--suite", cfg.suite)->check(CLI::IsMember(verify_suite_names()));
  verify_cmd->add_option("--K", cfg.K)->check(CLI::PositiveNumber);
  common(verify_cmd);

  auto* hyp_cmd = app.add_subcommand("hyp2f1", "Gauss hypergeometric function for |z| <= 1");
  hyp_cmd->add_option("--alpha", cfg.alpha)->required();
  hyp_cmd->add_option("--beta", cfg.beta)->required();
  hyp_cmd->add_option("--gamma", cfg.gamma)->required();
  hyp_cmd->add_option("--z", cfg.z)->required();
  common(hyp_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Tolerance tol = tolerance_from_env();
  if (cfg.eps > 0.0) tol.abs_eps = cfg.eps;

  try {
    if (*classify_cmd) return cmd_classify(cfg, tol, out, err);
    if (*spectrum_cmd) return cmd_spectrum(cfg, tol, out, err);
    if (*verify_cmd) return cmd_verify(cfg, out, err);
    return cmd_hyp2f1(cfg, tol, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.code());
  }
}

}  // namespace weightlab
