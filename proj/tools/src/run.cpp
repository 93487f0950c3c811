#include "circlepoly/cli/run.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "circlepoly/circlepoly.hpp"
#include "circlepoly/cli/text_format.hpp"

namespace circlepoly::cli {

using json = nlohmann::ordered_json;

namespace {

json complex_pair(Complex z) { return json::array({z.real(), z.imag()}); }

json complex_pairs(std::span<const Complex> zs) {
  json out = json::array();
  for (const auto& z : zs) out.push_back(complex_pair(z));
  return out;
}

json error_object(const Error& e) {
  json out{{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
  if (const auto* partial = dynamic_cast<const PartialSumNotZeroFree*>(&e)) {
    out["roots"] = complex_pairs(partial->roots());
  }
  return out;
}

json config_echo(const RunConfig& config) {
  json out{{"function", config.function}, {"N", config.degrees}, {"a", config.a}, {"eps", config.eps}};
  out["samples"] = config.samples ? json(*config.samples) : json(nullptr);
  out["root_tol"] = config.root_tol ? json(*config.root_tol) : json(nullptr);
  out["vanish_tol"] = config.vanish_tol;
  return out;
}

json report_record(const Approximant& appr, const ErrorReport& r) {
  json rec{
      {"N", r.N},
      {"n", r.n},
      {"q", appr.q},
      {"m", appr.m},
      {"status", r.passed() ? "pass" : "verification_failure"},
      {"sup_error", r.sup_error},
      {"bound", r.bound},
      {"bound_ratio", r.bound_ratio},
      {"bound_checked", r.bound_checked},
      {"bound_ok", r.bound_ok},
      {"max_circle_deviation", r.max_circle_deviation},
      {"root_tol", r.root_tol},
      {"roots_ok", r.roots_ok},
      {"vanishing_order_ok", r.vanishing_order_ok},
      {"first_bad", r.first_bad ? json(*r.first_bad) : json(nullptr)},
      {"fraction_residual", r.fraction_residual},
      {"fraction_ok", r.fraction_ok},
      {"samples_used", r.samples_used},
      {"M0", r.M0},
      {"M0_reduced_radius", appr.m0_reduced_radius},
      {"M1", r.M1},
  };
  rec["certificate"] = json{
      {"estimated", r.certificate.estimated},
      {"p_sup", r.certificate.p_sup},
      {"tail_sup", r.certificate.tail_sup},
      {"P_lower", r.certificate.P_lower},
      {"p_derivative_sup", r.certificate.p_derivative_sup},
      {"tail_derivative_sup", r.certificate.tail_derivative_sup},
  };
  rec["P"] = complex_pairs(appr.P.coeffs());
  return rec;
}

void append_csv_row(std::string& csv, std::size_t N, double x, double y, std::optional<double> z = {}) {
  csv += std::to_string(N);
  csv += ',';
  csv += format_double(x);
  csv += ',';
  csv += format_double(y);
  if (z) {
    csv += ',';
    csv += format_double(*z);
  }
  csv += '\n';
}

}  // namespace

void validate(const RunConfig& config) {
  auto reject = [](const std::string& why) { throw Error(ErrorCode::InvalidArgument, why); };
  if (!(config.a > 0.0 && config.a < 1.0)) reject("a must lie in (0, 1)");
  if (!(config.eps > 0.0 && config.eps < 1.0 - config.a)) reject("eps must lie in (0, 1 - a)");
  if (config.degrees.empty()) reject("at least one degree N is required");
  for (std::size_t N : config.degrees) {
    if (N < 2) reject("every N must be at least 2");
  }
  if (config.samples && *config.samples < 256) reject("samples must be at least 256");
  if (config.root_tol && !(*config.root_tol > 0.0)) reject("root tolerance must be positive");
  if (!(config.vanish_tol > 0.0)) reject("vanishing tolerance must be positive");
  if (config.csv && !config.out) reject("--csv needs --out");
}

RunOutcome run(const RunConfig& config) {
  RunOutcome outcome;
  json& report = outcome.report;
  report["config"] = config_echo(config);

  std::optional<FunctionSpec> f;
  try {
    validate(config);
    f = parse_spec(config.function);
  } catch (const Error& e) {
    report["records"] = json::array();
    report["summary"] = json{{"status", "config_error"},
                             {"error", error_object(e)},
                             {"exit_code", kExitConstructionFailure}};
    outcome.exit_code = kExitConstructionFailure;
    return outcome;
  }

  if (config.csv) {
    outcome.error_csv = "N,angle,abs_error\n";
    outcome.roots_csv = "N,re,im,abs_deviation\n";
  }

  bool construction_failed = false;
  bool verification_failed = false;
  std::vector<ErrorReport> measured;
  json records = json::array();

  for (std::size_t N : config.degrees) {
    std::optional<Approximant> appr;
    try {
      appr = construct(*f, N);
    } catch (const Error& e) {
      construction_failed = true;
      records.push_back(json{{"N", N}, {"status", "construction_failure"}, {"error", error_object(e)}});
      continue;
    }

    VerifyOptions options;
    options.a = config.a;
    options.eps = config.eps;
    options.samples = config.samples.value_or(0);
    options.root_tol = config.root_tol.value_or(0.0);
    options.vanish_tol = config.vanish_tol;
    try {
      const ErrorReport r = verify(*appr, *f, options);
      if (!r.passed()) verification_failed = true;
      measured.push_back(r);
      records.push_back(report_record(*appr, r));

      if (config.csv) {
        for (const auto& s : error_profile(*appr, *f, config.a, r.samples_used)) {
          append_csv_row(outcome.error_csv, N, s.angle, s.abs_error);
        }
        for (const auto& z : roots_aberth(appr->P).roots) {
          append_csv_row(outcome.roots_csv, N, z.real(), z.imag(), std::abs(std::abs(z) - 1.0));
        }
      }
    } catch (const Error& e) {
      verification_failed = true;
      records.push_back(json{{"N", N},
                             {"n", appr->n},
                             {"status", "verification_failure"},
                             {"error", error_object(e)}});
    }
  }
  report["records"] = std::move(records);

  json rate{{"predicted_slope_bound", std::log(config.a + config.eps)}};
  try {
    const RateFit fit = fit_rate(measured);
    if (std::isinf(fit.slope)) {
      rate["status"] = "zero_error";
      rate["slope"] = nullptr;
      rate["intercept"] = nullptr;
    } else {
      rate["status"] = "ok";
      rate["slope"] = fit.slope;
      rate["intercept"] = fit.intercept;
    }
  } catch (const Error& e) {
    rate["status"] = "insufficient_data";
    rate["slope"] = nullptr;
    rate["intercept"] = nullptr;
  }

  outcome.exit_code = construction_failed   ? kExitConstructionFailure
                      : verification_failed ? kExitVerificationFailure
                                            : kExitPass;
  std::size_t passed = 0;
  for (const auto& r : measured) passed += r.passed() ? 1 : 0;
  report["summary"] = json{
      {"status", outcome.exit_code == kExitPass ? "pass" : "fail"},
      {"records", config.degrees.size()},
      {"passed", passed},
      {"rate", std::move(rate)},
      {"exit_code", outcome.exit_code},
  };
  return outcome;
}

void write_outputs(const RunConfig& config, const RunOutcome& outcome) {
  if (!config.out) return;
  auto write = [](const std::filesystem::path& path, const std::string& body) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error(ErrorCode::InvalidArgument, "cannot open " + path.string() + " for writing");
    file << body;
  };
  write(*config.out, outcome.report.dump(2) + "\n");
  if (config.csv) {
    write(config.out->string() + ".error.csv", outcome.error_csv);
    write(config.out->string() + ".roots.csv", outcome.roots_csv);
  }
}

}  // namespace circlepoly::cli
