#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "circlepoly/cli/run.hpp"
#include "circlepoly/cli/text_format.hpp"
#include "circlepoly/error.hpp"

int main(int argc, char** argv) {
  using namespace circlepoly::cli;

  CLI::App app{"Build polynomials with all zeros on |z| = 1 whose log-derivatives approximate f, "
               "and verify them"};

  RunConfig config;
  std::string degrees = "8,12,16,20";
  std::string out;
  std::size_t samples = 0;
  double root_tol = 0.0;

  app.add_option("--function", config.function,
                 "zero | const <c> | ratio [u0, u1, ...] / [v0, v1, ...] | coeffs [f0, f1, ...]")
      ->capture_default_str();
  app.add_option("--N", degrees, "degrees: comma list, or a..b [step s]")->capture_default_str();
  app.add_option("--a", config.a, "radius of the disk K_a where the error is measured")
      ->capture_default_str();
  app.add_option("--eps", config.eps, "eps in (0, 1 - a) for the error bound")->capture_default_str();
  app.add_option("--samples", samples, "boundary samples on |z| = a (default max(4096, 8N))");
  app.add_option("--out", out, "JSON report path (stdout when omitted)");
  app.add_flag("--csv", config.csv, "also write <out>.error.csv and <out>.roots.csv");
  app.add_option("--root-tol", root_tol, "tolerance on ||z_k| - 1| (default 1e-7, widened for N > 64)");
  app.add_option("--vanish-tol", config.vanish_tol, "relative tolerance for the vanishing-order check")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConstructionFailure;
  }

  try {
    config.degrees = parse_degree_list(degrees);
  } catch (const circlepoly::Error& e) {
    std::cerr << "invalid --N: " << e.what() << "\n";
    return kExitConstructionFailure;
  }
  if (app.count("--samples") > 0) config.samples = samples;
  if (app.count("--root-tol") > 0) config.root_tol = root_tol;
  if (!out.empty()) config.out = out;

  const RunOutcome outcome = run(config);
  if (config.out) {
    try {
      write_outputs(config, outcome);
    } catch (const circlepoly::Error& e) {
      std::cerr << e.what() << "\n";
      return kExitConstructionFailure;
    }
  } else {
    std::cout << outcome.report.dump(2) << "\n";
  }
  if (outcome.exit_code != kExitPass) {
    std::cerr << "circlepoly: " << outcome.report["summary"]["status"].get<std::string>()
              << " (exit " << outcome.exit_code << ")\n";
  }
  return outcome.exit_code;
}
