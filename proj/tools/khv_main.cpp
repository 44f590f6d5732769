// khv: run verification suites and print or write a report.
//
// Every flag can also come from the environment (KHV_SUITE, KHV_P_BOXES,
// KHV_DEPTH, KHV_WIDTH, KHV_TERMS, KHV_SEED, KHV_OUT, KHV_FORMAT); a flag on
// the command line wins over the environment, which wins over the default.
#include <cstdio>
#include <exception>
#include <iostream>

#include "CLI11.hpp"
#include "khv/run.hpp"

int main(int argc, char** argv) {
  khv::RunConfig cfg;
  CLI::App app{"Interval verification of the upper Khintchine constant for 2 < p < 3"};
  app.option_defaults()->always_capture_default();
  app.add_option("--suite", cfg.suite, "Suite to run")
      ->check(CLI::IsMember({"cond1", "cond2", "np", "conclusion", "oracle", "constants", "all"}))
      ->envname("KHV_SUITE");
  app.add_option("--p-boxes", cfg.p_boxes, "Number of p-boxes covering [2, 3]")
      ->check(CLI::PositiveNumber)
      ->envname("KHV_P_BOXES");
  app.add_option("--depth", cfg.depth, "Maximum bisection depth (>= 10)")->check(CLI::Range(10, 64))->envname("KHV_DEPTH");
  app.add_option("--width", cfg.target_width, "Quadrature target width")
      ->check(CLI::PositiveNumber)
      ->envname("KHV_WIDTH");
  app.add_option("--terms", cfg.terms, "Series terms for the distribution functions")
      ->check(CLI::Range(8, 100000))
      ->envname("KHV_TERMS");
  app.add_option("--seed", cfg.seed, "Seed for the random oracle sweeps")->envname("KHV_SEED");
  app.add_option("--out", cfg.out_path, "Write the report here instead of stdout")->envname("KHV_OUT");
  app.add_option("--format", cfg.format, "Report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->envname("KHV_FORMAT");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 64;
  }

  khv::Report rep;
  try {
    rep = khv::run(cfg);
  } catch (const khv::DomainError& e) {
    std::fprintf(stderr, "khv: usage error: %s\n", e.what());
    return 64;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "khv: %s\n", e.what());
    return 74;
  }
  if (cfg.out_path.empty())
    std::cout << (cfg.format == "json" ? khv::serialize_json(rep) : khv::to_text(rep));
  else
    std::fprintf(stderr, "khv: %s report written to %s (overall %s)\n", cfg.format.c_str(), cfg.out_path.c_str(),
                 khv::to_string(rep.overall));
  return khv::exit_code(rep);
}
