// Batch runner: pick a context, closure families, a bound and theorems.
// Exit status 0 when every verdict holds, 1 on a refuted verdict, 2 on bad usage.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "extctx/runner.hpp"

int main(int argc, char** argv) {
  extctx::RunConfig cfg;
  int heavy = 0;
  CLI::App app{"Bounded verification of theorems about extensive contexts"};
  app.add_option("--context", cfg.context, "finset or finpre")->capture_default_str();
  app.add_option("--closure", cfg.families,
                 "closure family, repeatable (alexandrov, identity, indiscrete); default all");
  app.add_option("--bound", cfg.bound, "largest object size, at most 5")->capture_default_str();
  app.add_option("--heavy-bound", heavy, "bound for E, G and H; default min(bound, 2)");
  app.add_option("--theorem", cfg.theorems,
                 "validate, A..H, adjunctions, biproduct or all; repeatable");
  app.add_option("--objects", cfg.objects_path, "object description file");
  app.add_option("--report", cfg.report_path, "write the report here instead of stdout");
  app.add_option("--format", cfg.format, "text or structured")->capture_default_str();
  app.add_flag("--timings", cfg.timings, "include per-checker wall time");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  if (app.count("--heavy-bound") > 0) cfg.heavy_bound = heavy;

  extctx::RunReport report;
  try {
    report = extctx::run(cfg);
  } catch (const extctx::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const extctx::CategoryError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  const std::string out = cfg.format == "structured"
                              ? extctx::to_json(report).dump(2) + "\n"
                              : extctx::to_text(report);
  if (cfg.report_path.empty()) {
    std::cout << out;
  } else {
    std::ofstream f(cfg.report_path, std::ios::binary);
    if (!f) {
      std::cerr << "cannot write " << cfg.report_path << "\n";
      return 2;
    }
    f << out;
    std::cout << (report.passed ? "PASS" : "FAIL") << "\n";
  }
  return extctx::exit_code(report);
}
