#include "rnaknot/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>

int main(int argc, char** argv) {
  using rnaknot::cli::Format;
  using rnaknot::cli::RunConfig;

  CLI::App app{"Exact enumeration and limit laws for k-noncrossing RNA structures"};
  app.require_subcommand(1);

  RunConfig cfg;
  const std::map<std::string, Format> formats{{"csv", Format::csv}, {"json", Format::json}};

  auto common = [&](CLI::App* sub) {
    sub->add_option("-o,--output", cfg.output, "Output file (directory for figures)");
    sub->add_option("--format", cfg.format, "csv or json")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--precision", cfg.precision, "Digits after the decimal point for reals")
        ->capture_default_str();
  };

  auto* count = app.add_subcommand("count", "S'_k(n,h) for every h and the total S_k(n)");
  count->add_option("--k", cfg.k)->capture_default_str();
  count->add_option("--n", cfg.n)->required();

  auto* dist = app.add_subcommand("dist", "Exact arc-count distribution against the Gaussian limit");
  dist->add_option("--k", cfg.k)->capture_default_str();
  dist->add_option("--n", cfg.n)->capture_default_str();

  auto* verify = app.add_subcommand("verify-identity",
                                    "Check the matching/structure functional equation to a given order");
  verify->add_option("--k", cfg.k)->capture_default_str();
  verify->add_option("--w", cfg.w, "Rational weight, e.g. 1, 3/2 or 0.5")->capture_default_str();
  verify->add_option("--order", cfg.order)->capture_default_str();

  auto* limits = app.add_subcommand("limits", "Limit constants mu, sigma^2 and growth rate (JSON)");
  limits->add_option("--k", cfg.k)->capture_default_str();

  auto* asympt = app.add_subcommand("asympt", "Exact S_3(n) against its asymptotic formula");
  asympt->add_option("--n-min", cfg.n_min)->capture_default_str();
  asympt->add_option("--n-max", cfg.n_max)->capture_default_str();
  asympt->add_option("--step", cfg.step)->capture_default_str();

  auto* oracle = app.add_subcommand("oracle-check", "Compare the formulas with brute-force enumeration");
  oracle->add_option("--k", cfg.k)->capture_default_str();
  oracle->add_option("--n-max", cfg.n_max)->required();

  auto* figures = app.add_subcommand("figures", "Write the n = 100 figure datasets as CSV");

  for (auto* sub : {count, dist, verify, limits, asympt, oracle, figures}) common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : rnaknot::cli::kInvalidInput;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  return rnaknot::cli::run(cfg, std::cout, std::cerr);
}
