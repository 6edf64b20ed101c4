#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "entropic/cli.hpp"

namespace {

using entropic::cli::Command;
using entropic::cli::OutputFormat;
using entropic::cli::RunConfig;

void add_output_flags(CLI::App* sub, RunConfig& config) {
  sub->add_option("--format", config.format, "output format")
      ->transform(CLI::CheckedTransformer(std::map<std::string, OutputFormat>{{"csv", OutputFormat::csv},
                                                                             {"json", OutputFormat::json}})
                      .description(""))
      ->type_name("csv|json");
  sub->add_option("--output", config.output, "write to this file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entropic inequalities for SU(2) and SU(1,1) matrix elements"};
  app.require_subcommand(1);
  RunConfig config;

  auto* dmat = app.add_subcommand("dmat", "Wigner d-matrix of spin j at angle theta");
  dmat->add_option("--j", config.j, "spin, e.g. 3/2 or 1.5");
  dmat->add_option("--theta", config.theta, "rotation angle");
  add_output_flags(dmat, config);

  auto* su2 = app.add_subcommand("su2-check", "Shannon subadditivity sweep of a d-matrix column");
  auto* tsallis = app.add_subcommand("su2-tsallis", "Tsallis subadditivity sweep of a d-matrix column");
  for (auto* sub : {su2, tsallis}) {
    sub->add_option("--j", config.j, "spin");
    sub->add_option("--m", config.m, "column weight");
    sub->add_option("--theta", config.theta, "single angle");
    sub->add_option("--grid", config.grid, "start:stop:count, inclusive");
    add_output_flags(sub, config);
  }
  tsallis->add_option("--q", config.q, "Tsallis parameter, q > 0 and q != 1");

  auto* su11 = app.add_subcommand("su11-check", "SU(1,1) series subadditivity sweep over the rapidity t");
  su11->add_option("--series", config.series, "discrete, discrete_negative, mixed or continuous");
  su11->add_option("--k", config.k, "discrete label, j = -k/2");
  su11->add_option("--s", config.s, "continuous label, j = -1/2 + i s");
  su11->add_option("--m", config.m, "column weight (continuous label for mixed/continuous)");
  su11->add_option("--sigma", config.sigma, "continuous-series parity, 0 or 1");
  su11->add_option("--lattice", config.lattice, "integer or half_integer m' lattice");
  su11->add_option("--truncation", config.truncation, "terms for mixed/continuous reports");
  su11->add_option("--eps", config.eps, "allowed missing mass for the discrete series");
  su11->add_option("--t", config.t, "single rapidity");
  su11->add_option("--grid", config.grid, "start:stop:count, inclusive");
  add_output_flags(su11, config);

  auto* hyp = app.add_subcommand("hyp2f1", "Gauss hypergeometric function 2F1(a, b; c; z)");
  hyp->add_option("--a", config.a, "complex, e.g. 1+2i");
  hyp->add_option("--b", config.b);
  hyp->add_option("--c", config.c);
  hyp->add_option("--z", config.z);
  add_output_flags(hyp, config);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return entropic::cli::kExitUsage;
  }

  if (dmat->parsed()) config.command = Command::dmat;
  else if (su2->parsed()) config.command = Command::su2_check;
  else if (tsallis->parsed()) config.command = Command::su2_tsallis;
  else if (su11->parsed()) config.command = Command::su11_check;
  else config.command = Command::hyp2f1;
  return entropic::cli::run(config, std::cout, std::cerr);
}
