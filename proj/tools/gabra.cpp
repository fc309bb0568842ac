// gabra: normalized unit groups of modular group algebras from the shell.
//
//   gabra check --group q8 --prime 2 --format json
//   gabra symmetric --group q8 --prime 2 --list
//   gabra closure --group q8 --prime 2 --with-symmetric
//   gabra sweep --prime 2

#include <iostream>

#include <CLI11.hpp>

#include "gabra/error.hpp"
#include "gabra/report.hpp"

int main(int argc, char** argv) {
  using namespace gabra;

  CliConfig cfg;
  try {
    cfg.cap = cap_from_environment();
  } catch (const InvalidInput& e) {
    std::cerr << "error: invalid input: " << e.what() << '\n';
    return kExitBadInput;
  }

  CLI::App app{"Normalized unit groups and symmetric units of modular group algebras"};
  app.require_subcommand(1);

  std::string format = "text";
  auto common = [&](CLI::App* sub, bool needs_group) {
    auto* group = sub->add_option("-g,--group", cfg.group_spec, "group spec, e.g. q8, d8, c4xc2, elem2e3");
    if (needs_group) group->required();
    sub->add_option("-p,--prime", cfg.prime, "characteristic of the coefficient field")->required();
    sub->add_option("--cap", cfg.cap, "largest set the command may build (default: GABRA_CAP or 2^24)");
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_flag_callback("--json", [&] { format = "json"; }, "shorthand for --format json");
  };

  auto* check = app.add_subcommand("check", "test whether V(KG) is generated by G and the symmetric units");
  common(check, true);

  auto* units = app.add_subcommand("units", "enumerate the normalized unit group V(KG)");
  common(units, true);
  units->add_flag("-l,--list", cfg.list_elements, "print every element");

  auto* symmetric = app.add_subcommand("symmetric", "enumerate the symmetric normalized units");
  common(symmetric, true);
  symmetric->add_flag("-l,--list", cfg.list_elements, "print every element");

  auto* closure = app.add_subcommand("closure", "subgroup generated by the group (or --gen units)");
  common(closure, true);
  closure->add_flag("-l,--list", cfg.list_elements, "print every element");
  closure->add_flag("--with-symmetric", cfg.with_symmetric, "also adjoin every symmetric unit");
  closure->add_option("--gen", cfg.extra_generators, "generator as a formal sum, e.g. \"1 + a + b\"");
  closure->add_option("--random", cfg.random_generators, "adjoin this many random normalized units");
  closure->add_option("--seed", cfg.seed, "seed for --random");

  auto* sweep = app.add_subcommand("sweep", "run check over every catalog group of order <= 16");
  common(sweep, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  if (app.got_subcommand(check)) cfg.subcommand = Subcommand::Check;
  else if (app.got_subcommand(units)) cfg.subcommand = Subcommand::Units;
  else if (app.got_subcommand(symmetric)) cfg.subcommand = Subcommand::Symmetric;
  else if (app.got_subcommand(closure)) cfg.subcommand = Subcommand::Closure;
  else cfg.subcommand = Subcommand::Sweep;
  cfg.format = format == "json" ? OutputFormat::Json : OutputFormat::Text;

  return run(cfg, std::cout, std::cerr);
}
