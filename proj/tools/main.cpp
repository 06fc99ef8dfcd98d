#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "config.hpp"
#include "parityns/errors.hpp"

int main(int argc, char** argv) {
  CLI::App app{"parity-ns: parity symmetry calculus and Navier-Stokes checks"};
  app.require_subcommand(1);

  cli::EnumerateArgs en;
  auto* enumerate = app.add_subcommand("enumerate", "List every kind of symmetric solenoidal field");
  enumerate->add_option("--mode", en.mode, "real or complex")->check(CLI::IsMember({"real", "complex"}));
  enumerate->add_option("--format", en.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  enumerate->add_option("--out", en.out, "Write to a file instead of stdout");

  cli::DecomposeArgs de;
  auto* decompose = app.add_subcommand("decompose", "Split a solenoidal field into its 8 matched parts");
  decompose->add_option("--in", de.in, "Field dump")->required();
  decompose->add_option("--beta", de.beta, "Parity beta, e.g. 000");
  decompose->add_option("--out-dir", de.out_dir, "Directory for the parts and report.json")->required();
  decompose->add_option("--div-tol", de.div_tol, "Relative divergence accepted on input");

  cli::SolveArgs so;
  auto* solve = app.add_subcommand("solve", "Picard iteration of the mild formulation");
  solve->add_option("--in", so.in, "Initial field dump")->required();
  solve->add_option("--config", so.config, "Solver config (JSON)");
  solve->add_option("--out-dir,--out", so.out_dir, "Trajectory directory")->required();

  cli::RigidityArgs ri;
  auto* rigidity = app.add_subcommand("rigidity", "Scan which kinds the bilinear term preserves");
  rigidity->add_option("--mode", ri.mode, "real or complex")->check(CLI::IsMember({"real", "complex"}));
  rigidity->add_option("--n", ri.n, "Grid size");
  rigidity->add_option("--seeds", ri.seeds, "Number of random witnesses per kind")->check(CLI::PositiveNumber);
  rigidity->add_option("--config", ri.config, "Rigidity config (JSON); flags given explicitly win");
  rigidity->add_option("--out", ri.out, "Report path (stdout if omitted)");

  cli::BeltramiArgs be;
  auto* beltrami = app.add_subcommand("beltrami", "Check the Beltrami surrogate annihilates the nonlinearity");
  beltrami->add_option("--n", be.n, "Grid size");
  beltrami->add_option("--t", be.t, "Final time; residuals at 0, t/2, t")->check(CLI::PositiveNumber);
  beltrami->add_option("--out", be.out, "Report path (stdout if omitted)");

  cli::Example41Args ex;
  auto* example41 = app.add_subcommand("example41", "Symmetric inputs whose nonlinearity is not symmetric");
  example41->add_option("--n", ex.n, "Grid size");
  example41->add_option("--seed", ex.seed, "Profile seed");
  example41->add_option("--out", ex.out, "Report path (stdout if omitted)");

  cli::HalfspaceArgs ha;
  auto* halfspace = app.add_subcommand("halfspace", "Extend half-domain data and track the energy split");
  halfspace->add_option("--in", ha.in, "Half-field dump")->required();
  halfspace->add_option("--extend", ha.extend, "zero, antisym or sym")
      ->check(CLI::IsMember({"zero", "antisym", "sym"}));
  halfspace->add_option("--config", ha.config, "Solver config (JSON)");
  halfspace->add_option("--split-tol", ha.split_tol, "Accepted energy imbalance")->check(CLI::PositiveNumber);
  halfspace->add_option("--out", ha.out, "Report path (stdout if omitted)");

  auto* selftest = app.add_subcommand("selftest", "Exhaustive checks of the label algebra");

  cli::GenerateArgs ge;
  auto* generate = app.add_subcommand("generate", "Write a random field of a given kind");
  auto* kind_opt = generate->add_option("--kind", ge.kind, "Kind, e.g. \"(100,010,001)\"");
  auto* belt_flag = generate->add_flag("--beltrami", ge.beltrami, "Beltrami surrogate instead of a random field");
  kind_opt->excludes(belt_flag);
  generate->add_option("--n", ge.n, "Grid size");
  generate->add_option("--seed", ge.seed, "Seed");
  generate->add_option("--amplitude", ge.amplitude, "max |u|")->check(CLI::PositiveNumber);
  generate->add_flag("--half", ge.half, "Keep only the planes 0 < x3 < pi");
  generate->add_option("--out", ge.out, "Output dump")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kUsageError;
  }

  try {
    if (*enumerate) return cli::run_enumerate(en);
    if (*decompose) return cli::run_decompose(de);
    if (*solve) return cli::run_solve(so);
    if (*rigidity) {
      if (rigidity->count("--n") == 0) ri.n = 0;
      if (rigidity->count("--seeds") == 0) ri.seeds = 0;
      return cli::run_rigidity(ri);
    }
    if (*beltrami) return cli::run_beltrami(be);
    if (*example41) return cli::run_example41(ex);
    if (*halfspace) return cli::run_halfspace(ha);
    if (*selftest) return cli::run_selftest();
    if (*generate) {
      if (ge.kind.empty() && !ge.beltrami) throw cli::UsageError("generate needs --kind or --beltrami");
      return cli::run_generate(ge);
    }
  } catch (const cli::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kUsageError;
  } catch (const parityns::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kVerificationFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kUsageError;
  }
  return cli::kUsageError;
}
