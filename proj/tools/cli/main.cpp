#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "commands.hpp"

using namespace spinportrait::cli;

int main(int argc, char** argv) {
  CLI::App app{"spinportrait: spin states as single probability vectors"};
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  std::string scheme = "su2";
  app.add_option("--scheme", scheme, "Reconstruction scheme")
      ->check(CLI::IsMember({"su2", "sun", "aw"}));
  app.add_option("--seed", common.seed, "Seed for every random choice");
  app.add_option("--tol", common.tol, "Tolerance (region PSD test, optimizer)");
  bool no_validate = false;
  app.add_flag("--no-validate", no_validate,
               "Downgrade state and probability invariant failures to warnings");

  ForwardOptions fwd;
  auto* forward = app.add_subcommand("forward", "State file -> probability file");
  forward->add_option("--state", fwd.state, "State JSON")->required();
  forward->add_option("--frames", fwd.frames, "Directions or unitary frames JSON");
  forward->add_option("--weights", fwd.weights, "Prior weights JSON array");
  forward->add_option("-o,--out", fwd.out, "Output probability JSON")->required();

  InvertOptions inv;
  auto* invert = app.add_subcommand("invert", "Probability file -> state file");
  invert->add_option("--prob", inv.prob, "Probability JSON")->required();
  invert->add_option("--frames", inv.frames, "Override the file's frames");
  invert->add_option("-o,--out", inv.out, "Output state JSON")->required();

  OptimizeOptions opt;
  auto* optimize = app.add_subcommand("optimize-dirs", "Search for good directions");
  optimize->add_option("--two-j", opt.two_j, "Doubled spin")->required();
  optimize->add_option("--restarts", opt.restarts, "Independent restarts");
  optimize->add_option("--max-iters", opt.max_iters, "Evaluations per restart");
  optimize->add_option("--objective", opt.objective, "gram or cond")
      ->check(CLI::IsMember({"gram", "cond"}));
  optimize->add_option("-o,--out", opt.out, "Output directions JSON");

  RegionOptions reg;
  auto* region = app.add_subcommand("region", "Sample the quantum region on a slice");
  region->add_option("--two-j", reg.two_j, "Doubled spin")->required();
  region->add_option("--frames", reg.frames, "Directions JSON");
  region->add_option("--slice", reg.slice, "Slice JSON");
  region->add_option("--preset", reg.preset, "qubit-cube or qutrit-cut");
  region->add_option("--cut-constant", reg.cut_constant, "Constant of qutrit-cut");
  region->add_option("--resolution", reg.resolution, "Grid points per axis");
  region->add_option("-o,--out", reg.out, "Output CSV");

  KernelOptions ker;
  auto* kernel = app.add_subcommand("kernel-eval", "Evaluate one kernel entry");
  kernel->add_option("--frames", ker.frames, "Directions JSON")->required();
  kernel->add_option("--kind", ker.kind, "star, w2p or p2w")
      ->check(CLI::IsMember({"star", "w2p", "p2w"}));
  kernel->add_option("--m", ker.m, "Doubled projections in kernel order");
  kernel->add_option("--k", ker.k, "0-based directions in kernel order");
  kernel->add_option("--theta", ker.theta, "Polar angle of the free direction");
  kernel->add_option("--phi", ker.phi, "Azimuth of the free direction");

  AwGridOptions aw;
  auto* awgrid = app.add_subcommand("aw-grid", "Write an Amiet-Weigert direction grid");
  awgrid->add_option("--two-j", aw.two_j, "Doubled spin")->required();
  awgrid->add_option("--thetas", aw.thetas, "2j + 1 polar angles");
  awgrid->add_option("--delta", aw.delta, "Azimuthal offset in (0, 1/(2j+1)]");
  awgrid->add_option("-o,--out", aw.out, "Output directions JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kParseError;
  }
  common.validate = !no_validate;
  common.scheme = scheme_from_name(scheme);

  auto& out = std::cout;
  auto& err = std::cerr;
  if (*forward) return cmd_forward(fwd, common, out, err);
  if (*invert) return cmd_invert(inv, common, out, err);
  if (*optimize) return cmd_optimize(opt, common, out, err);
  if (*region) return cmd_region(reg, common, out, err);
  if (*kernel) return cmd_kernel_eval(ker, common, out, err);
  if (*awgrid) return cmd_aw_grid(aw, common, out, err);
  return kParseError;
}
