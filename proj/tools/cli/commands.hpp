#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "io.hpp"

namespace spinportrait::cli {

enum ExitCode : int {
  kOk = 0,
  kParseError = 2,
  kInvariantError = 3,
  kFeasibilityError = 4,
};

struct Common {
  Scheme scheme = Scheme::Su2;
  std::uint64_t seed = 0;
  double tol = 1e-10;
  bool validate = true;
};

struct ForwardOptions {
  std::string state;
  std::string frames;   // optional for sun and aw
  std::string weights;  // optional
  std::string out;
};

struct InvertOptions {
  std::string prob;
  std::string frames;  // optional override of the file's frames
  std::string out;
};

struct OptimizeOptions {
  int two_j = 1;
  int restarts = 8;
  int max_iters = 20000;
  std::string objective = "gram";
  std::string out;
};

struct RegionOptions {
  int two_j = 1;
  std::string frames;  // defaults: orthonormal triad or the qutrit cut set
  std::string slice;
  std::string preset;  // qubit-cube | qutrit-cut
  double cut_constant = 1.0 / 15.0;
  int resolution = 41;
  std::string out;
};

struct KernelOptions {
  std::string frames;
  std::string kind = "star";  // star | w2p | p2w
  int two_j = -1;             // inferred from the frame count when < 0
  std::vector<int> m;         // doubled projections, in the kernel's order
  std::vector<int> k;         // 0-based directions, in the kernel's order
  double theta = 0.0;
  double phi = 0.0;
};

struct AwGridOptions {
  int two_j = 1;
  std::vector<double> thetas;  // empty: the standard grid
  double delta = -1.0;         // < 0: 1 / (2j + 1)
  std::string out;
};

/// Each command reports to `out` / `err` and maps library exceptions onto
/// the exit-code contract.
int cmd_forward(const ForwardOptions& o, const Common& c, std::ostream& out,
                std::ostream& err);
int cmd_invert(const InvertOptions& o, const Common& c, std::ostream& out,
               std::ostream& err);
int cmd_optimize(const OptimizeOptions& o, const Common& c, std::ostream& out,
                 std::ostream& err);
int cmd_region(const RegionOptions& o, const Common& c, std::ostream& out,
               std::ostream& err);
int cmd_kernel_eval(const KernelOptions& o, const Common& c, std::ostream& out,
                    std::ostream& err);
int cmd_aw_grid(const AwGridOptions& o, const Common& c, std::ostream& out,
                std::ostream& err);

}  // namespace spinportrait::cli
