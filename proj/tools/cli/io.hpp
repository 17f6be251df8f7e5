#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "spinportrait/portrait.hpp"
#include "spinportrait/spin.hpp"
#include "spinportrait/state_region.hpp"

namespace spinportrait::cli {

using nlohmann::json;

/// Malformed or unreadable input file (exit code 2).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json read_json(const std::filesystem::path& path);

/// Writes to a sibling temporary file, then renames it over `path`.
void write_atomic(const std::filesystem::path& path, const std::string& text);
void write_json(const std::filesystem::path& path, const json& j);

// {"two_j": n, "re": [...], "im": [...]}, both row-major.
json state_to_json(Spin spin, const ComplexMatrix& m);
/// Returns the spin and the raw matrix; no physical validation.
std::pair<Spin, ComplexMatrix> state_from_json(const json& j);

// [{"theta": t, "phi": p}, ...]
json directions_to_json(const std::vector<Direction>& dirs);
std::vector<Direction> directions_from_json(const json& j);

// {"re": [...], "im": [...]} row-major.
json unitary_to_json(const UnitaryOp& u);
UnitaryOp unitary_from_json(const json& j, int dim);

enum class Scheme { Su2, Sun, Aw };
std::string scheme_name(Scheme s);
Scheme scheme_from_name(const std::string& name);

struct ProbFile {
  int two_j = 0;
  Scheme scheme = Scheme::Su2;
  std::vector<Direction> directions;  // su2, aw
  std::vector<UnitaryOp> unitaries;   // sun
  std::vector<double> weights;        // empty for aw
  std::vector<double> values;
};

json prob_to_json(const ProbFile& p);
ProbFile prob_from_json(const json& j);

/// [w_0, w_1, ...]
std::vector<double> weights_from_json(const json& j);

/// {"axes": [{"k", "two_m", "lo", "hi"}], "fixed": [{"k", "two_m", "value"}]}
SliceSpec slice_from_json(const json& j);
json slice_to_json(const SliceSpec& s);

}  // namespace spinportrait::cli
