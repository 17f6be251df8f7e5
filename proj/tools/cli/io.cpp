#include "io.hpp"

#include <fstream>
#include <sstream>
#include <unistd.h>

namespace spinportrait::cli {

namespace fs = std::filesystem;

json read_json(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_atomic(const fs::path& path, const std::string& text) {
  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ParseError("cannot write " + tmp.string());
    out << text;
    out.flush();
    if (!out) throw ParseError("write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp);
    throw ParseError("cannot rename onto " + path.string() + ": " + ec.message());
  }
}

void write_json(const fs::path& path, const json& j) {
  write_atomic(path, j.dump(2) + "\n");
}

namespace {

template <class T>
T field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw ParseError(std::string("missing field \"") + name + "\"");
  }
  try {
    return j.at(name).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("field \"") + name + "\": " + e.what());
  }
}

ComplexMatrix matrix_from_parts(const std::vector<double>& re,
                                const std::vector<double>& im, int d) {
  if (re.size() != size_t(d) * d || im.size() != size_t(d) * d) {
    throw ParseError("matrix needs " + std::to_string(d * d) +
                     " entries in both \"re\" and \"im\"");
  }
  ComplexMatrix m(d, d);
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      m(a, b) = Complex(re[size_t(a * d + b)], im[size_t(a * d + b)]);
    }
  }
  return m;
}

json matrix_parts(const ComplexMatrix& m) {
  std::vector<double> re;
  std::vector<double> im;
  for (int a = 0; a < m.rows(); ++a) {
    for (int b = 0; b < m.cols(); ++b) {
      re.push_back(m(a, b).real());
      im.push_back(m(a, b).imag());
    }
  }
  return {{"re", re}, {"im", im}};
}

int checked_two_j(const json& j) {
  const int two_j = field<int>(j, "two_j");
  if (two_j < 0) throw ParseError("two_j must be nonnegative");
  return two_j;
}

}  // namespace

json state_to_json(Spin spin, const ComplexMatrix& m) {
  json j = matrix_parts(m);
  j["two_j"] = spin.two_j();
  return j;
}

std::pair<Spin, ComplexMatrix> state_from_json(const json& j) {
  const Spin spin(checked_two_j(j));
  return {spin, matrix_from_parts(field<std::vector<double>>(j, "re"),
                                  field<std::vector<double>>(j, "im"),
                                  spin.dim())};
}

json directions_to_json(const std::vector<Direction>& dirs) {
  json out = json::array();
  for (const auto& d : dirs) out.push_back({{"theta", d.theta()}, {"phi", d.phi()}});
  return out;
}

std::vector<Direction> directions_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("directions must be a JSON array");
  std::vector<Direction> out;
  for (const auto& e : j) {
    out.emplace_back(field<double>(e, "theta"), field<double>(e, "phi"));
  }
  return out;
}

json unitary_to_json(const UnitaryOp& u) { return matrix_parts(u.mat); }

UnitaryOp unitary_from_json(const json& j, int dim) {
  return UnitaryOp(matrix_from_parts(field<std::vector<double>>(j, "re"),
                                     field<std::vector<double>>(j, "im"), dim));
}

std::string scheme_name(Scheme s) {
  switch (s) {
    case Scheme::Su2: return "su2";
    case Scheme::Sun: return "sun";
    case Scheme::Aw: return "aw";
  }
  return "su2";
}

Scheme scheme_from_name(const std::string& name) {
  if (name == "su2") return Scheme::Su2;
  if (name == "sun") return Scheme::Sun;
  if (name == "aw") return Scheme::Aw;
  throw ParseError("unknown scheme \"" + name + "\" (expected su2, sun or aw)");
}

json prob_to_json(const ProbFile& p) {
  json frames = json::array();
  if (p.scheme == Scheme::Sun) {
    for (const auto& u : p.unitaries) frames.push_back(unitary_to_json(u));
  } else {
    frames = directions_to_json(p.directions);
  }
  return {{"two_j", p.two_j},
          {"scheme", scheme_name(p.scheme)},
          {"frames", frames},
          {"weights", p.weights},
          {"values", p.values}};
}

ProbFile prob_from_json(const json& j) {
  ProbFile p;
  p.two_j = checked_two_j(j);
  p.scheme = scheme_from_name(field<std::string>(j, "scheme"));
  const json frames = field<json>(j, "frames");
  if (!frames.is_array()) throw ParseError("\"frames\" must be an array");
  if (p.scheme == Scheme::Sun) {
    for (const auto& f : frames) {
      p.unitaries.push_back(unitary_from_json(f, p.two_j + 1));
    }
  } else {
    p.directions = directions_from_json(frames);
  }
  p.weights = field<std::vector<double>>(j, "weights");
  p.values = field<std::vector<double>>(j, "values");
  return p;
}

std::vector<double> weights_from_json(const json& j) {
  try {
    return j.get<std::vector<double>>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("weights must be an array of numbers: ") +
                     e.what());
  }
}

SliceSpec slice_from_json(const json& j) {
  SliceSpec s;
  if (!j.is_object()) throw ParseError("slice must be a JSON object");
  if (j.contains("axes")) {
    for (const auto& a : j.at("axes")) {
      s.axes.push_back({field<int>(a, "k"), field<int>(a, "two_m"),
                        field<double>(a, "lo"), field<double>(a, "hi")});
    }
  }
  if (j.contains("fixed")) {
    for (const auto& f : j.at("fixed")) {
      s.fixed.push_back(
          {field<int>(f, "k"), field<int>(f, "two_m"), field<double>(f, "value")});
    }
  }
  return s;
}

json slice_to_json(const SliceSpec& s) {
  json axes = json::array();
  for (const auto& a : s.axes) {
    axes.push_back({{"k", a.k}, {"two_m", a.two_m}, {"lo", a.lo}, {"hi", a.hi}});
  }
  json fixed = json::array();
  for (const auto& f : s.fixed) {
    fixed.push_back({{"k", f.k}, {"two_m", f.two_m}, {"value", f.value}});
  }
  return {{"axes", axes}, {"fixed", fixed}};
}

}  // namespace spinportrait::cli
