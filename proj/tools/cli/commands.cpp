#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "spinportrait/aw_scheme.hpp"
#include "spinportrait/errors.hpp"
#include "spinportrait/kernels.hpp"
#include "spinportrait/optimizer.hpp"
#include "spinportrait/state_region.hpp"
#include "spinportrait/su2_scheme.hpp"
#include "spinportrait/sun_scheme.hpp"
#include "spinportrait/tomography.hpp"

namespace spinportrait::cli {

namespace {

int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const DegeneratePriorError& e) {
    err << "error: " << e.what() << "\n";
    return kInvariantError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const InvariantError& e) {
    err << "error: " << e.what() << "\n";
    return kInvariantError;
  } catch (const FeasibilityError& e) {
    err << "error: infeasible: " << e.what();
    if (e.shell() >= 0) err << " [shell L = " << e.shell() << "]";
    err << "\n";
    return kFeasibilityError;
  } catch (const OptimizationFailure& e) {
    err << "error: " << e.what() << "\n";
    return kFeasibilityError;
  }
}

DensityMatrix load_state(const std::string& path, const Common& c,
                         std::ostream& err) {
  auto [spin, m] = state_from_json(read_json(path));
  if (c.validate) return DensityMatrix::from_matrix(spin, std::move(m));
  try {
    DensityMatrix::from_matrix(spin, m);
  } catch (const InvariantError& e) {
    err << "warning: " << e.what() << " (continuing, --no-validate)\n";
  }
  return DensityMatrix::unchecked(spin, std::move(m));
}

std::vector<UnitaryOp> unitaries_from_file(const std::string& path, int dim) {
  const json j = read_json(path);
  if (!j.is_array()) throw ParseError("unitary frames must be a JSON array");
  std::vector<UnitaryOp> out;
  for (const auto& e : j) out.push_back(unitary_from_json(e, dim));
  return out;
}

PriorWeights weights_or_uniform(const std::vector<double>& w, int n) {
  if (w.empty()) return PriorWeights::uniform(n);
  if (static_cast<int>(w.size()) != n) {
    throw ParseError("expected " + std::to_string(n) + " weights, got " +
                     std::to_string(w.size()));
  }
  return PriorWeights(w);
}

ProbVector make_prob(Spin spin, int n, std::vector<double> values,
                     const Common& c, std::ostream& err) {
  if (c.validate) return ProbVector(spin, n, std::move(values));
  try {
    ProbVector(spin, n, values);
  } catch (const InvariantError& e) {
    err << "warning: " << e.what() << " (continuing, --no-validate)\n";
  }
  return ProbVector::unchecked(spin, n, std::move(values));
}

// Validates unless --no-validate, in which case a failing state is written
// with a warning.
ComplexMatrix finish_state(Spin spin, ComplexMatrix rho, double tol,
                           const Common& c, std::ostream& err) {
  try {
    DensityMatrix::from_matrix(spin, rho, tol, tol);
  } catch (const InvariantError& e) {
    if (c.validate) throw;
    err << "warning: " << e.what() << " (written anyway, --no-validate)\n";
  }
  return rho;
}

void write_or_print(const std::string& path, const json& j, std::ostream& out) {
  if (path.empty()) {
    out << j.dump(2) << "\n";
  } else {
    write_json(path, j);
  }
}

}  // namespace

int cmd_forward(const ForwardOptions& o, const Common& c, std::ostream& out,
                std::ostream& err) {
  return guarded(err, [&] {
    const DensityMatrix rho = load_state(o.state, c, err);
    const Spin spin = rho.spin();
    ProbFile pf;
    pf.two_j = spin.two_j();
    pf.scheme = c.scheme;
    switch (c.scheme) {
      case Scheme::Su2: {
        if (o.frames.empty()) throw ParseError("forward --scheme su2 needs --frames");
        pf.directions = directions_from_json(read_json(o.frames));
        const PriorWeights w = weights_or_uniform(
            o.weights.empty() ? std::vector<double>{}
                              : weights_from_json(read_json(o.weights)),
            static_cast<int>(pf.directions.size()));
        std::vector<double> values;
        for (size_t k = 0; k < pf.directions.size(); ++k) {
          const RealVector col = tomogram_column(rho, pf.directions[k]);
          for (int i = 0; i < spin.dim(); ++i) values.push_back(w[int(k)] * col(i));
        }
        pf.weights = w.values();
        pf.values = make_prob(spin, w.size(), std::move(values), c, err).values();
        break;
      }
      case Scheme::Sun: {
        if (o.frames.empty()) {
          Rng rng(c.seed);
          pf.unitaries = UnitaryFrameSet::haar(spin, rng).frames();
          err << "note: generated " << pf.unitaries.size()
              << " Haar frames from seed " << c.seed << "\n";
        } else {
          pf.unitaries = UnitaryFrameSet(spin, unitaries_from_file(o.frames, spin.dim()))
                             .frames();
        }
        const PriorWeights w = weights_or_uniform(
            o.weights.empty() ? std::vector<double>{}
                              : weights_from_json(read_json(o.weights)),
            static_cast<int>(pf.unitaries.size()));
        std::vector<double> values;
        for (size_t k = 0; k < pf.unitaries.size(); ++k) {
          const RealVector col = tomogram_column(rho.matrix(), pf.unitaries[k]);
          for (int i = 0; i < spin.dim(); ++i) values.push_back(w[int(k)] * col(i));
        }
        pf.weights = w.values();
        pf.values = make_prob(spin, w.size(), std::move(values), c, err).values();
        break;
      }
      case Scheme::Aw: {
        pf.directions = o.frames.empty()
                            ? aw_directions(AWGrid::standard(spin))
                            : directions_from_json(read_json(o.frames));
        pf.values = aw_normalize(aw_forward(rho, pf.directions));
        break;
      }
    }
    write_json(o.out, prob_to_json(pf));
    out << "wrote " << pf.values.size() << " probabilities (scheme "
        << scheme_name(pf.scheme) << ", 2j = " << pf.two_j << ") to " << o.out
        << "\n";
    return int(kOk);
  });
}

int cmd_invert(const InvertOptions& o, const Common& c, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&] {
    ProbFile pf = prob_from_json(read_json(o.prob));
    const Spin spin(pf.two_j);
    if (!o.frames.empty()) {
      if (pf.scheme == Scheme::Sun) {
        pf.unitaries = unitaries_from_file(o.frames, spin.dim());
      } else {
        pf.directions = directions_from_json(read_json(o.frames));
      }
    }
    ComplexMatrix rho;
    out.precision(6);
    switch (pf.scheme) {
      case Scheme::Su2: {
        const DirectionSet ds(spin, pf.directions);
        ProbVector p = make_prob(spin, ds.size(), pf.values, c, err);
        if (!p.has_equal_weights()) {
          err << "note: rotation blocks are not equal-weight; normalizing "
                 "each block to 1/"
              << ds.size() << " before inversion\n";
          p = normalize_to_eq(p);
        }
        const Su2Scheme scheme(ds);
        out << "cond(Q) = " << q_condition(ds)
            << ", Gram product = " << feasibility(ds) << "\n";
        rho = finish_state(spin, scheme.reconstruct_operator(p), 1e-10, c, err);
        break;
      }
      case Scheme::Sun: {
        const UnitaryFrameSet ufs(spin, pf.unitaries);
        const PriorWeights w = weights_or_uniform(pf.weights, ufs.size());
        const ProbVector p = make_prob(spin, ufs.size(), pf.values, c, err);
        const double g = gamma_prime(ufs);
        out << "cond(R) = " << condition_number(r_matrix(ufs, w))
            << ", Gamma' = " << g << ", mu bound = " << mu_bound(g) << "\n";
        rho = finish_state(spin, reconstruct_pinv_operator(p, ufs, w), 1e-9, c,
                           err);
        break;
      }
      case Scheme::Aw: {
        const ComplexMatrix m = aw_matrix(spin, pf.directions);
        out << "cond(M) = " << condition_number(m) << "\n";
        const std::vector<double> wn = aw_normalize(pf.values);
        ComplexMatrix x = aw_reconstruct_operator(spin, wn, pf.directions);
        x /= x.trace().real();
        rho = finish_state(spin, std::move(x), 1e-9, c, err);
        break;
      }
    }
    write_json(o.out, state_to_json(spin, rho));
    out << "wrote state (2j = " << spin.two_j() << ") to " << o.out << "\n";
    return int(kOk);
  });
}

int cmd_optimize(const OptimizeOptions& o, const Common& c, std::ostream& out,
                 std::ostream& err) {
  return guarded(err, [&] {
    if (o.two_j < 0) throw ConfigError("two_j must be nonnegative");
    OptimizerConfig cfg;
    if (o.objective == "gram") {
      cfg.objective = ObjectiveKind::GramProduct;
    } else if (o.objective == "cond") {
      cfg.objective = ObjectiveKind::ConditionNumber;
    } else {
      throw ConfigError("objective must be gram or cond");
    }
    cfg.restarts = o.restarts;
    cfg.max_iters = o.max_iters;
    cfg.seed = c.seed;
    cfg.tolerance = c.tol;
    const Spin spin(o.two_j);
    const OptimizeResult r = optimize(spin, cfg);
    write_or_print(o.out, directions_to_json(r.directions.dirs()), out);
    out.precision(12);
    out << "objective = " << r.objective
        << ", cond(Q) = " << q_condition(r.directions)
        << ", Gram product = " << feasibility(r.directions)
        << ", best restart = " << r.best_restart << "\n";
    return int(kOk);
  });
}

int cmd_region(const RegionOptions& o, const Common& c, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&] {
    if (o.two_j < 0) throw ConfigError("two_j must be nonnegative");
    const Spin spin(o.two_j);
    std::optional<DirectionSet> ds;
    if (!o.frames.empty()) {
      ds.emplace(spin, directions_from_json(read_json(o.frames)));
    } else if (o.two_j == 1) {
      ds.emplace(spin, std::vector<Direction>{Direction::plus_z(), Direction::plus_x(),
                                              Direction::plus_y()});
    } else if (o.two_j == 2) {
      ds.emplace(qutrit_cut_directions());
    } else {
      throw ConfigError("region: --frames is required for 2j = " +
                        std::to_string(o.two_j));
    }
    SliceSpec slice;
    if (!o.slice.empty() && !o.preset.empty()) {
      throw ConfigError("region: give either --slice or --preset, not both");
    }
    if (!o.slice.empty()) {
      slice = slice_from_json(read_json(o.slice));
    } else if (o.preset == "qubit-cube" || (o.preset.empty() && o.two_j == 1)) {
      if (o.two_j != 1) throw ConfigError("qubit-cube needs 2j = 1");
      slice = SliceSpec::qubit_cube();
    } else if (o.preset == "qutrit-cut" || (o.preset.empty() && o.two_j == 2)) {
      if (o.two_j != 2) throw ConfigError("qutrit-cut needs 2j = 2");
      slice = SliceSpec::qutrit_cut(o.cut_constant);
    } else {
      throw ConfigError("region: unknown or missing slice (--slice or --preset)");
    }
    const Su2Scheme scheme(*ds);
    const auto pts = sample_region(scheme, slice, o.resolution, c.tol);
    std::ostringstream csv;
    write_region_csv(csv, pts);
    if (o.out.empty()) {
      out << csv.str();
    } else {
      write_atomic(o.out, csv.str());
      size_t inside = 0;
      for (const auto& p : pts) inside += p.is_quantum ? 1 : 0;
      out << "wrote " << pts.size() << " points (" << inside
          << " quantum) to " << o.out << "\n";
    }
    return int(kOk);
  });
}

int cmd_kernel_eval(const KernelOptions& o, const Common&, std::ostream& out,
                    std::ostream& err) {
  return guarded(err, [&] {
    const auto dirs = directions_from_json(read_json(o.frames));
    if (dirs.empty() || dirs.size() % 2 == 0) {
      throw ConfigError("kernel-eval: need 4j + 1 directions");
    }
    const Spin spin(o.two_j >= 0 ? o.two_j : int(dirs.size() - 1) / 2);
    const Kernels kern{DirectionSet(spin, dirs)};
    const Direction n(o.theta, o.phi);
    json result{{"kind", o.kind}, {"two_j", spin.two_j()}};
    auto need = [&](size_t nm, size_t nk) {
      if (o.m.size() != nm || o.k.size() != nk) {
        throw ConfigError("kernel-eval " + o.kind + ": expected " +
                          std::to_string(nm) + " --m and " + std::to_string(nk) +
                          " --k values");
      }
    };
    if (o.kind == "star") {
      need(3, 3);
      const Complex v = kern.star_kernel(o.m[0], o.k[0], o.m[1], o.k[1], o.m[2], o.k[2]);
      const Complex e =
          kern.star_kernel_expanded(o.m[0], o.k[0], o.m[1], o.k[1], o.m[2], o.k[2]);
      result["re"] = v.real();
      result["im"] = v.imag();
      result["expanded_re"] = e.real();
      result["expanded_im"] = e.imag();
    } else if (o.kind == "w2p") {
      need(2, 1);
      result["value"] = kern.kernel_w_to_p(o.m[0], o.k[0], o.m[1], n);
      result["expanded"] = kern.kernel_w_to_p_expanded(o.m[0], o.k[0], o.m[1], n);
    } else if (o.kind == "p2w") {
      need(2, 1);
      result["value"] = kern.kernel_p_to_w(o.m[0], n, o.m[1], o.k[0]);
      result["expanded"] = kern.kernel_p_to_w_expanded(o.m[0], n, o.m[1], o.k[0]);
    } else {
      throw ConfigError("kernel-eval: kind must be star, w2p or p2w");
    }
    out << result.dump() << "\n";
    return int(kOk);
  });
}

int cmd_aw_grid(const AwGridOptions& o, const Common&, std::ostream& out,
                std::ostream& err) {
  return guarded(err, [&] {
    if (o.two_j < 0) throw ConfigError("two_j must be nonnegative");
    const Spin spin(o.two_j);
    const AWGrid std_grid = AWGrid::standard(spin);
    const AWGrid grid(spin, o.thetas.empty() ? std_grid.thetas() : o.thetas,
                      o.delta < 0.0 ? std_grid.delta() : o.delta);
    const auto dirs = aw_directions(grid);
    write_or_print(o.out, directions_to_json(dirs), out);
    out << "aw grid: " << dirs.size() << " directions, cond(M) = "
        << condition_number(aw_matrix(spin, dirs)) << "\n";
    return int(kOk);
  });
}

}  // namespace spinportrait::cli
