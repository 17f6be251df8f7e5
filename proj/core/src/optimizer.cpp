#include "spinportrait/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "spinportrait/errors.hpp"
#include "spinportrait/random.hpp"

namespace spinportrait {

void OptimizerConfig::validate() const {
  if (restarts < 1) throw ConfigError("optimizer: restarts must be >= 1");
  if (max_iters < 1) throw ConfigError("optimizer: max_iters must be >= 1");
  if (!(tolerance > 0.0)) throw ConfigError("optimizer: tolerance must be > 0");
}

double objective(const DirectionSet& ds, ObjectiveKind kind) {
  if (kind == ObjectiveKind::ConditionNumber) {
    const double c = q_condition(ds);
    return std::isfinite(c) ? -c : kInfeasibleObjective;
  }
  double acc = 0.0;
  for (double det : gram_determinants(ds)) {
    if (!(det > 1e-12)) return kInfeasibleObjective;
    acc += std::log(det);
  }
  return acc;
}

int parameter_count(Spin spin) { return 2 * spin.direction_count() - 3; }

DirectionSet directions_from_params(Spin spin, const std::vector<double>& x) {
  if (static_cast<int>(x.size()) != parameter_count(spin)) {
    throw DomainError("optimizer: wrong parameter count");
  }
  // Angles are unconstrained during the search; fold them back to the
  // canonical ranges through the Cartesian form.
  auto make = [](double theta, double phi) {
    const Vec3 v(std::cos(phi) * std::sin(theta),
                 std::sin(phi) * std::sin(theta), std::cos(theta));
    return Direction::from_cartesian(v);
  };
  std::vector<Direction> dirs;
  dirs.reserve(spin.direction_count());
  dirs.push_back(Direction::plus_z());
  if (spin.direction_count() > 1) dirs.push_back(make(x[0], 0.0));
  for (int k = 2; k < spin.direction_count(); ++k) {
    dirs.push_back(make(x[2 * k - 3], x[2 * k - 2]));
  }
  return DirectionSet(spin, std::move(dirs));
}

DirectionSet random_direction_set(Spin spin, Rng& rng) {
  std::vector<Direction> dirs;
  for (int k = 0; k < spin.direction_count(); ++k) {
    dirs.push_back(random_direction(rng));
  }
  return DirectionSet(spin, std::move(dirs));
}

namespace {

struct Vertex {
  std::vector<double> x;
  double f;  // minimized: -objective
};

class NelderMead {
 public:
  NelderMead(Spin spin, ObjectiveKind kind, int budget)
      : spin_(spin), kind_(kind), budget_(budget) {}

  double eval(const std::vector<double>& x) {
    ++evals_;
    return -objective(directions_from_params(spin_, x), kind_);
  }

  bool exhausted() const { return evals_ >= budget_; }
  int evaluations() const { return evals_; }

  // One Nelder-Mead run from an axis-aligned simplex around `start`.
  Vertex run(const std::vector<double>& start, double step, double tol) {
    const size_t n = start.size();
    std::vector<Vertex> s;
    s.push_back({start, eval(start)});
    for (size_t i = 0; i < n; ++i) {
      auto x = start;
      x[i] += step;
      s.push_back({x, eval(x)});
    }
    auto by_f = [](const Vertex& a, const Vertex& b) { return a.f < b.f; };
    while (!exhausted()) {
      std::stable_sort(s.begin(), s.end(), by_f);
      if (std::abs(s.back().f - s.front().f) <= tol) break;

      std::vector<double> c(n, 0.0);
      for (size_t v = 0; v < n; ++v) {
        for (size_t i = 0; i < n; ++i) c[i] += s[v].x[i] / double(n);
      }
      auto along = [&](double t) {
        std::vector<double> x(n);
        for (size_t i = 0; i < n; ++i) x[i] = c[i] + t * (s.back().x[i] - c[i]);
        return x;
      };
      Vertex r{along(-1.0), 0.0};
      r.f = eval(r.x);
      if (r.f < s.front().f) {
        Vertex e{along(-2.0), 0.0};
        e.f = eval(e.x);
        s.back() = e.f < r.f ? e : r;
      } else if (r.f < s[n - 1].f) {
        s.back() = r;
      } else {
        const bool outside = r.f < s.back().f;
        Vertex k{along(outside ? -0.5 : 0.5), 0.0};
        k.f = eval(k.x);
        if (k.f < std::min(r.f, s.back().f)) {
          s.back() = k;
        } else {
          for (size_t v = 1; v <= n; ++v) {
            for (size_t i = 0; i < n; ++i) {
              s[v].x[i] = s[0].x[i] + 0.5 * (s[v].x[i] - s[0].x[i]);
            }
            s[v].f = eval(s[v].x);
          }
        }
      }
    }
    return *std::min_element(s.begin(), s.end(), by_f);
  }

 private:
  Spin spin_;
  ObjectiveKind kind_;
  int budget_;
  int evals_ = 0;
};

}  // namespace

OptimizeResult optimize(Spin spin, const OptimizerConfig& config) {
  config.validate();
  const int n = parameter_count(spin);
  if (n == 0) {
    DirectionSet ds(spin, {Direction::plus_z()});
    return {ds, objective(ds, config.objective), 0, 1};
  }

  std::vector<double> best_x;
  double best_f = -kInfeasibleObjective;
  int best_restart = -1;
  int total_evals = 0;
  for (int r = 0; r < config.restarts; ++r) {
    Rng rng(config.seed * 0x9E3779B97F4A7C15ULL + std::uint64_t(r));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> x(n);
    x[0] = std::acos(2.0 * unit(rng) - 1.0);
    for (int i = 1; i < n; i += 2) {
      x[i] = std::acos(2.0 * unit(rng) - 1.0);
      x[i + 1] = 2.0 * std::numbers::pi * unit(rng);
    }

    NelderMead nm(spin, config.objective, config.max_iters);
    Vertex cur{x, nm.eval(x)};
    // Restarting the simplex around the incumbent avoids premature collapse.
    double step = 0.5;
    while (!nm.exhausted()) {
      const Vertex next = nm.run(cur.x, step, config.tolerance);
      const double gain = cur.f - next.f;
      if (next.f <= cur.f) cur = next;
      if (gain < config.tolerance) {
        if (step < 1e-4) break;
        step *= 0.1;
      }
    }
    total_evals += nm.evaluations();
    if (cur.f < best_f) {
      best_f = cur.f;
      best_x = cur.x;
      best_restart = r;
    }
  }
  if (best_restart < 0 || -best_f <= kInfeasibleObjective) {
    throw OptimizationFailure("optimizer: every restart ended infeasible");
  }
  DirectionSet ds = directions_from_params(spin, best_x);
  if (!(feasibility(ds) > 1e-12)) {
    throw OptimizationFailure("optimizer: best set is infeasible");
  }
  return {std::move(ds), -best_f, best_restart, total_evals};
}

}  // namespace spinportrait
