#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <vector>

#include "h2vqe/errors.hpp"

namespace h2vqe {

struct NelderMeadConfig {
  double initial_point = 0.0;
  double initial_step = 0.1;
  double reflection = 1.0;
  double expansion = 2.0;
  double contraction = 0.5;
  double shrink = 0.5;
  double f_tolerance = 1e-10;
  double x_tolerance = 1e-10;
  int max_evaluations = 500;

  void validate() const {
    if (!(reflection > 0.0)) throw ValidationError("NelderMeadConfig: reflection must be > 0");
    if (!(expansion > 1.0)) throw ValidationError("NelderMeadConfig: expansion must be > 1");
    if (!(contraction > 0.0 && contraction < 1.0))
      throw ValidationError("NelderMeadConfig: contraction must be in (0, 1)");
    if (!(shrink > 0.0 && shrink < 1.0))
      throw ValidationError("NelderMeadConfig: shrink must be in (0, 1)");
    if (!(f_tolerance > 0.0) || !(x_tolerance > 0.0))
      throw ValidationError("NelderMeadConfig: tolerances must be > 0");
    if (max_evaluations < 1)
      throw ValidationError("NelderMeadConfig: max_evaluations must be >= 1");
  }
};

struct OptimizationResult {
  double best_point = 0.0;
  double best_value = 0.0;
  int evaluations = 0;
  bool converged = false;
};

struct NdOptimizationResult {
  std::vector<double> best_point;
  double best_value = 0.0;
  int evaluations = 0;
  bool converged = false;
};

/// Nelder-Mead simplex minimization in n dimensions. Terminates once the
/// simplex value spread drops below f_tolerance and its width below
/// x_tolerance (converged), or when the evaluation budget runs out. Both
/// tolerances must hold: value spread alone stalls on simplexes that straddle
/// a minimum symmetrically, parking the best point far from it.
inline NdOptimizationResult minimize_nd(const std::function<double(const std::vector<double>&)>& f,
                                        const std::vector<double>& x0,
                                        const NelderMeadConfig& cfg) {
  cfg.validate();
  const std::size_t n = x0.size();
  if (n == 0) throw ValidationError("minimize_nd: empty initial point");

  int evaluations = 0;
  auto eval = [&](const std::vector<double>& x) {
    const double v = f(x);
    ++evaluations;
    if (!std::isfinite(v))
      throw NonFiniteObjectiveError("objective returned a non-finite value", x);
    return v;
  };

  struct Vertex {
    std::vector<double> x;
    double value;
  };
  std::vector<Vertex> simplex;
  simplex.reserve(n + 1);

  // Initial simplex: x0 plus one step along each coordinate. Budget may run
  // out mid-construction; the best evaluated vertex is still returned.
  for (std::size_t i = 0; i <= n && evaluations < cfg.max_evaluations; ++i) {
    std::vector<double> x = x0;
    if (i > 0) x[i - 1] += cfg.initial_step;
    simplex.push_back({x, eval(x)});
  }

  const auto by_value = [](const Vertex& a, const Vertex& b) { return a.value < b.value; };
  bool converged = false;

  if (simplex.size() == n + 1) {
    while (true) {
      std::sort(simplex.begin(), simplex.end(), by_value);

      const double spread = simplex.back().value - simplex.front().value;
      double width = 0.0;
      for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t d = 0; d < n; ++d)
          width = std::max(width, std::abs(simplex[i].x[d] - simplex[0].x[d]));
      if (spread < cfg.f_tolerance && width < cfg.x_tolerance) {
        converged = true;
        break;
      }
      if (evaluations >= cfg.max_evaluations) break;

      std::vector<double> centroid(n, 0.0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t d = 0; d < n; ++d) centroid[d] += simplex[i].x[d] / double(n);

      Vertex& worst = simplex.back();
      const double f_best = simplex.front().value;
      const double f_second_worst = simplex[n - 1].value;

      auto point_along = [&](double coeff, const std::vector<double>& from) {
        std::vector<double> p(n);
        for (std::size_t d = 0; d < n; ++d) p[d] = centroid[d] + coeff * (from[d] - centroid[d]);
        return p;
      };

      // Reflection
      const std::vector<double> xr = point_along(-cfg.reflection, worst.x);
      const double fr = eval(xr);
      if (fr < f_best) {
        if (evaluations < cfg.max_evaluations) {
          // Expansion
          const std::vector<double> xe = point_along(-cfg.reflection * cfg.expansion, worst.x);
          const double fe = eval(xe);
          if (fe < fr)
            worst = {xe, fe};
          else
            worst = {xr, fr};
        } else {
          worst = {xr, fr};
        }
      } else if (fr < f_second_worst) {
        worst = {xr, fr};
      } else if (evaluations < cfg.max_evaluations) {
        // Contraction, outside or inside of the reflected point.
        const bool outside = fr < worst.value;
        const std::vector<double> xc =
            outside ? point_along(-cfg.reflection * cfg.contraction, worst.x)
                    : point_along(cfg.contraction, worst.x);
        const double fc = eval(xc);
        if (fc < std::min(fr, worst.value)) {
          worst = {xc, fc};
        } else {
          // Shrink every vertex toward the best.
          for (std::size_t i = 1; i <= n && evaluations < cfg.max_evaluations; ++i) {
            for (std::size_t d = 0; d < n; ++d)
              simplex[i].x[d] =
                  simplex[0].x[d] + cfg.shrink * (simplex[i].x[d] - simplex[0].x[d]);
            simplex[i].value = eval(simplex[i].x);
          }
        }
      } else {
        break;  // out of budget for the follow-up evaluation
      }
    }
  }

  std::sort(simplex.begin(), simplex.end(), by_value);
  NdOptimizationResult result;
  result.best_point = simplex.front().x;
  result.best_value = simplex.front().value;
  result.evaluations = evaluations;
  result.converged = converged;
  return result;
}

/// One-dimensional front end used by the variational drivers.
inline OptimizationResult minimize(const std::function<double(double)>& f,
                                   const NelderMeadConfig& cfg) {
  const NdOptimizationResult nd =
      minimize_nd([&](const std::vector<double>& x) { return f(x[0]); }, {cfg.initial_point}, cfg);
  return {nd.best_point[0], nd.best_value, nd.evaluations, nd.converged};
}

/// Best minimize() outcome over several starting points. The evaluation count
/// is the total spent across all starts.
inline OptimizationResult minimize_multistart(const std::function<double(double)>& f,
                                              const NelderMeadConfig& cfg,
                                              const std::vector<double>& starts) {
  if (starts.empty()) throw ValidationError("minimize_multistart: no starting points");
  OptimizationResult best;
  int total_evaluations = 0;
  bool have_best = false;
  for (double s : starts) {
    NelderMeadConfig c = cfg;
    c.initial_point = s;
    OptimizationResult r = minimize(f, c);
    total_evaluations += r.evaluations;
    if (!have_best || r.best_value < best.best_value) {
      best = r;
      have_best = true;
    }
  }
  best.evaluations = total_evaluations;
  return best;
}

}  // namespace h2vqe
