#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

namespace gl3tf {

struct QuadratureSpec {
  double abs_tol = 1e-8;
  double rel_tol = 1e-8;
  int max_depth = 16;
  std::vector<double> singularity_splits{0.0};
  // Pre-splits every base panel into 2^refine pieces; bumping it by one is
  // the "mesh refinement x2" used by the convergence checks.
  int refine = 0;
  // Hard work cap for one (possibly nested) integral; exceeding it ends
  // subdivision and surfaces as a tolerance failure with the best estimate.
  long max_evals = 40000000;
};

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
  long evals = 0;
  bool converged = true;

  QuadResult& operator+=(const QuadResult& o) {
    value += o.value;
    error += o.error;
    evals += o.evals;
    converged = converged && o.converged;
    return *this;
  }
};

// Thrown when the requested tolerance cannot be met; carries the best value.
struct ToleranceError : std::runtime_error {
  QuadResult best;
  explicit ToleranceError(const QuadResult& r)
      : std::runtime_error("quadrature tolerance not met"), best(r) {}
};

// Adaptive Gauss-Kronrod (7,15) over consecutive panels [pts_i, pts_{i+1}],
// each pre-split into 2^refine pieces, budget spread evenly.  When
// eval_budget is given it is decremented per evaluation and stops further
// subdivision at zero.
QuadResult adapt_segments(const std::function<double(double)>& f, const std::vector<double>& pts,
                          double tol, int max_depth, int refine, long* eval_budget = nullptr);

// Integral over the real line of a function that decays beyond |v| = cutoff.
// With log_splits, the points in spec.singularity_splits carry integrable
// log-power singularities and are approached through the substitution
// v = s +- e^{-t}; without, the line is integrated directly with panels
// graded away from 0.
QuadResult integrate_line(const std::function<double(double)>& f, double cutoff, double tol,
                          const QuadratureSpec& spec, bool log_splits = true,
                          long* eval_budget = nullptr);

// Iterated integral over R^n, n <= 3, axis 0 outermost.  Bit k of
// log_axis_mask marks axis k as carrying the log singularities; tolerances
// for inner axes are tightened so their accumulated error stays below the
// requested one.
QuadResult integrate_rn(const std::function<double(const double*)>& f, int n, double cutoff,
                        const QuadratureSpec& spec, unsigned log_axis_mask = ~0u);

}  // namespace gl3tf
