#pragma once

#include <Eigen/Dense>
#include <map>
#include <string>
#include <vector>

#include "solar/dataset.hpp"

namespace solar {

enum class PathAction { kEnter, kDrop };

struct PathEvent {
  int step = 0;                // algorithm iteration the event belongs to
  std::string variable;
  PathAction action = PathAction::kEnter;
  double lambda = 0;           // penalty level at the event
  Eigen::VectorXd coefficients;  // snapshot at that lambda
};

/// Piecewise-linear coefficient path. Knots are (lambda, beta) breakpoints
/// with lambda strictly decreasing; events mark variable entries and drops.
struct SolutionPath {
  std::vector<std::string> names;
  std::vector<PathEvent> steps;
  std::map<std::string, int> entry_rank;  // first-entry order, 1-based
  std::vector<double> knot_lambdas;       // descending, ends at 0 for full path
  std::vector<Eigen::VectorXd> knot_betas;

  /// Exact coefficients at an arbitrary penalty level (linear interpolation
  /// between knots; zero vector above the first knot).
  Eigen::VectorXd coefficients_at(double lambda) const;
};

/// Pure least-angle regression path (no lasso drops). Requires standardized
/// data; the active set keeps equal absolute residual correlations at every
/// step. Runs max_steps entries, max_steps <= min(p, n-1).
SolutionPath lars_path(const Dataset& d, int max_steps);

/// Lasso-modified LARS: coefficients satisfy the KKT conditions of
///   (1/2n)||y - X b||^2 + lambda * ||b||_1
/// at every lambda on the path. Drop events occur at sign changes.
SolutionPath lasso_lars_path(const Dataset& d);

namespace detail {
/// Core path routine on a centered matrix/vector pair; `require_standardized`
/// callers have already validated scales. Used by both public entry points
/// and by the tuning module (which runs in the dataset's own units).
SolutionPath lars_core(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                       const std::vector<std::string>& names, bool lasso,
                       int max_steps);
}  // namespace detail

}  // namespace solar
