#pragma once

#include <map>
#include <string>
#include <vector>

#include "solar/dataset.hpp"

namespace solar {

struct SelectionResult {
  std::string method;
  std::vector<std::string> selected;        // ordered by column position
  std::map<std::string, double> hyperparameters;
  int n_selected = 0;
};

struct CvGrid {
  std::vector<double> lambda_values;  // strictly descending from lambda_max
  std::vector<double> alpha_values;   // elastic net only
};

enum class CvSolver { kLarsLasso, kCoordinateDescent, kElasticNet };

struct CvTracePoint {
  double lambda = 0;
  double alpha = 1.0;
  double mean_error = 0;
  double std_error = 0;
};

/// Log-spaced lambda ladder from lambda_max = max_j |x_j' y| / n down to
/// eps * lambda_max, computed on centered columns in the dataset's units.
CvGrid make_grid(const Dataset& d, int n_lambda, double eps);

/// k-fold cross-validation over the grid; winner is the minimum mean squared
/// prediction error (ties toward larger lambda, then larger alpha), refit on
/// the full data at the winner. Errors are measured on the response scale of
/// the dataset as given; fitting runs on centered columns in those units, so
/// the caller's standardization choice is honored.
SelectionResult cv_select(const Dataset& d, CvSolver solver, const CvGrid& grid,
                          int folds, std::uint64_t seed,
                          std::vector<CvTracePoint>* trace = nullptr);

/// Largest lambda whose mean CV error is within one standard error of the
/// minimum; inputs ordered like the grid (lambda descending).
int one_se_rule(const std::vector<double>& mean_errors,
                const std::vector<double>& std_errors);

/// Deterministic fold assignment: disjoint, covering, sizes differ by <= 1.
std::vector<std::vector<int>> make_folds(int n, int folds, std::uint64_t seed);

std::string cv_trace_csv(const std::vector<CvTracePoint>& trace);

}  // namespace solar
