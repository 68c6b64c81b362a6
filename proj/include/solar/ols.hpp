#pragma once

#include <set>
#include <string>
#include <vector>

#include "solar/dataset.hpp"

namespace solar {

struct RegressionTerm {
  std::string name;
  double coefficient = 0;
  double std_error = 0;
  double t_value = 0;
  double p_value = 0;
};

struct RegressionReport {
  std::vector<RegressionTerm> terms;  // intercept first when present
  double r2 = 0;
  double adj_r2 = 0;
  double f_stat = 0;
  double f_pvalue = 0;
  double aic = 0;
  double bic = 0;
  long n_obs = 0;
  int df_model = 0;  // number of slope parameters
};

/// Exact least squares on the named predictor subset with classical
/// inference: t p-values with n - df_model - 1 degrees of freedom, the F test
/// of all slopes, and Gaussian AIC/BIC (variance MLE, parameter count
/// includes the intercept).
RegressionReport ols_fit(const Dataset& d, const std::set<std::string>& subset,
                         bool intercept);

/// ols_fit against an arbitrary response vector (used by auxiliary
/// regressions where a predictor plays the response role).
RegressionReport ols_fit_vector(const Eigen::MatrixXd& X,
                                const Eigen::VectorXd& y,
                                const std::vector<std::string>& names,
                                bool intercept);

}  // namespace solar
