#include "solar/coordinate_descent.hpp"

#include <cmath>

namespace solar {

namespace detail {

Eigen::VectorXd cd_core(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                        double lambda, double alpha, double tol, int max_iter,
                        const Eigen::VectorXd* warm_start) {
  const Eigen::Index n = X.rows();
  const Eigen::Index p = X.cols();
  Eigen::VectorXd beta =
      warm_start ? *warm_start : Eigen::VectorXd::Zero(p);
  const Eigen::VectorXd col_ms = X.colwise().squaredNorm() / double(n);
  Eigen::VectorXd r = y - X * beta;

  for (int it = 0; it < max_iter; ++it) {
    double max_change = 0.0;
    for (Eigen::Index j = 0; j < p; ++j) {
      const double bj = beta(j);
      const double rho = X.col(j).dot(r) / double(n) + col_ms(j) * bj;
      const double thr = lambda * alpha;
      double bn = 0.0;
      if (rho > thr)
        bn = (rho - thr) / (col_ms(j) + lambda * (1.0 - alpha));
      else if (rho < -thr)
        bn = (rho + thr) / (col_ms(j) + lambda * (1.0 - alpha));
      if (bn != bj) {
        r += X.col(j) * (bj - bn);
        beta(j) = bn;
        max_change = std::max(max_change, std::abs(bn - bj));
      }
    }
    if (max_change < tol) return beta;
  }
  throw CdNonConvergence("coordinate descent did not converge within " +
                             std::to_string(max_iter) + " sweeps",
                         beta, r.norm());
}

}  // namespace detail

namespace {

void check_inputs(const Dataset& d, double lambda, double tol,
                  const char* op) {
  if (!d.standardized)
    throw SolverError(std::string(op) + " requires a standardized dataset");
  if (lambda < 0) throw ConfigError(std::string(op) + ": lambda must be >= 0");
  if (!(tol > 0)) throw ConfigError(std::string(op) + ": tol must be > 0");
}

}  // namespace

Eigen::VectorXd cd_lasso(const Dataset& d, double lambda, double tol,
                         int max_iter) {
  check_inputs(d, lambda, tol, "cd_lasso");
  return detail::cd_core(d.predictors, d.response, lambda, 1.0, tol, max_iter);
}

Eigen::VectorXd cd_elastic_net(const Dataset& d, double lambda, double alpha,
                               double tol, int max_iter) {
  check_inputs(d, lambda, tol, "cd_elastic_net");
  if (alpha < 0 || alpha > 1)
    throw ConfigError("cd_elastic_net: alpha must be in [0,1]");
  return detail::cd_core(d.predictors, d.response, lambda, alpha, tol,
                         max_iter);
}

}  // namespace solar
