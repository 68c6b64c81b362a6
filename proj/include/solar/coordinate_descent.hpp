#pragma once

#include <Eigen/Dense>

#include "solar/dataset.hpp"
#include "solar/errors.hpp"

namespace solar {

/// Thrown when coordinate descent fails to reach `tol` within max_iter
/// sweeps; carries the last iterate and its residual norm.
class CdNonConvergence : public SolverError {
 public:
  CdNonConvergence(std::string msg, Eigen::VectorXd last, double resid_norm)
      : SolverError(std::move(msg)),
        last_iterate(std::move(last)),
        residual_norm(resid_norm) {}
  Eigen::VectorXd last_iterate;
  double residual_norm;
};

/// Cyclic coordinate descent for (1/2n)||y - X b||^2 + lambda ||b||_1 on a
/// standardized dataset. Stops when the largest coefficient change in a full
/// sweep is below tol.
Eigen::VectorXd cd_lasso(const Dataset& d, double lambda, double tol = 1e-10,
                         int max_iter = 100000);

/// Elastic net: (1/2n)||y - X b||^2 + lambda (alpha ||b||_1
///              + (1-alpha) ||b||_2^2 / 2), alpha in [0, 1].
Eigen::VectorXd cd_elastic_net(const Dataset& d, double lambda, double alpha,
                               double tol = 1e-10, int max_iter = 100000);

namespace detail {
/// Core solver on centered data in the caller's units; warm-startable.
Eigen::VectorXd cd_core(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                        double lambda, double alpha, double tol, int max_iter,
                        const Eigen::VectorXd* warm_start = nullptr);
}  // namespace detail

}  // namespace solar
