#include "solar/lars.hpp"

#include <Eigen/Cholesky>
#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "solar/errors.hpp"

namespace solar {

namespace {

constexpr double kTieEps = 1e-12;
constexpr double kStepEps = 1e-12;

void require_standardized(const Dataset& d, const char* op) {
  if (!d.standardized)
    throw SolverError(std::string(op) + " requires a standardized dataset");
}

}  // namespace

Eigen::VectorXd SolutionPath::coefficients_at(double lambda) const {
  const size_t m = knot_lambdas.size();
  if (m == 0) throw SolverError("empty solution path");
  const Eigen::Index p = knot_betas.front().size();
  if (lambda >= knot_lambdas.front()) return Eigen::VectorXd::Zero(p);
  for (size_t k = 0; k + 1 < m; ++k) {
    const double l0 = knot_lambdas[k], l1 = knot_lambdas[k + 1];
    if (lambda <= l0 && lambda >= l1) {
      if (l0 - l1 < 1e-15) return knot_betas[k + 1];
      const double t = (l0 - lambda) / (l0 - l1);
      return knot_betas[k] + t * (knot_betas[k + 1] - knot_betas[k]);
    }
  }
  return knot_betas.back();
}

namespace detail {

SolutionPath lars_core(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                       const std::vector<std::string>& names, bool lasso,
                       int max_steps) {
  const Eigen::Index n = X.rows();
  const Eigen::Index p = X.cols();

  SolutionPath path;
  path.names = names;

  Eigen::VectorXd beta = Eigen::VectorXd::Zero(p);
  Eigen::VectorXd mu = Eigen::VectorXd::Zero(n);
  std::vector<int> active;
  Eigen::VectorXd signs = Eigen::VectorXd::Zero(p);
  std::set<int> just_dropped;

  Eigen::VectorXd c = X.transpose() * y;
  const double lambda0 = c.cwiseAbs().maxCoeff() / double(n);
  path.knot_lambdas.push_back(lambda0);
  path.knot_betas.push_back(beta);

  int entries = 0;
  int step = 0;
  const int hard_cap = lasso ? 32 * int(p) + 64 : max_steps;

  while (step < hard_cap) {
    ++step;
    c = X.transpose() * (y - mu);
    const double cmax = c.cwiseAbs().maxCoeff();
    if (cmax < 1e-12 * std::max(1.0, double(n))) break;
    const double lambda_here = cmax / double(n);

    // admit every inactive variable tied at the maximal correlation
    bool admitted = false;
    for (Eigen::Index j = 0; j < p; ++j) {
      if (std::find(active.begin(), active.end(), int(j)) != active.end())
        continue;
      if (just_dropped.count(int(j))) continue;
      if (std::abs(c(j)) >= cmax * (1.0 - kTieEps)) {
        active.push_back(int(j));
        signs(j) = c(j) >= 0 ? 1.0 : -1.0;
        if (!path.entry_rank.count(names[size_t(j)])) {
          path.entry_rank[names[size_t(j)]] = ++entries;
        }
        PathEvent ev;
        ev.step = step;
        ev.variable = names[size_t(j)];
        ev.action = PathAction::kEnter;
        ev.lambda = lambda_here;
        ev.coefficients = beta;
        path.steps.push_back(std::move(ev));
        admitted = true;
      }
    }
    just_dropped.clear();
    if (active.empty()) break;
    (void)admitted;

    const int m = int(active.size());
    // equiangular direction: u = X_A S w with w = A_A * (S X_A' X_A S)^{-1} 1
    Eigen::MatrixXd XA(n, m);
    for (int i = 0; i < m; ++i)
      XA.col(i) = X.col(active[size_t(i)]) * signs(active[size_t(i)]);
    const Eigen::MatrixXd G = XA.transpose() * XA;
    Eigen::LDLT<Eigen::MatrixXd> ldlt(G);
    if (ldlt.info() != Eigen::Success)
      throw SolverError("LARS: active Gram matrix is singular");
    const Eigen::VectorXd ginv1 = ldlt.solve(Eigen::VectorXd::Ones(m));
    const double denom = ginv1.sum();
    if (denom <= 0)
      throw SolverError("LARS: active Gram matrix is not positive definite");
    const double AA = 1.0 / std::sqrt(denom);
    const Eigen::VectorXd w = AA * ginv1;
    const Eigen::VectorXd u = XA * w;
    const Eigen::VectorXd a = X.transpose() * u;

    double gamma;
    if (m == int(p)) {
      gamma = cmax / AA;
    } else {
      gamma = cmax / AA;  // never step past the joint least-squares point
      for (Eigen::Index j = 0; j < p; ++j) {
        if (std::find(active.begin(), active.end(), int(j)) != active.end())
          continue;
        const double d1 = AA - a(j), d2 = AA + a(j);
        if (d1 > kStepEps) {
          const double t = (cmax - c(j)) / d1;
          if (t > kStepEps && t < gamma) gamma = t;
        }
        if (d2 > kStepEps) {
          const double t = (cmax + c(j)) / d2;
          if (t > kStepEps && t < gamma) gamma = t;
        }
      }
    }

    // lasso modification: stop at the first sign change inside the active set
    std::vector<int> drops;
    if (lasso) {
      double gamma_drop = gamma;
      for (int i = 0; i < m; ++i) {
        const double dir = signs(active[size_t(i)]) * w(i);
        if (dir == 0) continue;
        const double t = -beta(active[size_t(i)]) / dir;
        if (t > kStepEps && t < gamma_drop - kTieEps) {
          gamma_drop = t;
          drops.assign(1, active[size_t(i)]);
        } else if (t > kStepEps && std::abs(t - gamma_drop) <= kTieEps &&
                   !drops.empty()) {
          drops.push_back(active[size_t(i)]);
        }
      }
      if (!drops.empty()) gamma = gamma_drop;
    }

    for (int i = 0; i < m; ++i)
      beta(active[size_t(i)]) += gamma * signs(active[size_t(i)]) * w(i);
    mu += gamma * u;

    const double lambda_after = std::max(0.0, (cmax - gamma * AA) / double(n));
    path.knot_lambdas.push_back(lambda_after);
    path.knot_betas.push_back(beta);

    if (!drops.empty()) {
      for (int j : drops) {
        beta(j) = 0.0;
        active.erase(std::find(active.begin(), active.end(), j));
        signs(j) = 0.0;
        just_dropped.insert(j);
        PathEvent ev;
        ev.step = step;
        ev.variable = names[size_t(j)];
        ev.action = PathAction::kDrop;
        ev.lambda = lambda_after;
        ev.coefficients = beta;
        path.steps.push_back(std::move(ev));
      }
      // rewrite the knot so snapshots at this lambda agree exactly
      path.knot_betas.back() = beta;
    }

    if (!lasso && entries >= max_steps) break;
    if (lambda_after <= 1e-15) break;
  }
  return path;
}

}  // namespace detail

SolutionPath lars_path(const Dataset& d, int max_steps) {
  require_standardized(d, "lars_path");
  const int limit = int(std::min<Eigen::Index>(d.p(), d.n() - 1));
  if (max_steps < 1 || max_steps > limit)
    throw ConfigError("lars_path: max_steps must be in [1, min(p, n-1)]");
  return detail::lars_core(d.predictors, d.response, d.column_names,
                           /*lasso=*/false, max_steps);
}

SolutionPath lasso_lars_path(const Dataset& d) {
  require_standardized(d, "lasso_lars_path");
  return detail::lars_core(d.predictors, d.response, d.column_names,
                           /*lasso=*/true, int(d.p()));
}

}  // namespace solar
