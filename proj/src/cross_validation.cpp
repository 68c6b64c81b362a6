#include "solar/cross_validation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "solar/coordinate_descent.hpp"
#include "solar/lars.hpp"

namespace solar {

namespace {

Eigen::MatrixXd centered(const Eigen::MatrixXd& X) {
  return X.rowwise() - X.colwise().mean();
}

double lambda_max_of(const Eigen::MatrixXd& Xc, const Eigen::VectorXd& yc) {
  return (Xc.transpose() * yc).cwiseAbs().maxCoeff() / double(Xc.rows());
}

struct FoldFit {
  // evaluates out-of-fold squared errors for one (alpha, lambda-grid) pass
  Eigen::MatrixXd Xt, Xv;
  Eigen::VectorXd yt, yv;
  double y_mean = 0;
};

FoldFit make_fold(const Dataset& d, const std::vector<int>& test_rows) {
  std::vector<char> is_test(size_t(d.n()), 0);
  for (int r : test_rows) is_test[size_t(r)] = 1;
  std::vector<int> train_rows;
  for (int r = 0; r < int(d.n()); ++r)
    if (!is_test[size_t(r)]) train_rows.push_back(r);

  FoldFit f;
  f.Xt.resize(Eigen::Index(train_rows.size()), d.p());
  f.yt.resize(Eigen::Index(train_rows.size()));
  for (size_t i = 0; i < train_rows.size(); ++i) {
    f.Xt.row(Eigen::Index(i)) = d.predictors.row(train_rows[i]);
    f.yt(Eigen::Index(i)) = d.response(train_rows[i]);
  }
  f.Xv.resize(Eigen::Index(test_rows.size()), d.p());
  f.yv.resize(Eigen::Index(test_rows.size()));
  for (size_t i = 0; i < test_rows.size(); ++i) {
    f.Xv.row(Eigen::Index(i)) = d.predictors.row(test_rows[i]);
    f.yv(Eigen::Index(i)) = d.response(test_rows[i]);
  }
  const Eigen::RowVectorXd x_mean = f.Xt.colwise().mean();
  f.y_mean = f.yt.mean();
  f.Xt.rowwise() -= x_mean;
  f.yt.array() -= f.y_mean;
  f.Xv.rowwise() -= x_mean;
  return f;
}

}  // namespace

std::vector<std::vector<int>> make_folds(int n, int folds, std::uint64_t seed) {
  if (folds < 2) throw ConfigError("cross-validation needs folds >= 2");
  if (n < 2 * folds) throw ConfigError("cross-validation needs n >= 2*folds");
  std::vector<int> idx(size_t(n));
  std::iota(idx.begin(), idx.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(idx.begin(), idx.end(), rng);
  std::vector<std::vector<int>> parts(size_t(folds));
  for (int i = 0; i < n; ++i) parts[size_t(i % folds)].push_back(idx[size_t(i)]);
  for (auto& part : parts) std::sort(part.begin(), part.end());
  return parts;
}

CvGrid make_grid(const Dataset& d, int n_lambda, double eps) {
  if (n_lambda < 2) throw ConfigError("make_grid: n_lambda must be >= 2");
  if (!(eps > 0 && eps < 1)) throw ConfigError("make_grid: eps must be in (0,1)");
  const Eigen::MatrixXd Xc = centered(d.predictors);
  const Eigen::VectorXd yc = d.response.array() - d.response.mean();
  const double lmax = lambda_max_of(Xc, yc);
  CvGrid g;
  g.lambda_values.resize(size_t(n_lambda));
  const double log_eps = std::log10(eps);
  for (int i = 0; i < n_lambda; ++i)
    g.lambda_values[size_t(i)] =
        lmax * std::pow(10.0, log_eps * double(i) / double(n_lambda - 1));
  g.alpha_values = {0.1, 0.3, 0.5, 0.7, 0.9, 1.0};
  return g;
}

int one_se_rule(const std::vector<double>& mean_errors,
                const std::vector<double>& std_errors) {
  if (mean_errors.empty() || mean_errors.size() != std_errors.size())
    throw ConfigError("one_se_rule: empty or mismatched inputs");
  size_t best = 0;
  for (size_t i = 1; i < mean_errors.size(); ++i)
    if (mean_errors[i] < mean_errors[best]) best = i;
  const double cutoff = mean_errors[best] + std_errors[best];
  for (size_t i = 0; i < mean_errors.size(); ++i)
    if (mean_errors[i] <= cutoff) return int(i);  // grid descends in lambda
  return int(best);
}

SelectionResult cv_select(const Dataset& d, CvSolver solver, const CvGrid& grid,
                          int folds, std::uint64_t seed,
                          std::vector<CvTracePoint>* trace) {
  const auto parts = make_folds(int(d.n()), folds, seed);
  const size_t n_lambda = grid.lambda_values.size();
  const std::vector<double> alphas =
      solver == CvSolver::kElasticNet ? grid.alpha_values
                                      : std::vector<double>{1.0};
  if (alphas.empty()) throw ConfigError("cv_select: empty alpha grid");

  std::vector<FoldFit> fits;
  fits.reserve(parts.size());
  for (const auto& part : parts) fits.push_back(make_fold(d, part));

  double best_err = std::numeric_limits<double>::infinity();
  double best_lambda = -1.0;
  double best_alpha = -1.0;
  if (trace) trace->clear();

  for (double alpha : alphas) {
    // mean squared prediction error per grid point across folds
    Eigen::MatrixXd errs(Eigen::Index(parts.size()), Eigen::Index(n_lambda));
    for (size_t f = 0; f < fits.size(); ++f) {
      const FoldFit& ff = fits[f];
      try {
        if (solver == CvSolver::kLarsLasso) {
          const SolutionPath path = detail::lars_core(
              ff.Xt, ff.yt, d.column_names, /*lasso=*/true, int(d.p()));
          for (size_t gi = 0; gi < n_lambda; ++gi) {
            const Eigen::VectorXd b =
                path.coefficients_at(grid.lambda_values[gi]);
            const Eigen::VectorXd resid =
                ff.yv.array() - ff.y_mean - (ff.Xv * b).array();
            errs(Eigen::Index(f), Eigen::Index(gi)) =
                resid.squaredNorm() / double(ff.yv.size());
          }
        } else {
          Eigen::VectorXd warm = Eigen::VectorXd::Zero(d.p());
          for (size_t gi = 0; gi < n_lambda; ++gi) {
            warm = detail::cd_core(ff.Xt, ff.yt, grid.lambda_values[gi], alpha,
                                   1e-8, 100000, &warm);
            const Eigen::VectorXd resid =
                ff.yv.array() - ff.y_mean - (ff.Xv * warm).array();
            errs(Eigen::Index(f), Eigen::Index(gi)) =
                resid.squaredNorm() / double(ff.yv.size());
          }
        }
      } catch (const SolverError& e) {
        throw SolverError("cv_select: fold " + std::to_string(f) +
                          ", alpha " + std::to_string(alpha) + ": " + e.what());
      }
    }
    for (size_t gi = 0; gi < n_lambda; ++gi) {
      const Eigen::VectorXd col = errs.col(Eigen::Index(gi));
      const double mean = col.mean();
      const double var =
          (col.array() - mean).square().sum() / double(col.size() - 1);
      const double se = std::sqrt(var / double(col.size()));
      if (trace)
        trace->push_back({grid.lambda_values[gi], alpha, mean, se});
      const double lam = grid.lambda_values[gi];
      bool better = mean < best_err;
      if (!better && mean == best_err)
        better = lam > best_lambda ||
                 (lam == best_lambda && alpha > best_alpha);
      if (better) {
        best_err = mean;
        best_lambda = lam;
        best_alpha = alpha;
      }
    }
  }

  // refit on the full data at the winner
  const Eigen::MatrixXd Xc = centered(d.predictors);
  const Eigen::VectorXd yc = d.response.array() - d.response.mean();
  Eigen::VectorXd beta;
  if (solver == CvSolver::kLarsLasso) {
    beta = detail::lars_core(Xc, yc, d.column_names, true, int(d.p()))
               .coefficients_at(best_lambda);
  } else {
    beta = detail::cd_core(Xc, yc, best_lambda, best_alpha, 1e-10, 200000);
  }

  SelectionResult out;
  out.method = solver == CvSolver::kLarsLasso      ? "cv-lars-lasso"
               : solver == CvSolver::kElasticNet   ? "cv-en"
                                                   : "cv-cd";
  for (Eigen::Index j = 0; j < d.p(); ++j)
    if (std::abs(beta(j)) > 1e-10)
      out.selected.push_back(d.column_names[size_t(j)]);
  out.n_selected = int(out.selected.size());
  out.hyperparameters["lambda"] = best_lambda;
  if (solver == CvSolver::kElasticNet) out.hyperparameters["alpha"] = best_alpha;
  out.hyperparameters["folds"] = double(folds);
  out.hyperparameters["seed"] = double(seed);
  out.hyperparameters["cv_error"] = best_err;
  return out;
}

std::string cv_trace_csv(const std::vector<CvTracePoint>& trace) {
  std::ostringstream os;
  os.precision(12);
  os << "lambda,alpha,mean_error,std_error\n";
  for (const auto& t : trace)
    os << t.lambda << "," << t.alpha << "," << t.mean_error << ","
       << t.std_error << "\n";
  return os.str();
}

}  // namespace solar
