#include "solar/ols.hpp"

#include <Eigen/QR>
#include <cmath>
#include <numbers>

#include "solar/distributions.hpp"
#include "solar/errors.hpp"

namespace solar {

RegressionReport ols_fit_vector(const Eigen::MatrixXd& X,
                                const Eigen::VectorXd& y,
                                const std::vector<std::string>& names,
                                bool intercept) {
  const Eigen::Index n = X.rows();
  const Eigen::Index p = X.cols();
  const Eigen::Index k = p + (intercept ? 1 : 0);
  if (k >= n) throw SolverError("subset too large: need fewer parameters than observations");

  Eigen::MatrixXd design(n, k);
  std::vector<std::string> term_names;
  if (intercept) {
    design.col(0).setOnes();
    term_names.push_back("const");
  }
  for (Eigen::Index j = 0; j < p; ++j) {
    design.col(j + (intercept ? 1 : 0)) = X.col(j);
    term_names.push_back(names[size_t(j)]);
  }

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  qr.setThreshold(1e-10);
  if (qr.rank() < k) {
    // pivot columns past the numerical rank are linear combinations of the rest
    const auto perm = qr.colsPermutation().indices();
    std::string dep = term_names[size_t(perm(qr.rank()))];
    throw SolverError("rank-deficient design: column '" + dep +
                      "' is linearly dependent");
  }

  const Eigen::VectorXd beta = qr.solve(y);
  const Eigen::VectorXd resid = y - design * beta;
  const double rss = resid.squaredNorm();
  const double dof = double(n - k);
  const double sigma2 = rss / dof;

  const Eigen::MatrixXd xtx_inv =
      (design.transpose() * design).ldlt().solve(Eigen::MatrixXd::Identity(k, k));

  RegressionReport rep;
  rep.n_obs = long(n);
  rep.df_model = int(p);
  for (Eigen::Index j = 0; j < k; ++j) {
    RegressionTerm t;
    t.name = term_names[size_t(j)];
    t.coefficient = beta(j);
    t.std_error = std::sqrt(sigma2 * xtx_inv(j, j));
    t.t_value = t.std_error > 0 ? t.coefficient / t.std_error : 0.0;
    t.p_value = t.std_error > 0 ? two_sided_t_pvalue(t.t_value, dof) : 0.0;
    rep.terms.push_back(std::move(t));
  }

  double tss;
  if (intercept) {
    const double ym = y.mean();
    tss = (y.array() - ym).square().sum();
  } else {
    tss = y.squaredNorm();
  }
  rep.r2 = tss > 0 ? 1.0 - rss / tss : 1.0;
  const double adj_den = intercept ? double(n - 1) : double(n);
  rep.adj_r2 = 1.0 - (1.0 - rep.r2) * adj_den / dof;
  if (p > 0 && rep.r2 < 1.0) {
    rep.f_stat = (rep.r2 / double(p)) / ((1.0 - rep.r2) / dof);
    rep.f_pvalue = f_upper_tail(rep.f_stat, double(p), dof);
  } else {
    rep.f_stat = rep.r2 >= 1.0 ? std::numeric_limits<double>::infinity() : 0.0;
    rep.f_pvalue = rep.r2 >= 1.0 ? 0.0 : 1.0;
  }
  // Gaussian log-likelihood with the variance MLE; parameter count includes
  // the intercept but not sigma (matches the conventional regression report)
  const double ll =
      -0.5 * double(n) * (std::log(2.0 * std::numbers::pi * rss / double(n)) + 1.0);
  rep.aic = 2.0 * double(k) - 2.0 * ll;
  rep.bic = double(k) * std::log(double(n)) - 2.0 * ll;
  return rep;
}

RegressionReport ols_fit(const Dataset& d, const std::set<std::string>& subset,
                         bool intercept) {
  std::vector<std::string> names;
  for (const auto& nm : d.column_names)
    if (subset.count(nm)) names.push_back(nm);
  if (names.size() != subset.size())
    for (const auto& nm : subset)
      if (!d.has_column(nm)) throw DataError("unknown column: " + nm);

  Eigen::MatrixXd X(d.n(), Eigen::Index(names.size()));
  for (size_t j = 0; j < names.size(); ++j)
    X.col(Eigen::Index(j)) = d.predictors.col(d.column_index(names[j]));
  return ols_fit_vector(X, d.response, names, intercept);
}

}  // namespace solar
