#include "solar/bench.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

namespace solar {

namespace {

std::uint64_t replication_seed(std::uint64_t master, int r) {
  return master * 0x100000001b3ULL + std::uint64_t(r) + 1;
}

}  // namespace

Eigen::MatrixXd covariance_matrix(const DesignSpec& spec) {
  Eigen::MatrixXd S = Eigen::MatrixXd::Identity(spec.p, spec.p);
  switch (spec.covariance) {
    case CovarianceKind::kIdentity:
      break;
    case CovarianceKind::kEquicorrelated:
      for (int i = 0; i < spec.p; ++i)
        for (int j = 0; j < spec.p; ++j)
          if (i != j) S(i, j) = spec.rho;
      break;
    case CovarianceKind::kPlantedGroup: {
      std::vector<char> in_group(size_t(spec.p), 0);
      for (int g : spec.group) {
        if (g < 0 || g >= spec.p)
          throw ConfigError("planted group index out of range");
        in_group[size_t(g)] = 1;
      }
      for (int i = 0; i < spec.p; ++i)
        for (int j = 0; j < spec.p; ++j) {
          if (i == j) continue;
          if (in_group[size_t(i)] && in_group[size_t(j)])
            S(i, j) = spec.within_rho;
          else if (in_group[size_t(i)] || in_group[size_t(j)])
            S(i, j) = spec.cross_rho;
        }
      break;
    }
  }
  return S;
}

Dataset generate(const DesignSpec& spec) {
  if (spec.n < 4 || spec.p < 1) throw ConfigError("generate: n or p too small");
  for (const auto& [idx, coef] : spec.informative)
    if (idx < 0 || idx >= spec.p)
      throw ConfigError("generate: informative index out of range");

  const Eigen::MatrixXd S = covariance_matrix(spec);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eigs(S);
  if (eigs.eigenvalues().minCoeff() <= 1e-10)
    throw ConfigError("generate: covariance is not positive definite");
  const Eigen::MatrixXd L = Eigen::LLT<Eigen::MatrixXd>(S).matrixL();

  std::mt19937_64 rng(spec.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd Z(spec.n, spec.p);
  for (int i = 0; i < spec.n; ++i)
    for (int j = 0; j < spec.p; ++j) Z(i, j) = gauss(rng);
  Dataset d;
  d.predictors = Z * L.transpose();
  Eigen::VectorXd beta = Eigen::VectorXd::Zero(spec.p);
  for (const auto& [idx, coef] : spec.informative) beta(idx) = coef;
  d.response = d.predictors * beta;
  for (int i = 0; i < spec.n; ++i) d.response(i) += spec.noise_sd * gauss(rng);
  for (int j = 0; j < spec.p; ++j)
    d.column_names.push_back("x" + std::to_string(j + 1));
  d.response_name = "y";
  return d;
}

StabilityMetrics stability_experiment(const DesignSpec& spec,
                                      const std::vector<std::string>& methods,
                                      int replications, std::uint64_t seed,
                                      const BenchMethodConfig& cfg) {
  if (replications < 2)
    throw ConfigError("stability_experiment: replications must be >= 2");

  StabilityMetrics out;
  out.seed = seed;
  out.replications = replications;
  std::vector<char> truth(size_t(spec.p), 0);
  int n_true = 0;
  for (const auto& [idx, coef] : spec.informative)
    if (coef != 0) {
      truth[size_t(idx)] = 1;
      ++n_true;
    }

  for (const auto& method : methods) {
    out.selections[method].resize(size_t(replications));
  }
  std::map<std::string, std::set<int>> failed;

  for (int r = 0; r < replications; ++r) {
    DesignSpec rs = spec;
    rs.seed = replication_seed(seed, r);
    Dataset d;
    try {
      d = generate(rs);
    } catch (const std::exception& e) {
      out.errors.push_back("replication " + std::to_string(r) + ": " + e.what());
      for (const auto& method : methods) failed[method].insert(r);
      continue;
    }
    for (const auto& method : methods) {
      try {
        std::vector<std::string> picked;
        if (method == "solar") {
          SolarConfig sc = cfg.solar;
          sc.seed = rs.seed;
          picked = solar_fit(d, sc).first.selected;
        } else {
          const CvGrid grid = make_grid(d, cfg.n_lambda, cfg.grid_eps);
          const CvSolver sv = method == "cv-cd" ? CvSolver::kCoordinateDescent
                              : method == "cv-en" ? CvSolver::kElasticNet
                                                  : CvSolver::kLarsLasso;
          picked = cv_select(d, sv, grid, cfg.folds, rs.seed).selected;
        }
        std::vector<int> idxs;
        for (const auto& nm : picked) idxs.push_back(d.column_index(nm));
        std::sort(idxs.begin(), idxs.end());
        out.selections[method][size_t(r)] = std::move(idxs);
      } catch (const std::exception& e) {
        out.errors.push_back("replication " + std::to_string(r) + ", method " +
                             method + ": " + e.what());
        failed[method].insert(r);
      }
    }
  }

  for (const auto& method : methods) {
    MethodMetrics m;
    m.method = method;
    m.selection_frequency.assign(size_t(spec.p), 0.0);
    double total = 0, tpr = 0, fpr = 0;
    int done = 0;
    const auto& reps = out.selections[method];
    for (int r = 0; r < replications; ++r) {
      const auto& sel = reps[size_t(r)];
      if (failed[method].count(r)) continue;
      ++done;
      total += double(sel.size());
      int tp = 0, fp = 0;
      for (int j : sel) {
        if (truth[size_t(j)]) ++tp; else ++fp;
        m.selection_frequency[size_t(j)] += 1.0;
      }
      if (n_true > 0) tpr += double(tp) / double(n_true);
      if (spec.p - n_true > 0) fpr += double(fp) / double(spec.p - n_true);
    }
    if (done > 0) {
      m.mean_n_selected = total / double(done);
      m.true_positive_rate = tpr / double(done);
      m.false_positive_rate = fpr / double(done);
      for (auto& f : m.selection_frequency) f /= double(done);
    }
    m.completed_replications = done;
    out.per_method.push_back(std::move(m));
  }
  return out;
}

std::string metrics_csv(const StabilityMetrics& m) {
  std::ostringstream os;
  os.precision(10);
  os << "method,mean_n_selected,tpr,fpr,completed\n";
  for (const auto& pm : m.per_method)
    os << pm.method << "," << pm.mean_n_selected << "," << pm.true_positive_rate
       << "," << pm.false_positive_rate << "," << pm.completed_replications
       << "\n";
  return os.str();
}

std::string selections_csv(const StabilityMetrics& m) {
  std::ostringstream os;
  os << "method,replication,selected_indices\n";
  for (const auto& [method, reps] : m.selections) {
    for (size_t r = 0; r < reps.size(); ++r) {
      os << method << "," << r << ",";
      for (size_t i = 0; i < reps[r].size(); ++i) {
        if (i) os << ";";
        os << reps[r][i];
      }
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace solar
