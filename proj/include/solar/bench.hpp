#pragma once

#include <Eigen/Dense>
#include <map>
#include <string>
#include <vector>

#include "solar/cross_validation.hpp"
#include "solar/dataset.hpp"
#include "solar/solar.hpp"

namespace solar {

enum class CovarianceKind { kIdentity, kEquicorrelated, kPlantedGroup };

/// Synthetic Gaussian design: X ~ N(0, Sigma), y = X beta + noise.
struct DesignSpec {
  int n = 100;
  int p = 10;
  std::map<int, double> informative;  // index -> true coefficient
  CovarianceKind covariance = CovarianceKind::kIdentity;
  double rho = 0;                 // equicorrelated level
  std::vector<int> group;         // planted-group member indices
  double within_rho = 0;          // correlation inside the group
  double cross_rho = 0;           // group-to-rest correlation
  double noise_sd = 1.0;
  std::uint64_t seed = 0;
};

struct MethodMetrics {
  std::string method;
  double mean_n_selected = 0;
  std::vector<double> selection_frequency;  // per variable, in [0,1]
  double true_positive_rate = 0;
  double false_positive_rate = 0;
  int completed_replications = 0;
};

struct StabilityMetrics {
  std::vector<MethodMetrics> per_method;
  // audit trail: per method, per replication, the selected indices
  std::map<std::string, std::vector<std::vector<int>>> selections;
  std::vector<std::string> errors;  // replication failures, run continues
  std::uint64_t seed = 0;
  int replications = 0;
};

Eigen::MatrixXd covariance_matrix(const DesignSpec& spec);

/// Draws the design; deterministic in spec.seed. Column names x1..xp,
/// response named y.
Dataset generate(const DesignSpec& spec);

struct BenchMethodConfig {
  int folds = 10;
  int n_lambda = 100;
  double grid_eps = 1e-3;
  SolarConfig solar;
};

/// Runs each method on `replications` regenerated datasets (seeds derived by
/// counter from the master seed) and aggregates selection metrics.
StabilityMetrics stability_experiment(const DesignSpec& spec,
                                      const std::vector<std::string>& methods,
                                      int replications, std::uint64_t seed,
                                      const BenchMethodConfig& cfg = {});

std::string metrics_csv(const StabilityMetrics& m);
std::string selections_csv(const StabilityMetrics& m);

}  // namespace solar
