#pragma once

#include <Eigen/Dense>
#include <map>
#include <string>
#include <vector>

#include "solar/cross_validation.hpp"
#include "solar/dataset.hpp"

namespace solar {

enum class QhatNormalization { kRankLinear, kTopQIndicator };

struct SolarConfig {
  int subsamples = 45;          // K
  double omit_fraction = 0.1;   // rows omitted per subsample
  QhatNormalization normalization = QhatNormalization::kRankLinear;
  int q_bar = 4;                // top-q indicator cutoff
  double val_fraction = 0.2;    // validation share for c* selection
  std::uint64_t seed = 0;
};

struct LadderEntry {
  double c = 0;
  std::vector<std::string> members;  // Q(c), ordered by descending qhat
};

struct QHatRanking {
  std::vector<std::string> names;
  std::map<std::string, double> qhat;
  std::vector<LadderEntry> ladder;   // strictly descending c, strictly nested
  double c_star = 0;
  std::vector<std::string> selected;  // Q(c_star)
  Eigen::MatrixXd subsample_ranks;    // K x p entry ranks, for audit
  SolarConfig config;
  std::vector<std::string> warnings;  // skipped ladder values etc.
};

/// K row-index sets, each omitting ceil(omit_fraction * n) distinct rows,
/// drawn independently per subsample and deterministic in seed. Every
/// subsample must keep at least p + 2 rows.
std::vector<std::vector<int>> generate_subsamples(int n, int p, int K,
                                                  double omit_fraction,
                                                  std::uint64_t seed);

/// LARS first-entry steps on a subsample slice (standardized internally).
/// Variables the path never reaches get rank p + 1.
Eigen::VectorXd entry_ranks(const Dataset& d, const std::vector<int>& subsample);

/// Averaged entry scores and the threshold ladder. Rank-linear mode scores
/// (p + 1 - r) / p per subsample; indicator mode scores 1 when r <= q_bar.
QHatRanking compute_qhat(const Eigen::MatrixXd& ranks,
                         const std::vector<std::string>& names,
                         QhatNormalization normalization, int q_bar);

/// Completes the ranking: for each ladder value c, OLS on Q(c) over the
/// training rows, validation MSE on the held-out rows; c* minimizes the
/// error with ties broken toward larger c (the sparser set).
QHatRanking select_c_star(const Dataset& d_train, const Dataset& d_val,
                          QHatRanking ranking);

/// The full pipeline: split -> subsamples -> per-subsample entry ranks ->
/// qhat -> c*. Subsample ranking standardizes internally, so the result is
/// invariant to positive rescaling of the input columns.
std::pair<SelectionResult, QHatRanking> solar_fit(const Dataset& d,
                                                  const SolarConfig& config);

std::string ranks_csv(const QHatRanking& r);

}  // namespace solar
