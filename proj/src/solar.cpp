#include "solar/solar.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "solar/lars.hpp"
#include "solar/ols.hpp"

namespace solar {

namespace {

// per-subsample stream so results do not depend on evaluation order
std::mt19937_64 subsample_rng(std::uint64_t seed, int k) {
  std::seed_seq seq{std::uint32_t(seed), std::uint32_t(seed >> 32),
                    std::uint32_t(k), 0x5f3759dfu};
  return std::mt19937_64(seq);
}

Eigen::VectorXd ols_val_predictions(const Eigen::MatrixXd& Xt,
                                    const Eigen::VectorXd& yt,
                                    const Eigen::MatrixXd& Xv) {
  Eigen::MatrixXd A(Xt.rows(), Xt.cols() + 1);
  A.col(0).setOnes();
  A.rightCols(Xt.cols()) = Xt;
  Eigen::MatrixXd B(Xv.rows(), Xv.cols() + 1);
  B.col(0).setOnes();
  B.rightCols(Xv.cols()) = Xv;
  const Eigen::VectorXd b = A.colPivHouseholderQr().solve(yt);
  return B * b;
}

}  // namespace

std::vector<std::vector<int>> generate_subsamples(int n, int p, int K,
                                                  double omit_fraction,
                                                  std::uint64_t seed) {
  if (K < 2) throw ConfigError("generate_subsamples: K must be >= 2");
  if (omit_fraction < 0 || omit_fraction >= 1)
    throw ConfigError("generate_subsamples: omit_fraction must be in [0,1)");
  const int omit = int(std::ceil(omit_fraction * double(n)));
  const int kept = n - omit;
  if (kept < p + 2)
    throw ConfigError("generate_subsamples: subsample size " +
                      std::to_string(kept) + " is below p + 2 = " +
                      std::to_string(p + 2));
  std::vector<std::vector<int>> out(size_t(K));
  for (int k = 0; k < K; ++k) {
    std::vector<int> idx(size_t(n));
    std::iota(idx.begin(), idx.end(), 0);
    auto rng = subsample_rng(seed, k);
    std::shuffle(idx.begin(), idx.end(), rng);
    out[size_t(k)].assign(idx.begin(), idx.begin() + kept);
    std::sort(out[size_t(k)].begin(), out[size_t(k)].end());
  }
  return out;
}

Eigen::VectorXd entry_ranks(const Dataset& d, const std::vector<int>& subsample) {
  const Dataset slice = d.slice_rows(subsample);
  Dataset z;
  try {
    Dataset raw = slice;
    raw.standardized = false;  // slices of standardized data are re-scaled
    z = standardize(raw);
  } catch (const DataError& e) {
    throw SolverError(std::string("entry_ranks: ") + e.what());
  }
  const int p = int(d.p());
  const int max_steps = std::min<int>(p, int(subsample.size()) - 1);
  const SolutionPath path =
      detail::lars_core(z.predictors, z.response, z.column_names,
                        /*lasso=*/false, max_steps);
  Eigen::VectorXd ranks(p);
  for (int j = 0; j < p; ++j) {
    auto it = path.entry_rank.find(d.column_names[size_t(j)]);
    ranks(j) = it != path.entry_rank.end() ? double(it->second) : double(p + 1);
  }
  return ranks;
}

QHatRanking compute_qhat(const Eigen::MatrixXd& ranks,
                         const std::vector<std::string>& names,
                         QhatNormalization normalization, int q_bar) {
  const int K = int(ranks.rows());
  const int p = int(ranks.cols());
  if (K == 0 || p == 0) throw ConfigError("compute_qhat: empty rank matrix");
  if (q_bar < 1 || q_bar > p)
    throw ConfigError("compute_qhat: q_bar must be in [1, p]");

  QHatRanking out;
  out.names = names;
  out.subsample_ranks = ranks;
  for (int j = 0; j < p; ++j) {
    double sum = 0;
    for (int k = 0; k < K; ++k) {
      const double r = ranks(k, j);
      if (normalization == QhatNormalization::kRankLinear)
        sum += std::max(0.0, double(p + 1) - r) / double(p);
      else
        sum += r <= double(q_bar) ? 1.0 : 0.0;
    }
    out.qhat[names[size_t(j)]] = sum / double(K);
  }

  std::vector<double> values;
  for (const auto& [_, v] : out.qhat) values.push_back(v);
  std::sort(values.begin(), values.end(), std::greater<>());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  for (double c : values) {
    LadderEntry e;
    e.c = c;
    std::vector<std::pair<double, std::string>> members;
    for (const auto& [nm, v] : out.qhat)
      if (v >= c) members.emplace_back(v, nm);
    std::stable_sort(members.begin(), members.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    for (const auto& [v, nm] : members) e.members.push_back(nm);
    out.ladder.push_back(std::move(e));
  }
  return out;
}

QHatRanking select_c_star(const Dataset& d_train, const Dataset& d_val,
                          QHatRanking ranking) {
  if (ranking.ladder.empty())
    throw ConfigError("select_c_star: empty ladder");
  double best_err = std::numeric_limits<double>::infinity();
  double best_c = ranking.ladder.front().c;
  for (const auto& entry : ranking.ladder) {  // descending c: sparser first
    Eigen::MatrixXd Xt(d_train.n(), Eigen::Index(entry.members.size()));
    Eigen::MatrixXd Xv(d_val.n(), Eigen::Index(entry.members.size()));
    for (size_t j = 0; j < entry.members.size(); ++j) {
      const int cj = d_train.column_index(entry.members[j]);
      Xt.col(Eigen::Index(j)) = d_train.predictors.col(cj);
      Xv.col(Eigen::Index(j)) = d_val.predictors.col(cj);
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> probe(Xt);
    probe.setThreshold(1e-10);
    if (probe.rank() < Xt.cols()) {
      ranking.warnings.push_back("Q(c) rank-deficient at c = " +
                                 std::to_string(entry.c) + ", skipped");
      continue;
    }
    const Eigen::VectorXd pred = ols_val_predictions(Xt, d_train.response, Xv);
    const double mse =
        (d_val.response - pred).squaredNorm() / double(d_val.n());
    if (mse < best_err) {  // ties keep the earlier (larger) c
      best_err = mse;
      best_c = entry.c;
    }
  }
  ranking.c_star = best_c;
  for (const auto& entry : ranking.ladder)
    if (entry.c == best_c) ranking.selected = entry.members;
  return ranking;
}

std::pair<SelectionResult, QHatRanking> solar_fit(const Dataset& d,
                                                  const SolarConfig& config) {
  if (!(config.val_fraction > 0 && config.val_fraction < 1))
    throw ConfigError("solar_fit: val_fraction must be in (0,1)");
  auto [train, val] = split(d, 1.0 - config.val_fraction, config.seed);
  const auto subs = generate_subsamples(int(train.n()), int(train.p()),
                                        config.subsamples, config.omit_fraction,
                                        config.seed);
  Eigen::MatrixXd ranks(config.subsamples, d.p());
  for (int k = 0; k < config.subsamples; ++k) {
    try {
      ranks.row(k) = entry_ranks(train, subs[size_t(k)]).transpose();
    } catch (const SolverError& e) {
      throw SolverError("solar_fit: subsample " + std::to_string(k) + ": " +
                        e.what());
    }
  }
  QHatRanking ranking = compute_qhat(ranks, d.column_names,
                                     config.normalization, config.q_bar);
  ranking.config = config;
  ranking = select_c_star(train, val, std::move(ranking));

  SelectionResult sel;
  sel.method = "solar";
  // report in column order for stable artifacts
  for (const auto& nm : d.column_names)
    if (std::find(ranking.selected.begin(), ranking.selected.end(), nm) !=
        ranking.selected.end())
      sel.selected.push_back(nm);
  sel.n_selected = int(sel.selected.size());
  sel.hyperparameters["K"] = double(config.subsamples);
  sel.hyperparameters["omit_fraction"] = config.omit_fraction;
  sel.hyperparameters["q_bar"] = double(config.q_bar);
  sel.hyperparameters["val_fraction"] = config.val_fraction;
  sel.hyperparameters["seed"] = double(config.seed);
  sel.hyperparameters["c_star"] = ranking.c_star;
  sel.hyperparameters["normalization"] =
      config.normalization == QhatNormalization::kRankLinear ? 0.0 : 1.0;
  return {sel, ranking};
}

std::string ranks_csv(const QHatRanking& r) {
  std::ostringstream os;
  os << "subsample";
  for (const auto& nm : r.names) os << "," << nm;
  os << "\n";
  for (Eigen::Index k = 0; k < r.subsample_ranks.rows(); ++k) {
    os << k;
    for (Eigen::Index j = 0; j < r.subsample_ranks.cols(); ++j)
      os << "," << int(r.subsample_ranks(k, j));
    os << "\n";
  }
  return os.str();
}

}  // namespace solar
