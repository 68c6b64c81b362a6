#pragma once

#include <Eigen/Dense>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "solar/errors.hpp"

namespace solar {

/// A numeric regression dataset: named predictor columns plus one response.
/// Instances are immutable after construction; transformations return copies.
struct Dataset {
  std::vector<std::string> column_names;  // predictor names, header order
  Eigen::MatrixXd predictors;             // n x p
  Eigen::VectorXd response;               // n
  std::string response_name;
  bool standardized = false;
  // per-column (mean, scale) for predictors, then the response as last entry;
  // populated by standardize() so the inverse transform is recoverable
  std::vector<std::pair<double, double>> transform_record;
  int dropped_rows = 0;  // incomplete rows discarded at ingestion

  Eigen::Index n() const { return predictors.rows(); }
  Eigen::Index p() const { return predictors.cols(); }

  int column_index(const std::string& name) const;
  bool has_column(const std::string& name) const;

  /// Row subset (indices must be valid); keeps names and flags.
  Dataset slice_rows(const std::vector<int>& rows) const;
};

struct CorrelationMatrix {
  std::vector<std::string> names;
  Eigen::MatrixXd values;  // p x p, symmetric, unit diagonal

  double operator()(const std::string& a, const std::string& b) const;
};

/// Reads an RFC-4180-style CSV with a header row. Rows containing empty or
/// non-numeric cells are dropped and counted in Dataset::dropped_rows.
Dataset load_csv(const std::string& path, const std::string& response_name);

/// Centers every column (and the response) to mean 0 and scales to sample
/// standard deviation 1 (divisor n-1). Rejects constant columns by name.
Dataset standardize(const Dataset& d);

/// Pearson correlations over all predictor pairs, computed on the values as
/// given (standardization does not change the result).
CorrelationMatrix correlation_matrix(const Dataset& d);

/// Correlation of `var` with every other predictor, sorted descending by
/// absolute value. With `threshold`, only entries with |r| >= threshold.
std::vector<std::pair<std::string, double>> marginal_correlations(
    const Dataset& d, const std::string& var,
    std::optional<double> threshold = std::nullopt);

/// Deterministic disjoint row partition: first part gets floor(fraction*n)
/// rows. Both parts must end up with at least 2 rows.
std::pair<Dataset, Dataset> split(const Dataset& d, double fraction,
                                  std::uint64_t seed);

std::string to_csv(const CorrelationMatrix& cm);

}  // namespace solar
