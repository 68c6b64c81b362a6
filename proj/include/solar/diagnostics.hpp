#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "solar/cross_validation.hpp"
#include "solar/dataset.hpp"
#include "solar/ols.hpp"

namespace solar {

/// Auxiliary regression of one predictor on a set of others, on standardized
/// values; the L1 norm of the slopes is the irrepresentable-condition check.
struct IrcReport {
  std::string target;
  std::vector<std::string> regressors;
  double l1_norm = 0;
  double r2 = 0;
  RegressionReport full_report;
  bool violated = false;  // l1_norm >= 1
};

struct GroupReport {
  std::string anchor;
  std::vector<std::string> members;  // sorted descending by |corr|
  double threshold = 0;
  std::map<std::string, double> pairwise;  // member -> corr(member, anchor)
};

struct MethodComparisonRow {
  std::string method;
  int n_selected = 0;
  double r2 = 0;
  double adj_r2 = 0;
  bool flagged = false;  // rank-deficient selection
  std::string note;
};

IrcReport irc_check(const Dataset& d, const std::string& target,
                    const std::set<std::string>& regressors);

GroupReport correlation_group(const CorrelationMatrix& cm,
                              const std::string& anchor, double threshold);

/// For every group whose anchor or member intersects the selection, adds the
/// whole group (anchor plus members). Output is a superset of the input and
/// the operation is idempotent.
SelectionResult rectify_selection(const SelectionResult& sel,
                                  const std::vector<GroupReport>& groups);

/// Post-selection OLS comparison on the full sample (intercept included).
std::vector<MethodComparisonRow> compare_methods(
    const Dataset& d, const std::vector<SelectionResult>& selections);

}  // namespace solar
