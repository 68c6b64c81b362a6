#include "solar/diagnostics.hpp"

#include <algorithm>
#include <cmath>

namespace solar {

namespace {

// standardize a column vector to mean 0, sd 1 (divisor n-1)
Eigen::VectorXd zscore(const Eigen::VectorXd& v, const std::string& name) {
  const double m = v.mean();
  const double sd = std::sqrt((v.array() - m).square().sum() / double(v.size() - 1));
  if (sd <= 0 || !std::isfinite(sd)) throw DataError("constant column: " + name);
  return (v.array() - m) / sd;
}

}  // namespace

IrcReport irc_check(const Dataset& d, const std::string& target,
                    const std::set<std::string>& regressors) {
  if (regressors.count(target))
    throw ConfigError("irc_check: target cannot be one of the regressors");
  const int ti = d.column_index(target);

  std::vector<std::string> names;
  for (const auto& nm : d.column_names)
    if (regressors.count(nm)) names.push_back(nm);
  for (const auto& nm : regressors)
    if (!d.has_column(nm)) throw DataError("unknown column: " + nm);

  Eigen::MatrixXd X(d.n(), Eigen::Index(names.size()));
  for (size_t j = 0; j < names.size(); ++j)
    X.col(Eigen::Index(j)) =
        zscore(d.predictors.col(d.column_index(names[j])), names[j]);
  const Eigen::VectorXd y = zscore(d.predictors.col(ti), target);

  IrcReport rep;
  rep.target = target;
  rep.regressors = names;
  rep.full_report = ols_fit_vector(X, y, names, /*intercept=*/true);
  rep.r2 = rep.full_report.r2;
  rep.l1_norm = 0;
  for (const auto& t : rep.full_report.terms)
    if (t.name != "const") rep.l1_norm += std::abs(t.coefficient);
  rep.violated = rep.l1_norm >= 1.0;
  return rep;
}

GroupReport correlation_group(const CorrelationMatrix& cm,
                              const std::string& anchor, double threshold) {
  if (!(threshold > 0 && threshold < 1))
    throw ConfigError("correlation_group: threshold must be in (0,1)");
  auto it = std::find(cm.names.begin(), cm.names.end(), anchor);
  if (it == cm.names.end()) throw DataError("unknown anchor: " + anchor);
  const Eigen::Index ai = it - cm.names.begin();

  GroupReport g;
  g.anchor = anchor;
  g.threshold = threshold;
  std::vector<std::pair<double, std::string>> hits;
  for (Eigen::Index j = 0; j < cm.values.cols(); ++j) {
    if (j == ai) continue;
    const double r = cm.values(ai, j);
    if (std::abs(r) >= threshold) {
      hits.emplace_back(std::abs(r), cm.names[size_t(j)]);
      g.pairwise[cm.names[size_t(j)]] = r;
    }
  }
  std::sort(hits.begin(), hits.end(), [](const auto& a, const auto& b) {
    return a.first > b.first;
  });
  for (const auto& [_, nm] : hits) g.members.push_back(nm);
  return g;
}

SelectionResult rectify_selection(const SelectionResult& sel,
                                  const std::vector<GroupReport>& groups) {
  std::set<std::string> chosen(sel.selected.begin(), sel.selected.end());
  for (const auto& g : groups) {
    bool touches = chosen.count(g.anchor) > 0;
    for (const auto& m : g.members) touches = touches || chosen.count(m) > 0;
    if (touches) {
      chosen.insert(g.anchor);
      chosen.insert(g.members.begin(), g.members.end());
    }
  }
  SelectionResult out = sel;
  if (sel.method.rfind("rectified-", 0) != 0)
    out.method = "rectified-" + sel.method;
  out.selected.assign(chosen.begin(), chosen.end());
  out.n_selected = int(out.selected.size());
  return out;
}

std::vector<MethodComparisonRow> compare_methods(
    const Dataset& d, const std::vector<SelectionResult>& selections) {
  std::vector<MethodComparisonRow> rows;
  for (const auto& sel : selections) {
    MethodComparisonRow row;
    row.method = sel.method;
    row.n_selected = sel.n_selected;
    for (const auto& nm : sel.selected)
      if (!d.has_column(nm))
        throw DataError("selection '" + sel.method +
                        "' names a variable absent from the data: " + nm);
    try {
      const std::set<std::string> subset(sel.selected.begin(),
                                         sel.selected.end());
      const RegressionReport rep = ols_fit(d, subset, /*intercept=*/true);
      row.r2 = rep.r2;
      row.adj_r2 = rep.adj_r2;
    } catch (const SolverError& e) {
      row.flagged = true;
      row.note = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace solar
