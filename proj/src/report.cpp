#include "solar/report.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace solar {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt(double v, int digits = 4) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

std::string fmt_sci(double v) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(3) << v;
  return os.str();
}

std::string join(const std::vector<std::string>& v, const char* sep = ", ") {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << sep;
    os << v[i];
  }
  return os.str();
}

}  // namespace

std::string regression_markdown(const RegressionReport& r,
                                const std::string& dep_variable) {
  std::ostringstream os;
  os << "| No. Observations: | " << r.n_obs << " | AIC: | " << fmt(r.aic, 1)
     << " |\n";
  os << "| R-squared: | " << fmt(r.r2, 3) << " | BIC: | " << fmt(r.bic, 1)
     << " |\n";
  os << "| Adj. R-squared: | " << fmt(r.adj_r2, 3) << " | F-statistic: | "
     << fmt(r.f_stat, 2) << " |\n";
  os << "| Dep. Variable: | " << dep_variable << " | Prob (F-statistic): | "
     << fmt_sci(r.f_pvalue) << " |\n\n";
  os << "| | coef | std err | t | P>\\|t\\| |\n";
  os << "|---|---|---|---|---|\n";
  for (const auto& t : r.terms)
    os << "| " << t.name << " | " << fmt(t.coefficient) << " | "
       << fmt(t.std_error, 3) << " | " << fmt(t.t_value, 3) << " | "
       << fmt(t.p_value, 3) << " |\n";
  return os.str();
}

std::string regression_json(const RegressionReport& r,
                            const std::string& dep_variable) {
  ordered_json j;
  j["dep_variable"] = dep_variable;
  j["n_obs"] = r.n_obs;
  j["df_model"] = r.df_model;
  j["r2"] = r.r2;
  j["adj_r2"] = r.adj_r2;
  j["f_stat"] = r.f_stat;
  j["f_pvalue"] = r.f_pvalue;
  j["aic"] = r.aic;
  j["bic"] = r.bic;
  j["terms"] = ordered_json::array();
  for (const auto& t : r.terms)
    j["terms"].push_back({{"name", t.name},
                          {"coef", t.coefficient},
                          {"std_err", t.std_error},
                          {"t", t.t_value},
                          {"p", t.p_value}});
  return j.dump(2) + "\n";
}

std::string selection_json(const SelectionResult& s, std::uint64_t seed) {
  ordered_json j;
  j["method"] = s.method;
  j["selected"] = s.selected;
  j["n_selected"] = s.n_selected;
  j["hyperparameters"] = ordered_json::object();
  for (const auto& [k, v] : s.hyperparameters) j["hyperparameters"][k] = v;
  j["seed"] = seed;
  return j.dump(2) + "\n";
}

SelectionResult selection_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  SelectionResult s;
  s.method = j.at("method").get<std::string>();
  s.selected = j.at("selected").get<std::vector<std::string>>();
  s.n_selected = j.at("n_selected").get<int>();
  if (j.contains("hyperparameters"))
    for (const auto& [k, v] : j.at("hyperparameters").items())
      s.hyperparameters[k] = v.get<double>();
  return s;
}

std::string selection_table_markdown(const std::vector<SelectionResult>& all) {
  std::ostringstream os;
  os << "| | Variables selected | Total |\n|---|---|---|\n";
  for (const auto& s : all)
    os << "| " << s.method << " | " << join(s.selected) << " | "
       << s.n_selected << " |\n";
  return os.str();
}

std::string ladder_markdown(const QHatRanking& r) {
  std::ostringstream os;
  os << "| c | Variables in Q(c) |\n|---|---|\n";
  for (const auto& e : r.ladder) {
    const bool star = e.c == r.c_star;
    os << "| " << fmt(e.c, 3) << (star ? " (c*)" : "") << " | "
       << join(e.members) << " |\n";
  }
  return os.str();
}

std::string ladder_json(const QHatRanking& r) {
  ordered_json j;
  j["qhat"] = ordered_json::object();
  // report qhat in descending order for readability
  std::vector<std::pair<double, std::string>> byv;
  for (const auto& [nm, v] : r.qhat) byv.emplace_back(v, nm);
  std::stable_sort(byv.begin(), byv.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  for (const auto& [v, nm] : byv) j["qhat"][nm] = v;
  j["ladder"] = ordered_json::array();
  for (const auto& e : r.ladder)
    j["ladder"].push_back({{"c", e.c}, {"members", e.members}});
  j["c_star"] = r.c_star;
  j["selected"] = r.selected;
  j["K"] = r.config.subsamples;
  j["omit_fraction"] = r.config.omit_fraction;
  j["normalization"] =
      r.config.normalization == QhatNormalization::kRankLinear
          ? "rank-linear"
          : "top-q-indicator";
  j["q_bar"] = r.config.q_bar;
  j["val_fraction"] = r.config.val_fraction;
  j["seed"] = r.config.seed;
  j["warnings"] = r.warnings;
  return j.dump(2) + "\n";
}

std::string irc_markdown(const IrcReport& r) {
  std::ostringstream os;
  os << "IRC auxiliary regression: " << r.target << " ~ " << join(r.regressors)
     << "\n\n";
  os << regression_markdown(r.full_report, r.target);
  os << "\nL1 norm of slopes: " << fmt(r.l1_norm) << "  (violated: "
     << (r.violated ? "yes" : "no") << ")\n";
  return os.str();
}

std::string irc_json(const IrcReport& r) {
  ordered_json j;
  j["target"] = r.target;
  j["regressors"] = r.regressors;
  j["l1_norm"] = r.l1_norm;
  j["r2"] = r.r2;
  j["violated"] = r.violated;
  j["report"] = nlohmann::ordered_json::parse(
      regression_json(r.full_report, r.target));
  return j.dump(2) + "\n";
}

std::string group_markdown(const GroupReport& g) {
  std::ostringstream os;
  os << "Correlation group of " << g.anchor << " (|r| >= " << fmt(g.threshold, 2)
     << ")\n\n| member | corr |\n|---|---|\n";
  for (const auto& m : g.members)
    os << "| " << m << " | " << fmt(g.pairwise.at(m), 3) << " |\n";
  return os.str();
}

std::string group_json(const GroupReport& g) {
  ordered_json j;
  j["anchor"] = g.anchor;
  j["threshold"] = g.threshold;
  j["members"] = g.members;
  j["pairwise"] = ordered_json::object();
  for (const auto& m : g.members) j["pairwise"][m] = g.pairwise.at(m);
  return j.dump(2) + "\n";
}

std::string comparison_markdown(const std::vector<MethodComparisonRow>& rows) {
  std::ostringstream os;
  os << "| | number of variables | R2 | adj R2 |\n|---|---|---|---|\n";
  for (const auto& r : rows) {
    os << "| " << r.method << " | " << r.n_selected << " | ";
    if (r.flagged)
      os << "rank-deficient | rank-deficient |\n";
    else
      os << fmt(r.r2, 3) << " | " << fmt(r.adj_r2, 3) << " |\n";
  }
  return os.str();
}

std::string comparison_json(const std::vector<MethodComparisonRow>& rows,
                            std::uint64_t seed) {
  ordered_json j;
  j["rows"] = ordered_json::array();
  for (const auto& r : rows)
    j["rows"].push_back({{"method", r.method},
                         {"n_selected", r.n_selected},
                         {"r2", r.r2},
                         {"adj_r2", r.adj_r2},
                         {"flagged", r.flagged},
                         {"note", r.note}});
  j["seed"] = seed;
  return j.dump(2) + "\n";
}

std::string marginal_markdown(
    const std::string& var,
    const std::vector<std::pair<std::string, double>>& corr) {
  std::ostringstream os;
  os << "Marginal correlations to " << var << "\n\n| variable | corr |\n|---|---|\n";
  for (const auto& [nm, r] : corr) os << "| " << nm << " | " << fmt(r, 3) << " |\n";
  return os.str();
}

std::string metrics_json(const StabilityMetrics& m) {
  ordered_json j;
  j["seed"] = m.seed;
  j["replications"] = m.replications;
  j["methods"] = ordered_json::array();
  for (const auto& pm : m.per_method)
    j["methods"].push_back({{"method", pm.method},
                            {"mean_n_selected", pm.mean_n_selected},
                            {"tpr", pm.true_positive_rate},
                            {"fpr", pm.false_positive_rate},
                            {"selection_frequency", pm.selection_frequency},
                            {"completed", pm.completed_replications}});
  j["errors"] = m.errors;
  return j.dump(2) + "\n";
}

}  // namespace solar
