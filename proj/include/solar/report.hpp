#pragma once

#include <string>
#include <vector>

#include "solar/bench.hpp"
#include "solar/cross_validation.hpp"
#include "solar/diagnostics.hpp"
#include "solar/ols.hpp"
#include "solar/solar.hpp"

namespace solar {

// Markdown and JSON renderings of the result types. All output is
// deterministic: fixed key order, fixed float formatting, no timestamps.

std::string regression_markdown(const RegressionReport& r,
                                const std::string& dep_variable);
std::string regression_json(const RegressionReport& r,
                            const std::string& dep_variable);

std::string selection_json(const SelectionResult& s, std::uint64_t seed);
SelectionResult selection_from_json(const std::string& text);
std::string selection_table_markdown(const std::vector<SelectionResult>& all);

std::string ladder_markdown(const QHatRanking& r);
std::string ladder_json(const QHatRanking& r);

std::string irc_markdown(const IrcReport& r);
std::string irc_json(const IrcReport& r);

std::string group_markdown(const GroupReport& g);
std::string group_json(const GroupReport& g);

std::string comparison_markdown(const std::vector<MethodComparisonRow>& rows);
std::string comparison_json(const std::vector<MethodComparisonRow>& rows,
                            std::uint64_t seed);

std::string marginal_markdown(
    const std::string& var,
    const std::vector<std::pair<std::string, double>>& corr);

std::string metrics_json(const StabilityMetrics& m);

}  // namespace solar
