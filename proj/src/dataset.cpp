#include "solar/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace solar {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  // RFC-4180: fields separated by commas, optional double-quote quoting.
  std::vector<std::string> out;
  std::string field;
  bool quoted = false;
  for (size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(field);
      field.clear();
    } else if (c != '\r') {
      field += c;
    }
  }
  out.push_back(field);
  return out;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, e - b + 1);
}

bool parse_double(const std::string& s, double& out) {
  const std::string t = trim(s);
  if (t.empty()) return false;
  const char* first = t.data();
  const char* last = t.data() + t.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

double column_mean(const Eigen::VectorXd& v) { return v.mean(); }

double column_sd(const Eigen::VectorXd& v) {
  const double m = v.mean();
  const double ss = (v.array() - m).square().sum();
  return std::sqrt(ss / double(v.size() - 1));
}

double pearson(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  const double ma = a.mean(), mb = b.mean();
  const Eigen::ArrayXd da = a.array() - ma, db = b.array() - mb;
  const double denom = std::sqrt(da.square().sum() * db.square().sum());
  if (denom == 0) throw DataError("correlation undefined for constant column");
  return std::clamp((da * db).sum() / denom, -1.0, 1.0);
}

}  // namespace

int Dataset::column_index(const std::string& name) const {
  auto it = std::find(column_names.begin(), column_names.end(), name);
  if (it == column_names.end())
    throw DataError("unknown column: " + name);
  return int(it - column_names.begin());
}

bool Dataset::has_column(const std::string& name) const {
  return std::find(column_names.begin(), column_names.end(), name) !=
         column_names.end();
}

Dataset Dataset::slice_rows(const std::vector<int>& rows) const {
  Dataset out;
  out.column_names = column_names;
  out.response_name = response_name;
  out.standardized = standardized;
  out.predictors.resize(Eigen::Index(rows.size()), predictors.cols());
  out.response.resize(Eigen::Index(rows.size()));
  for (size_t i = 0; i < rows.size(); ++i) {
    out.predictors.row(Eigen::Index(i)) = predictors.row(rows[i]);
    out.response(Eigen::Index(i)) = response(rows[i]);
  }
  return out;
}

double CorrelationMatrix::operator()(const std::string& a,
                                     const std::string& b) const {
  auto idx = [&](const std::string& n) {
    auto it = std::find(names.begin(), names.end(), n);
    if (it == names.end()) throw DataError("unknown column: " + n);
    return Eigen::Index(it - names.begin());
  };
  return values(idx(a), idx(b));
}

Dataset load_csv(const std::string& path, const std::string& response_name) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open file: " + path);

  std::string line;
  if (!std::getline(in, line)) throw DataError("empty file: " + path);
  std::vector<std::string> header = split_csv_line(line);
  for (auto& h : header) h = trim(h);

  std::set<std::string> seen;
  for (const auto& h : header)
    if (!seen.insert(h).second)
      throw DataError("duplicate column name: " + h);

  auto resp_it = std::find(header.begin(), header.end(), response_name);
  if (resp_it == header.end())
    throw DataError("response column '" + response_name + "' not in header");
  const size_t resp_idx = size_t(resp_it - header.begin());

  std::vector<std::vector<double>> rows;
  int dropped = 0;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    std::vector<std::string> cells = split_csv_line(line);
    if (cells.size() != header.size()) {
      ++dropped;
      continue;
    }
    std::vector<double> vals(cells.size());
    bool ok = true;
    for (size_t i = 0; i < cells.size(); ++i)
      if (!parse_double(cells[i], vals[i])) {
        ok = false;
        break;
      }
    if (ok)
      rows.push_back(std::move(vals));
    else
      ++dropped;
  }
  if (rows.size() < 2)
    throw DataError("fewer than 2 complete rows in " + path);

  Dataset d;
  d.response_name = response_name;
  d.dropped_rows = dropped;
  for (size_t i = 0; i < header.size(); ++i)
    if (i != resp_idx) d.column_names.push_back(header[i]);
  const Eigen::Index n = Eigen::Index(rows.size());
  const Eigen::Index p = Eigen::Index(header.size() - 1);
  d.predictors.resize(n, p);
  d.response.resize(n);
  for (Eigen::Index r = 0; r < n; ++r) {
    Eigen::Index c = 0;
    for (size_t i = 0; i < header.size(); ++i) {
      if (i == resp_idx)
        d.response(r) = rows[size_t(r)][i];
      else
        d.predictors(r, c++) = rows[size_t(r)][i];
    }
  }
  return d;
}

Dataset standardize(const Dataset& d) {
  if (d.standardized) throw DataError("dataset is already standardized");
  Dataset out = d;
  out.standardized = true;
  out.transform_record.clear();
  for (Eigen::Index j = 0; j < d.p(); ++j) {
    const Eigen::VectorXd col = d.predictors.col(j);
    const double m = column_mean(col), s = column_sd(col);
    if (s <= 0 || !std::isfinite(s))
      throw DataError("constant column: " + d.column_names[size_t(j)]);
    out.predictors.col(j) = (col.array() - m) / s;
    out.transform_record.emplace_back(m, s);
  }
  const double my = column_mean(d.response), sy = column_sd(d.response);
  if (sy <= 0 || !std::isfinite(sy))
    throw DataError("constant column: " + d.response_name);
  out.response = (d.response.array() - my) / sy;
  out.transform_record.emplace_back(my, sy);
  return out;
}

CorrelationMatrix correlation_matrix(const Dataset& d) {
  if (d.n() < 3) throw DataError("correlation_matrix needs n >= 3");
  CorrelationMatrix cm;
  cm.names = d.column_names;
  const Eigen::Index p = d.p();
  cm.values.resize(p, p);
  for (Eigen::Index i = 0; i < p; ++i) {
    cm.values(i, i) = 1.0;
    for (Eigen::Index j = i + 1; j < p; ++j) {
      const double r = pearson(d.predictors.col(i), d.predictors.col(j));
      cm.values(i, j) = r;
      cm.values(j, i) = r;
    }
  }
  return cm;
}

std::vector<std::pair<std::string, double>> marginal_correlations(
    const Dataset& d, const std::string& var, std::optional<double> threshold) {
  const int vi = d.column_index(var);
  std::vector<std::pair<std::string, double>> out;
  for (Eigen::Index j = 0; j < d.p(); ++j) {
    if (j == vi) continue;
    const double r = pearson(d.predictors.col(vi), d.predictors.col(j));
    if (!threshold || std::abs(r) >= *threshold)
      out.emplace_back(d.column_names[size_t(j)], r);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::abs(a.second) > std::abs(b.second);
  });
  return out;
}

std::pair<Dataset, Dataset> split(const Dataset& d, double fraction,
                                  std::uint64_t seed) {
  if (!(fraction > 0 && fraction < 1))
    throw ConfigError("split fraction must be in (0,1)");
  const int n = int(d.n());
  const int n_first = int(std::floor(fraction * n));
  if (n_first < 2 || n - n_first < 2)
    throw ConfigError("split would leave a part with fewer than 2 rows");
  std::vector<int> idx(size_t(n));
  std::iota(idx.begin(), idx.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(idx.begin(), idx.end(), rng);
  std::vector<int> a(idx.begin(), idx.begin() + n_first);
  std::vector<int> b(idx.begin() + n_first, idx.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return {d.slice_rows(a), d.slice_rows(b)};
}

std::string to_csv(const CorrelationMatrix& cm) {
  std::ostringstream os;
  os.precision(10);
  os << "name";
  for (const auto& n : cm.names) os << "," << n;
  os << "\n";
  for (Eigen::Index i = 0; i < cm.values.rows(); ++i) {
    os << cm.names[size_t(i)];
    for (Eigen::Index j = 0; j < cm.values.cols(); ++j)
      os << "," << cm.values(i, j);
    os << "\n";
  }
  return os.str();
}

}  // namespace solar
