#include "lfcs/environments.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace lfcs {
namespace {

int parity_class(double u, double v, int n) {
  const long long cu = static_cast<long long>(std::floor(u * n));
  const long long cv = static_cast<long long>(std::floor(v * n));
  return static_cast<int>(((cu + cv) % 2 + 2) % 2);
}

constexpr double kNoiseSigma = 0.05;
constexpr double kDomainHi = 1.0 - 1e-9;

double perturb_value(double v, Rng& noise) {
  return std::min(std::max(v + noise.normal(0.0, kNoiseSigma), 0.0), kDomainHi);
}

std::vector<std::string> split_line(const std::string& line, char delim) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, delim)) out.push_back(field);
  if (!line.empty() && line.back() == delim) out.push_back("");
  return out;
}

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

bool parse_numeric(const std::string& token, double& out) {
  try {
    std::size_t pos = 0;
    out = std::stod(token, &pos);
    return pos == token.size();
  } catch (const std::exception&) {
    return false;
  }
}

int code_for(std::vector<std::string>& seen, const std::string& token) {
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (seen[i] == token) return static_cast<int>(i);
  }
  seen.push_back(token);
  return static_cast<int>(seen.size()) - 1;
}

}  // namespace

int cb_classify(double x1, double x2, int n) { return parity_class(x1, x2, n); }

int rcb_classify(double x1, double x2, int n) {
  const double d1 = x1 - 0.5;
  const double d2 = x2 - 0.5;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const double u = 0.5 + (d1 + d2) * inv_sqrt2;
  const double v = 0.5 + (-d1 + d2) * inv_sqrt2;
  return parity_class(u, v, n);
}

int CheckerboardEnv::classify(double x1, double x2) const {
  return rotated_ ? rcb_classify(x1, x2, n_) : cb_classify(x1, x2, n_);
}

LabeledSample CheckerboardEnv::next_train(Rng& env, Rng& noise) const {
  const double x1 = env.uniform(0.0, 1.0);
  const double x2 = env.uniform(0.0, 1.0);
  LabeledSample s;
  s.label = classify(x1, x2);
  if (noisy_) {
    s.x = {perturb_value(x1, noise), perturb_value(x2, noise)};
  } else {
    s.x = {x1, x2};
  }
  return s;
}

LabeledSample CheckerboardEnv::next_test(Rng& env) const {
  const double x1 = env.uniform(0.0, 1.0);
  const double x2 = env.uniform(0.0, 1.0);
  return {{x1, x2}, classify(x1, x2)};
}

Dataset load_dataset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open dataset file '" + path + "'");
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!trim(line).empty()) lines.push_back(line);
  }
  if (lines.empty()) throw std::runtime_error("dataset file '" + path + "' is empty");
  if (lines.size() < 2) {
    throw std::runtime_error("dataset file '" + path + "' has a header but no data rows");
  }

  const char delim = lines[0].find('\t') != std::string::npos ? '\t' : ',';
  const std::vector<std::string> header = split_line(lines[0], delim);
  const std::size_t cols = header.size();
  if (cols < 2) {
    throw std::runtime_error("dataset file '" + path + "' needs at least one feature column");
  }
  const std::size_t features = cols - 1;

  std::vector<std::vector<std::string>> rows;
  rows.reserve(lines.size() - 1);
  for (std::size_t r = 1; r < lines.size(); ++r) {
    std::vector<std::string> fields = split_line(lines[r], delim);
    if (fields.size() != cols) {
      throw std::runtime_error("dataset file '" + path + "' row " + std::to_string(r + 1) +
                               " has " + std::to_string(fields.size()) + " columns, expected " +
                               std::to_string(cols));
    }
    for (std::string& f : fields) f = trim(f);
    rows.push_back(std::move(fields));
  }

  // A feature column is numeric iff every present token parses as a number.
  std::vector<bool> numeric(features, true);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < features; ++c) {
      if (!numeric[c] || row[c] == "?") continue;
      double unused;
      if (!parse_numeric(row[c], unused)) numeric[c] = false;
    }
  }

  Dataset data;
  data.dims = static_cast<int>(features);
  data.feature_names.assign(header.begin(), header.end() - 1);
  std::vector<std::vector<std::string>> nominal_codes(features);
  std::vector<std::string> labels;

  for (const auto& row : rows) {
    LabeledSample s;
    s.x.resize(features);
    for (std::size_t c = 0; c < features; ++c) {
      if (row[c] == "?") {
        s.x[c] = std::numeric_limits<double>::quiet_NaN();
      } else if (numeric[c]) {
        parse_numeric(row[c], s.x[c]);
      } else {
        s.x[c] = code_for(nominal_codes[c], row[c]);
      }
    }
    s.label = code_for(labels, row[features]);
    data.samples.push_back(std::move(s));
  }

  data.class_names = labels;
  data.classes = static_cast<int>(labels.size());
  if (data.classes < 2) {
    throw std::runtime_error("dataset file '" + path + "' contains a single class");
  }

  for (std::size_t c = 0; c < features; ++c) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (const auto& s : data.samples) {
      if (is_missing(s.x[c])) continue;
      lo = std::min(lo, s.x[c]);
      hi = std::max(hi, s.x[c]);
    }
    for (auto& s : data.samples) {
      if (is_missing(s.x[c])) continue;
      s.x[c] = (hi > lo) ? (s.x[c] - lo) / ((hi - lo) * (1.0 + 1e-9)) : 0.0;
    }
  }
  return data;
}

std::vector<int> stratified_folds(const Dataset& data, int folds, Rng& rng) {
  std::vector<int> fold_of(data.samples.size(), 0);
  for (int cls = 0; cls < data.classes; ++cls) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < data.samples.size(); ++i) {
      if (data.samples[i].label == cls) members.push_back(i);
    }
    for (std::size_t i = members.size(); i > 1; --i) {
      const std::size_t j =
          static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(i) - 1));
      std::swap(members[i - 1], members[j]);
    }
    for (std::size_t p = 0; p < members.size(); ++p) {
      fold_of[members[p]] = static_cast<int>(p % folds);
    }
  }
  return fold_of;
}

}  // namespace lfcs
