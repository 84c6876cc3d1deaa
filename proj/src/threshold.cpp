// Copyright 2026 The Zeno Gate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "zeno/threshold.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "zeno/errors.hpp"

namespace zeno {

ErrorRates error_rates(const GateMetrics& metrics) {
  ErrorRates r;
  r.unlocated = std::clamp(1.0 - metrics.fidelity, 0.0, 1.0);
  r.located = std::clamp(1.0 - metrics.ps_per_qubit, 0.0, 1.0);
  return r;
}

ThresholdCurve::ThresholdCurve(std::string label, std::vector<CurvePoint> points)
    : label_(std::move(label)), points_(std::move(points)) {
  if (points_.empty()) throw ConfigError("threshold curve '" + label_ + "': no points");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const auto& p = points_[i];
    if (!(p.located >= 0.0 && p.located <= 1.0 && p.unlocated >= 0.0 && p.unlocated <= 1.0))
      throw ConfigError("threshold curve '" + label_ + "': point " + std::to_string(i + 1) +
                        " outside [0, 1]");
    if (i > 0 && !(p.located > points_[i - 1].located))
      throw ConfigError("threshold curve '" + label_ + "': located rate not strictly increasing at point " +
                        std::to_string(i + 1));
    if (i > 0 && p.unlocated > points_[i - 1].unlocated)
      throw ConfigError("threshold curve '" + label_ + "': unlocated rate increases at point " +
                        std::to_string(i + 1));
  }
}

double ThresholdCurve::boundary(double located) const {
  if (points_.empty()) throw ConfigError("threshold curve: empty");
  if (located <= points_.front().located) return points_.front().unlocated;
  if (located > points_.back().located) return -1.0;
  const auto it = std::lower_bound(points_.begin(), points_.end(), located,
                                   [](const CurvePoint& p, double x) { return p.located < x; });
  const CurvePoint& hi = *it;
  if (hi.located == located) return hi.unlocated;
  const CurvePoint& lo = *(it - 1);
  const double t = (located - lo.located) / (hi.located - lo.located);
  return lo.unlocated + t * (hi.unlocated - lo.unlocated);
}

std::string ThresholdCurve::serialize(const std::string& comment) const {
  std::ostringstream os;
  os << "# label: " << label_ << "\n";
  if (!comment.empty()) {
    std::istringstream lines(comment);
    std::string line;
    while (std::getline(lines, line)) os << "# " << line << "\n";
  }
  os << "# located unlocated\n" << std::setprecision(17);
  for (const auto& p : points_) os << p.located << " " << p.unlocated << "\n";
  return os.str();
}

ThresholdCurve parse_threshold_curve(const std::string& text, const std::string& default_label) {
  std::istringstream in(text);
  std::string line;
  std::string label = default_label;
  std::vector<CurvePoint> pts;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) {
      const std::string comment = line.substr(hash + 1);
      const auto key = comment.find("label:");
      if (key != std::string::npos) {
        std::string v = comment.substr(key + 6);
        v.erase(0, v.find_first_not_of(" \t"));
        v.erase(v.find_last_not_of(" \t\r") + 1);
        if (!v.empty()) label = v;
      }
      line = line.substr(0, hash);
    }
    std::istringstream fields(line);
    std::string a, b, extra;
    if (!(fields >> a)) continue;
    if (!(fields >> b) || (fields >> extra))
      throw ConfigError("threshold curve: line " + std::to_string(lineno) + ": expected two columns");
    try {
      std::size_t ua = 0, ub = 0;
      const double x = std::stod(a, &ua);
      const double y = std::stod(b, &ub);
      if (ua != a.size() || ub != b.size()) throw std::invalid_argument("trailing");
      pts.push_back({x, y});
    } catch (const std::exception&) {
      throw ConfigError("threshold curve: line " + std::to_string(lineno) + ": non-numeric value");
    }
  }
  return ThresholdCurve(label, std::move(pts));
}

ThresholdCurve load_threshold_curve(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("threshold curve: cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_threshold_curve(ss.str(), std::filesystem::path(path).stem().string());
}

double tolerance_margin(const ErrorRates& rates, const ThresholdCurve& curve) {
  const double b = curve.boundary(rates.located);
  return b - rates.unlocated;
}

bool is_tolerable(const ErrorRates& rates, const ThresholdCurve& curve) {
  return tolerance_margin(rates, curve) >= 0.0;
}

}  // namespace zeno
