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

#ifndef ZENO_THRESHOLD_HPP
#define ZENO_THRESHOLD_HPP

#include <string>
#include <vector>

#include "zeno/gc.hpp"

namespace zeno {

/// Per-qubit error rates: unlocated = 1 - F, located = 1 - P_s, clamped to [0, 1].
struct ErrorRates {
  double unlocated = 0.0;
  double located = 0.0;
};

ErrorRates error_rates(const GateMetrics& metrics);

struct CurvePoint {
  double located = 0.0;
  double unlocated = 0.0;
};

/// Boundary of the tolerable region in the (located, unlocated) plane,
/// interpolated linearly between points. Below the first abscissa the first
/// ordinate applies; beyond the last abscissa nothing is tolerable.
class ThresholdCurve {
 public:
  ThresholdCurve() = default;
  /// ConfigError unless nonempty, located strictly increasing, unlocated
  /// non-increasing and every coordinate in [0, 1].
  ThresholdCurve(std::string label, std::vector<CurvePoint> points);

  const std::string& label() const { return label_; }
  const std::vector<CurvePoint>& points() const { return points_; }
  bool empty() const { return points_.empty(); }

  /// Largest tolerable unlocated rate at the given located rate; -1 beyond
  /// the last point. ConfigError when empty.
  double boundary(double located) const;

  /// Text form accepted by load_threshold_curve.
  std::string serialize(const std::string& comment = {}) const;

 private:
  std::string label_;
  std::vector<CurvePoint> points_;
};

/// Two whitespace separated columns (located, unlocated) per line; '#'
/// starts a comment. A comment "# label: name" sets the label, otherwise the
/// file stem is used. ConfigError with the offending line on malformed input.
ThresholdCurve load_threshold_curve(const std::string& path);
ThresholdCurve parse_threshold_curve(const std::string& text, const std::string& default_label);

/// Closed region: points on the boundary are tolerable.
bool is_tolerable(const ErrorRates& rates, const ThresholdCurve& curve);

/// boundary(located) - unlocated; negative when intolerable.
double tolerance_margin(const ErrorRates& rates, const ThresholdCurve& curve);

}  // namespace zeno

#endif  // ZENO_THRESHOLD_HPP
