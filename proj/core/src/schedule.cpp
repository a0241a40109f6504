// Copyright 2026 The qpt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qpt/schedule.hpp"

#include <algorithm>
#include <cmath>

#include "qpt/errors.hpp"

namespace qpt {
namespace {

// Below this rate the sinh family is numerically a straight line.
constexpr double kLinearRateLimit = 1e-6;

double interpolate(const std::vector<double>& xs, const std::vector<double>& ys, double x) {
  if (x <= xs.front()) return ys.front();
  if (x >= xs.back()) return ys.back();
  const auto it = std::upper_bound(xs.begin(), xs.end(), x);
  const std::size_t hi = static_cast<std::size_t>(it - xs.begin());
  const std::size_t lo = hi - 1;
  const double w = (x - xs[lo]) / (xs[hi] - xs[lo]);
  return ys[lo] + w * (ys[hi] - ys[lo]);
}

}  // namespace

double SweepSchedule::g_at(double t) const {
  if (knots.empty()) throw InvalidParameter("empty schedule");
  if (t <= knots.front().t) return knots.front().g_z;
  if (t >= knots.back().t) return knots.back().g_z;
  const auto it = std::upper_bound(knots.begin(), knots.end(), t,
                                   [](double value, const Knot& k) { return value < k.t; });
  const Knot& hi = *it;
  const Knot& lo = *(it - 1);
  return lo.g_z + (t - lo.t) / (hi.t - lo.t) * (hi.g_z - lo.g_z);
}

ScanShape ScanShape::sinh(double g_start, double g_end, double rate, double center) {
  ScanShape s;
  s.kind_ = Kind::Sinh;
  s.g_start_ = g_start;
  s.g_end_ = g_end;
  s.rate_ = std::abs(rate);
  s.center_ = center;
  if (s.rate_ >= kLinearRateLimit) {
    const double lo = std::sinh(s.rate_ * (0.0 - center));
    const double hi = std::sinh(s.rate_ * (1.0 - center));
    s.amplitude_ = (g_end - g_start) / (hi - lo);
    s.offset_ = g_start - s.amplitude_ * lo;
  }
  return s;
}

ScanShape ScanShape::tabulated(const SweepSchedule& continuous) {
  if (continuous.knots.size() < 2) throw InvalidParameter("schedule needs at least two knots");
  ScanShape s;
  s.kind_ = Kind::Tabulated;
  s.g_start_ = continuous.g_start();
  s.g_end_ = continuous.g_end();
  const double t0 = continuous.knots.front().t;
  const double span = continuous.knots.back().t - t0;
  s.s_.reserve(continuous.knots.size());
  s.g_.reserve(continuous.knots.size());
  for (const Knot& k : continuous.knots) {
    s.s_.push_back((k.t - t0) / span);
    s.g_.push_back(k.g_z);
  }
  return s;
}

ScanShape ScanShape::linear(double g_start, double g_end) {
  ScanShape s;
  s.kind_ = Kind::Linear;
  s.g_start_ = g_start;
  s.g_end_ = g_end;
  return s;
}

double ScanShape::operator()(double s) const {
  if (s <= 0.0) return g_start_;
  if (s >= 1.0) return g_end_;
  switch (kind_) {
    case Kind::Sinh:
      if (rate_ < kLinearRateLimit) return g_start_ + s * (g_end_ - g_start_);
      return amplitude_ * std::sinh(rate_ * (s - center_)) + offset_;
    case Kind::Tabulated:
      return interpolate(s_, g_, s);
    case Kind::Linear:
      return g_start_ + s * (g_end_ - g_start_);
  }
  return g_start_;
}

SweepSchedule ScanShape::discretize(int steps, double total_time, double g_x) const {
  if (steps < 1) throw InvalidParameter("step count must be positive");
  if (!(total_time > 0.0)) throw NonPositiveTime("total scan time must be positive");
  SweepSchedule out;
  out.g_x = g_x;
  out.mode = ScheduleMode::Discretized;
  out.total_time = total_time;
  out.knots.reserve(static_cast<std::size_t>(steps) + 1);
  for (int m = 0; m <= steps; ++m) {
    const double s = static_cast<double>(m) / steps;
    // End points are pinned exactly rather than evaluated.
    const double g = m == 0 ? g_start_ : (m == steps ? g_end_ : (*this)(s));
    out.knots.push_back({s * total_time, g});
  }
  out.knots.back().t = total_time;
  return out;
}

std::string_view to_string(ScanShape::Kind kind) {
  switch (kind) {
    case ScanShape::Kind::Sinh:
      return "sinh";
    case ScanShape::Kind::Tabulated:
      return "constant-adiabaticity";
    case ScanShape::Kind::Linear:
      return "uniform";
  }
  return "unknown";
}

}  // namespace qpt
