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

#include "qpt/sweep.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <random>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "qpt/errors.hpp"
#include "qpt/model.hpp"

namespace qpt {
namespace {

constexpr double kMatrixElementFloor = 1e-14;

// Sensible centre range for the sinh family; candidates outside are
// penalized rather than clamped so the simplex moves back.
constexpr double kCenterLo = -1.0;
constexpr double kCenterHi = 2.0;

double inverse_chi(double g_x, double g) { return 1.0 / chi(g_x, g); }

}  // namespace

double chi(double g_x, double g_z) {
  const auto sys = triplet_eigensystem_analytic(ModelParams{g_x, g_z, 1.0});
  // (sz1 + sz2) in (upup, Psi+, downdown) coordinates is diag(2, 0, -2).
  const Ket& g = sys.states[0];
  const Ket& e = sys.states[1];
  const Complex element = 2.0 * std::conj(g[0]) * e[0] - 2.0 * std::conj(g[2]) * e[2];
  if (std::abs(element) < kMatrixElementFloor) return kChiCap;
  const double gap = sys.xi[1] - sys.xi[0];
  return std::min(gap * gap / std::abs(element), kChiCap);
}

AdiabaticityProfile adiabaticity_profile(double g_x, double g_lo, double g_hi, int points) {
  if (points < 2) throw InvalidParameter("profile needs at least two points");
  AdiabaticityProfile out;
  out.samples.reserve(static_cast<std::size_t>(points));
  for (int k = 0; k < points; ++k) {
    const double g = g_lo + (g_hi - g_lo) * k / (points - 1);
    out.samples.push_back({g, chi(g_x, g)});
  }
  return out;
}

SweepSchedule design_constant_adiabaticity_sweep(double g_x, double g_start, double g_end,
                                                 double total_time, double j_i, int resolution) {
  if (!(total_time > 0.0)) throw NonPositiveTime("total scan time must be positive");
  if (!(j_i > 0.0)) throw InvalidParameter("coupling J_I must be positive");
  if (g_start == g_end) throw InvalidParameter("sweep end points coincide");
  if (resolution < 2) throw InvalidParameter("resolution must be at least 2");
  if (std::abs(g_x) < 1e-8) {
    throw DegenerateFormulation("chi is undefined at vanishing transverse field");
  }

  const auto n = static_cast<std::size_t>(resolution);
  std::vector<double> g(n);
  for (std::size_t k = 0; k < n; ++k) {
    g[k] = g_start + (g_end - g_start) * static_cast<double>(k) / static_cast<double>(n - 1);
  }
  g.back() = g_end;

  // Elapsed dimensionless "adiabatic time" int |dg| / chi up to each knot.
  using boost::math::quadrature::gauss_kronrod;
  std::vector<double> elapsed(n, 0.0);
  for (std::size_t k = 1; k < n; ++k) {
    const double lo = std::min(g[k - 1], g[k]);
    const double hi = std::max(g[k - 1], g[k]);
    const double piece = gauss_kronrod<double, 15>::integrate(
        [g_x](double x) { return inverse_chi(g_x, x); }, lo, hi, 6, 1e-10);
    elapsed[k] = elapsed[k - 1] + piece;
  }
  const double total = elapsed.back();

  SweepSchedule out;
  out.g_x = g_x;
  out.mode = ScheduleMode::Continuous;
  out.total_time = total_time;
  // dg/du = rate * chi with u = J_I t running from 0 to J_I * total_time.
  out.adiabaticity_rate = total / (j_i * total_time);
  out.knots.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.knots.push_back({elapsed[k] / total * total_time, g[k]});
  out.knots.front().t = 0.0;
  out.knots.back().t = total_time;
  return out;
}

namespace {

struct FitContext {
  const SweepSchedule* continuous;
  int steps;
  ScanSetup setup;
  int evaluations = 0;
};

double sinh_objective(const gsl_vector* x, void* params) {
  auto* ctx = static_cast<FitContext*>(params);
  const double rate = gsl_vector_get(x, 0);
  const double center = gsl_vector_get(x, 1);
  double penalty = 0.0;
  if (center < kCenterLo) penalty = kCenterLo - center;
  if (center > kCenterHi) penalty = center - kCenterHi;
  if (penalty > 0.0 || !std::isfinite(rate) || std::abs(rate) > 50.0) {
    return 1.0 + penalty + std::max(0.0, std::abs(rate) - 50.0);
  }
  ++ctx->evaluations;
  const auto& c = *ctx->continuous;
  const SweepSchedule s =
      ScanShape::sinh(c.g_start(), c.g_end(), rate, center).discretize(ctx->steps, c.total_time, c.g_x);
  return -scan_min_fidelity(s, ctx->setup);
}

struct MinimizerDeleter {
  void operator()(gsl_multimin_fminimizer* m) const { gsl_multimin_fminimizer_free(m); }
};
struct VectorDeleter {
  void operator()(gsl_vector* v) const { gsl_vector_free(v); }
};

// GSL's default handler aborts; errors here are reported through return codes.
class GslHandlerOff {
 public:
  GslHandlerOff() : previous_(gsl_set_error_handler_off()) {}
  ~GslHandlerOff() { gsl_set_error_handler(previous_); }
  GslHandlerOff(const GslHandlerOff&) = delete;
  GslHandlerOff& operator=(const GslHandlerOff&) = delete;

 private:
  gsl_error_handler_t* previous_;
};

struct SimplexResult {
  double rate;
  double center;
  double value;
};

SimplexResult run_simplex(FitContext& ctx, double rate0, double center0, int max_iterations) {
  gsl_multimin_function fn{&sinh_objective, 2, &ctx};
  std::unique_ptr<gsl_vector, VectorDeleter> x(gsl_vector_alloc(2));
  std::unique_ptr<gsl_vector, VectorDeleter> step(gsl_vector_alloc(2));
  gsl_vector_set(x.get(), 0, rate0);
  gsl_vector_set(x.get(), 1, center0);
  gsl_vector_set(step.get(), 0, std::max(0.5, 0.3 * rate0));
  gsl_vector_set(step.get(), 1, 0.1);

  std::unique_ptr<gsl_multimin_fminimizer, MinimizerDeleter> minimizer(
      gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, 2));
  gsl_multimin_fminimizer_set(minimizer.get(), &fn, x.get(), step.get());

  for (int iter = 0; iter < max_iterations; ++iter) {
    if (gsl_multimin_fminimizer_iterate(minimizer.get()) != GSL_SUCCESS) break;
    const double size = gsl_multimin_fminimizer_size(minimizer.get());
    if (gsl_multimin_test_size(size, 1e-5) == GSL_SUCCESS) break;
  }
  const gsl_vector* best = gsl_multimin_fminimizer_x(minimizer.get());
  return {std::abs(gsl_vector_get(best, 0)), gsl_vector_get(best, 1),
          gsl_multimin_fminimizer_minimum(minimizer.get())};
}

}  // namespace

DiscreteScan fit_discretized_scan(const SweepSchedule& continuous, int steps,
                                  const FidelityObjective& objective) {
  if (steps < 2) throw InvalidParameter("discretized scan needs at least two steps");
  if (continuous.knots.size() < 2) throw InvalidParameter("continuous schedule is empty");

  FitContext ctx{&continuous, steps, objective.setup};
  ctx.setup.decoherence = DecoherenceParams::disabled();

  std::vector<std::pair<double, double>> starts{{1.0, 0.5}, {3.0, 0.5}, {6.0, 0.5}, {10.0, 0.5}};
  if (objective.seed != 0) {
    std::mt19937_64 rng(objective.seed);
    std::uniform_real_distribution<double> log_jitter(-0.2, 0.2);
    std::uniform_real_distribution<double> shift(-0.05, 0.05);
    const std::size_t base = starts.size();
    for (std::size_t i = 0; i < base; ++i) {
      starts.emplace_back(starts[i].first * std::exp(log_jitter(rng)), 0.5 + shift(rng));
    }
  }

  SimplexResult best{0.0, 0.5, std::numeric_limits<double>::infinity()};
  {
    const GslHandlerOff guard;
    for (const auto& [rate0, center0] : starts) {
      const SimplexResult r = run_simplex(ctx, rate0, center0, objective.max_iterations);
      if (r.value < best.value) best = r;
    }
  }

  DiscreteScan out;
  out.sinh_rate = best.rate;
  out.sinh_center = best.center;
  out.evaluations = ctx.evaluations;

  const ScanShape sinh_shape =
      ScanShape::sinh(continuous.g_start(), continuous.g_end(), best.rate, best.center);
  const SweepSchedule sinh_schedule =
      sinh_shape.discretize(steps, continuous.total_time, continuous.g_x);
  out.sinh_min_fidelity = scan_min_fidelity(sinh_schedule, ctx.setup);

  const ScanShape baseline_shape = ScanShape::tabulated(continuous);
  const SweepSchedule baseline =
      baseline_shape.discretize(steps, continuous.total_time, continuous.g_x);
  out.baseline_min_fidelity = scan_min_fidelity(baseline, ctx.setup);

  if (out.sinh_min_fidelity >= out.baseline_min_fidelity) {
    out.status = FitStatus::Optimized;
    out.shape = sinh_shape;
    out.schedule = sinh_schedule;
    out.min_fidelity = out.sinh_min_fidelity;
  } else {
    out.status = FitStatus::FellBackToConstantAdiabaticity;
    out.shape = baseline_shape;
    out.schedule = baseline;
    out.min_fidelity = out.baseline_min_fidelity;
  }
  return out;
}

std::vector<StepStudyPoint> step_study(const StepStudySetup& setup, std::span<const int> step_counts,
                                       const std::optional<DecoherenceParams>& decoherence) {
  if (!(setup.step_duration > 0.0)) throw NonPositiveTime("step duration must be positive");
  ScanSetup scan = setup.base;
  scan.decoherence = decoherence.value_or(DecoherenceParams::disabled());

  std::vector<StepStudyPoint> out;
  out.reserve(step_counts.size());
  for (int m : step_counts) {
    const SweepSchedule s = setup.shape.discretize(m, m * setup.step_duration, setup.base.model.g_x);
    out.push_back({m, scan_min_fidelity(s, scan)});
  }
  return out;
}

}  // namespace qpt
