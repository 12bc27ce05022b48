/* Copyright 2026 The Supersep Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "supersep/combine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "supersep/error.hpp"

namespace supersep::combine {

using optics::BeamGeometry;
using optics::ScreenPattern;
using optics::SlitSystem;
using optics::Window;

namespace {

double first_minimum_offset(double b, double lambda, double x) {
  if (!(lambda < b))
    throw NoFarFieldMinimum("wavelength must be smaller than the slit width");
  return x * std::tan(std::asin(lambda / b));
}

bool in_support(const InterferometerLayout& layout, std::size_t arm,
                double u) {
  if (layout.arm_supports.empty()) return true;
  const Window& w = layout.arm_supports[arm];
  return u >= w.lo && u <= w.hi;
}

ScreenPattern empty_intensity(const InterferometerLayout& layout) {
  ScreenPattern p;
  p.kind = optics::PatternKind::intensity;
  p.geometry = layout.geometry;
  p.u = optics::uniform_grid(layout.window, layout.sample_count);
  p.value.assign(p.u.size(), 0.0);
  return p;
}

double incoherent_sample(const InterferometerLayout& layout, double u) {
  const double x = layout.geometry.detector_distance;
  double sum = 0.0;
  for (std::size_t a = 0; a < layout.arms.size(); ++a) {
    if (!in_support(layout, a, u)) continue;
    const SlitSystem& arm = layout.arms[a];
    sum += optics::intensity(arm, layout.geometry,
                             optics::screen_to_theta(u, arm.center_offset, x));
  }
  return sum;
}

double fraunhofer_sample(const InterferometerLayout& layout, double origin,
                         double u) {
  const double theta =
      optics::screen_to_theta(u, origin, layout.geometry.detector_distance);
  std::complex<double> sum{0.0, 0.0};
  for (std::size_t a = 0; a < layout.arms.size(); ++a) {
    if (!in_support(layout, a, u)) continue;
    SlitSystem arm = layout.arms[a];
    arm.center_offset -= origin;
    sum += optics::amplitude(arm, layout.geometry, theta);
  }
  return std::norm(sum);
}

double exact_path_sample(const InterferometerLayout& layout, double origin,
                         double u) {
  const double x = layout.geometry.detector_distance;
  const double k = layout.geometry.wavenumber();
  const double ur = u - origin;
  const double r0 = std::hypot(x, ur);
  std::complex<double> sum{0.0, 0.0};
  for (std::size_t a = 0; a < layout.arms.size(); ++a) {
    if (!in_support(layout, a, u)) continue;
    SlitSystem arm = layout.arms[a];
    const double c = arm.center_offset - origin;
    arm.center_offset = 0.0;
    const double theta = optics::screen_to_theta(ur, c, x);
    // r_arm - r_0 without cancellation; k r itself would be ~1e7 rad.
    const double ra = std::hypot(x, ur - c);
    const double path = (c * c - 2.0 * ur * c) / (ra + r0);
    sum += optics::amplitude(arm, layout.geometry, theta) *
           std::polar(1.0, k * path);
  }
  return std::norm(sum);
}

template <class Sample>
void fill(ScreenPattern& p, Exec exec, Sample&& sample) {
  const auto n = static_cast<std::ptrdiff_t>(p.u.size());
  if (exec == Exec::serial) {
    for (std::ptrdiff_t i = 0; i < n; ++i) p.value[i] = sample(p.u[i]);
  } else {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) p.value[i] = sample(p.u[i]);
  }
}

}  // namespace

void InterferometerLayout::validate() const {
  if (arms.empty()) throw InvalidInput("layout needs at least one arm");
  if (sample_count < 3) throw InvalidInput("layout needs >= 3 samples");
  if (!(window.hi > window.lo) || !std::isfinite(window.lo) ||
      !std::isfinite(window.hi))
    throw InvalidInput("layout window must satisfy lo < hi");
  if (!arm_supports.empty() && arm_supports.size() != arms.size())
    throw InvalidInput("arm_supports must be empty or one per arm");
  geometry.validate();
  for (const auto& arm : arms) {
    arm.validate();
    optics::check_screen_window(window, arm.center_offset,
                                geometry.detector_distance);
  }
  optics::check_screen_window(window, aperture_center(),
                              geometry.detector_distance);
}

double InterferometerLayout::aperture_center() const {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const auto& arm : arms) {
    const double half =
        0.5 * (arm.slit_count - 1) * arm.period() + 0.5 * arm.slit_width;
    lo = std::min(lo, arm.center_offset - half);
    hi = std::max(hi, arm.center_offset + half);
  }
  return 0.5 * (lo + hi);
}

InterferometerLayout canonical_layout(double b, double s, double lambda,
                                      double x, Window window,
                                      std::size_t samples) {
  InterferometerLayout layout;
  layout.geometry = BeamGeometry{lambda, x, 1.0};
  layout.arms.push_back(SlitSystem{2, b, s, 0.0});
  layout.arms.push_back(SlitSystem{1, b, s, 1.5 * (s + b)});
  layout.window = window;
  layout.sample_count = samples;
  layout.validate();
  return layout;
}

Window superseparable_window(double b, double s, double lambda, double x) {
  const double half = first_minimum_offset(b, lambda, x);
  return {-half, 1.5 * (s + b) + half};
}

Window triple_window(double b, double s, double lambda, double x) {
  const double half = first_minimum_offset(b, lambda, x);
  const double center = 0.5 * (s + b);
  return {center - half, center + half};
}

ScreenPattern combine_incoherent(const InterferometerLayout& layout,
                                 Exec exec) {
  layout.validate();
  ScreenPattern p = empty_intensity(layout);
  fill(p, exec, [&](double u) { return incoherent_sample(layout, u); });
  return p;
}

ScreenPattern combine_coherent(const InterferometerLayout& layout,
                               CoherentModel model, Exec exec) {
  layout.validate();
  ScreenPattern p = empty_intensity(layout);
  const double origin = layout.aperture_center();
  if (model == CoherentModel::fraunhofer)
    fill(p, exec,
         [&](double u) { return fraunhofer_sample(layout, origin, u); });
  else
    fill(p, exec,
         [&](double u) { return exact_path_sample(layout, origin, u); });
  return p;
}

double pattern_discriminator(const ScreenPattern& p, const ScreenPattern& q) {
  if (p.kind != optics::PatternKind::intensity ||
      q.kind != optics::PatternKind::intensity)
    throw InvalidInput("discriminator compares intensity patterns");
  if (p.u != q.u || p.value.size() != q.value.size() ||
      p.value.size() != p.u.size())
    throw InvalidInput("discriminator needs identical sample grids");
  double diff = 0.0;
  double np = 0.0;
  double nq = 0.0;
  for (std::size_t i = 0; i < p.value.size(); ++i) {
    const double d = p.value[i] - q.value[i];
    diff += d * d;
    np += p.value[i] * p.value[i];
    nq += q.value[i] * q.value[i];
  }
  const double denom = std::sqrt(std::max(np, nq));
  if (denom == 0.0) return 0.0;
  return std::sqrt(diff) / denom;
}

double integrate(const ScreenPattern& pattern) {
  if (pattern.kind != optics::PatternKind::intensity)
    throw InvalidInput("integrate needs an intensity pattern");
  if (pattern.value.size() != pattern.u.size())
    throw InvalidInput("intensity pattern size mismatch");
  double total = 0.0;
  for (std::size_t i = 1; i < pattern.u.size(); ++i)
    total += 0.5 * (pattern.value[i] + pattern.value[i - 1]) *
             (pattern.u[i] - pattern.u[i - 1]);
  return total;
}

ScreenPattern count_matched(const ScreenPattern& pattern, double total) {
  const double current = integrate(pattern);
  if (!(current > 0.0))
    throw InvalidInput("cannot count-match a pattern with zero integral");
  if (!std::isfinite(total) || total < 0.0)
    throw InvalidParameter("target count must be finite and >= 0");
  ScreenPattern out = pattern;
  const double scale = total / current;
  for (double& v : out.value) v *= scale;
  return out;
}

std::vector<optics::Extremum> envelope_maxima(const ScreenPattern& pattern,
                                              double fringe_period,
                                              double min_separation,
                                              double relative_threshold) {
  if (pattern.kind != optics::PatternKind::intensity || pattern.size() < 3)
    throw InvalidInput("envelope analysis needs >= 3 intensity samples");
  if (!(fringe_period > 0.0) || !(min_separation >= 0.0))
    throw InvalidParameter("fringe period must be > 0");
  pattern.validate();

  const std::size_t n = pattern.size();
  const double du = (pattern.u.back() - pattern.u.front()) /
                    static_cast<double>(n - 1);
  auto width = static_cast<std::size_t>(std::lround(fringe_period / du));
  if (width % 2 == 0) ++width;
  const std::size_t half = width / 2;

  std::vector<double> prefix(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    prefix[i + 1] = prefix[i] + pattern.value[i];

  ScreenPattern smooth = pattern;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t lo = i >= half ? i - half : 0;
    const std::size_t hi = std::min(n - 1, i + half);
    smooth.value[i] =
        (prefix[hi + 1] - prefix[lo]) / static_cast<double>(hi - lo + 1);
  }
  const double peak =
      *std::max_element(smooth.value.begin(), smooth.value.end());

  std::vector<optics::Extremum> candidates;
  for (const auto& e : optics::find_extrema(smooth))
    if (e.kind == optics::ExtremumKind::max &&
        e.value >= relative_threshold * peak)
      candidates.push_back(e);

  std::sort(candidates.begin(), candidates.end(),
            [](const auto& a, const auto& b) { return a.value > b.value; });
  std::vector<optics::Extremum> kept;
  for (const auto& c : candidates) {
    const bool clear = std::none_of(kept.begin(), kept.end(), [&](auto& k) {
      return std::abs(k.coordinate - c.coordinate) < min_separation;
    });
    if (clear) kept.push_back(c);
  }
  // Averaging over one period biases the location by the slope of any
  // overlapping tail; report the strongest raw fringe under each peak.
  const auto raw = optics::find_extrema(pattern);
  for (auto& k : kept) {
    const optics::Extremum* best = nullptr;
    for (const auto& r : raw)
      if (r.kind == optics::ExtremumKind::max &&
          std::abs(r.coordinate - k.coordinate) <= fringe_period &&
          (!best || r.value > best->value))
        best = &r;
    if (best) k = *best;
  }
  std::sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) {
    return a.coordinate < b.coordinate;
  });
  return kept;
}

}  // namespace supersep::combine
