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

#include "supersep/optics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "supersep/error.hpp"

namespace supersep::optics {

namespace {

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

// Three-point parabola vertex through (x0,y0), (x1,y1), (x2,y2).
void parabola_vertex(double x0, double y0, double x1, double y1, double x2,
                     double y2, double& xv, double& yv) {
  const double d01 = (y0 - y1) / (x0 - x1);
  const double d12 = (y1 - y2) / (x1 - x2);
  const double a = (d01 - d12) / (x0 - x2);
  if (a == 0.0 || !std::isfinite(a)) {
    xv = x1;
    yv = y1;
    return;
  }
  const double b = d01 - a * (x0 + x1);
  const double c = y1 - a * x1 * x1 - b * x1;
  xv = -b / (2.0 * a);
  // Keep the refined point inside the bracketing samples.
  if (xv < x0 || xv > x2) {
    xv = x1;
    yv = y1;
    return;
  }
  yv = a * xv * xv + b * xv + c;
}

}  // namespace

std::vector<double> SlitSystem::slit_centers() const {
  std::vector<double> centers(static_cast<std::size_t>(slit_count));
  const double mid = 0.5 * static_cast<double>(slit_count - 1);
  for (int j = 0; j < slit_count; ++j)
    centers[static_cast<std::size_t>(j)] = (j - mid) * period();
  return centers;
}

void SlitSystem::validate() const {
  if (slit_count < 1)
    throw InvalidParameter("slit count must be >= 1, got " +
                           std::to_string(slit_count));
  if (!positive_finite(slit_width))
    throw InvalidParameter("slit width must be > 0");
  if (!std::isfinite(slit_separation) || slit_separation < 0.0)
    throw InvalidParameter("slit separation must be >= 0");
  if (!std::isfinite(center_offset))
    throw InvalidParameter("centre offset must be finite");
}

void BeamGeometry::validate() const {
  if (!positive_finite(wavelength))
    throw InvalidParameter("wavelength must be > 0");
  if (!positive_finite(detector_distance))
    throw InvalidParameter("detector distance must be > 0");
  if (!positive_finite(amplitude_scale))
    throw InvalidParameter("amplitude scale must be > 0");
}

void ScreenPattern::validate() const {
  for (std::size_t i = 1; i < u.size(); ++i)
    if (!(u[i] > u[i - 1]))
      throw InvalidInput("screen coordinates must be strictly increasing");
  if (kind == PatternKind::intensity) {
    if (value.size() != u.size())
      throw InvalidInput("intensity pattern size mismatch");
    for (double v : value)
      if (!std::isfinite(v) || v < 0.0)
        throw InvalidInput("intensity samples must be finite and >= 0");
  } else if (field.size() != u.size()) {
    throw InvalidInput("amplitude pattern size mismatch");
  }
}

BetaGamma beta_gamma(double theta, double b, double s, double lambda) {
  if (!positive_finite(lambda))
    throw InvalidParameter("wavelength must be > 0");
  if (!positive_finite(b)) throw InvalidParameter("slit width must be > 0");
  if (!std::isfinite(s) || s < 0.0)
    throw InvalidParameter("slit separation must be >= 0");
  if (!std::isfinite(theta) || std::abs(theta) >= 0.5 * kPi)
    throw InvalidParameter("|theta| must be < pi/2");
  const double sin_theta = std::sin(theta);
  return {b / lambda * kPi * sin_theta, (s + b) / lambda * kPi * sin_theta};
}

double sinc(double beta) {
  if (std::abs(beta) < kSeriesBranch) return 1.0 - beta * beta / 6.0;
  return std::sin(beta) / beta;
}

double diffraction_factor(double beta) {
  const double s = sinc(beta);
  return s * s;
}

double dirichlet_ratio(int n, double gamma) {
  if (n == 1) return 1.0;
  // Reduce gamma = m pi + d with |d| <= pi/2 so both sines are evaluated
  // near their zero with full relative accuracy.
  const double m = std::round(gamma / kPi);
  const double d = gamma - m * kPi;
  const bool odd_m = std::fmod(std::abs(m), 2.0) == 1.0;
  const bool odd_n_minus_1 = ((n - 1) % 2) != 0;
  const double sign = (odd_m && odd_n_minus_1) ? -1.0 : 1.0;
  const double nn = static_cast<double>(n);
  if (std::abs(d) < kSeriesBranch)
    return sign * nn * (1.0 - (nn * nn - 1.0) * d * d / 6.0);
  return sign * std::sin(nn * d) / std::sin(d);
}

double interference_factor(int n, double gamma) {
  if (n == 1) return 1.0;
  const double r = dirichlet_ratio(n, gamma);
  return r * r;
}

double intensity(const SlitSystem& system, const BeamGeometry& geom,
                 double theta) {
  system.validate();
  geom.validate();
  const auto bg = beta_gamma(theta, system.slit_width, system.slit_separation,
                             geom.wavelength);
  const double ratio = system.slit_width / geom.detector_distance;
  return geom.amplitude_scale * ratio * ratio * diffraction_factor(bg.beta) *
         interference_factor(system.slit_count, bg.gamma);
}

std::complex<double> amplitude(const SlitSystem& system,
                               const BeamGeometry& geom, double theta) {
  system.validate();
  geom.validate();
  const auto bg = beta_gamma(theta, system.slit_width, system.slit_separation,
                             geom.wavelength);
  // k d_j sin(theta) = 2 gamma (j - (N-1)/2). With gamma = m pi + d the
  // m pi part contributes (-1)^m to every term when N is even and nothing
  // when N is odd, so the sum runs over the reduced phase only.
  const double m = std::round(bg.gamma / kPi);
  const double d = bg.gamma - m * kPi;
  const bool flip = system.slit_count % 2 == 0 && std::fmod(std::abs(m), 2.0) == 1.0;
  const double mid = 0.5 * static_cast<double>(system.slit_count - 1);
  std::complex<double> lattice{0.0, 0.0};
  for (int j = 0; j < system.slit_count; ++j)
    lattice += std::polar(1.0, 2.0 * d * (j - mid));
  if (flip) lattice = -lattice;
  const double offset_phase =
      geom.wavenumber() * system.center_offset * std::sin(theta);
  const double scale = std::sqrt(geom.amplitude_scale) * system.slit_width /
                       geom.detector_distance * sinc(bg.beta);
  return scale * std::polar(1.0, offset_phase) * lattice;
}

double screen_to_theta(double u, double system_center, double x) {
  if (!positive_finite(x))
    throw InvalidParameter("detector distance must be > 0");
  return std::atan((u - system_center) / x);
}

void check_screen_window(const Window& window, double system_center,
                         double x) {
  for (double edge : {window.lo, window.hi}) {
    const double theta = screen_to_theta(edge, system_center, x);
    if (!std::isfinite(theta) || std::abs(theta) >= 0.5 * kPi)
      throw InvalidParameter("screen window reaches |theta| = pi/2");
  }
}

std::vector<double> uniform_grid(const Window& window, std::size_t n) {
  if (n < 2) throw InvalidInput("a screen grid needs at least 2 samples");
  if (!(window.hi > window.lo) || !std::isfinite(window.lo) ||
      !std::isfinite(window.hi))
    throw InvalidInput("screen window must satisfy lo < hi");
  std::vector<double> u(n);
  const double step = window.width() / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i)
    u[i] = window.lo + step * static_cast<double>(i);
  u.back() = window.hi;
  return u;
}

ScreenPattern sample_intensity(const SlitSystem& system,
                               const BeamGeometry& geom, const Window& window,
                               std::size_t n, Exec exec) {
  system.validate();
  geom.validate();
  ScreenPattern p;
  p.kind = PatternKind::intensity;
  p.geometry = geom;
  p.u = uniform_grid(window, n);
  check_screen_window(window, system.center_offset, geom.detector_distance);
  p.value.resize(n);
  const auto count = static_cast<std::ptrdiff_t>(n);
  const double x = geom.detector_distance;
  if (exec == Exec::serial) {
    for (std::ptrdiff_t i = 0; i < count; ++i)
      p.value[i] = intensity(
          system, geom, screen_to_theta(p.u[i], system.center_offset, x));
  } else {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < count; ++i)
      p.value[i] = intensity(
          system, geom, screen_to_theta(p.u[i], system.center_offset, x));
  }
  return p;
}

ScreenPattern sample_amplitude(const SlitSystem& system,
                               const BeamGeometry& geom, const Window& window,
                               std::size_t n, Exec exec) {
  system.validate();
  geom.validate();
  ScreenPattern p;
  p.kind = PatternKind::amplitude;
  p.geometry = geom;
  p.u = uniform_grid(window, n);
  check_screen_window(window, 0.0, geom.detector_distance);
  p.field.resize(n);
  const auto count = static_cast<std::ptrdiff_t>(n);
  const double x = geom.detector_distance;
  if (exec == Exec::serial) {
    for (std::ptrdiff_t i = 0; i < count; ++i)
      p.field[i] = amplitude(system, geom, screen_to_theta(p.u[i], 0.0, x));
  } else {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < count; ++i)
      p.field[i] = amplitude(system, geom, screen_to_theta(p.u[i], 0.0, x));
  }
  return p;
}

std::vector<Extremum> find_extrema(const ScreenPattern& pattern) {
  if (pattern.kind != PatternKind::intensity)
    throw InvalidInput("find_extrema needs an intensity pattern");
  if (pattern.size() < 3)
    throw InvalidInput("find_extrema needs at least 3 samples");
  pattern.validate();

  const auto& u = pattern.u;
  const auto& v = pattern.value;
  const std::size_t n = v.size();
  std::vector<Extremum> out;
  std::size_t i = 1;
  while (i + 1 < n) {
    // [i, j] is the run of samples equal to v[i].
    std::size_t j = i;
    while (j + 1 < n && v[j + 1] == v[i]) ++j;
    if (j + 1 >= n) break;
    const double left = v[i - 1];
    const double right = v[j + 1];
    const bool is_max = v[i] > left && v[i] > right;
    const bool is_min = v[i] < left && v[i] < right;
    if (is_max || is_min) {
      Extremum e;
      e.kind = is_max ? ExtremumKind::max : ExtremumKind::min;
      e.index = i;
      if (i == j) {
        parabola_vertex(u[i - 1], left, u[i], v[i], u[i + 1], right,
                        e.coordinate, e.value);
        e.value = std::max(0.0, e.value);
      } else {
        e.coordinate = u[i];
        e.value = v[i];
      }
      out.push_back(e);
    }
    i = j + 1;
  }
  return out;
}

}  // namespace supersep::optics
