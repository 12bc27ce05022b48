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

#ifndef SUPERSEP_OPTICS_HPP_
#define SUPERSEP_OPTICS_HPP_

#include <complex>
#include <cstddef>
#include <vector>

#include "supersep/exec.hpp"

namespace supersep::optics {

inline constexpr double kPi = 3.14159265358979323846;

// Screen patterns are sampled on this many points unless a caller asks
// otherwise; resolves the s = 5b fringes with > 40 samples each.
inline constexpr std::size_t kDefaultSamples = 4096;

// Branch width around the removable singularities of sin(x)/x and
// sin(Nx)/sin(x).
inline constexpr double kSeriesBranch = 1e-8;

/// One interferometer arm: N identical slits of width b on a lattice of
/// period s + b, centred at `center_offset` on the interferometer face.
/// Lengths are in metres throughout the library.
struct SlitSystem {
  int slit_count = 1;
  double slit_width = 0.0;
  double slit_separation = 0.0;  // edge to edge
  double center_offset = 0.0;

  double period() const { return slit_separation + slit_width; }

  // Slit centres relative to the system centre, symmetric about 0.
  std::vector<double> slit_centers() const;

  // Throws InvalidParameter.
  void validate() const;
};

struct BeamGeometry {
  double wavelength = 0.0;
  double detector_distance = 0.0;
  double amplitude_scale = 1.0;

  double wavenumber() const { return 2.0 * kPi / wavelength; }
  void validate() const;
};

struct Window {
  double lo = 0.0;
  double hi = 0.0;

  double width() const { return hi - lo; }
};

enum class PatternKind { amplitude, intensity };

/// Sampled screen pattern. Intensity patterns fill `value`; amplitude
/// patterns fill `field`. The other vector stays empty.
struct ScreenPattern {
  PatternKind kind = PatternKind::intensity;
  BeamGeometry geometry;
  std::vector<double> u;
  std::vector<double> value;
  std::vector<std::complex<double>> field;

  std::size_t size() const { return u.size(); }

  // Throws InvalidInput when coordinates are not strictly increasing or an
  // intensity sample is negative or non-finite.
  void validate() const;
};

struct BetaGamma {
  double beta = 0.0;
  double gamma = 0.0;
};

BetaGamma beta_gamma(double theta, double b, double s, double lambda);

// sin(beta)/beta, equal to 1 at beta = 0.
double sinc(double beta);

// sin^2(beta)/beta^2 in [0, 1].
double diffraction_factor(double beta);

// Signed sin(N gamma)/sin(gamma); at gamma = m pi the limit is
// (-1)^{m(N-1)} N.
double dirichlet_ratio(int n, double gamma);

// sin^2(N gamma)/sin^2(gamma) in [0, N^2]; identically 1 for N = 1.
double interference_factor(int n, double gamma);

/// Far-field intensity A (b/x)^2 sin^2(beta)/beta^2 sin^2(N gamma)/sin^2(gamma)
/// at angle `theta` measured from the system centre.
double intensity(const SlitSystem& system, const BeamGeometry& geom,
                 double theta);

/// Far-field complex amplitude. The slit lattice sum is carried out term by
/// term and the centre offset c contributes e^{i k c sin(theta)}, so
/// |amplitude|^2 equals intensity() for a centred system.
std::complex<double> amplitude(const SlitSystem& system,
                               const BeamGeometry& geom, double theta);

// arctan((u - system_center) / x).
double screen_to_theta(double u, double system_center, double x);

// Throws InvalidParameter when a window edge maps to |theta| >= pi/2 as
// seen from `system_center`. Sweep kernels call this before entering a
// parallel region; by monotonicity of arctan the interior is then safe.
void check_screen_window(const Window& window, double system_center,
                         double x);

// n uniformly spaced points from lo to hi inclusive.
std::vector<double> uniform_grid(const Window& window, std::size_t n);

/// Intensity of one system over the screen, angle measured from the
/// system's own centre.
ScreenPattern sample_intensity(const SlitSystem& system,
                               const BeamGeometry& geom, const Window& window,
                               std::size_t n = kDefaultSamples,
                               Exec exec = Exec::parallel);

/// Amplitude of one system over the screen, angle measured from the
/// coordinate origin (where the centre offset phase is referenced).
ScreenPattern sample_amplitude(const SlitSystem& system,
                               const BeamGeometry& geom, const Window& window,
                               std::size_t n = kDefaultSamples,
                               Exec exec = Exec::parallel);

enum class ExtremumKind { max, min };

struct Extremum {
  double coordinate = 0.0;
  double value = 0.0;
  ExtremumKind kind = ExtremumKind::max;
  std::size_t index = 0;  // sample the extremum was detected at
};

/// Strict interior local extrema of an intensity pattern by three-point
/// comparison, refined by a parabola through the neighbouring samples.
/// A plateau is reported once, at its leftmost sample, without refinement.
std::vector<Extremum> find_extrema(const ScreenPattern& pattern);

}  // namespace supersep::optics

#endif  // SUPERSEP_OPTICS_HPP_
