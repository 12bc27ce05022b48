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

#ifndef SUPERSEP_COMBINE_HPP_
#define SUPERSEP_COMBINE_HPP_

#include <cstddef>
#include <vector>

#include "supersep/exec.hpp"
#include "supersep/optics.hpp"

namespace supersep::combine {

/// Interferometer with several arms illuminated by one plane wave at normal
/// incidence, observed on a common screen at distance x.
///
/// `arm_supports` optionally restricts each arm to a screen interval (the arm
/// contributes nothing outside it); empty means unrestricted.
struct InterferometerLayout {
  std::vector<optics::SlitSystem> arms;
  optics::BeamGeometry geometry;
  optics::Window window;
  std::size_t sample_count = optics::kDefaultSamples;
  std::vector<optics::Window> arm_supports;

  // Throws InvalidInput (layout structure) or InvalidParameter (physics).
  void validate() const;

  // Midpoint between the outermost slit edges of all arms.
  double aperture_center() const;
};

/// The 2+1 layout: a double slit centred at u = 0 and a single slit centred
/// at +3(s+b)/2, so that together their slits sit on one lattice of period
/// s + b. `window` and `samples` are taken as given.
InterferometerLayout canonical_layout(double b, double s, double lambda,
                                      double x, optics::Window window,
                                      std::size_t samples =
                                          optics::kDefaultSamples);

/// Screen interval covering -pi <= beta <= 3pi measured from the double-slit
/// centre: from its lower first minimum to the single slit's upper one.
optics::Window superseparable_window(double b, double s, double lambda,
                                     double x);

/// Screen interval covering -pi <= beta <= pi about the combined aperture
/// centre of the canonical layout.
optics::Window triple_window(double b, double s, double lambda, double x);

/// Intensities add: sum over arms of intensity(arm, theta_arm(u)), each arm
/// seen from its own centre.
optics::ScreenPattern combine_incoherent(const InterferometerLayout& layout,
                                         Exec exec = Exec::parallel);

enum class CoherentModel {
  // All arms at the angle seen from the combined aperture centre, each with
  // its linear offset phase e^{i k c sin(theta)}. The union of the arms then
  // behaves as one grating.
  fraunhofer,
  // Each arm's centred amplitude at its own angle times the exact path phase
  // e^{i k (r_arm - r_origin)}, r = sqrt(x^2 + (u - centre)^2). Reduces to
  // `fraunhofer` only when x greatly exceeds (aperture width)^2 / lambda.
  exact_path,
};

/// Amplitudes add: |sum over arms of amplitude|^2.
optics::ScreenPattern combine_coherent(
    const InterferometerLayout& layout,
    CoherentModel model = CoherentModel::fraunhofer,
    Exec exec = Exec::parallel);

/// ||p - q||_2 / max(||p||_2, ||q||_2). Zero for two zero patterns.
double pattern_discriminator(const optics::ScreenPattern& p,
                             const optics::ScreenPattern& q);

// Trapezoidal integral of an intensity pattern over its grid.
double integrate(const optics::ScreenPattern& pattern);

/// Copy of `pattern` scaled so its integral equals `total`.
optics::ScreenPattern count_matched(const optics::ScreenPattern& pattern,
                                    double total);

/// Maxima of the diffraction envelope: the pattern is box-averaged over one
/// fringe period to wash out interference, local maxima of the average below
/// `relative_threshold` of its peak are dropped, and of any two maxima closer
/// than `min_separation` only the larger is kept. Each survivor is then
/// moved to the highest raw maximum within one fringe period of it.
std::vector<optics::Extremum> envelope_maxima(
    const optics::ScreenPattern& pattern, double fringe_period,
    double min_separation, double relative_threshold = 0.1);

}  // namespace supersep::combine

#endif  // SUPERSEP_COMBINE_HPP_
