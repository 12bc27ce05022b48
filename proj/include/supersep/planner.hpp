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

#ifndef SUPERSEP_PLANNER_HPP_
#define SUPERSEP_PLANNER_HPP_

#include <optional>
#include <string>
#include <vector>

// Feasibility arithmetic for the 2+1-slit experiment. SI units.
namespace supersep::planner {

namespace constants {
inline constexpr double kPlanck = 6.62607015e-34;            // J s, exact
inline constexpr double kAtomicMassUnit = 1.66053906660e-27;  // kg
inline constexpr double kElectronMass = 9.1093837015e-31;     // kg
inline constexpr double kRb85Mass = 84.911789738 * kAtomicMassUnit;
inline constexpr double kC12Mass = 12.0 * kAtomicMassUnit;
}  // namespace constants

struct ExperimentParams {
  double b = 0.0;       // slit width
  double s = 0.0;       // slit separation
  double lambda = 0.0;  // wavelength
  std::optional<double> mass;
  std::optional<double> velocity;
};

struct GeometryReport {
  double theta0 = 0.0;            // first single-slit minimum, arcsin(lambda/b)
  double x_detector = 0.0;        // 3 b (s + b) / (4 lambda)
  double delta = 0.0;             // 3 (s + b) / 2
  double gamma_beta_ratio = 0.0;  // (s + b) / b
};

// Throws InvalidParameter for nonpositive inputs and NoFarFieldMinimum when
// lambda >= b.
GeometryReport geometry(const ExperimentParams& params);

// h / (m v). Throws InvalidParameter for nonpositive inputs.
double de_broglie(double mass, double velocity);

// Inverse: speed at which `mass` has wavelength `lambda`.
double velocity_for_wavelength(double mass, double lambda);

/// Geometry with b and s divided by `factor`, lambda unchanged.
GeometryReport rescale_resolution(const ExperimentParams& params,
                                  double factor);

/// A quoted round figure next to the value the formulas give.
struct FigureCheck {
  std::string quantity;
  double quoted = 0.0;
  double computed = 0.0;

  double ratio() const { return quoted / computed; }
  // Agreement within `relative` of the computed value.
  bool agrees(double relative = 0.05) const;
};

/// Feasibility figures quoted for the 85Rb parameter set, each recomputed
/// from h/(mv) and the geometry formulas. Several de Broglie figures are off
/// by about a factor of ten; the report makes that visible instead of
/// adopting them.
std::vector<FigureCheck> quoted_figure_checks();

}  // namespace supersep::planner

#endif  // SUPERSEP_PLANNER_HPP_
