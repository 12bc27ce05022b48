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

#include "supersep/planner.hpp"

#include <cmath>

#include "supersep/error.hpp"

namespace supersep::planner {

namespace {

void require_positive(double v, const char* name) {
  if (!(std::isfinite(v) && v > 0.0))
    throw InvalidParameter(std::string(name) + " must be > 0");
}

}  // namespace

GeometryReport geometry(const ExperimentParams& p) {
  require_positive(p.b, "slit width");
  require_positive(p.s, "slit separation");
  require_positive(p.lambda, "wavelength");
  if (p.mass) require_positive(*p.mass, "mass");
  if (p.velocity) require_positive(*p.velocity, "velocity");
  if (!(p.lambda < p.b))
    throw NoFarFieldMinimum("lambda >= b: single slit has no first minimum");
  const double period = p.s + p.b;
  return {std::asin(p.lambda / p.b), 3.0 * p.b * period / (4.0 * p.lambda),
          1.5 * period, period / p.b};
}

double de_broglie(double mass, double velocity) {
  require_positive(mass, "mass");
  require_positive(velocity, "velocity");
  return constants::kPlanck / (mass * velocity);
}

double velocity_for_wavelength(double mass, double lambda) {
  require_positive(mass, "mass");
  require_positive(lambda, "wavelength");
  return constants::kPlanck / (mass * lambda);
}

GeometryReport rescale_resolution(const ExperimentParams& params,
                                  double factor) {
  require_positive(factor, "rescale factor");
  ExperimentParams scaled = params;
  scaled.b /= factor;
  scaled.s /= factor;
  return geometry(scaled);
}

bool FigureCheck::agrees(double relative) const {
  return std::abs(quoted - computed) <= relative * std::abs(computed);
}

std::vector<FigureCheck> quoted_figure_checks() {
  using namespace constants;
  const ExperimentParams canonical{0.2e-3, 1.0e-3, 100e-9, {}, {}};
  const auto g = geometry(canonical);
  const auto g10 = rescale_resolution(canonical, 10.0);
  return {
      {"x_detector_m", 1.8, g.x_detector},
      {"theta0_rad", 5e-4, g.theta0},
      {"x_detector_rescaled_10_m", 0.18, g10.x_detector},
      {"theta0_rescaled_10_rad", 5e-3, g10.theta0},
      {"lambda_rb85_at_2_m_per_s_m", 23e-9, de_broglie(kRb85Mass, 2.0)},
      {"velocity_rb85_for_100nm_m_per_s", 0.5,
       velocity_for_wavelength(kRb85Mass, 100e-9)},
      {"lambda_ratio_electron_over_rb85", 1.56e4, kRb85Mass / kElectronMass},
      {"lambda_ratio_c12_over_rb85", 7.0, kRb85Mass / kC12Mass},
  };
}

}  // namespace supersep::planner
