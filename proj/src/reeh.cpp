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

#include "supersep/reeh.hpp"

#include <cmath>

#include "supersep/error.hpp"

namespace supersep::reeh {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

FluxConfig make_alpha(double charge, double flux) {
  if (!std::isfinite(charge) || !std::isfinite(flux))
    throw InvalidParameter("charge and flux must be finite");
  return {charge, flux, charge * flux / (2.0 * kPi)};
}

int epsilon(double t) {
  if (t > 0.0) return 1;
  if (t < 0.0) return -1;
  throw OnAxisError("sign function evaluated on an axis");
}

int bracket_product(const TranslationProbe& probe) {
  const int bx = epsilon(probe.x) - epsilon(probe.x + probe.a);
  const int by = epsilon(probe.y) - epsilon(probe.y - probe.b);
  return bx * by;
}

std::complex<double> cis_turns(double turns) {
  // Reduce to [-1/2, 1/2] turn; the subtraction is exact for |turns| < 2^52.
  const double r = turns - std::round(turns);
  const double quarters = 4.0 * r;
  if (quarters == std::round(quarters)) {
    switch (static_cast<int>(quarters)) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case -1: return {0.0, -1.0};
      default: return {-1.0, 0.0};  // +-2 quarters
    }
  }
  return std::polar(1.0, 2.0 * kPi * r);
}

std::complex<double> commutator_phase(const FluxConfig& cfg,
                                      const TranslationProbe& probe) {
  // (pi alpha / 2) * P radians = alpha * P / 4 turns.
  const int p = bracket_product(probe);
  return cis_turns(cfg.alpha * static_cast<double>(p) / 4.0);
}

bool is_integer(double value, double tolerance) {
  return std::isfinite(value) &&
         std::abs(value - std::round(value)) <= tolerance;
}

bool is_weyl(const FluxConfig& cfg) { return is_integer(cfg.alpha); }

SuperconductingCase superconducting_case(int n) {
  if (n < 0) throw InvalidParameter("flux quantum count must be >= 0");
  return {0.5 * n, n % 2 == 0};
}

bool representations_equivalent(double alpha1, double alpha2) {
  return is_integer(alpha1 - alpha2);
}

VectorPotential vector_potential(double flux, double x, double y) {
  const double r2 = x * x + y * y;
  if (r2 == 0.0) throw SingularPoint("vector potential is singular at r = 0");
  const double scale = flux / (2.0 * kPi * r2);
  return {-y * scale, x * scale};
}

Outcome predict_outcome(bool confines_potential, bool superseparability_holds) {
  if (!confines_potential) return Outcome::full_ab_shift;
  return superseparability_holds ? Outcome::two_diffraction_peaks
                                 : Outcome::half_ab_shift;
}

std::string_view to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::two_diffraction_peaks: return "TWO_DIFFRACTION_PEAKS";
    case Outcome::full_ab_shift: return "FULL_AB_SHIFT";
    case Outcome::half_ab_shift: return "HALF_AB_SHIFT";
  }
  return "UNKNOWN";
}

}  // namespace supersep::reeh
