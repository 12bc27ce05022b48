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

#ifndef SUPERSEP_REEH_HPP_
#define SUPERSEP_REEH_HPP_

#include <complex>
#include <string_view>

namespace supersep::reeh {

// Absolute tolerance on |alpha - round(alpha)| for integer tests.
inline constexpr double kIntegerTolerance = 1e-9;

/// Charge q, trapped flux Phi and alpha = q Phi / (2 pi).
struct FluxConfig {
  double charge = 0.0;
  double flux = 0.0;
  double alpha = 0.0;
};

FluxConfig make_alpha(double charge, double flux);

/// Base point (x, y) and translation amounts (a, b) of the group
/// commutator V_x(a) V_y(b) V_x(a)^-1 V_y(b)^-1.
struct TranslationProbe {
  double x = 0.0;
  double y = 0.0;
  double a = 0.0;
  double b = 0.0;
};

// +1 for t > 0, -1 for t < 0; throws OnAxisError at t == 0.
int epsilon(double t);

/// [eps(x) - eps(x+a)] [eps(y) - eps(y-b)], always one of 0, +4, -4.
int bracket_product(const TranslationProbe& probe);

// e^{2 pi i turns}; exact at multiples of a quarter turn.
std::complex<double> cis_turns(double turns);

/// Scalar multiplying I in the group commutator:
/// exp(i (pi alpha / 2) bracket_product) in {1, e^{+-2 pi i alpha}}.
std::complex<double> commutator_phase(const FluxConfig& cfg,
                                      const TranslationProbe& probe);

bool is_integer(double value, double tolerance = kIntegerTolerance);

// The generated group is the Weyl group iff alpha is an integer.
bool is_weyl(const FluxConfig& cfg);

struct SuperconductingCase {
  double alpha = 0.0;
  bool weyl = false;
};

/// n trapped flux quanta of pi/e seen by charge e: alpha = n/2, Weyl iff n
/// is even. Throws InvalidParameter for n < 0.
SuperconductingCase superconducting_case(int n);

bool representations_equivalent(double alpha1, double alpha2);

struct VectorPotential {
  double ax = 0.0;
  double ay = 0.0;
};

/// A = Phi / (2 pi r) (-y/r, x/r). Throws SingularPoint at the origin.
VectorPotential vector_potential(double flux, double x, double y);

enum class Outcome { two_diffraction_peaks, full_ab_shift, half_ab_shift };

/// Result of the solenoid interferometer, stray fields neglected.
Outcome predict_outcome(bool confines_potential, bool superseparability_holds);

std::string_view to_string(Outcome outcome);

}  // namespace supersep::reeh

#endif  // SUPERSEP_REEH_HPP_
