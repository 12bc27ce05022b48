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

#ifndef SUPERSEP_SCHMUDGEN_HPP_
#define SUPERSEP_SCHMUDGEN_HPP_

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "supersep/exec.hpp"

// Sampled realisation of a pair of one-parameter unitary groups on L^2(R^2)
// whose generators satisfy [Q, P] = iI but whose exponentials violate the
// Weyl relation on a rectangle adjacent to the origin:
//
//   (U(t) f)(x, y) = e^{itx} f(x, y + t)
//   (V(s) f)(x, y) = w(x, x + s, y) f(x + s, y)
//
// where, in the open upper half-plane y > 0, the multiplier w is conj(z)
// when x <= 0 < x + s and z when x + s <= 0 < x; elsewhere it is 1. The
// crossing count telescopes, so V(s) V(s') = V(s + s') exactly, and
//
//   (I - e^{-its} V(-s) U(-t) V(s) U(t)) f = (1 - z) chi_R f,
//   R = {0 < x <= s, 0 < y <= t}.
//
// Translations are restricted to integer multiples of the grid spacing so
// every shift is an exact permutation of samples.
namespace supersep::schmudgen {

inline constexpr int kDefaultRadius = 128;        // 257 x 257 points
inline constexpr double kDefaultSpacing = 0.0625;  // h = 1/16, L = 8

// Field on the square grid x_i = (i - R) h, y_j = (j - R) h, 0 <= i, j <= 2R.
// Samples outside the grid are taken as zero.
class GridField {
 public:
  GridField(int radius = kDefaultRadius, double spacing = kDefaultSpacing);

  int radius() const { return radius_; }
  int points_per_axis() const { return 2 * radius_ + 1; }
  double spacing() const { return spacing_; }
  double extent() const { return spacing_ * radius_; }

  double x(int i) const { return (i - radius_) * spacing_; }
  double y(int j) const { return (j - radius_) * spacing_; }

  std::complex<double>& operator()(int i, int j) {
    return values_[index(i, j)];
  }
  const std::complex<double>& operator()(int i, int j) const {
    return values_[index(i, j)];
  }

  std::span<const std::complex<double>> values() const { return values_; }
  std::span<std::complex<double>> values() { return values_; }

  // sqrt(h^2 sum |f|^2).
  double norm() const;

  bool same_grid(const GridField& other) const {
    return radius_ == other.radius_ && spacing_ == other.spacing_;
  }

  // Bounding box of the nonzero samples, in index space.
  struct Support {
    bool empty = true;
    int i_lo = 0, i_hi = -1, j_lo = 0, j_hi = -1;
  };
  Support support() const;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * points_per_axis() +
           static_cast<std::size_t>(j);
  }

  int radius_;
  double spacing_;
  std::vector<std::complex<double>> values_;
};

/// Unit-modulus z different from 1.
class PhaseZ {
 public:
  // Throws InvalidParameter when ||z| - 1| >= 1e-12 or |z - 1| <= 1e-9.
  static PhaseZ make(std::complex<double> z);
  static PhaseZ from_angle(double radians);

  std::complex<double> value() const { return z_; }

 private:
  explicit PhaseZ(std::complex<double> z) : z_(z) {}
  std::complex<double> z_;
};

// Number of grid steps in `shift`; throws AlignmentError when `shift` is not
// an integer multiple of `spacing`.
int grid_steps(double shift, double spacing);

GridField apply_U(double t, const GridField& field, Exec exec = Exec::parallel);

GridField apply_V(double s, PhaseZ z, const GridField& field,
                  Exec exec = Exec::parallel);

/// (I - e^{-its} V(-s) U(-t) V(s) U(t)) f by composing the four operators.
/// s and t must be positive grid multiples.
GridField weyl_defect(double s, double t, PhaseZ z, const GridField& field,
                      Exec exec = Exec::parallel);

struct DefectCheck {
  double max_inside_deviation = 0.0;  // max |D - (1 - z) f| on R(s, t)
  double max_outside = 0.0;           // max |D| off R(s, t)
  bool holds = false;
};

/// Compares a computed defect with (1 - z) chi_R f. Inside R the deviation
/// must stay below 1e-12; outside, |D| may not exceed the rounding of the
/// phase products, 8 eps |f| pointwise, with the smallest normal double as
/// an absolute floor for subnormal samples.
DefectCheck verify_defect_identity(int s_steps, int t_steps, PhaseZ z,
                                   const GridField& field,
                                   const GridField& defect);

/// True iff every test field has sup-norm defect below 1e-9.
bool is_weyl_pair(double s, double t, PhaseZ z,
                  std::span<const GridField> test_fields,
                  Exec exec = Exec::parallel);

// Membership in R(s, t) = {0 < x <= s, 0 < y <= t}, on grid indices.
bool in_defect_region(const GridField& grid, int i, int j, int s_steps,
                      int t_steps);

/// exp(-r^2 / (2 sigma^2)) truncated to zero for r > cutoff.
GridField make_gaussian(double cx, double cy, double sigma, double cutoff,
                        int radius = kDefaultRadius,
                        double spacing = kDefaultSpacing);

/// C-infinity bump exp(1 - 1/(1 - r^2/rho^2)) inside r < rho, zero outside.
GridField make_bump(double cx, double cy, double rho,
                    int radius = kDefaultRadius,
                    double spacing = kDefaultSpacing);

}  // namespace supersep::schmudgen

#endif  // SUPERSEP_SCHMUDGEN_HPP_
