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

#include "supersep/schmudgen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "supersep/error.hpp"

namespace supersep::schmudgen {

namespace {

void check_in_grid(const GridField& f, int di, int dj, const char* what) {
  // Nonzero sample at (i, j) lands at (i - di, j - dj).
  const auto sup = f.support();
  if (sup.empty) return;
  const int last = f.points_per_axis() - 1;
  if (sup.i_lo - di < 0 || sup.i_hi - di > last || sup.j_lo - dj < 0 ||
      sup.j_hi - dj > last)
    throw ExtentError(std::string(what) + ": support would leave the grid");
}

template <class Body>
void for_each_row(int rows, Exec exec, Body&& body) {
  if (exec == Exec::serial) {
    for (int i = 0; i < rows; ++i) body(i);
  } else {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < rows; ++i) body(i);
  }
}

}  // namespace

GridField::GridField(int radius, double spacing)
    : radius_(radius), spacing_(spacing) {
  if (radius < 1) throw InvalidParameter("grid radius must be >= 1");
  if (!(spacing > 0.0) || !std::isfinite(spacing))
    throw InvalidParameter("grid spacing must be > 0");
  const auto n = static_cast<std::size_t>(points_per_axis());
  values_.assign(n * n, {0.0, 0.0});
}

double GridField::norm() const {
  double sum = 0.0;
  for (const auto& v : values_) sum += std::norm(v);
  return std::sqrt(sum) * spacing_;
}

GridField::Support GridField::support() const {
  Support s;
  const int n = points_per_axis();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if ((*this)(i, j) == std::complex<double>{}) continue;
      if (s.empty) {
        s = {false, i, i, j, j};
      } else {
        s.i_lo = std::min(s.i_lo, i);
        s.i_hi = std::max(s.i_hi, i);
        s.j_lo = std::min(s.j_lo, j);
        s.j_hi = std::max(s.j_hi, j);
      }
    }
  return s;
}

PhaseZ PhaseZ::make(std::complex<double> z) {
  if (!(std::abs(std::abs(z) - 1.0) < 1e-12))
    throw InvalidParameter("z must have unit modulus");
  if (!(std::abs(z - 1.0) > 1e-9)) throw InvalidParameter("z must differ from 1");
  return PhaseZ(z);
}

PhaseZ PhaseZ::from_angle(double radians) {
  return make(std::polar(1.0, radians));
}

int grid_steps(double shift, double spacing) {
  if (!std::isfinite(shift))
    throw AlignmentError("translation must be finite");
  const double m = shift / spacing;
  const double r = std::round(m);
  if (std::abs(m - r) > 1e-9 * std::max(1.0, std::abs(r)))
    throw AlignmentError("translation " + std::to_string(shift) +
                         " is not a multiple of the grid spacing");
  return static_cast<int>(r);
}

GridField apply_U(double t, const GridField& field, Exec exec) {
  const int m = grid_steps(t, field.spacing());
  check_in_grid(field, 0, m, "U(t)");
  GridField out(field.radius(), field.spacing());
  const int n = field.points_per_axis();
  const int r = field.radius();
  const double h2 = field.spacing() * field.spacing();
  const int j_lo = std::max(0, -m);
  const int j_hi = std::min(n, n - m);
  for_each_row(n, exec, [&](int i) {
    // t x = m h (i - R) h; integer product keeps U(-t) the exact conjugate.
    const auto phase =
        std::polar(1.0, static_cast<double>(m) * (i - r) * h2);
    const auto* src = &field(i, 0) + m;
    auto* dst = &out(i, 0);
    for (int j = j_lo; j < j_hi; ++j) dst[j] = phase * src[j];
  });
  return out;
}

GridField apply_V(double s, PhaseZ z, const GridField& field, Exec exec) {
  const int m = grid_steps(s, field.spacing());
  check_in_grid(field, m, 0, "V(s)");
  GridField out(field.radius(), field.spacing());
  const int n = field.points_per_axis();
  const int r = field.radius();
  const auto forward = std::conj(z.value());
  const auto backward = z.value();
  for_each_row(n, exec, [&](int i) {
    const int src = i + m;
    if (src < 0 || src >= n) return;
    const auto* in = &field(src, 0);
    auto* dst = &out(i, 0);
    std::copy(in, in + n, dst);
    // Crossing of x = 0 between destination x and source x + s, counted
    // with the half-open convention x <= 0 < x + s.
    const int cross = static_cast<int>(src - r > 0) - static_cast<int>(i - r > 0);
    if (cross == 0) return;
    const auto w = cross > 0 ? forward : backward;
    for (int j = r + 1; j < n; ++j) dst[j] *= w;
  });
  return out;
}

GridField weyl_defect(double s, double t, PhaseZ z, const GridField& field,
                      Exec exec) {
  const int ms = grid_steps(s, field.spacing());
  const int mt = grid_steps(t, field.spacing());
  if (ms <= 0 || mt <= 0)
    throw InvalidParameter("weyl_defect needs positive s and t");
  const double sg = ms * field.spacing();
  const double tg = mt * field.spacing();
  GridField w = apply_U(tg, field, exec);
  w = apply_V(sg, z, w, exec);
  w = apply_U(-tg, w, exec);
  w = apply_V(-sg, z, w, exec);
  const double h2 = field.spacing() * field.spacing();
  const auto scalar = std::polar(1.0, -static_cast<double>(ms) * mt * h2);
  GridField out(field.radius(), field.spacing());
  auto dst = out.values();
  auto src = field.values();
  auto wv = w.values();
  for (std::size_t k = 0; k < dst.size(); ++k) dst[k] = src[k] - scalar * wv[k];
  return out;
}

bool is_weyl_pair(double s, double t, PhaseZ z,
                  std::span<const GridField> test_fields, Exec exec) {
  for (const auto& f : test_fields) {
    const GridField d = weyl_defect(s, t, z, f, exec);
    for (const auto& v : d.values())
      if (!(std::abs(v) < 1e-9)) return false;
  }
  return true;
}

bool in_defect_region(const GridField& grid, int i, int j, int s_steps,
                      int t_steps) {
  const int xi = i - grid.radius();
  const int yj = j - grid.radius();
  return xi > 0 && xi <= s_steps && yj > 0 && yj <= t_steps;
}

DefectCheck verify_defect_identity(int s_steps, int t_steps, PhaseZ z,
                                   const GridField& field,
                                   const GridField& defect) {
  if (!field.same_grid(defect))
    throw InvalidInput("defect and field live on different grids");
  // Relative rounding of four phase products, plus the smallest normal
  // number as an absolute floor for samples in the subnormal range.
  constexpr double kRounding = 8.0 * std::numeric_limits<double>::epsilon();
  constexpr double kFloor = std::numeric_limits<double>::min();
  const auto one_minus_z = 1.0 - z.value();
  DefectCheck c;
  bool outside_ok = true;
  double inside2 = 0.0;
  double outside2 = 0.0;
  const int n = field.points_per_axis();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto d = defect(i, j);
      if (in_defect_region(field, i, j, s_steps, t_steps)) {
        inside2 = std::max(inside2, std::norm(d - one_minus_z * field(i, j)));
      } else {
        const double a2 = std::norm(d);
        outside2 = std::max(outside2, a2);
        if (a2 == 0.0) continue;
        const double bound = kRounding * std::abs(field(i, j)) + kFloor;
        if (std::abs(d) > bound) outside_ok = false;
      }
    }
  c.max_inside_deviation = std::sqrt(inside2);
  c.max_outside = std::sqrt(outside2);
  c.holds = outside_ok && c.max_inside_deviation < 1e-12;
  return c;
}

GridField make_gaussian(double cx, double cy, double sigma, double cutoff,
                        int radius, double spacing) {
  if (!(sigma > 0.0) || !(cutoff > 0.0))
    throw InvalidParameter("gaussian needs sigma > 0 and cutoff > 0");
  GridField f(radius, spacing);
  const int n = f.points_per_axis();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double dx = f.x(i) - cx;
      const double dy = f.y(j) - cy;
      const double r2 = dx * dx + dy * dy;
      if (r2 > cutoff * cutoff) continue;
      f(i, j) = std::exp(-r2 / (2.0 * sigma * sigma));
    }
  return f;
}

GridField make_bump(double cx, double cy, double rho, int radius,
                    double spacing) {
  if (!(rho > 0.0)) throw InvalidParameter("bump radius must be > 0");
  GridField f(radius, spacing);
  const int n = f.points_per_axis();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double dx = f.x(i) - cx;
      const double dy = f.y(j) - cy;
      const double q = (dx * dx + dy * dy) / (rho * rho);
      if (q >= 1.0) continue;
      f(i, j) = std::exp(1.0 - 1.0 / (1.0 - q));
    }
  return f;
}

}  // namespace supersep::schmudgen
