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

#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "supersep/error.hpp"
#include "supersep/optics.hpp"

namespace so = supersep::optics;
using so::kPi;

namespace {

so::SlitSystem slits(int n, double b = 0.2e-3, double s = 1.0e-3,
                     double c = 0.0) {
  return {n, b, s, c};
}

const so::BeamGeometry kGeom{100e-9, 1.8, 1.0};

double rel(double a, double b) {
  return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

}  // namespace

TEST(BetaGamma, ZeroAngle) {
  const auto bg = so::beta_gamma(0.0, 0.2e-3, 1e-3, 100e-9);
  EXPECT_EQ(bg.beta, 0.0);
  EXPECT_EQ(bg.gamma, 0.0);
}

TEST(BetaGamma, FirstMinimumAtSmallAngle) {
  const auto bg = so::beta_gamma(5e-4, 0.2e-3, 0.0, 1e-7);
  EXPECT_LT(std::abs(bg.beta - kPi) / kPi, 1e-6);
}

TEST(BetaGamma, RatioIsPeriodOverWidth) {
  oracle::Gen g(11);
  for (int k = 0; k < 100; ++k) {
    const double th = g.uniform(-1.0, 1.0);
    if (th == 0.0) continue;
    const auto bg = so::beta_gamma(th, 0.2e-3, 1.0e-3, 1e-7);
    EXPECT_NEAR(bg.gamma / bg.beta, 6.0, 1e-14);
  }
}

TEST(BetaGamma, RejectsBadInput) {
  EXPECT_THROW(so::beta_gamma(0.1, 0.0, 1e-3, 1e-7), supersep::InvalidParameter);
  EXPECT_THROW(so::beta_gamma(0.1, 1e-3, 1e-3, -1.0), supersep::InvalidParameter);
  EXPECT_THROW(so::beta_gamma(kPi / 2, 1e-3, 1e-3, 1e-7),
               supersep::InvalidParameter);
}

TEST(DiffractionFactor, KnownValues) {
  EXPECT_EQ(so::diffraction_factor(0.0), 1.0);
  EXPECT_LT(so::diffraction_factor(kPi), 1e-30);
  EXPECT_NEAR(so::diffraction_factor(kPi / 2), 4.0 / (kPi * kPi), 1e-15);
}

TEST(DiffractionFactor, ContinuousAcrossSeriesBranch) {
  for (double b : {0.99e-8, 1.01e-8, 1e-6, 1e-9})
    EXPECT_NEAR(so::diffraction_factor(b), 1.0 - b * b / 3.0, 1e-16);
}

TEST(InterferenceFactor, KnownValues) {
  EXPECT_EQ(so::interference_factor(1, 0.7), 1.0);
  EXPECT_NEAR(so::interference_factor(3, kPi / 2), 1.0, 1e-14);
  for (int m = -4; m <= 4; ++m) {
    EXPECT_DOUBLE_EQ(so::interference_factor(2, m * kPi), 4.0);
    EXPECT_DOUBLE_EQ(so::interference_factor(3, m * kPi), 9.0);
  }
}

TEST(InterferenceFactor, PropertyBoundsAndEvenness) {
  oracle::Gen g(5);
  for (int k = 0; k < 5000; ++k) {
    const int n = g.integer(1, 7);
    const double gam = g.uniform(-20.0, 20.0);
    const double v = so::interference_factor(n, gam);
    EXPECT_GE(v, 0.0);
    EXPECT_LE(v, n * n * (1.0 + 1e-15));
    EXPECT_EQ(v, so::interference_factor(n, -gam));
    const double beta = g.uniform(-30.0, 30.0);
    EXPECT_EQ(so::diffraction_factor(beta), so::diffraction_factor(-beta));
    EXPECT_GE(so::diffraction_factor(beta), 0.0);
    EXPECT_LE(so::diffraction_factor(beta), 1.0);
  }
}

TEST(InterferenceFactor, ReducedFormsUpToConstant) {
  oracle::Gen g(7);
  for (int k = 0; k < 2000; ++k) {
    const double gam = g.uniform(-10.0, 10.0);
    const double c = std::cos(gam);
    const double s = std::sin(gam);
    if (std::abs(c) > 1e-3)
      EXPECT_LT(rel(so::interference_factor(2, gam), 4.0 * c * c), 1e-12);
    // The ratio is only well conditioned away from the zeros of the factor.
    const double r3 = (3.0 - 4.0 * s * s) * (3.0 - 4.0 * s * s);
    if (r3 > 1e-2) EXPECT_LT(rel(so::interference_factor(3, gam), r3), 1e-12);
  }
}

TEST(InterferenceFactor, NearZerosOfSine) {
  // Close to gamma = m pi the reduced evaluation keeps full accuracy.
  for (int m : {1, 7, 100})
    for (double d : {1e-9, 1e-7, 1e-4}) {
      const double gam = m * kPi + d;
      const double want = std::pow(std::sin(3 * d) / std::sin(d), 2);
      EXPECT_LT(rel(so::interference_factor(3, gam), want), 1e-9);
    }
}

TEST(Intensity, CentralValue) {
  for (int n = 1; n <= 5; ++n) {
    const auto sys = slits(n);
    so::BeamGeometry g = kGeom;
    g.amplitude_scale = 2.5;
    const double want = 2.5 * std::pow(0.2e-3 / 1.8, 2) * n * n;
    EXPECT_LT(rel(so::intensity(sys, g, 0.0), want), 1e-15);
  }
}

TEST(Intensity, FirstSingleSlitZero) {
  const so::SlitSystem single{1, 0.2e-3, 0.0, 0.0};
  const double theta0 = std::asin(1e-7 / 0.2e-3);
  EXPECT_LT(so::intensity(single, kGeom, theta0) / so::intensity(single, kGeom, 0.0),
            1e-25);
}

TEST(Intensity, EvenInTheta) {
  oracle::Gen g(3);
  for (int k = 0; k < 500; ++k) {
    const auto sys = slits(g.integer(1, 5));
    const double th = g.uniform(-1e-2, 1e-2);
    EXPECT_EQ(so::intensity(sys, kGeom, th), so::intensity(sys, kGeom, -th));
  }
}

TEST(Amplitude, SingleSlitOnAxis) {
  const auto a = so::amplitude(slits(1), kGeom, 0.0);
  EXPECT_DOUBLE_EQ(a.real(), 0.2e-3 / 1.8);
  EXPECT_EQ(a.imag(), 0.0);
}

TEST(Amplitude, ModulusSquaredIsIntensity) {
  oracle::Gen g(17);
  for (int n = 1; n <= 5; ++n)
    for (int k = 0; k < 1000; ++k) {
      const auto sys = slits(n, g.uniform(0.05e-3, 0.5e-3),
                             g.uniform(0.0, 2e-3));
      const double th = g.uniform(-2e-3, 2e-3);
      const double i = so::intensity(sys, kGeom, th);
      const double a2 = std::norm(so::amplitude(sys, kGeom, th));
      if (i < 1e-30) {
        EXPECT_LT(a2, 1e-25);
      } else {
        EXPECT_LT(rel(a2, i), 1e-12) << "n=" << n << " theta=" << th;
      }
    }
}

TEST(Amplitude, MatchesApertureIntegral) {
  oracle::Gen g(23);
  for (int k = 0; k < 20; ++k) {
    const int n = g.integer(1, 4);
    const double c = g.uniform(-2e-3, 2e-3);
    const auto sys = slits(n, 0.2e-3, 1.0e-3, c);
    const double th = g.uniform(-1.5e-3, 1.5e-3);
    const auto got = so::amplitude(sys, kGeom, th);
    const auto want = oracle::aperture_amplitude(
        oracle::openings(n, 0.2e-3, 1.0e-3, c), 100e-9, 1.8, th, 20000);
    const double scale = std::max(std::abs(want), 1e-3 * 0.2e-3 / 1.8);
    EXPECT_LT(std::abs(got - want) / scale, 1e-6) << "n=" << n;
  }
}

TEST(ScreenToTheta, Values) {
  EXPECT_EQ(so::screen_to_theta(3.0, 3.0, 1.8), 0.0);
  EXPECT_NEAR(so::screen_to_theta(0.9e-3, 0.0, 1.8), 5e-4, 1e-10);
  oracle::Gen g(2);
  for (int k = 0; k < 100; ++k) {
    // Dyadic offsets keep c + d - c and c - d - c exact.
    const double c = g.integer(-1024, 1024) / 1024.0;
    const double d = g.integer(-1024, 1024) / 1024.0;
    EXPECT_EQ(so::screen_to_theta(c + d, c, 1.8),
              -so::screen_to_theta(c - d, c, 1.8));
  }
}

TEST(FindExtrema, SingleSlitMinimaAtTheta0) {
  const so::SlitSystem single{1, 0.2e-3, 0.0, 0.0};
  const double theta0 = std::asin(1e-7 / 0.2e-3);
  const double umax = 1.8 * std::tan(1.5 * theta0);
  const auto p = so::sample_intensity(single, kGeom, {-umax, umax}, 4001);
  const double step = p.u[1] - p.u[0];
  const double u0 = 1.8 * std::tan(theta0);
  int found = 0;
  for (const auto& e : so::find_extrema(p))
    if (e.kind == so::ExtremumKind::min) {
      EXPECT_LT(std::abs(std::abs(e.coordinate) - u0), step);
      ++found;
    }
  EXPECT_EQ(found, 2);
}

TEST(FindExtrema, TripleSlitAlternatesNineToOne) {
  const auto sys = slits(3);
  const double theta0 = std::asin(1e-7 / 0.2e-3);
  const double umax = 1.8 * std::tan(theta0);
  const auto p = so::sample_intensity(sys, kGeom, {-umax, umax}, 20001);
  std::vector<so::Extremum> maxima;
  for (const auto& e : so::find_extrema(p))
    if (e.kind == so::ExtremumKind::max) maxima.push_back(e);
  ASSERT_GE(maxima.size(), 5u);
  // Strong and weak maxima alternate in the central lobe; the weak one next
  // to the centre is roughly a ninth of it.
  const std::size_t c = maxima.size() / 2;
  for (std::size_t i = c - 3; i <= c + 3; ++i) {
    const bool weak = maxima[i].value < maxima[i - 1].value &&
                      maxima[i].value < maxima[i + 1].value;
    const bool strong = maxima[i].value > maxima[i - 1].value &&
                        maxima[i].value > maxima[i + 1].value;
    EXPECT_TRUE(weak || strong);
  }
  const double ratio = maxima[c + 1].value / maxima[c].value;
  EXPECT_NEAR(ratio, 1.0 / 9.0, 0.01);
}

TEST(FindExtrema, MissingOrderCount) {
  // s = 5b: principal maxima strictly between the centre and the first
  // diffraction zero.
  const auto sys = slits(2, 0.2e-3, 1.0e-3);
  const double theta0 = std::asin(1e-7 / 0.2e-3);
  const auto p = so::sample_intensity(sys, kGeom, {0.0, 1.8 * std::tan(theta0)},
                                      40001);
  // The suppressed order leaves a hump below 1% of the centre just inside
  // the diffraction zero; it is not a principal maximum.
  int interior = 0;
  for (const auto& e : so::find_extrema(p))
    if (e.kind == so::ExtremumKind::max && e.value > 0.01 * p.value.front())
      ++interior;
  EXPECT_EQ(interior, 5);
}

TEST(FindExtrema, RampAndPlateau) {
  so::ScreenPattern ramp;
  for (int i = 0; i < 10; ++i) {
    ramp.u.push_back(i);
    ramp.value.push_back(i);
  }
  EXPECT_TRUE(so::find_extrema(ramp).empty());

  so::ScreenPattern plateau;
  plateau.u = {0, 1, 2, 3, 4, 5};
  plateau.value = {0, 1, 2, 2, 1, 0};
  const auto e = so::find_extrema(plateau);
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e[0].coordinate, 2.0);
  EXPECT_EQ(e[0].kind, so::ExtremumKind::max);
}

TEST(FindExtrema, RejectsBadPatterns) {
  so::ScreenPattern p;
  p.u = {0, 1};
  p.value = {0, 1};
  EXPECT_THROW(so::find_extrema(p), supersep::InvalidInput);
  p.u = {0, 1, 1};
  p.value = {0, 1, 0};
  EXPECT_THROW(so::find_extrema(p), supersep::InvalidInput);
}

TEST(Validation, SlitSystemAndGeometry) {
  EXPECT_THROW(so::intensity({0, 1e-3, 0, 0}, kGeom, 0.0),
               supersep::InvalidParameter);
  EXPECT_THROW(so::intensity({1, 1e-3, -1.0, 0}, kGeom, 0.0),
               supersep::InvalidParameter);
  EXPECT_THROW(so::intensity(slits(1), {1e-7, 0.0, 1.0}, 0.0),
               supersep::InvalidParameter);
  EXPECT_THROW(so::sample_intensity(slits(1), kGeom, {-1e300, 1e300}, 16),
               supersep::InvalidParameter);
}
