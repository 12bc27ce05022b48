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

#ifndef SUPERSEP_SECTOR_HPP_
#define SUPERSEP_SECTOR_HPP_

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>
#include <boost/rational.hpp>

// Two-sector Hilbert space H1 (+) H2 in finite dimensions: states, block
// operators and the product-operator class on H1 (x) H2.
namespace supersep::sector {

using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;
using Rational = boost::rational<std::int64_t>;

struct SectorState {
  Vector psi1;
  Vector psi2;

  static SectorState first(const Vector& psi, Eigen::Index d2);
  static SectorState second(Eigen::Index d1, const Vector& psi);

  double norm_squared() const { return psi1.squaredNorm() + psi2.squaredNorm(); }
};

// Conjugate-linear in `u`. Throws InvalidInput on dimension mismatch.
std::complex<double> inner(const SectorState& u, const SectorState& v);

/// Block operator [[b11, b12], [b21, b22]] on H1 (+) H2.
struct SectorOperator {
  Matrix b11, b12, b21, b22;

  static SectorOperator block_diagonal(const Matrix& a1, const Matrix& a2);

  Eigen::Index d1() const { return b11.rows(); }
  Eigen::Index d2() const { return b22.rows(); }

  // Throws InvalidInput when the block shapes are inconsistent.
  void validate() const;
  bool is_self_adjoint(double tolerance = 1e-12) const;
  SectorState apply(const SectorState& state) const;
};

/// Membership in the sector-preserving class {A1 (+) A2}: both off-diagonal
/// blocks identically zero.
bool is_sector_preserving(const SectorOperator& op);

/// <phi1 (x) phi2, (A (x) B)(phi1 (x) phi2)> for unit vectors, without
/// forming the tensor product. Throws InvalidInput unless both vectors have
/// norm 1 within 1e-12 and shapes agree.
std::complex<double> product_expectation(const Matrix& a, const Matrix& b,
                                         const Vector& phi1,
                                         const Vector& phi2);

/// Exact length q * sqrt(r), r square-free. Any radicand is accepted and its
/// square factors are moved into q.
class BoxLength {
 public:
  static BoxLength make(Rational q, std::uint64_t radicand = 1);

  // "p", "p/q", "sqrt(r)", "p/q*sqrt(r)" (whitespace ignored).
  static BoxLength parse(std::string_view text);

  const Rational& rational_part() const { return q_; }
  std::uint64_t surd_part() const { return r_; }
  double value() const;
  std::string to_string() const;

  friend bool operator==(const BoxLength&, const BoxLength&) = default;

 private:
  BoxLength(Rational q, std::uint64_t r) : q_(q), r_(r) {}
  Rational q_;
  std::uint64_t r_;
};

bool is_square_free(std::uint64_t n);

// n pi / Lambda for n = 1..n_max.
std::vector<double> box_spectrum(const BoxLength& length, int n_max);

/// True iff Lambda1 / Lambda2 is rational, decided exactly: with both
/// radicands square-free, sqrt(r1/r2) is rational iff r1 == r2. A rational
/// ratio is reported as equivalent; only an irrational ratio is a proven
/// inequivalence.
bool boxes_equivalent(const BoxLength& l1, const BoxLength& l2);

}  // namespace supersep::sector

#endif  // SUPERSEP_SECTOR_HPP_
