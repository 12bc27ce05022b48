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

#include "supersep/sector.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>

#include "supersep/error.hpp"

namespace supersep::sector {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end)
    throw InvalidInput("not an integer: '" + std::string(s) + "'");
  return v;
}

Rational parse_rational(std::string_view s) {
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(s));
  const auto den = parse_int(s.substr(slash + 1));
  if (den == 0) throw InvalidInput("zero denominator");
  return Rational(parse_int(s.substr(0, slash)), den);
}

}  // namespace

SectorState SectorState::first(const Vector& psi, Eigen::Index d2) {
  return {psi, Vector::Zero(d2)};
}

SectorState SectorState::second(Eigen::Index d1, const Vector& psi) {
  return {Vector::Zero(d1), psi};
}

std::complex<double> inner(const SectorState& u, const SectorState& v) {
  if (u.psi1.size() != v.psi1.size() || u.psi2.size() != v.psi2.size())
    throw InvalidInput("sector dimensions differ");
  return u.psi1.dot(v.psi1) + u.psi2.dot(v.psi2);
}

SectorOperator SectorOperator::block_diagonal(const Matrix& a1,
                                              const Matrix& a2) {
  SectorOperator op{a1, Matrix::Zero(a1.rows(), a2.cols()),
                    Matrix::Zero(a2.rows(), a1.cols()), a2};
  op.validate();
  return op;
}

void SectorOperator::validate() const {
  const auto n1 = b11.rows();
  const auto n2 = b22.rows();
  if (b11.cols() != n1 || b22.cols() != n2 || b12.rows() != n1 ||
      b12.cols() != n2 || b21.rows() != n2 || b21.cols() != n1)
    throw InvalidInput("inconsistent block shapes");
}

bool SectorOperator::is_self_adjoint(double tolerance) const {
  validate();
  return b11.isApprox(b11.adjoint(), tolerance) &&
         b22.isApprox(b22.adjoint(), tolerance) &&
         (b21 - b12.adjoint()).cwiseAbs().maxCoeff() <= tolerance;
}

SectorState SectorOperator::apply(const SectorState& s) const {
  validate();
  if (s.psi1.size() != d1() || s.psi2.size() != d2())
    throw InvalidInput("state does not match operator dimensions");
  return {b11 * s.psi1 + b12 * s.psi2, b21 * s.psi1 + b22 * s.psi2};
}

bool is_sector_preserving(const SectorOperator& op) {
  op.validate();
  const auto zero = std::complex<double>{};
  return (op.b12.size() == 0 || (op.b12.array() == zero).all()) &&
         (op.b21.size() == 0 || (op.b21.array() == zero).all());
}

std::complex<double> product_expectation(const Matrix& a, const Matrix& b,
                                         const Vector& phi1,
                                         const Vector& phi2) {
  if (a.rows() != a.cols() || b.rows() != b.cols() ||
      a.cols() != phi1.size() || b.cols() != phi2.size())
    throw InvalidInput("operator and vector shapes disagree");
  if (std::abs(phi1.norm() - 1.0) > 1e-12 ||
      std::abs(phi2.norm() - 1.0) > 1e-12)
    throw InvalidInput("product_expectation needs unit vectors");
  // (A (x) B)(phi1 (x) phi2) = (A phi1) (x) (B phi2), and the inner product
  // of simple tensors factorises.
  return phi1.dot(a * phi1) * phi2.dot(b * phi2);
}

bool is_square_free(std::uint64_t n) {
  if (n == 0) return false;
  for (std::uint64_t p = 2; p <= n / p; ++p)
    if (n % (p * p) == 0) return false;
  return true;
}

BoxLength BoxLength::make(Rational q, std::uint64_t radicand) {
  if (q <= 0) throw InvalidParameter("box length needs a positive rational");
  if (radicand == 0) throw InvalidParameter("radicand must be positive");
  std::uint64_t r = radicand;
  std::int64_t outside = 1;
  for (std::uint64_t p = 2; p <= r / p; ++p)
    while (r % (p * p) == 0) {
      r /= p * p;
      if (outside > std::numeric_limits<std::int64_t>::max() /
                        static_cast<std::int64_t>(p))
        throw InvalidParameter("radicand too large");
      outside *= static_cast<std::int64_t>(p);
    }
  return BoxLength(q * outside, r);
}

BoxLength BoxLength::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw InvalidInput("empty box length");

  Rational q(1);
  std::uint64_t r = 1;
  std::string_view rest = s;
  const auto sq = rest.find("sqrt(");
  if (sq != std::string_view::npos) {
    if (rest.back() != ')') throw InvalidInput("unterminated sqrt(");
    const auto inside = rest.substr(sq + 5, rest.size() - sq - 6);
    const auto value = parse_int(inside);
    if (value <= 0) throw InvalidParameter("radicand must be positive");
    r = static_cast<std::uint64_t>(value);
    rest = rest.substr(0, sq);
    if (!rest.empty()) {
      if (rest.back() != '*') throw InvalidInput("expected 'p/q*sqrt(r)'");
      rest.remove_suffix(1);
      if (rest.empty()) throw InvalidInput("missing rational before '*'");
    }
  }
  if (!rest.empty()) q = parse_rational(rest);
  return make(q, r);
}

double BoxLength::value() const {
  return static_cast<double>(q_.numerator()) /
         static_cast<double>(q_.denominator()) *
         std::sqrt(static_cast<double>(r_));
}

std::string BoxLength::to_string() const {
  std::string s = std::to_string(q_.numerator());
  if (q_.denominator() != 1) s += "/" + std::to_string(q_.denominator());
  if (r_ != 1) s += "*sqrt(" + std::to_string(r_) + ")";
  return s;
}

std::vector<double> box_spectrum(const BoxLength& length, int n_max) {
  if (n_max < 1) throw InvalidParameter("n_max must be >= 1");
  const double lambda = length.value();
  std::vector<double> out(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n)
    out[static_cast<std::size_t>(n - 1)] = n * kPi / lambda;
  return out;
}

bool boxes_equivalent(const BoxLength& l1, const BoxLength& l2) {
  return l1.surd_part() == l2.surd_part();
}

}  // namespace supersep::sector
