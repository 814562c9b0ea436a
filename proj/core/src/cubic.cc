// Copyright 2026 The CARL Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "carl/cubic.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "carl/errors.h"

namespace carl {
namespace {

using Complex = std::complex<double>;

// Monic coefficients x^3 + a x^2 + b x + c.
struct Monic {
  double a;
  double b;
  double c;

  template <typename T>
  T Evaluate(T x) const {
    return ((x + a) * x + b) * x + c;
  }
  template <typename T>
  T Derivative(T x) const {
    return (3.0 * x + 2.0 * a) * x + b;
  }
};

// Depressed form t^3 + p t + q under x = t - a / 3.
struct Depressed {
  double p;
  double q;
};

Monic ToMonic(const RealCubic& cubic) {
  return {cubic.c2 / cubic.c3, cubic.c1 / cubic.c3, cubic.c0 / cubic.c3};
}

Depressed ToDepressed(const Monic& m) {
  const double a2 = m.a * m.a;
  return {m.b - a2 / 3.0, 2.0 * a2 * m.a / 27.0 - m.a * m.b / 3.0 + m.c};
}

CubicClass ClassifyDepressed(const Depressed& d, double tol) {
  CubicClass out;
  const double p3 = d.p * d.p * d.p;
  const double q2 = d.q * d.q;
  out.discriminant = -4.0 * p3 - 27.0 * q2;
  const double scale = std::max({1.0, std::abs(p3), q2});
  out.normalized_discriminant = out.discriminant / scale;
  out.boundary = std::abs(out.normalized_discriminant) <= tol;
  out.nature = out.normalized_discriminant >= -tol
                   ? RootNature::kThreeReal
                   : RootNature::kOneRealOnePair;
  return out;
}

double PolishReal(const Monic& m, double x, int iterations, double max_step) {
  double fx = m.Evaluate(x);
  for (int i = 0; i < iterations && fx != 0.0; ++i) {
    const double dfx = m.Derivative(x);
    if (dfx == 0.0 || !std::isfinite(dfx)) break;
    const double step = fx / dfx;
    if (!(std::abs(step) <= max_step)) break;
    const double candidate = x - step;
    const double fc = m.Evaluate(candidate);
    if (!(std::abs(fc) < std::abs(fx))) break;
    x = candidate;
    fx = fc;
  }
  return x;
}

Complex PolishComplex(const Monic& m, Complex z, int iterations,
                      double max_step) {
  Complex fz = m.Evaluate(z);
  for (int i = 0; i < iterations && fz != 0.0; ++i) {
    const Complex dfz = m.Derivative(z);
    if (dfz == 0.0) break;
    const Complex step = fz / dfz;
    if (!(std::abs(step) <= max_step)) break;
    const Complex candidate = z - step;
    const Complex fc = m.Evaluate(candidate);
    if (!(std::abs(fc) < std::abs(fz))) break;
    z = candidate;
    fz = fc;
  }
  return z;
}

void CopyClass(const CubicClass& cls, CubicRoots* out) {
  out->nature = cls.nature;
  out->discriminant = cls.discriminant;
  out->normalized_discriminant = cls.normalized_discriminant;
  out->boundary = cls.boundary;
}

}  // namespace

void RealCubic::Validate() const {
  if (!std::isfinite(c3) || !std::isfinite(c2) || !std::isfinite(c1) ||
      !std::isfinite(c0)) {
    throw InvalidInputError("cubic coefficients must be finite");
  }
  if (c3 == 0.0) {
    throw InvalidInputError("leading cubic coefficient must be non-zero");
  }
}

std::complex<double> RealCubic::Evaluate(std::complex<double> x) const {
  return ((c3 * x + c2) * x + c1) * x + c0;
}

CubicClass Classify(const RealCubic& cubic, double tol) {
  cubic.Validate();
  if (!(tol > 0.0)) throw InvalidInputError("classify tolerance must be > 0");
  return ClassifyDepressed(ToDepressed(ToMonic(cubic)), tol);
}

CubicRoots SolveCubic(const RealCubic& cubic,
                      const CubicSolveOptions& options) {
  cubic.Validate();
  const Monic m = ToMonic(cubic);
  const Depressed d = ToDepressed(m);
  const CubicClass cls = ClassifyDepressed(d, options.classify_tol);
  const double shift = m.a / 3.0;

  CubicRoots out;
  CopyClass(cls, &out);

  // Q^3 - R^2 with Q = -p / 3 and R = q / 2 equals discriminant / 108.
  const double big_q = -d.p / 3.0;
  const double big_r = d.q / 2.0;

  if (cls.discriminant >= 0.0 && big_q > 0.0) {
    const double sqrt_q = std::sqrt(big_q);
    const double cos_arg =
        std::clamp(big_r / (big_q * sqrt_q), -1.0, 1.0);
    const double theta = std::acos(cos_arg);
    std::array<double, 3> x{};
    for (int k = 0; k < 3; ++k) {
      x[k] = -2.0 * sqrt_q *
                 std::cos((theta + 2.0 * std::numbers::pi * k) / 3.0) -
             shift;
    }
    std::sort(x.begin(), x.end());
    for (int k = 0; k < 3; ++k) {
      double gap = std::numeric_limits<double>::infinity();
      for (int j = 0; j < 3; ++j) {
        if (j != k) gap = std::min(gap, std::abs(x[j] - x[k]));
      }
      x[k] = PolishReal(m, x[k], options.polish_iterations, 0.5 * gap);
    }
    std::sort(x.begin(), x.end());
    for (int k = 0; k < 3; ++k) out.roots[k] = {x[k], 0.0};
    out.nature = RootNature::kThreeReal;
    return out;
  }

  // Cardano. The radical is chosen with the sign of R so the sum never
  // cancels.
  const double radicand = std::max(-cls.discriminant / 108.0, 0.0);
  const double big_a =
      -std::copysign(std::cbrt(std::abs(big_r) + std::sqrt(radicand)), big_r);
  const double big_b = big_a == 0.0 ? 0.0 : big_q / big_a;
  double real_root = (big_a + big_b) - shift;
  double pair_re = -0.5 * (big_a + big_b) - shift;
  double pair_im = 0.5 * std::sqrt(3.0) * std::abs(big_a - big_b);

  const double separation = std::hypot(real_root - pair_re, pair_im);
  real_root = PolishReal(m, real_root, options.polish_iterations,
                         0.5 * separation);

  if (cls.nature == RootNature::kThreeReal) {
    // Inside the tolerance band: the pair is a double real root.
    double pair = PolishReal(m, pair_re, options.polish_iterations,
                             0.5 * separation);
    std::array<double, 3> x{real_root, pair, pair};
    std::sort(x.begin(), x.end());
    for (int k = 0; k < 3; ++k) out.roots[k] = {x[k], 0.0};
    return out;
  }

  const Complex polished = PolishComplex(
      m, Complex(pair_re, pair_im), options.polish_iterations,
      0.5 * std::min(separation, 2.0 * pair_im));
  if (polished.imag() > 0.0) {
    pair_re = polished.real();
    pair_im = polished.imag();
  }
  out.roots[0] = {real_root, 0.0};
  out.roots[1] = {pair_re, pair_im};
  out.roots[2] = {pair_re, -pair_im};
  return out;
}

CubicRoots CompanionRoots(const RealCubic& cubic, double tol) {
  cubic.Validate();
  const Monic m = ToMonic(cubic);
  const CubicClass cls = ClassifyDepressed(ToDepressed(m), tol);

  Eigen::Matrix3d companion;
  companion << 0.0, 0.0, -m.c,
               1.0, 0.0, -m.b,
               0.0, 1.0, -m.a;
  Eigen::EigenSolver<Eigen::Matrix3d> solver(companion,
                                             /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw InvalidInputError("companion eigenvalue iteration did not converge");
  }
  const Eigen::Vector3cd ev = solver.eigenvalues();

  CubicRoots out;
  CopyClass(cls, &out);
  if (cls.nature == RootNature::kThreeReal) {
    std::array<double, 3> x{ev(0).real(), ev(1).real(), ev(2).real()};
    std::sort(x.begin(), x.end());
    for (int k = 0; k < 3; ++k) out.roots[k] = {x[k], 0.0};
    return out;
  }
  int real_index = 0;
  for (int k = 1; k < 3; ++k) {
    if (std::abs(ev(k).imag()) < std::abs(ev(real_index).imag())) {
      real_index = k;
    }
  }
  const int i1 = (real_index + 1) % 3;
  const int i2 = (real_index + 2) % 3;
  const double re = 0.5 * (ev(i1).real() + ev(i2).real());
  const double im = 0.5 * (std::abs(ev(i1).imag()) + std::abs(ev(i2).imag()));
  out.roots[0] = {ev(real_index).real(), 0.0};
  out.roots[1] = {re, im};
  out.roots[2] = {re, -im};
  return out;
}

double RootSetDistance(const std::array<std::complex<double>, 3>& a,
                       const std::array<std::complex<double>, 3>& b) {
  std::array<int, 3> perm{0, 1, 2};
  double best = std::numeric_limits<double>::infinity();
  do {
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) {
      const double scale = std::max(1.0, std::abs(a[i]));
      worst = std::max(worst, std::abs(a[i] - b[perm[i]]) / scale);
    }
    best = std::min(best, worst);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace carl
