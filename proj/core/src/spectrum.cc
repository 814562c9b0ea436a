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

#include "carl/spectrum.h"

#include <algorithm>
#include <cmath>

#include "carl/errors.h"

namespace carl {
namespace {

using Complex = std::complex<double>;
constexpr Complex kI(0.0, 1.0);

}  // namespace

std::string_view CaseName(StabilityCase c) {
  return c == StabilityCase::kCaseI ? "I" : "II";
}

RealCubic DispersionCubic(double delta21, double alpha_beta, double eta) {
  return RealCubic{1.0, -delta21, -eta, alpha_beta + eta * delta21};
}

std::complex<double> DispersionResidual(std::complex<double> lambda,
                                        double delta21, double alpha_beta,
                                        double eta) {
  return ((lambda - kI * delta21) * lambda + eta) * lambda -
         kI * (alpha_beta + eta * delta21);
}

Spectrum EigenSpectrum(double delta21, double alpha_beta, Regime regime,
                       const SpectrumOptions& options) {
  if (!std::isfinite(delta21) || !std::isfinite(alpha_beta)) {
    throw InvalidInputError("spectrum parameters must be finite");
  }
  const double eta = EtaOf(regime);
  const CubicRoots x =
      SolveCubic(DispersionCubic(delta21, alpha_beta, eta), options.solver);

  Spectrum out;
  out.boundary = x.boundary;
  if (x.nature == RootNature::kThreeReal) {
    out.case_tag = StabilityCase::kCaseI;
    for (int k = 0; k < 3; ++k) out.lambdas[k] = {0.0, x.roots[k].real()};
    out.gamma = 0.0;
    return out;
  }
  // lambda = i x maps x = r + i s onto -s + i r.
  const double re = x.roots[1].real();
  const double im = x.roots[1].imag();
  out.case_tag = StabilityCase::kCaseII;
  out.lambdas[0] = {im, re};
  out.lambdas[1] = {-im, re};
  out.lambdas[2] = {0.0, x.roots[0].real()};
  out.gamma = im;
  return out;
}

double GammaRaoClosedForm(double delta21, double alpha_beta) {
  if (!(alpha_beta > 0.0)) return 0.0;
  const double d =
      1.0 - 4.0 * delta21 * delta21 * delta21 / (27.0 * alpha_beta);
  if (!(d > 0.0)) return 0.0;
  const double root_d = std::sqrt(d);
  const double plus = 1.0 + root_d;
  const double minus = 1.0 - root_d;
  const double bracket =
      std::abs(std::cbrt(plus * plus) - std::cbrt(minus * minus));
  return 0.5 * std::sqrt(3.0) * std::cbrt(alpha_beta / 4.0) * bracket;
}

double ThresholdLhs(double delta21, double alpha_beta, double eta) {
  const double third = delta21 / 3.0;
  const double detuning_sq = delta21 * delta21 - 1.0;
  const double half = alpha_beta / 2.0;
  return half * half + alpha_beta * third * (eta - third * third) -
         eta * detuning_sq * detuning_sq / 27.0;
}

std::optional<double> CriticalAlphaBeta(double delta21, Regime regime,
                                        const CriticalSearchOptions& opts) {
  if (!std::isfinite(delta21)) {
    throw InvalidInputError("delta21 must be finite");
  }
  const double eta = EtaOf(regime);
  // ThresholdLhs is a convex quadratic in ab: ab^2/4 + slope ab + offset.
  const double offset = ThresholdLhs(delta21, 0.0, eta);
  const double third = delta21 / 3.0;
  const double slope = third * (eta - third * third);
  if (offset > 0.0 || (offset == 0.0 && slope >= 0.0)) return std::nullopt;

  double lo = 0.0;
  double hi = 1.0;
  while (ThresholdLhs(delta21, hi, eta) <= 0.0) {
    lo = hi;
    hi *= 2.0;
    if (!std::isfinite(hi)) return std::nullopt;
  }
  for (int i = 0; i < opts.max_iterations && hi - lo > opts.abs_tol; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (ThresholdLhs(delta21, mid, eta) > 0.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<double> CriticalDelta21(double alpha_beta, Regime regime,
                                    const DetuningScan& scan) {
  if (!(alpha_beta > 0.0) || !std::isfinite(alpha_beta)) {
    throw InvalidInputError("alpha_beta must be finite and positive");
  }
  if (!(scan.stop > scan.start) || !(scan.step > 0.0)) {
    throw InvalidInputError("detuning scan window is empty");
  }
  const double eta = EtaOf(regime);
  auto unstable = [&](double d) {
    return ThresholdLhs(d, alpha_beta, eta) > 0.0;
  };
  const long n =
      static_cast<long>(std::ceil((scan.stop - scan.start) / scan.step));
  std::vector<double> edges;
  double prev_d = scan.start;
  bool prev = unstable(prev_d);
  for (long i = 1; i <= n; ++i) {
    const double d = std::min(scan.start + i * scan.step, scan.stop);
    const bool cur = unstable(d);
    if (cur != prev) {
      double lo = prev_d;
      double hi = d;
      while (hi - lo > scan.abs_tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (unstable(mid) == prev) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      edges.push_back(0.5 * (lo + hi));
    }
    prev = cur;
    prev_d = d;
  }
  return edges;
}

SpectrumDiagnostics Diagnose(const Spectrum& spectrum, double delta21,
                             double alpha_beta, double eta) {
  SpectrumDiagnostics diag;
  const double coeff_scale = std::max(
      {1.0, std::abs(delta21), std::abs(eta),
       std::abs(alpha_beta + eta * delta21)});
  Complex sum = 0.0;
  Complex product = 1.0;
  double max_re = 0.0;
  for (const Complex& l : spectrum.lambdas) {
    diag.max_residual =
        std::max(diag.max_residual,
                 std::abs(DispersionResidual(l, delta21, alpha_beta, eta)) /
                     coeff_scale);
    sum += l;
    product *= l;
    max_re = std::max(max_re, l.real());
  }
  const Complex expected_sum = kI * delta21;
  const Complex expected_product = kI * (alpha_beta + eta * delta21);
  diag.sum_error = std::abs(sum - expected_sum) /
                   std::max(1.0, std::abs(expected_sum));
  const auto& l = spectrum.lambdas;
  diag.pair_sum_error = std::abs(l[0] * l[1] + l[0] * l[2] + l[1] * l[2] - eta);
  diag.product_error = std::abs(product - expected_product) /
                       std::max(1.0, std::abs(expected_product));
  if (spectrum.case_tag == StabilityCase::kCaseII) {
    diag.pair_asymmetry = std::abs(spectrum.lambdas[0].real() +
                                   spectrum.lambdas[1].real());
    diag.gamma_consistent = spectrum.gamma == max_re &&
                            spectrum.lambdas[0].real() > 0.0 &&
                            spectrum.lambdas[1].real() < 0.0;
  } else {
    for (const Complex& l : spectrum.lambdas) {
      diag.case_i_max_real = std::max(diag.case_i_max_real, std::abs(l.real()));
    }
    diag.gamma_consistent = spectrum.gamma == 0.0;
  }
  return diag;
}

}  // namespace carl
