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

#include "carl/params.h"

#include <cmath>
#include <string>

#include "carl/errors.h"

namespace carl {
namespace {

void RequirePositive(double value, const char* name) {
  if (!std::isfinite(value) || value <= 0.0) {
    throw InvalidInputError(std::string(name) +
                            " must be finite and strictly positive");
  }
}

void RequireFinite(double value, const char* name) {
  if (!std::isfinite(value)) {
    throw InvalidInputError(std::string(name) + " must be finite");
  }
}

}  // namespace

std::string_view RegimeName(Regime regime) {
  return regime == Regime::kRayOptics ? "RAO" : "WAO";
}

Regime RegimeFromEta(int eta) {
  if (eta == 0) return Regime::kRayOptics;
  if (eta == 1) return Regime::kWaveOptics;
  throw InvalidInputError("eta must be 0 (RAO) or 1 (WAO), got " +
                          std::to_string(eta));
}

Regime ParseRegime(std::string_view name) {
  if (name == "RAO" || name == "rao") return Regime::kRayOptics;
  if (name == "WAO" || name == "wao") return Regime::kWaveOptics;
  throw InvalidInputError("unknown regime '" + std::string(name) +
                          "' (expected RAO or WAO)");
}

void PhysicalParams::Validate() const {
  RequireFinite(dipole_moment, "mu");
  if (dipole_moment < 0.0) {
    throw InvalidInputError("mu must be non-negative");
  }
  RequirePositive(quantization_volume, "V");
  RequirePositive(atom_mass, "m");
  RequirePositive(wavenumber_k0, "k0");
  RequirePositive(pump_amplitude, "a2_0");
  RequireFinite(atom_number, "N");
  if (atom_number < 1.0) throw InvalidInputError("N must be at least 1");
  RequireFinite(omega0, "omega0");
  RequireFinite(omega1, "omega1");
  RequireFinite(omega2, "omega2");
  if (omega0 == omega2) {
    throw DegenerateDetuningError(
        "omega0 == omega2: the far-off-resonance model is undefined at "
        "exact resonance");
  }
}

ScaledParams ScaledParams::FromProduct(double delta21, double alpha_beta,
                                       Regime regime) {
  if (!std::isfinite(alpha_beta) || alpha_beta < 0.0) {
    throw InvalidInputError("alpha_beta must be finite and non-negative");
  }
  const double root = std::sqrt(alpha_beta);
  return ScaledParams{delta21, root, root, regime};
}

void ScaledParams::Validate() const {
  RequireFinite(delta21, "delta21");
  RequireFinite(alpha, "alpha");
  RequireFinite(beta, "beta");
  if (alpha * beta < 0.0) {
    throw InvalidInputError(
        "alpha and beta must share the sign of omega0 - omega2");
  }
  if (regime != Regime::kRayOptics && regime != Regime::kWaveOptics) {
    throw InvalidInputError("eta must be 0 or 1");
  }
}

double RecoilFrequency(const PhysicalParams& p) {
  p.Validate();
  return constants::kHbar * p.wavenumber_k0 * p.wavenumber_k0 /
         (2.0 * p.atom_mass);
}

double CouplingG(const PhysicalParams& p) {
  p.Validate();
  return p.dipole_moment *
         std::sqrt(constants::kSpeedOfLight * p.wavenumber_k0 /
                   (2.0 * constants::kHbar * constants::kVacuumPermittivity *
                    p.quantization_volume));
}

ScaledParams ToScaled(const PhysicalParams& p, Regime regime,
                      const ScalingOptions& options) {
  const double omega_r = RecoilFrequency(p);
  const double detuning = p.omega0 - p.omega2;
  if (std::abs(detuning) < options.detuning_floor_in_recoils * omega_r) {
    throw DegenerateDetuningError(
        "|omega0 - omega2| = " + std::to_string(std::abs(detuning)) +
        " rad/s is below the far-off-resonance floor of " +
        std::to_string(options.detuning_floor_in_recoils) + " recoil frequencies");
  }
  const double g2 = CouplingG(p) * CouplingG(p);
  ScaledParams s;
  s.delta21 = (p.omega2 - p.omega1) / (4.0 * omega_r);
  s.beta = g2 * p.atom_number / (4.0 * omega_r * detuning);
  s.alpha = 2.0 * g2 * p.pump_amplitude * p.pump_amplitude /
            (4.0 * omega_r * detuning);
  s.regime = regime;
  return s;
}

double AlphaBetaProduct(const PhysicalParams& p) {
  const double omega_r = RecoilFrequency(p);
  const double g = CouplingG(p);
  const double detuning = p.omega0 - p.omega2;
  const double g4 = g * g * g * g;
  return 2.0 * g4 * p.atom_number * p.pump_amplitude * p.pump_amplitude /
         (16.0 * omega_r * omega_r * detuning * detuning);
}

}  // namespace carl
