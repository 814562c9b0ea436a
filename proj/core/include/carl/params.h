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

#ifndef CARL_PARAMS_H_
#define CARL_PARAMS_H_

#include <string_view>

namespace carl {

// CODATA 2018 values, SI units.
namespace constants {
inline constexpr double kHbar = 1.054571817e-34;        // J s
inline constexpr double kSpeedOfLight = 299792458.0;    // m / s
inline constexpr double kVacuumPermittivity = 8.8541878128e-12;  // F / m
inline constexpr std::string_view kSource = "CODATA 2018";
}  // namespace constants

// Treatment of the atomic center-of-mass motion. The integer value is the
// coefficient of the diffraction term in the bunching equation.
enum class Regime : int {
  kRayOptics = 0,   // classical point particles (RAO)
  kWaveOptics = 1,  // matter-wave diffraction included (WAO)
};

inline double EtaOf(Regime regime) { return static_cast<int>(regime); }
std::string_view RegimeName(Regime regime);  // "RAO" or "WAO"
Regime RegimeFromEta(int eta);                // throws unless eta is 0 or 1
Regime ParseRegime(std::string_view name);    // "RAO"/"rao"/"WAO"/"wao"

// Experimental description in SI units.
struct PhysicalParams {
  double dipole_moment = 0.0;        // mu, C m
  double quantization_volume = 0.0;  // V, m^3
  double atom_mass = 0.0;            // m, kg
  double atom_number = 0.0;          // N
  double wavenumber_k0 = 0.0;        // k0, 1/m
  double omega0 = 0.0;               // atomic transition, rad/s
  double omega1 = 0.0;               // probe, rad/s
  double omega2 = 0.0;               // pump, rad/s
  double pump_amplitude = 0.0;       // a2(0), dimensionless

  // Throws InvalidInputError naming the first violated invariant.
  void Validate() const;
};

// The dimensionless controls of the linearized coupled-mode system.
struct ScaledParams {
  double delta21 = 0.0;  // (omega2 - omega1) / (4 omega_r)
  double alpha = 0.0;    // pump-intensity control
  double beta = 0.0;     // density control
  Regime regime = Regime::kWaveOptics;

  double eta() const { return EtaOf(regime); }
  double alpha_beta() const { return alpha * beta; }

  // Splits a bare product symmetrically, alpha = beta = sqrt(alpha_beta).
  static ScaledParams FromProduct(double delta21, double alpha_beta,
                                  Regime regime);

  void Validate() const;
};

// hbar k0^2 / (2 m), rad/s.
double RecoilFrequency(const PhysicalParams& p);

// Dipole coupling mu * sqrt(c k0 / (2 hbar eps0 V)), rad/s, with the single
// wavenumber k0 standing in for both probe and pump.
double CouplingG(const PhysicalParams& p);

struct ScalingOptions {
  // |omega0 - omega2| must be at least this multiple of omega_r.
  double detuning_floor_in_recoils = 1e6;
};

// Throws DegenerateDetuningError when the pump is too close to resonance.
ScaledParams ToScaled(const PhysicalParams& p, Regime regime,
                      const ScalingOptions& options = {});

// 2 g^4 N a2(0)^2 / (16 omega_r^2 (omega0 - omega2)^2), evaluated directly.
double AlphaBetaProduct(const PhysicalParams& p);

}  // namespace carl

#endif  // CARL_PARAMS_H_
