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
#include <numbers>

#include <gtest/gtest.h>

#include "carl/errors.h"
#include "oracles.h"

namespace carl {
namespace {

// Rubidium-87 D2 line, 1 mm^3 mode volume, pump 10 GHz red of resonance.
PhysicalParams Rubidium() {
  PhysicalParams p;
  p.dipole_moment = 3.58e-29;
  p.quantization_volume = 1e-9;
  p.atom_mass = 1.44316e-25;
  p.atom_number = 1e6;
  p.wavenumber_k0 = 2.0 * std::numbers::pi / 780e-9;
  p.omega0 = 2.0 * std::numbers::pi * 384.23e12;
  p.omega2 = p.omega0 - 2.0 * std::numbers::pi * 10e9;
  p.omega1 = p.omega2;
  p.pump_amplitude = 1e3;
  return p;
}

TEST(RecoilFrequency, RubidiumValue) {
  // hbar k0^2 / 2m evaluated at 30 digits: 23708.39822792627.
  EXPECT_NEAR(RecoilFrequency(Rubidium()), 23708.39822792627, 1e-8);
  EXPECT_NEAR(RecoilFrequency(Rubidium()), 2.37e4, 0.01e4);
}

TEST(RecoilFrequency, DecreasesWithMassAndScalesWithK0Squared) {
  PhysicalParams p = Rubidium();
  double previous = RecoilFrequency(p);
  for (int i = 0; i < 6; ++i) {
    p.atom_mass *= 10.0;
    const double next = RecoilFrequency(p);
    EXPECT_LT(next, previous);
    previous = next;
  }
  p = Rubidium();
  const double base = RecoilFrequency(p);
  p.wavenumber_k0 *= 2.0;
  EXPECT_NEAR(RecoilFrequency(p) / base, 4.0, 1e-14);
}

TEST(CouplingG, Scaling) {
  PhysicalParams p = Rubidium();
  const double g = CouplingG(p);
  p.quantization_volume *= 4.0;
  EXPECT_NEAR(CouplingG(p) / g, 0.5, 1e-14);

  p = Rubidium();
  p.dipole_moment = 0.0;
  EXPECT_EQ(CouplingG(p), 0.0);

  oracle::Uniform u(11);
  for (int i = 0; i < 50; ++i) {
    PhysicalParams q = Rubidium();
    const double k_scale = u(0.5, 2.0);
    const double v_scale = u(0.5, 2.0);
    q.wavenumber_k0 *= k_scale;
    q.quantization_volume *= v_scale;
    const double ratio = std::pow(CouplingG(q) / g, 2);
    EXPECT_NEAR(ratio, k_scale / v_scale, 1e-12 * ratio);
  }
}

TEST(ToScaled, ZeroDetuningWhenProbeMatchesPump) {
  const ScaledParams s = ToScaled(Rubidium(), Regime::kWaveOptics);
  EXPECT_EQ(s.delta21, 0.0);
  EXPECT_EQ(s.regime, Regime::kWaveOptics);
  EXPECT_GT(s.alpha, 0.0);
  EXPECT_GT(s.beta, 0.0);
}

TEST(ToScaled, DetuningInRecoilUnits) {
  PhysicalParams p = Rubidium();
  const double omega_r = RecoilFrequency(p);
  p.omega1 = p.omega2 - 4.0 * omega_r;
  EXPECT_NEAR(ToScaled(p, Regime::kRayOptics).delta21, 1.0, 1e-3);
}

TEST(ToScaled, DensityAndIntensityControls) {
  PhysicalParams p = Rubidium();
  const ScaledParams base = ToScaled(p, Regime::kWaveOptics);

  p.atom_number *= 2.0;
  const ScaledParams dense = ToScaled(p, Regime::kWaveOptics);
  EXPECT_NEAR(dense.beta / base.beta, 2.0, 1e-14);
  EXPECT_NEAR(dense.alpha / base.alpha, 1.0, 1e-14);

  p = Rubidium();
  p.pump_amplitude *= 2.0;
  const ScaledParams bright = ToScaled(p, Regime::kWaveOptics);
  EXPECT_NEAR(bright.alpha / base.alpha, 4.0, 1e-14);
  EXPECT_NEAR(bright.beta / base.beta, 1.0, 1e-14);
}

TEST(ToScaled, ProductMatchesClosedForm) {
  oracle::Uniform u(7);
  for (int i = 0; i < 200; ++i) {
    PhysicalParams p = Rubidium();
    p.atom_number = std::pow(10.0, u(0.0, 9.0));
    p.pump_amplitude = std::pow(10.0, u(-2.0, 5.0));
    p.quantization_volume = std::pow(10.0, u(-12.0, -6.0));
    const double sign = u(0.0, 1.0) < 0.5 ? -1.0 : 1.0;
    p.omega2 = p.omega0 - sign * 2.0 * std::numbers::pi * std::pow(10.0, u(10.0, 12.0));
    const ScaledParams s = ToScaled(p, Regime::kRayOptics);
    const double expected = AlphaBetaProduct(p);
    EXPECT_NEAR(s.alpha_beta(), expected, 1e-12 * expected);
    EXPECT_GE(s.alpha_beta(), 0.0);
    EXPECT_EQ(std::signbit(s.alpha), std::signbit(s.beta));
  }
}

TEST(ToScaled, BlueDetuningFlipsBothSigns) {
  PhysicalParams p = Rubidium();
  p.omega2 = p.omega0 + 2.0 * std::numbers::pi * 10e9;
  p.omega1 = p.omega2;
  const ScaledParams s = ToScaled(p, Regime::kWaveOptics);
  EXPECT_LT(s.alpha, 0.0);
  EXPECT_LT(s.beta, 0.0);
  EXPECT_GT(s.alpha_beta(), 0.0);
}

TEST(ToScaled, MassScalingOfProduct) {
  PhysicalParams p = Rubidium();
  const double base = ToScaled(p, Regime::kWaveOptics).alpha_beta();
  for (double s : {2.0, 10.0, 100.0}) {
    PhysicalParams heavy = p;
    heavy.atom_mass = p.atom_mass * s;
    EXPECT_NEAR(RecoilFrequency(heavy), RecoilFrequency(p) / s,
                1e-12 * RecoilFrequency(p));
    EXPECT_NEAR(ToScaled(heavy, Regime::kWaveOptics).alpha_beta() / base,
                s * s, 1e-10 * s * s);
  }
}

TEST(ToScaled, RejectsNearResonantPump) {
  PhysicalParams p = Rubidium();
  p.omega2 = p.omega0 - 1e3 * RecoilFrequency(p);
  EXPECT_THROW(ToScaled(p, Regime::kWaveOptics), DegenerateDetuningError);

  ScalingOptions loose;
  loose.detuning_floor_in_recoils = 10.0;
  EXPECT_NO_THROW(ToScaled(p, Regime::kWaveOptics, loose));

  p.omega2 = p.omega0;
  EXPECT_THROW(ToScaled(p, Regime::kWaveOptics, loose), DegenerateDetuningError);
}

TEST(PhysicalParams, InvariantViolations) {
  PhysicalParams p = Rubidium();
  p.quantization_volume = -1.0;
  EXPECT_THROW(p.Validate(), InvalidInputError);
  p = Rubidium();
  p.atom_number = 0.5;
  EXPECT_THROW(p.Validate(), InvalidInputError);
  p = Rubidium();
  p.atom_mass = NAN;
  EXPECT_THROW(p.Validate(), InvalidInputError);
  p = Rubidium();
  p.pump_amplitude = 0.0;
  EXPECT_THROW(p.Validate(), InvalidInputError);
}

TEST(ScaledParams, Regimes) {
  EXPECT_EQ(RegimeFromEta(0), Regime::kRayOptics);
  EXPECT_EQ(RegimeFromEta(1), Regime::kWaveOptics);
  EXPECT_THROW(RegimeFromEta(2), InvalidInputError);
  EXPECT_EQ(ParseRegime("wao"), Regime::kWaveOptics);
  EXPECT_THROW(ParseRegime("quantum"), InvalidInputError);

  const ScaledParams s = ScaledParams::FromProduct(1.0, 4.0, Regime::kRayOptics);
  EXPECT_EQ(s.alpha, 2.0);
  EXPECT_EQ(s.beta, 2.0);
  EXPECT_EQ(s.eta(), 0.0);
  EXPECT_THROW(ScaledParams::FromProduct(0.0, -1.0, Regime::kRayOptics),
               InvalidInputError);
  EXPECT_THROW((ScaledParams{0.0, -1.0, 1.0, Regime::kWaveOptics}.Validate()),
               InvalidInputError);
}

}  // namespace
}  // namespace carl
