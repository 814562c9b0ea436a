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

#ifndef CARL_CUBIC_H_
#define CARL_CUBIC_H_

#include <array>
#include <complex>

namespace carl {

// c3 x^3 + c2 x^2 + c1 x + c0 with real coefficients and c3 != 0.
struct RealCubic {
  double c3 = 1.0;
  double c2 = 0.0;
  double c1 = 0.0;
  double c0 = 0.0;

  // Throws InvalidInputError on c3 == 0 or a non-finite coefficient.
  void Validate() const;

  std::complex<double> Evaluate(std::complex<double> x) const;
};

enum class RootNature {
  kThreeReal,
  kOneRealOnePair,
};

// Classification of a cubic from the discriminant of its monic, depressed
// form t^3 + p t + q, i.e. -4 p^3 - 27 q^2.
struct CubicClass {
  RootNature nature = RootNature::kThreeReal;
  // Raw discriminant -4 p^3 - 27 q^2.
  double discriminant = 0.0;
  // discriminant / max(1, |p|^3, q^2).
  double normalized_discriminant = 0.0;
  // |normalized_discriminant| <= tol: a double or triple root within
  // tolerance. Always reported as kThreeReal.
  bool boundary = false;
};

inline constexpr double kDefaultClassifyTolerance = 1e-12;

CubicClass Classify(const RealCubic& cubic,
                    double tol = kDefaultClassifyTolerance);

struct CubicRoots {
  // kThreeReal: ascending real roots, zero imaginary parts.
  // kOneRealOnePair: roots[0] is real, roots[1] has positive imaginary part
  // and roots[2] == conj(roots[1]) exactly.
  std::array<std::complex<double>, 3> roots{};
  RootNature nature = RootNature::kThreeReal;
  double discriminant = 0.0;
  double normalized_discriminant = 0.0;
  bool boundary = false;
};

struct CubicSolveOptions {
  double classify_tol = kDefaultClassifyTolerance;
  // Newton steps applied to each root on the monic polynomial. A step is
  // kept only if it lowers |p(x)|.
  int polish_iterations = 3;
};

// Closed-form solution: trigonometric method for three real roots, Cardano
// with sign-stable radicals otherwise.
CubicRoots SolveCubic(const RealCubic& cubic,
                      const CubicSolveOptions& options = {});

// Eigenvalues of the 3x3 companion matrix of the monic polynomial. Intended
// as an independent cross-check for SolveCubic.
CubicRoots CompanionRoots(const RealCubic& cubic,
                          double tol = kDefaultClassifyTolerance);

// Largest distance between matched roots of two root sets, each distance
// scaled by max(1, |root|). Matching minimizes the maximum over all six
// permutations.
double RootSetDistance(const std::array<std::complex<double>, 3>& a,
                       const std::array<std::complex<double>, 3>& b);

}  // namespace carl

#endif  // CARL_CUBIC_H_
