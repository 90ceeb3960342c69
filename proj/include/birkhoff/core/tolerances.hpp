// Copyright 2026 The birkhoff-lab developers
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

#pragma once

namespace birkhoff {
namespace tol {

// Default tolerances. Every operation that uses one of these accepts an
// override parameter; the defaults are sized for double precision at
// matrix orders d <= 8.

// Entry/row-sum validation of doubly stochastic matrices.
inline constexpr double kBisto = 1e-12;

// A unitary witness is certified when ||UU* - 1||_F is below this.
inline constexpr double kUnitary = 1e-9;

// Maximum allowed |  |U_jk|^2 - B_jk  | for a witness.
inline constexpr double kWitness = 1e-10;

// Slack for the bracelet inequalities.
inline constexpr double kBracelet = 1e-12;

// Slack for spectrum magnitude checks.
inline constexpr double kSpectrum = 1e-10;

// Bisection stop threshold for the circulant phase equation.
inline constexpr double kRoot = 1e-12;

// Allowed deviation of the phase-equation right-hand side from unit modulus.
inline constexpr double kModulus = 1e-8;

}  // namespace tol
}  // namespace birkhoff
