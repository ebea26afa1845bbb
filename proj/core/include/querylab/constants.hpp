// Copyright 2026 The Querylab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Numeric constants of the degree-bound argument, kept in one place. The derived
// values follow from kPrefactorFloor; change it and the others must be recomputed.

#pragma once

namespace querylab::constants {

/// Version tag echoed into every report.
inline constexpr const char *kConstantsVersion = "1";

/// Lower bound on the prefactor (N-2T)! n! / (N! (n-2T)!) for large n.
inline constexpr double kPrefactorFloor = 0.818;
/// 1 - kPrefactorFloor: pointwise bound on |P - q|.
inline constexpr double kDeviation = 0.182;
/// (1 - kPrefactorFloor) / kPrefactorFloor, the per-point bound on (1/prefactor - 1) P.
inline constexpr double kDeviationRatioBound = 0.2225;
/// 0.8 - 2 * kDeviation: lower bound on d(q) for a distinguisher.
inline constexpr double kMinSlope = 0.436;
/// 1 + 2 * kDeviation.
inline constexpr double kRangeConstant = 1.364;
/// kRangeConstant + 2 * kMinSlope.
inline constexpr double kChainConstantA = 2.236;
/// 2 * kMinSlope * 10.
inline constexpr double kChainConstantB = 8.720;

/// N ranges over [n, n + n/(c T)]: c = 10 for collision, 100 for set comparison.
inline constexpr long kCollisionWidth = 10;
inline constexpr long kSetcompWidth = 100;

/// Error bounds a distinguisher must meet at g = 1 and g = 2.
inline constexpr double kAcceptOneToOne = 0.1;
inline constexpr double kAcceptTwoToOne = 0.9;

}  // namespace querylab::constants
