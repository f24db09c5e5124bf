// Copyright 2026 The eeqt authors
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

#include <optional>

#include "eeqt/linalg.hpp"

namespace eeqt {

/// The contractive no-jump flow phi(t) = exp(G t) psi for a generator
/// G = -iH - Lambda/2. Caches exp(G * step) so that walking a trajectory
/// costs one cached matvec per step; arbitrary offsets go through a fresh
/// matexp.
class EffectiveFlow {
  public:
    EffectiveFlow(ComplexMatrix generator, double step);

    const ComplexMatrix& generator() const { return generator_; }
    double step() const { return step_; }

    /// exp(G dt) psi for arbitrary dt >= 0.
    ComplexVector evolve(const ComplexVector& psi, double dt) const;

    /// One cached step: exp(G * step) psi.
    ComplexVector step_once(const ComplexVector& psi) const;

  private:
    ComplexMatrix generator_;
    double step_;
    ComplexMatrix step_op_;
};

/// Inversion of the no-jump survival law: the smallest t <= horizon with
/// ||exp(G t) psi||^2 = r, found by stepping until the survival drops below
/// r and bisecting the bracketing step to 1e-9 absolute accuracy in t.
/// Returns nullopt when survival(horizon) > r (the state outlives the
/// horizon). psi must be normalized; r must lie in (0, 1).
std::optional<double> sample_waiting_time(const EffectiveFlow& flow, const ComplexVector& psi,
                                          double r, double horizon);

}  // namespace eeqt
