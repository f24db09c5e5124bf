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

#include "eeqt/flow.hpp"

#include <cmath>
#include <utility>

namespace eeqt {

namespace {
constexpr double kWaitingTimeAccuracy = 1e-9;
}

EffectiveFlow::EffectiveFlow(ComplexMatrix generator, double step)
    : generator_(std::move(generator)), step_(step) {
    if (!generator_.is_square()) throw DimensionError("flow generator must be square");
    if (!(step_ > 0.0)) {
        throw ValidationError(Violation::Kind::BadStructure, "flow step must be positive");
    }
    ComplexMatrix scaled = generator_;
    scaled *= cplx{step_, 0.0};
    step_op_ = matexp(scaled);
}

ComplexVector EffectiveFlow::evolve(const ComplexVector& psi, double dt) const {
    if (dt < 0.0) {
        throw ValidationError(Violation::Kind::BadStructure, "flow time must be >= 0");
    }
    if (dt == 0.0) return psi;
    ComplexMatrix scaled = generator_;
    scaled *= cplx{dt, 0.0};
    return matexp(scaled).apply(psi);
}

ComplexVector EffectiveFlow::step_once(const ComplexVector& psi) const {
    return step_op_.apply(psi);
}

std::optional<double> sample_waiting_time(const EffectiveFlow& flow, const ComplexVector& psi,
                                          double r, double horizon) {
    if (!(r > 0.0) || !(r < 1.0)) {
        throw ValidationError(Violation::Kind::BadStructure,
                              "survival threshold must be in (0, 1)");
    }
    if (horizon < 0.0) {
        throw ValidationError(Violation::Kind::BadStructure, "horizon must be >= 0");
    }

    // Walk cached steps until the survival drops below r. The survival is
    // continuous and nonincreasing, so the first crossing step brackets t*.
    double t_lo = 0.0;
    ComplexVector phi_lo = psi;
    const double step = flow.step();
    while (t_lo + step <= horizon) {
        ComplexVector phi_next = flow.step_once(phi_lo);
        if (phi_next.norm_sq() <= r) {
            // bisect inside (t_lo, t_lo + step]
            double lo = 0.0, hi = step;
            while (hi - lo > kWaitingTimeAccuracy) {
                const double mid = 0.5 * (lo + hi);
                if (flow.evolve(phi_lo, mid).norm_sq() <= r) {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            return t_lo + hi;
        }
        phi_lo = std::move(phi_next);
        t_lo += step;
    }
    // partial step up to the horizon
    const double rest = horizon - t_lo;
    if (rest > 0.0 && flow.evolve(phi_lo, rest).norm_sq() <= r) {
        double lo = 0.0, hi = rest;
        while (hi - lo > kWaitingTimeAccuracy) {
            const double mid = 0.5 * (lo + hi);
            if (flow.evolve(phi_lo, mid).norm_sq() <= r) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        return t_lo + hi;
    }
    return std::nullopt;
}

}  // namespace eeqt
