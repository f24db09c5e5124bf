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

#include <stdexcept>
#include <string>
#include <vector>

namespace eeqt {

/// A single invariant violation found while validating a model or state.
struct Violation {
    enum class Kind {
        NonHermitian,
        DiagonalCouplingPresent,
        ShapeMismatch,
        NotNormalized,
        NotPositive,
        TraceNotOne,
        BadSector,
        BadStructure,
    };
    Kind kind;
    int alpha = -1;  // sector involved, -1 if not sector specific
    int beta = -1;   // second sector for pairwise violations
    std::string detail;
};

std::string to_string(Violation::Kind kind);

/// Model/state/config rejected by validation. Carries every violation found.
class ValidationError : public std::runtime_error {
  public:
    explicit ValidationError(std::vector<Violation> violations);
    ValidationError(Violation::Kind kind, std::string detail, int alpha = -1, int beta = -1);

    const std::vector<Violation>& violations() const { return violations_; }

  private:
    std::vector<Violation> violations_;
};

/// Dimension or shape mismatch between operands.
class DimensionError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A numerical contract failed (positivity lost, step collapse, zero-rate
/// jump, ...). These indicate either pathological input or a caller bug.
class NumericalError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace eeqt
