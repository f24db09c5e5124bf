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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "eeqt/errors.hpp"

namespace eeqt {

using cplx = std::complex<double>;

/// Numerical tolerances shared across validation and propagation.
/// `positivity` is the magnitude of the admissible eigenvalue floor
/// (eigenvalues >= -positivity pass). `ode_step` is the default flow step
/// used by the waiting-time search.
struct ToleranceConfig {
    double hermiticity = 1e-10;
    double normalization = 1e-10;
    double positivity = 1e-10;
    double ode_step = 0.01;

    void validate() const;  // throws ValidationError unless all > 0
};

class ComplexVector {
  public:
    ComplexVector() = default;
    explicit ComplexVector(std::size_t dim) : entries_(dim, cplx{0.0, 0.0}) {}
    ComplexVector(std::initializer_list<cplx> init) : entries_(init) {}

    std::size_t dim() const { return entries_.size(); }
    cplx& operator[](std::size_t i) { return entries_[i]; }
    const cplx& operator[](std::size_t i) const { return entries_[i]; }
    cplx* data() { return entries_.data(); }
    const cplx* data() const { return entries_.data(); }

    double norm_sq() const;
    double norm() const;
    bool is_normalized(double tol) const;

    ComplexVector& operator+=(const ComplexVector& rhs);
    ComplexVector& operator-=(const ComplexVector& rhs);
    ComplexVector& operator*=(cplx alpha);

    /// this += alpha * x
    void axpy(cplx alpha, const ComplexVector& x);

    void normalize();  // throws NumericalError on the zero vector
    ComplexVector normalized() const;

  private:
    std::vector<cplx> entries_;
};

ComplexVector operator+(ComplexVector lhs, const ComplexVector& rhs);
ComplexVector operator-(ComplexVector lhs, const ComplexVector& rhs);
ComplexVector operator*(cplx alpha, ComplexVector v);

/// <x|y>, antilinear in the first slot.
cplx inner(const ComplexVector& x, const ComplexVector& y);

/// Dense row-major complex matrix.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, cplx{0.0, 0.0}) {}
    /// Row-major initializer: ComplexMatrix(2, 2, {a, b, c, d}) is (a,b;c,d).
    ComplexMatrix(std::size_t rows, std::size_t cols, std::initializer_list<cplx> init);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix zero(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    cplx& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    cplx* data() { return entries_.data(); }
    const cplx* data() const { return entries_.data(); }
    cplx* row(std::size_t i) { return entries_.data() + i * cols_; }
    const cplx* row(std::size_t i) const { return entries_.data() + i * cols_; }

    ComplexMatrix adjoint() const;

    cplx trace() const;
    double frobenius_norm() const;
    double one_norm() const;  // max column absolute sum

    /// max_ij |M_ij - conj(M_ji)|; 0 for exactly Hermitian input.
    double hermiticity_defect() const;
    bool is_hermitian(double tol) const;

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(cplx alpha);

    /// this += alpha * M
    void axpy(cplx alpha, const ComplexMatrix& m);

    /// Matrix-vector product (gemv).
    ComplexVector apply(const ComplexVector& x) const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> entries_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(cplx alpha, ComplexMatrix m);

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// |psi><psi| (not normalized; callers pass unit vectors for projectors).
ComplexMatrix outer(const ComplexVector& psi);

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// e^M by Pade-13 approximation with scaling and squaring. Accurate to
/// ~1e-12 relative error for ||M|| up to 100 at the dimensions used here.
/// Throws DimensionError for non-square input.
ComplexMatrix matexp(const ComplexMatrix& m);

/// Solve A X = B for square A (partial-pivot LU). Throws NumericalError on a
/// singular pivot.
ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& b);

/// Eigenvalues of a Hermitian matrix, ascending. Cyclic Jacobi on the real
/// symmetric embedding [[X, -Y], [Y, X]] of M = X + iY.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

/// (1/2) * sum of absolute eigenvalues of rho - sigma. Throws DimensionError
/// on shape mismatch and ValidationError when either input fails the
/// hermiticity tolerance.
double trace_distance(const ComplexMatrix& rho, const ComplexMatrix& sigma,
                      double hermiticity_tol = 1e-10);

}  // namespace eeqt
