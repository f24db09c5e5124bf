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

#include "eeqt/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <utility>

#include "eeqt/kernels.hpp"

namespace eeqt {

namespace {
const kernels::Ops& ops() { return kernels::active(); }
}  // namespace

void ToleranceConfig::validate() const {
    std::vector<Violation> bad;
    auto check = [&](double v, const char* name) {
        if (!(v > 0.0)) {
            bad.push_back({Violation::Kind::BadStructure, -1, -1,
                           std::string(name) + " tolerance must be strictly positive"});
        }
    };
    check(hermiticity, "hermiticity");
    check(normalization, "normalization");
    check(positivity, "positivity");
    check(ode_step, "ode_step");
    if (!bad.empty()) throw ValidationError(std::move(bad));
}

std::string to_string(Violation::Kind kind) {
    switch (kind) {
        case Violation::Kind::NonHermitian: return "NonHermitian";
        case Violation::Kind::DiagonalCouplingPresent: return "DiagonalCouplingPresent";
        case Violation::Kind::ShapeMismatch: return "ShapeMismatch";
        case Violation::Kind::NotNormalized: return "NotNormalized";
        case Violation::Kind::NotPositive: return "NotPositive";
        case Violation::Kind::TraceNotOne: return "TraceNotOne";
        case Violation::Kind::BadSector: return "BadSector";
        case Violation::Kind::BadStructure: return "BadStructure";
    }
    return "Unknown";
}

namespace {
std::string format_violations(const std::vector<Violation>& violations) {
    std::string msg = "validation failed:";
    for (const auto& v : violations) {
        msg += " " + to_string(v.kind);
        if (v.alpha >= 0) {
            msg += "(" + std::to_string(v.alpha);
            if (v.beta >= 0) msg += "," + std::to_string(v.beta);
            msg += ")";
        }
        if (!v.detail.empty()) msg += " [" + v.detail + "]";
        msg += ";";
    }
    return msg;
}
}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : std::runtime_error(format_violations(violations)), violations_(std::move(violations)) {}

ValidationError::ValidationError(Violation::Kind kind, std::string detail, int alpha, int beta)
    : ValidationError(std::vector<Violation>{{kind, alpha, beta, std::move(detail)}}) {}

// ---------------------------------------------------------------------------
// ComplexVector

double ComplexVector::norm_sq() const { return ops().norm2sq(dim(), data()); }
double ComplexVector::norm() const { return std::sqrt(norm_sq()); }

bool ComplexVector::is_normalized(double tol) const { return std::abs(norm_sq() - 1.0) <= tol; }

ComplexVector& ComplexVector::operator+=(const ComplexVector& rhs) {
    if (dim() != rhs.dim()) throw DimensionError("vector dimension mismatch");
    ops().axpy(dim(), cplx{1.0, 0.0}, rhs.data(), data());
    return *this;
}

ComplexVector& ComplexVector::operator-=(const ComplexVector& rhs) {
    if (dim() != rhs.dim()) throw DimensionError("vector dimension mismatch");
    ops().axpy(dim(), cplx{-1.0, 0.0}, rhs.data(), data());
    return *this;
}

ComplexVector& ComplexVector::operator*=(cplx alpha) {
    ops().scal(dim(), alpha, data());
    return *this;
}

void ComplexVector::axpy(cplx alpha, const ComplexVector& x) {
    if (dim() != x.dim()) throw DimensionError("vector dimension mismatch");
    ops().axpy(dim(), alpha, x.data(), data());
}

void ComplexVector::normalize() {
    double n = norm();
    if (n == 0.0) throw NumericalError("cannot normalize the zero vector");
    ops().scal(dim(), cplx{1.0 / n, 0.0}, data());
}

ComplexVector ComplexVector::normalized() const {
    ComplexVector out = *this;
    out.normalize();
    return out;
}

ComplexVector operator+(ComplexVector lhs, const ComplexVector& rhs) {
    lhs += rhs;
    return lhs;
}

ComplexVector operator-(ComplexVector lhs, const ComplexVector& rhs) {
    lhs -= rhs;
    return lhs;
}

ComplexVector operator*(cplx alpha, ComplexVector v) {
    v *= alpha;
    return v;
}

cplx inner(const ComplexVector& x, const ComplexVector& y) {
    if (x.dim() != y.dim()) throw DimensionError("vector dimension mismatch");
    return ops().dotc(x.dim(), x.data(), y.data());
}

// ---------------------------------------------------------------------------
// ComplexMatrix

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::initializer_list<cplx> init)
    : rows_(rows), cols_(cols), entries_(init) {
    if (entries_.size() != rows * cols) {
        throw DimensionError("initializer size does not match rows*cols");
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = cplx{1.0, 0.0};
    return m;
}

ComplexMatrix ComplexMatrix::zero(std::size_t rows, std::size_t cols) {
    return ComplexMatrix(rows, cols);
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
    }
    return out;
}

cplx ComplexMatrix::trace() const {
    if (!is_square()) throw DimensionError("trace of a non-square matrix");
    cplx t{0.0, 0.0};
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    return std::sqrt(ops().norm2sq(entries_.size(), entries_.data()));
}

double ComplexMatrix::one_norm() const {
    double best = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < rows_; ++i) s += std::abs((*this)(i, j));
        best = std::max(best, s);
    }
    return best;
}

double ComplexMatrix::hermiticity_defect() const {
    if (!is_square()) throw DimensionError("hermiticity of a non-square matrix");
    double worst = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = i; j < cols_; ++j) {
            worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
        }
    }
    return worst;
}

bool ComplexMatrix::is_hermitian(double tol) const { return hermiticity_defect() <= tol; }

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionError("matrix shape mismatch");
    ops().axpy(entries_.size(), cplx{1.0, 0.0}, rhs.entries_.data(), entries_.data());
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionError("matrix shape mismatch");
    ops().axpy(entries_.size(), cplx{-1.0, 0.0}, rhs.entries_.data(), entries_.data());
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx alpha) {
    ops().scal(entries_.size(), alpha, entries_.data());
    return *this;
}

void ComplexMatrix::axpy(cplx alpha, const ComplexMatrix& m) {
    if (rows_ != m.rows_ || cols_ != m.cols_) throw DimensionError("matrix shape mismatch");
    ops().axpy(entries_.size(), alpha, m.entries_.data(), entries_.data());
}

ComplexVector ComplexMatrix::apply(const ComplexVector& x) const {
    if (cols_ != x.dim()) throw DimensionError("matrix-vector dimension mismatch");
    ComplexVector y(rows_);
    for (std::size_t i = 0; i < rows_; ++i) y[i] = ops().dotu(cols_, row(i), x.data());
    return y;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) {
    lhs += rhs;
    return lhs;
}

ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) {
    lhs -= rhs;
    return lhs;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
    if (lhs.cols() != rhs.rows()) throw DimensionError("matrix product shape mismatch");
    ComplexMatrix out(lhs.rows(), rhs.cols());
    // C[i,:] += A(i,k) * B[k,:], a row-axpy formulation that feeds the kernels
    for (std::size_t i = 0; i < lhs.rows(); ++i) {
        for (std::size_t k = 0; k < lhs.cols(); ++k) {
            ops().axpy(rhs.cols(), lhs(i, k), rhs.row(k), out.row(i));
        }
    }
    return out;
}

ComplexMatrix operator*(cplx alpha, ComplexMatrix m) {
    m *= alpha;
    return m;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    return a * b - b * a;
}

ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    return a * b + b * a;
}

ComplexMatrix outer(const ComplexVector& psi) {
    ComplexMatrix out(psi.dim(), psi.dim());
    for (std::size_t i = 0; i < psi.dim(); ++i) {
        for (std::size_t j = 0; j < psi.dim(); ++j) out(i, j) = psi[i] * std::conj(psi[j]);
    }
    return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("matrix shape mismatch");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
        }
    }
    return worst;
}

// ---------------------------------------------------------------------------
// LU solve

ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (!a.is_square()) throw DimensionError("solve requires a square matrix");
    if (a.rows() != b.rows()) throw DimensionError("solve shape mismatch");
    const std::size_t n = a.rows();
    ComplexMatrix lu = a;
    ComplexMatrix x = b;
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        double best = std::abs(lu(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            double v = std::abs(lu(i, k));
            if (v > best) {
                best = v;
                pivot = i;
            }
        }
        if (best == 0.0) throw NumericalError("singular matrix in solve");
        if (pivot != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(pivot, j));
            for (std::size_t j = 0; j < x.cols(); ++j) std::swap(x(k, j), x(pivot, j));
        }
        const cplx inv_piv = cplx{1.0, 0.0} / lu(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const cplx factor = lu(i, k) * inv_piv;
            lu(i, k) = factor;
            if (factor != cplx{0.0, 0.0}) {
                ops().axpy(n - k - 1, -factor, lu.row(k) + k + 1, lu.row(i) + k + 1);
                ops().axpy(x.cols(), -factor, x.row(k), x.row(i));
            }
        }
    }
    // back substitution
    for (std::size_t kk = n; kk-- > 0;) {
        const cplx inv_piv = cplx{1.0, 0.0} / lu(kk, kk);
        ops().scal(x.cols(), inv_piv, x.row(kk));
        for (std::size_t i = 0; i < kk; ++i) {
            ops().axpy(x.cols(), -lu(i, kk), x.row(kk), x.row(i));
        }
    }
    return x;
}

// ---------------------------------------------------------------------------
// Matrix exponential (Pade-13, scaling and squaring)

ComplexMatrix matexp(const ComplexMatrix& m) {
    if (!m.is_square()) throw DimensionError("matexp requires a square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return m;

    // theta_13 for double precision
    constexpr double theta = 5.371920351148152;
    static const double b[] = {64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
                               1187353796428800.0,  129060195264000.0,   10559470521600.0,
                               670442572800.0,      33522128640.0,       1323241920.0,
                               40840800.0,          960960.0,            16380.0,
                               182.0,               1.0};

    int squarings = 0;
    ComplexMatrix a = m;
    const double norm = m.one_norm();
    if (norm > theta) {
        squarings = static_cast<int>(std::ceil(std::log2(norm / theta)));
        a *= cplx{std::ldexp(1.0, -squarings), 0.0};
    }

    const ComplexMatrix ident = ComplexMatrix::identity(n);
    const ComplexMatrix a2 = a * a;
    const ComplexMatrix a4 = a2 * a2;
    const ComplexMatrix a6 = a2 * a4;

    ComplexMatrix w = ComplexMatrix::zero(n, n);
    w.axpy(cplx{b[13], 0.0}, a6);
    w.axpy(cplx{b[11], 0.0}, a4);
    w.axpy(cplx{b[9], 0.0}, a2);
    w = a6 * w;
    w.axpy(cplx{b[7], 0.0}, a6);
    w.axpy(cplx{b[5], 0.0}, a4);
    w.axpy(cplx{b[3], 0.0}, a2);
    w.axpy(cplx{b[1], 0.0}, ident);
    const ComplexMatrix u = a * w;

    ComplexMatrix v = ComplexMatrix::zero(n, n);
    v.axpy(cplx{b[12], 0.0}, a6);
    v.axpy(cplx{b[10], 0.0}, a4);
    v.axpy(cplx{b[8], 0.0}, a2);
    v = a6 * v;
    v.axpy(cplx{b[6], 0.0}, a6);
    v.axpy(cplx{b[4], 0.0}, a4);
    v.axpy(cplx{b[2], 0.0}, a2);
    v.axpy(cplx{b[0], 0.0}, ident);

    ComplexMatrix result = solve(v - u, v + u);
    for (int s = 0; s < squarings; ++s) result = result * result;
    return result;
}

// ---------------------------------------------------------------------------
// Hermitian eigenvalues

namespace {

// Cyclic Jacobi for a real symmetric matrix stored dense; eigenvalues only.
std::vector<double> jacobi_symmetric_eigenvalues(std::vector<double>& a, std::size_t n) {
    auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };

    double frob = 0.0;
    for (double v : a) frob += v * v;
    frob = std::sqrt(frob);
    const double stop = 1e-15 * std::max(frob, 1.0);

    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) off += 2.0 * at(p, q) * at(p, q);
        }
        if (std::sqrt(off) <= stop) break;

        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (std::abs(apq) <= 1e-300) continue;
                const double tau = (at(q, q) - at(p, p)) / (2.0 * apq);
                double t;
                if (tau >= 0.0) {
                    t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
                } else {
                    t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                }
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = at(k, p);
                    const double akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = at(p, k);
                    const double aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
        }
    }

    std::vector<double> eigs(n);
    for (std::size_t i = 0; i < n; ++i) eigs[i] = at(i, i);
    std::sort(eigs.begin(), eigs.end());
    return eigs;
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
    if (!m.is_square()) throw DimensionError("eigenvalues of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return {};

    // Embed M = X + iY as the real symmetric [[X, -Y], [Y, X]]; its spectrum
    // is the spectrum of M with every eigenvalue doubled.
    std::vector<double> s(4 * n * n, 0.0);
    const std::size_t nn = 2 * n;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double x = m(i, j).real();
            const double y = m(i, j).imag();
            s[i * nn + j] = x;
            s[(i + n) * nn + (j + n)] = x;
            s[i * nn + (j + n)] = -y;
            s[(i + n) * nn + j] = y;
        }
    }
    std::vector<double> doubled = jacobi_symmetric_eigenvalues(s, nn);
    std::vector<double> eigs(n);
    for (std::size_t i = 0; i < n; ++i) eigs[i] = doubled[2 * i];
    return eigs;
}

double trace_distance(const ComplexMatrix& rho, const ComplexMatrix& sigma,
                      double hermiticity_tol) {
    if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols()) {
        throw DimensionError("trace_distance shape mismatch");
    }
    if (!rho.is_hermitian(hermiticity_tol) || !sigma.is_hermitian(hermiticity_tol)) {
        throw ValidationError(Violation::Kind::NonHermitian,
                              "trace_distance requires Hermitian inputs");
    }
    ComplexMatrix diff = rho - sigma;
    double sum = 0.0;
    for (double lambda : hermitian_eigenvalues(diff)) sum += std::abs(lambda);
    return 0.5 * sum;
}

}  // namespace eeqt
