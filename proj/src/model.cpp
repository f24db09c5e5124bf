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

#include "eeqt/model.hpp"

#include <cmath>
#include <utility>

namespace eeqt {

namespace {
constexpr cplx kI{0.0, 1.0};
// eigenvalue floor for propagated densities; looser than the validation
// floor to absorb matexp round-off
constexpr double kPropagationEigFloor = 1e-8;
}  // namespace

// ---------------------------------------------------------------------------
// HybridModel

HybridModel::HybridModel(std::vector<std::size_t> dims, std::vector<ComplexMatrix> hamiltonians)
    : dims_(std::move(dims)),
      hamiltonians_(std::move(hamiltonians)),
      couplings_(dims_.size() * dims_.size()) {
    if (dims_.empty()) {
        throw ValidationError(Violation::Kind::BadStructure, "model needs at least one sector");
    }
    if (hamiltonians_.size() != dims_.size()) {
        throw ValidationError(Violation::Kind::BadStructure,
                              "one Hamiltonian required per sector");
    }
}

void HybridModel::add_coupling(int to, int from, ComplexMatrix g) {
    const auto m = static_cast<int>(sector_count());
    if (to < 0 || to >= m || from < 0 || from >= m) {
        throw ValidationError(Violation::Kind::BadSector, "coupling sector out of range", to,
                              from);
    }
    auto& slot = couplings_[static_cast<std::size_t>(to) * sector_count() +
                            static_cast<std::size_t>(from)];
    if (slot.has_value()) {
        throw ValidationError(Violation::Kind::BadStructure,
                              "at most one coupling operator per ordered sector pair", to, from);
    }
    slot = std::move(g);
}

const ComplexMatrix* HybridModel::coupling(int to, int from) const {
    const auto& slot = couplings_[static_cast<std::size_t>(to) * sector_count() +
                                  static_cast<std::size_t>(from)];
    return slot.has_value() ? &*slot : nullptr;
}

// ---------------------------------------------------------------------------
// BlockMatrix

BlockMatrix BlockMatrix::zero(const std::vector<std::size_t>& dims) {
    BlockMatrix out;
    out.blocks.reserve(dims.size());
    for (std::size_t n : dims) out.blocks.push_back(ComplexMatrix::zero(n, n));
    return out;
}

BlockMatrix BlockMatrix::identity(const std::vector<std::size_t>& dims) {
    BlockMatrix out;
    out.blocks.reserve(dims.size());
    for (std::size_t n : dims) out.blocks.push_back(ComplexMatrix::identity(n));
    return out;
}

cplx BlockMatrix::total_trace() const {
    cplx t{0.0, 0.0};
    for (const auto& b : blocks) t += b.trace();
    return t;
}

BlockMatrix& BlockMatrix::operator+=(const BlockMatrix& rhs) {
    if (blocks.size() != rhs.blocks.size()) throw DimensionError("block count mismatch");
    for (std::size_t i = 0; i < blocks.size(); ++i) blocks[i] += rhs.blocks[i];
    return *this;
}

BlockMatrix& BlockMatrix::operator-=(const BlockMatrix& rhs) {
    if (blocks.size() != rhs.blocks.size()) throw DimensionError("block count mismatch");
    for (std::size_t i = 0; i < blocks.size(); ++i) blocks[i] -= rhs.blocks[i];
    return *this;
}

BlockMatrix& BlockMatrix::operator*=(cplx alpha) {
    for (auto& b : blocks) b *= alpha;
    return *this;
}

void BlockMatrix::axpy(cplx alpha, const BlockMatrix& m) {
    if (blocks.size() != m.blocks.size()) throw DimensionError("block count mismatch");
    for (std::size_t i = 0; i < blocks.size(); ++i) blocks[i].axpy(alpha, m.blocks[i]);
}

BlockMatrix operator+(BlockMatrix lhs, const BlockMatrix& rhs) {
    lhs += rhs;
    return lhs;
}

BlockMatrix operator-(BlockMatrix lhs, const BlockMatrix& rhs) {
    lhs -= rhs;
    return lhs;
}

cplx trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows() || a.rows() != b.cols()) {
        throw DimensionError("trace_product shape mismatch");
    }
    cplx t{0.0, 0.0};
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) t += a(i, k) * b(k, i);
    }
    return t;
}

cplx trace_product(const BlockMatrix& a, const BlockMatrix& b) {
    if (a.blocks.size() != b.blocks.size()) throw DimensionError("block count mismatch");
    cplx t{0.0, 0.0};
    for (std::size_t i = 0; i < a.blocks.size(); ++i) {
        t += trace_product(a.blocks[i], b.blocks[i]);
    }
    return t;
}

double max_abs_diff(const BlockMatrix& a, const BlockMatrix& b) {
    if (a.blocks.size() != b.blocks.size()) throw DimensionError("block count mismatch");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.blocks.size(); ++i) {
        worst = std::max(worst, max_abs_diff(a.blocks[i], b.blocks[i]));
    }
    return worst;
}

double trace_distance(const BlockMatrix& rho, const BlockMatrix& sigma, double hermiticity_tol) {
    if (rho.blocks.size() != sigma.blocks.size()) throw DimensionError("block count mismatch");
    double sum = 0.0;
    for (std::size_t i = 0; i < rho.blocks.size(); ++i) {
        sum += trace_distance(rho.blocks[i], sigma.blocks[i], hermiticity_tol);
    }
    return sum;
}

std::vector<std::size_t> block_dims(const HybridModel& model) { return model.dims(); }
std::vector<std::size_t> block_dims(const PureLindbladModel& model) { return {model.dim}; }
std::vector<std::size_t> block_dims(const Model& model) {
    return std::visit([](const auto& m) { return block_dims(m); }, model);
}

// ---------------------------------------------------------------------------
// Validation

void validate(const HybridModel& model, const ToleranceConfig& tol) {
    tol.validate();
    std::vector<Violation> bad;
    const int m = static_cast<int>(model.sector_count());
    for (int a = 0; a < m; ++a) {
        const auto& h = model.hamiltonian(a);
        const std::size_t n = model.dim(a);
        if (n == 0) {
            bad.push_back({Violation::Kind::BadStructure, a, -1, "empty sector"});
            continue;
        }
        if (h.rows() != n || h.cols() != n) {
            bad.push_back({Violation::Kind::ShapeMismatch, a, a, "Hamiltonian shape"});
        } else if (!h.is_hermitian(tol.hermiticity)) {
            bad.push_back({Violation::Kind::NonHermitian, a, -1, "Hamiltonian"});
        }
    }
    for (int to = 0; to < m; ++to) {
        for (int from = 0; from < m; ++from) {
            const ComplexMatrix* g = model.coupling(to, from);
            if (!g) continue;
            if (to == from) {
                bool zero = true;
                for (std::size_t i = 0; i < g->rows() && zero; ++i) {
                    for (std::size_t j = 0; j < g->cols(); ++j) {
                        if ((*g)(i, j) != cplx{0.0, 0.0}) {
                            zero = false;
                            break;
                        }
                    }
                }
                if (!zero) {
                    bad.push_back({Violation::Kind::DiagonalCouplingPresent, to, -1, ""});
                }
            }
            if (g->rows() != model.dim(to) || g->cols() != model.dim(from)) {
                bad.push_back({Violation::Kind::ShapeMismatch, to, from, "coupling shape"});
            }
        }
    }
    if (!bad.empty()) throw ValidationError(std::move(bad));
}

void validate(const PureLindbladModel& model, const ToleranceConfig& tol) {
    tol.validate();
    std::vector<Violation> bad;
    if (model.dim == 0) {
        bad.push_back({Violation::Kind::BadStructure, -1, -1, "dimension must be positive"});
    }
    if (model.hamiltonian.rows() != model.dim || model.hamiltonian.cols() != model.dim) {
        bad.push_back({Violation::Kind::ShapeMismatch, 0, 0, "Hamiltonian shape"});
    } else if (!model.hamiltonian.is_hermitian(tol.hermiticity)) {
        bad.push_back({Violation::Kind::NonHermitian, 0, -1, "Hamiltonian"});
    }
    for (std::size_t k = 0; k < model.lindblad_ops.size(); ++k) {
        const auto& v = model.lindblad_ops[k];
        if (v.rows() != model.dim || v.cols() != model.dim) {
            bad.push_back({Violation::Kind::ShapeMismatch, static_cast<int>(k), -1,
                           "Lindblad operator shape"});
        }
    }
    if (!bad.empty()) throw ValidationError(std::move(bad));
}

void validate(const Model& model, const ToleranceConfig& tol) {
    std::visit([&](const auto& m) { validate(m, tol); }, model);
}

void validate_state(const HybridModel& model, const HybridPureState& x,
                    const ToleranceConfig& tol) {
    std::vector<Violation> bad;
    if (x.sector < 0 || x.sector >= static_cast<int>(model.sector_count())) {
        bad.push_back({Violation::Kind::BadSector, x.sector, -1, "state sector out of range"});
    } else if (x.psi.dim() != model.dim(x.sector)) {
        bad.push_back({Violation::Kind::ShapeMismatch, x.sector, -1, "state dimension"});
    } else if (!x.psi.is_normalized(tol.normalization)) {
        bad.push_back({Violation::Kind::NotNormalized, x.sector, -1, "state vector"});
    }
    if (!bad.empty()) throw ValidationError(std::move(bad));
}

void validate_density(const std::vector<std::size_t>& dims, const BlockDensity& rho,
                      const ToleranceConfig& tol) {
    std::vector<Violation> bad;
    if (rho.blocks.size() != dims.size()) {
        throw ValidationError(Violation::Kind::BadStructure, "density block count mismatch");
    }
    for (std::size_t a = 0; a < dims.size(); ++a) {
        const auto& blk = rho.blocks[a];
        const int ai = static_cast<int>(a);
        if (blk.rows() != dims[a] || blk.cols() != dims[a]) {
            bad.push_back({Violation::Kind::ShapeMismatch, ai, ai, "density block shape"});
            continue;
        }
        if (!blk.is_hermitian(tol.hermiticity)) {
            bad.push_back({Violation::Kind::NonHermitian, ai, -1, "density block"});
            continue;
        }
        const auto eigs = hermitian_eigenvalues(blk);
        if (!eigs.empty() && eigs.front() < -tol.positivity) {
            bad.push_back({Violation::Kind::NotPositive, ai, -1,
                           "smallest eigenvalue " + std::to_string(eigs.front())});
        }
    }
    if (bad.empty() && std::abs(rho.total_trace() - cplx{1.0, 0.0}) > tol.normalization) {
        bad.push_back({Violation::Kind::TraceNotOne, -1, -1, ""});
    }
    if (!bad.empty()) throw ValidationError(std::move(bad));
}

// ---------------------------------------------------------------------------
// Generators

ComplexMatrix lambda_op(const HybridModel& model, int alpha) {
    if (alpha < 0 || alpha >= static_cast<int>(model.sector_count())) {
        throw ValidationError(Violation::Kind::BadSector, "lambda_op sector out of range", alpha);
    }
    const std::size_t n = model.dim(alpha);
    ComplexMatrix lam = ComplexMatrix::zero(n, n);
    for (int beta = 0; beta < static_cast<int>(model.sector_count()); ++beta) {
        if (const ComplexMatrix* g = model.coupling(beta, alpha)) {
            lam += g->adjoint() * (*g);
        }
    }
    return lam;
}

ComplexMatrix lambda_op(const PureLindbladModel& model) {
    ComplexMatrix lam = ComplexMatrix::zero(model.dim, model.dim);
    for (const auto& v : model.lindblad_ops) lam += v.adjoint() * v;
    return lam;
}

BlockMatrix liouville_rhs(const HybridModel& model, const BlockMatrix& rho) {
    const int m = static_cast<int>(model.sector_count());
    if (rho.blocks.size() != model.sector_count()) {
        throw DimensionError("density block count mismatch");
    }
    BlockMatrix out = BlockMatrix::zero(model.dims());
    for (int a = 0; a < m; ++a) {
        const auto& rho_a = rho.blocks[static_cast<std::size_t>(a)];
        if (rho_a.rows() != model.dim(a) || rho_a.cols() != model.dim(a)) {
            throw DimensionError("density block shape mismatch");
        }
        auto& out_a = out.blocks[static_cast<std::size_t>(a)];
        out_a.axpy(-kI, commutator(model.hamiltonian(a), rho_a));
        for (int b = 0; b < m; ++b) {
            if (const ComplexMatrix* g = model.coupling(a, b)) {
                out_a += (*g) * rho.blocks[static_cast<std::size_t>(b)] * g->adjoint();
            }
        }
        out_a.axpy(cplx{-0.5, 0.0}, anticommutator(lambda_op(model, a), rho_a));
    }
    return out;
}

BlockMatrix liouville_rhs(const PureLindbladModel& model, const BlockMatrix& rho) {
    if (rho.blocks.size() != 1) throw DimensionError("pure model expects one block");
    const auto& r = rho.blocks[0];
    BlockMatrix out = BlockMatrix::zero({model.dim});
    auto& o = out.blocks[0];
    o.axpy(-kI, commutator(model.hamiltonian, r));
    for (const auto& v : model.lindblad_ops) o += v * r * v.adjoint();
    o.axpy(cplx{-0.5, 0.0}, anticommutator(lambda_op(model), r));
    return out;
}

BlockMatrix liouville_rhs(const Model& model, const BlockMatrix& rho) {
    return std::visit([&](const auto& m) { return liouville_rhs(m, rho); }, model);
}

BlockMatrix heisenberg_rhs(const HybridModel& model, const BlockMatrix& a) {
    const int m = static_cast<int>(model.sector_count());
    if (a.blocks.size() != model.sector_count()) {
        throw DimensionError("observable block count mismatch");
    }
    BlockMatrix out = BlockMatrix::zero(model.dims());
    for (int al = 0; al < m; ++al) {
        const auto& a_al = a.blocks[static_cast<std::size_t>(al)];
        if (a_al.rows() != model.dim(al) || a_al.cols() != model.dim(al)) {
            throw DimensionError("observable block shape mismatch");
        }
        auto& out_al = out.blocks[static_cast<std::size_t>(al)];
        out_al.axpy(kI, commutator(model.hamiltonian(al), a_al));
        for (int b = 0; b < m; ++b) {
            if (const ComplexMatrix* g = model.coupling(b, al)) {
                out_al += g->adjoint() * a.blocks[static_cast<std::size_t>(b)] * (*g);
            }
        }
        out_al.axpy(cplx{-0.5, 0.0}, anticommutator(lambda_op(model, al), a_al));
    }
    return out;
}

BlockMatrix heisenberg_rhs(const PureLindbladModel& model, const BlockMatrix& a) {
    if (a.blocks.size() != 1) throw DimensionError("pure model expects one block");
    const auto& obs = a.blocks[0];
    BlockMatrix out = BlockMatrix::zero({model.dim});
    auto& o = out.blocks[0];
    o.axpy(kI, commutator(model.hamiltonian, obs));
    for (const auto& v : model.lindblad_ops) o += v.adjoint() * obs * v;
    o.axpy(cplx{-0.5, 0.0}, anticommutator(lambda_op(model), obs));
    return out;
}

BlockMatrix heisenberg_rhs(const Model& model, const BlockMatrix& a) {
    return std::visit([&](const auto& m) { return heisenberg_rhs(m, a); }, model);
}

// ---------------------------------------------------------------------------
// Superoperator and exact propagation

std::vector<cplx> vec_blocks(const BlockMatrix& m) {
    std::vector<cplx> v;
    for (const auto& b : m.blocks) {
        v.insert(v.end(), b.data(), b.data() + b.rows() * b.cols());
    }
    return v;
}

BlockMatrix unvec_blocks(const std::vector<std::size_t>& dims, const std::vector<cplx>& v) {
    BlockMatrix out = BlockMatrix::zero(dims);
    std::size_t off = 0;
    for (auto& b : out.blocks) {
        const std::size_t count = b.rows() * b.cols();
        std::copy(v.begin() + off, v.begin() + off + count, b.data());
        off += count;
    }
    if (off != v.size()) throw DimensionError("vectorized length mismatch");
    return out;
}

namespace {

template <typename ModelT>
ComplexMatrix build_superoperator_impl(const ModelT& model) {
    const auto dims = block_dims(model);
    std::size_t total = 0;
    for (std::size_t n : dims) total += n * n;

    ComplexMatrix superop(total, total);
    BlockMatrix basis = BlockMatrix::zero(dims);
    std::size_t col = 0;
    for (std::size_t a = 0; a < dims.size(); ++a) {
        for (std::size_t i = 0; i < dims[a]; ++i) {
            for (std::size_t j = 0; j < dims[a]; ++j) {
                basis.blocks[a](i, j) = cplx{1.0, 0.0};
                const auto image = vec_blocks(liouville_rhs(model, basis));
                for (std::size_t r = 0; r < total; ++r) superop(r, col) = image[r];
                basis.blocks[a](i, j) = cplx{0.0, 0.0};
                ++col;
            }
        }
    }
    return superop;
}

}  // namespace

ComplexMatrix build_superoperator(const HybridModel& model) {
    return build_superoperator_impl(model);
}

ComplexMatrix build_superoperator(const PureLindbladModel& model) {
    return build_superoperator_impl(model);
}

ComplexMatrix build_superoperator(const Model& model) {
    return std::visit([](const auto& m) { return build_superoperator(m); }, model);
}

ExactPropagator::ExactPropagator(const Model& model)
    : dims_(block_dims(model)), superop_(build_superoperator(model)) {}

BlockDensity ExactPropagator::propagate(const BlockDensity& rho0, double t) const {
    if (t < 0.0) {
        throw ValidationError(Violation::Kind::BadStructure, "propagation time must be >= 0");
    }
    const auto v0 = vec_blocks(rho0);
    if (v0.size() != superop_.rows()) throw DimensionError("state does not match model");
    ComplexMatrix st = superop_;
    st *= cplx{t, 0.0};
    const ComplexMatrix expst = matexp(st);

    ComplexVector x(v0.size());
    std::copy(v0.begin(), v0.end(), x.data());
    const ComplexVector y = expst.apply(x);
    std::vector<cplx> vt(y.data(), y.data() + y.dim());
    return unvec_blocks(dims_, vt);
}

BlockDensity propagate_exact(const Model& model, const BlockDensity& rho0, double t,
                             const ToleranceConfig& tol) {
    ExactPropagator prop(model);
    BlockDensity rho = prop.propagate(rho0, t);

    if (std::abs(rho.total_trace() - rho0.total_trace()) > tol.normalization) {
        throw NumericalError("exact propagation lost trace normalization");
    }
    for (const auto& blk : rho.blocks) {
        const auto eigs = hermitian_eigenvalues(blk);
        if (!eigs.empty() && eigs.front() < -kPropagationEigFloor) {
            throw NumericalError("exact propagation lost positivity");
        }
    }
    return rho;
}

BlockDensity embed_pure_state(const std::vector<std::size_t>& dims, const HybridPureState& x) {
    if (x.sector < 0 || x.sector >= static_cast<int>(dims.size())) {
        throw ValidationError(Violation::Kind::BadSector, "embed sector out of range", x.sector);
    }
    BlockDensity rho = BlockDensity::zero(dims);
    rho.blocks[static_cast<std::size_t>(x.sector)] = outer(x.psi);
    return rho;
}

}  // namespace eeqt
