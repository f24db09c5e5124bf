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

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "eeqt/linalg.hpp"

namespace eeqt {

/// A quantum system coupled to an m-state classical system. Sector alpha
/// carries a Hilbert space of dimension dims[alpha] with Hamiltonian
/// hamiltonians[alpha]; coupling(to, from) maps sector `from` vectors to
/// sector `to` vectors and drives the from -> to events. Diagonal couplings
/// are forbidden, and there is at most one coupling operator per ordered
/// sector pair. Sector indices are 0-based throughout (including files).
class HybridModel {
  public:
    HybridModel(std::vector<std::size_t> dims, std::vector<ComplexMatrix> hamiltonians);

    std::size_t sector_count() const { return dims_.size(); }
    const std::vector<std::size_t>& dims() const { return dims_; }
    std::size_t dim(int alpha) const { return dims_[static_cast<std::size_t>(alpha)]; }
    const ComplexMatrix& hamiltonian(int alpha) const {
        return hamiltonians_[static_cast<std::size_t>(alpha)];
    }

    /// Install g_{to,from}. Throws ValidationError if the pair already has one.
    void add_coupling(int to, int from, ComplexMatrix g);

    /// nullptr when the ordered pair carries no coupling.
    const ComplexMatrix* coupling(int to, int from) const;

  private:
    std::vector<std::size_t> dims_;
    std::vector<ComplexMatrix> hamiltonians_;
    std::vector<std::optional<ComplexMatrix>> couplings_;  // row-major (to, from)
};

/// Plain Lindblad model on a single Hilbert space: Hamiltonian H plus an
/// arbitrary list of jump operators V_k.
struct PureLindbladModel {
    std::size_t dim = 0;
    ComplexMatrix hamiltonian;
    std::vector<ComplexMatrix> lindblad_ops;
};

using Model = std::variant<HybridModel, PureLindbladModel>;

/// A point of the pure-state manifold: classical sector plus unit vector.
struct HybridPureState {
    int sector = 0;
    ComplexVector psi;
};

/// Block-diagonal operator on the total system: one square matrix per
/// sector. Serves both as a statistical state (BlockDensity) and as an
/// observable; the density invariants are enforced by validate_density, not
/// by the type.
struct BlockMatrix {
    std::vector<ComplexMatrix> blocks;

    static BlockMatrix zero(const std::vector<std::size_t>& dims);
    static BlockMatrix identity(const std::vector<std::size_t>& dims);

    cplx total_trace() const;
    BlockMatrix& operator+=(const BlockMatrix& rhs);
    BlockMatrix& operator-=(const BlockMatrix& rhs);
    BlockMatrix& operator*=(cplx alpha);
    void axpy(cplx alpha, const BlockMatrix& m);
};

using BlockDensity = BlockMatrix;

BlockMatrix operator+(BlockMatrix lhs, const BlockMatrix& rhs);
BlockMatrix operator-(BlockMatrix lhs, const BlockMatrix& rhs);

/// Tr(a * b) without forming the product.
cplx trace_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// sum_alpha Tr(a_alpha * b_alpha)
cplx trace_product(const BlockMatrix& a, const BlockMatrix& b);

double max_abs_diff(const BlockMatrix& a, const BlockMatrix& b);

/// Blockwise trace distance (the difference is block diagonal, so its
/// spectrum is the union of the block spectra).
double trace_distance(const BlockMatrix& rho, const BlockMatrix& sigma,
                      double hermiticity_tol = 1e-10);

std::vector<std::size_t> block_dims(const HybridModel& model);
std::vector<std::size_t> block_dims(const PureLindbladModel& model);
std::vector<std::size_t> block_dims(const Model& model);

/// Throw ValidationError (with every violation found) unless the model
/// satisfies its type invariants.
void validate(const HybridModel& model, const ToleranceConfig& tol);
void validate(const PureLindbladModel& model, const ToleranceConfig& tol);
void validate(const Model& model, const ToleranceConfig& tol);

void validate_state(const HybridModel& model, const HybridPureState& x,
                    const ToleranceConfig& tol);
void validate_density(const std::vector<std::size_t>& dims, const BlockDensity& rho,
                      const ToleranceConfig& tol);

/// Lambda_alpha = sum_beta g*_{beta,alpha} g_{beta,alpha}; the rate operator
/// governing both the damping of the no-jump flow and the total jump
/// intensity out of sector alpha.
ComplexMatrix lambda_op(const HybridModel& model, int alpha);

/// sum_k V_k* V_k for the pure model.
ComplexMatrix lambda_op(const PureLindbladModel& model);

/// Schroedinger-picture generator, applied blockwise:
///   drho_a = -i[H_a, rho_a] + sum_b g_ab rho_b g*_ab - (1/2){Lambda_a, rho_a}
BlockMatrix liouville_rhs(const HybridModel& model, const BlockMatrix& rho);

/// drho = -i[H, rho] + sum_k V_k rho V_k* - (1/2){sum_k V_k* V_k, rho}
BlockMatrix liouville_rhs(const PureLindbladModel& model, const BlockMatrix& rho);

BlockMatrix liouville_rhs(const Model& model, const BlockMatrix& rho);

/// Heisenberg-picture dual:
///   dA_a = i[H_a, A_a] + sum_b g*_ba A_b g_ba - (1/2){Lambda_a, A_a}
BlockMatrix heisenberg_rhs(const HybridModel& model, const BlockMatrix& a);
BlockMatrix heisenberg_rhs(const PureLindbladModel& model, const BlockMatrix& a);
BlockMatrix heisenberg_rhs(const Model& model, const BlockMatrix& a);

/// Matrix of the generator on stacked vectorized blocks (row-major within a
/// block, blocks in sector order); dimension sum_alpha dims[alpha]^2.
ComplexMatrix build_superoperator(const HybridModel& model);
ComplexMatrix build_superoperator(const PureLindbladModel& model);
ComplexMatrix build_superoperator(const Model& model);

std::vector<cplx> vec_blocks(const BlockMatrix& m);
BlockMatrix unvec_blocks(const std::vector<std::size_t>& dims, const std::vector<cplx>& v);

/// exp(t L) rho0 through the exponential of the superoperator. Amortizes the
/// superoperator build across multiple times.
class ExactPropagator {
  public:
    explicit ExactPropagator(const Model& model);
    BlockDensity propagate(const BlockDensity& rho0, double t) const;

  private:
    std::vector<std::size_t> dims_;
    ComplexMatrix superop_;
};

/// One-shot exact propagation; validates t >= 0, trace preservation and the
/// positivity floor of the result.
BlockDensity propagate_exact(const Model& model, const BlockDensity& rho0, double t,
                             const ToleranceConfig& tol = {});

/// P_x: block `sector` carries |psi><psi|, every other block is zero.
BlockDensity embed_pure_state(const std::vector<std::size_t>& dims, const HybridPureState& x);

}  // namespace eeqt
