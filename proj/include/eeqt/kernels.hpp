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
#include <string>

namespace eeqt::kernels {

using cplx = std::complex<double>;

/// Primitive complex-vector kernels. Everything above this layer (gemv, gemm,
/// matexp, trajectory stepping) is composed from these five entry points, so
/// a backend only has to provide them.
///
/// Arrays are contiguous std::complex<double>, i.e. interleaved re/im pairs.
struct Ops {
    /// y[i] += alpha * x[i]
    void (*axpy)(std::size_t n, cplx alpha, const cplx* x, cplx* y);
    /// sum_i x[i] * y[i]            (unconjugated; row · vector products)
    cplx (*dotu)(std::size_t n, const cplx* x, const cplx* y);
    /// sum_i conj(x[i]) * y[i]      (inner product, antilinear first slot)
    cplx (*dotc)(std::size_t n, const cplx* x, const cplx* y);
    /// sum_i |x[i]|^2
    double (*norm2sq)(std::size_t n, const cplx* x);
    /// x[i] *= alpha
    void (*scal)(std::size_t n, cplx alpha, cplx* x);

    const char* name;
};

enum class Backend { scalar, avx2 };

/// Scalar reference kernels. Always available; the ground truth the SIMD
/// variants are equivalence-tested against.
const Ops& scalar_ops();

/// AVX2+FMA kernels, or nullptr when unsupported by the build or the CPU.
const Ops* avx2_ops();

/// The backend selected at startup: the fastest supported one, unless the
/// EEQT_KERNELS environment variable ("scalar", "avx2", "auto") says
/// otherwise.
const Ops& active();
Backend active_backend();

/// Override the active backend (tests; thread-unsafe w.r.t. concurrent use).
/// Throws NumericalError if the requested backend is unavailable.
void force_backend(Backend backend);

}  // namespace eeqt::kernels
