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

#include "eeqt/kernels.hpp"

#if defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

namespace eeqt::kernels {
namespace {

// A __m256d holds two interleaved complex doubles: [re0, im0, re1, im1].
//
// cmul(x, y): with xr = [xr0,xr0,xr1,xr1], xi = [xi0,xi0,xi1,xi1] and
// ys = [yi0,yr0,yi1,yr1], fmaddsub(xr, y, xi*ys) yields
//   even lanes  xr*yr - xi*yi   (real part)
//   odd lanes   xr*yi + xi*yr   (imaginary part)

inline __m256d cmul(__m256d x, __m256d y) {
    __m256d xr = _mm256_movedup_pd(x);
    __m256d xi = _mm256_permute_pd(x, 0xF);
    __m256d ys = _mm256_permute_pd(y, 0x5);
    return _mm256_fmaddsub_pd(xr, y, _mm256_mul_pd(xi, ys));
}

// conj(x) * y: fmsubadd flips the lane signs relative to cmul.
inline __m256d cmulc(__m256d x, __m256d y) {
    __m256d xr = _mm256_movedup_pd(x);
    __m256d xi = _mm256_permute_pd(x, 0xF);
    __m256d ys = _mm256_permute_pd(y, 0x5);
    return _mm256_fmsubadd_pd(xr, y, _mm256_mul_pd(xi, ys));
}

inline cplx reduce_pairs(__m256d acc) {
    __m128d lo = _mm256_castpd256_pd128(acc);
    __m128d hi = _mm256_extractf128_pd(acc, 1);
    __m128d s = _mm_add_pd(lo, hi);
    alignas(16) double out[2];
    _mm_store_pd(out, s);
    return {out[0], out[1]};
}

void axpy_avx2(std::size_t n, cplx alpha, const cplx* x, cplx* y) {
    const double* xp = reinterpret_cast<const double*>(x);
    double* yp = reinterpret_cast<double*>(y);
    __m256d a = _mm256_setr_pd(alpha.real(), alpha.imag(), alpha.real(), alpha.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d xv = _mm256_loadu_pd(xp + 2 * i);
        __m256d yv = _mm256_loadu_pd(yp + 2 * i);
        _mm256_storeu_pd(yp + 2 * i, _mm256_add_pd(yv, cmul(a, xv)));
    }
    for (; i < n; ++i) y[i] += alpha * x[i];
}

cplx dotu_avx2(std::size_t n, const cplx* x, const cplx* y) {
    const double* xp = reinterpret_cast<const double*>(x);
    const double* yp = reinterpret_cast<const double*>(y);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d xv = _mm256_loadu_pd(xp + 2 * i);
        __m256d yv = _mm256_loadu_pd(yp + 2 * i);
        acc = _mm256_add_pd(acc, cmul(xv, yv));
    }
    cplx out = reduce_pairs(acc);
    for (; i < n; ++i) out += x[i] * y[i];
    return out;
}

cplx dotc_avx2(std::size_t n, const cplx* x, const cplx* y) {
    const double* xp = reinterpret_cast<const double*>(x);
    const double* yp = reinterpret_cast<const double*>(y);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d xv = _mm256_loadu_pd(xp + 2 * i);
        __m256d yv = _mm256_loadu_pd(yp + 2 * i);
        acc = _mm256_add_pd(acc, cmulc(xv, yv));
    }
    cplx out = reduce_pairs(acc);
    for (; i < n; ++i) out += std::conj(x[i]) * y[i];
    return out;
}

double norm2sq_avx2(std::size_t n, const cplx* x) {
    const double* xp = reinterpret_cast<const double*>(x);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d xv = _mm256_loadu_pd(xp + 2 * i);
        acc = _mm256_fmadd_pd(xv, xv, acc);
    }
    __m128d lo = _mm256_castpd256_pd128(acc);
    __m128d hi = _mm256_extractf128_pd(acc, 1);
    __m128d s = _mm_add_pd(lo, hi);
    s = _mm_hadd_pd(s, s);
    double out = _mm_cvtsd_f64(s);
    for (; i < n; ++i) {
        out += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
    }
    return out;
}

void scal_avx2(std::size_t n, cplx alpha, cplx* x) {
    double* xp = reinterpret_cast<double*>(x);
    __m256d a = _mm256_setr_pd(alpha.real(), alpha.imag(), alpha.real(), alpha.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d xv = _mm256_loadu_pd(xp + 2 * i);
        _mm256_storeu_pd(xp + 2 * i, cmul(a, xv));
    }
    for (; i < n; ++i) x[i] *= alpha;
}

}  // namespace

const Ops* avx2_ops() {
    if (!__builtin_cpu_supports("avx2") || !__builtin_cpu_supports("fma")) return nullptr;
    static const Ops ops{axpy_avx2, dotu_avx2, dotc_avx2, norm2sq_avx2, scal_avx2, "avx2"};
    return &ops;
}

}  // namespace eeqt::kernels

#else  // no AVX2 in this build

namespace eeqt::kernels {
const Ops* avx2_ops() { return nullptr; }
}  // namespace eeqt::kernels

#endif
