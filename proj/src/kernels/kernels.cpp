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

#include <cstdlib>
#include <string>

#include "eeqt/errors.hpp"

namespace eeqt::kernels {
namespace {

const Ops* g_active = nullptr;
Backend g_backend = Backend::scalar;

void select_initial() {
    const char* env = std::getenv("EEQT_KERNELS");
    std::string want = env ? env : "auto";
    if (want == "scalar") {
        g_active = &scalar_ops();
        g_backend = Backend::scalar;
        return;
    }
    const Ops* avx2 = avx2_ops();
    if (want == "avx2") {
        if (!avx2) throw NumericalError("EEQT_KERNELS=avx2 but AVX2 kernels are unavailable");
        g_active = avx2;
        g_backend = Backend::avx2;
        return;
    }
    // auto (and anything unrecognized): best available
    if (avx2) {
        g_active = avx2;
        g_backend = Backend::avx2;
    } else {
        g_active = &scalar_ops();
        g_backend = Backend::scalar;
    }
}

}  // namespace

const Ops& active() {
    if (!g_active) select_initial();
    return *g_active;
}

Backend active_backend() {
    if (!g_active) select_initial();
    return g_backend;
}

void force_backend(Backend backend) {
    if (backend == Backend::scalar) {
        g_active = &scalar_ops();
        g_backend = backend;
        return;
    }
    const Ops* avx2 = avx2_ops();
    if (!avx2) throw NumericalError("AVX2 kernels unavailable on this build/CPU");
    g_active = avx2;
    g_backend = backend;
}

}  // namespace eeqt::kernels
