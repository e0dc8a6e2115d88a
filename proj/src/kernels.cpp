// Copyright 2026 The activedet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not use this file except in compliance
// with the License. You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software distributed under the License
// is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express
// or implied. See the License for the specific language governing permissions and limitations under the License.

#include "activedet/kernels.hpp"

namespace activedet::kernels {

double (*dot)(const double*, const double*, std::size_t) = dot_scalar;
void (*axpy)(double, const double*, double*, std::size_t) = axpy_scalar;
void (*ema_blend)(double, double*, const double*, std::size_t) = ema_blend_scalar;

namespace {

Backend g_active = Backend::scalar;

bool backend_supported(Backend backend) {
    switch (backend) {
        case Backend::scalar:
            return true;
        case Backend::avx2:
#if defined(__x86_64__)
            return cpu_supports_avx2();
#else
            return false;
#endif
    }
    return false;
}

void install(Backend backend) {
    switch (backend) {
        case Backend::scalar:
            dot = dot_scalar;
            axpy = axpy_scalar;
            ema_blend = ema_blend_scalar;
            break;
        case Backend::avx2:
#if defined(__x86_64__)
            dot = dot_avx2;
            axpy = axpy_avx2;
            ema_blend = ema_blend_avx2;
#endif
            break;
    }
    g_active = backend;
}

const int g_init = []() {
    install(backend_supported(Backend::avx2) ? Backend::avx2 : Backend::scalar);
    return 0;
}();

}  // namespace

#if defined(__x86_64__)
bool cpu_supports_avx2() {
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}
#endif

Backend active_backend() {
    return g_active;
}

bool select_backend(Backend backend) {
    if (!backend_supported(backend)) {
        return false;
    }
    install(backend);
    return true;
}

std::string backend_name(Backend backend) {
    switch (backend) {
        case Backend::scalar:
            return "scalar";
        case Backend::avx2:
            return "avx2";
    }
    return "unknown";
}

}  // namespace activedet::kernels
