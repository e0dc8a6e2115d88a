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

#pragma once

#include <cstddef>
#include <string>

namespace activedet::kernels {

// Hot inner loops of the trainer: parameter blending (EMA), gradient
// accumulation / SGD updates (axpy) and the linear-head forward passes (dot).
//
// Each kernel has a scalar reference implementation and, on x86-64 hosts with
// AVX2, a vectorized variant selected once at startup. The element-wise
// kernels (axpy, ema_blend) are bit-identical across backends: every lane is
// an independent mul+add with the same rounding as the scalar loop. dot is a
// reduction; its vector variant accumulates in a different association order
// and may differ from the scalar result in the last ulps.

enum class Backend { scalar, avx2 };

// Backend chosen at startup (best supported). select_backend overrides it,
// returning false if the requested backend is not supported on this CPU.
Backend active_backend();
bool select_backend(Backend backend);
std::string backend_name(Backend backend);

// Dispatched entry points.
extern double (*dot)(const double* a, const double* b, std::size_t n);
// y[i] += a * x[i]
extern void (*axpy)(double a, const double* x, double* y, std::size_t n);
// dst[i] = alpha * dst[i] + (1 - alpha) * src[i]
extern void (*ema_blend)(double alpha, double* dst, const double* src, std::size_t n);

// Scalar reference implementations, always available (equivalence oracles).
double dot_scalar(const double* a, const double* b, std::size_t n);
void axpy_scalar(double a, const double* x, double* y, std::size_t n);
void ema_blend_scalar(double alpha, double* dst, const double* src, std::size_t n);

#if defined(__x86_64__)
bool cpu_supports_avx2();
double dot_avx2(const double* a, const double* b, std::size_t n);
void axpy_avx2(double a, const double* x, double* y, std::size_t n);
void ema_blend_avx2(double alpha, double* dst, const double* src, std::size_t n);
#endif

}  // namespace activedet::kernels
