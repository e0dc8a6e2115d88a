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

#include "activedet/ssod/params.hpp"

#include <stdexcept>

namespace activedet {

ModelParams ema_update(const ModelParams& teacher, const ModelParams& student, double alpha) {
    if (teacher.values.size() != student.values.size()) {
        throw std::invalid_argument("ema_update: parameter length mismatch");
    }
    if (!(alpha >= 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("ema_update: alpha must be in [0, 1)");
    }
    ModelParams out = teacher;
    kernels::ema_blend(alpha, out.values.data(), student.values.data(), out.values.size());
    return out;
}

void sgd_step(ModelParams& params, std::span<const double> gradient, double lr) {
    if (params.values.size() != gradient.size()) {
        throw std::invalid_argument("sgd_step: gradient shape mismatch");
    }
    if (!(lr > 0.0)) {
        throw std::invalid_argument("sgd_step: lr must be positive");
    }
    kernels::axpy(-lr, gradient.data(), params.values.data(), params.values.size());
}

}  // namespace activedet
