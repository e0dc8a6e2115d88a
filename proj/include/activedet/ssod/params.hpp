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

#include <span>
#include <vector>

#include "activedet/kernels.hpp"

namespace activedet {

// Flat parameter vector shared by teacher and student. The layout is owned
// by the detector model.
struct ModelParams {
    std::vector<double> values;
};

// theta_t <- alpha * theta_t + (1 - alpha) * theta_s, element-wise.
// Throws on length mismatch.
ModelParams ema_update(const ModelParams& teacher, const ModelParams& student, double alpha);

// params <- params - lr * gradient. Throws on shape mismatch.
void sgd_step(ModelParams& params, std::span<const double> gradient, double lr);

}  // namespace activedet
