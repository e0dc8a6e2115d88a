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

#include <algorithm>
#include <cmath>
#include <span>

namespace activedet {

// 0.5 x^2 inside |x| < 1, |x| - 0.5 outside. Even, continuous, C1 at |x| = 1.
inline double smooth_l1(double x) {
    const double ax = std::abs(x);
    return ax < 1.0 ? 0.5 * x * x : ax - 0.5;
}

// d/dx smooth_l1(x) = clamp(x, -1, 1).
inline double smooth_l1_grad(double x) {
    return std::clamp(x, -1.0, 1.0);
}

inline double softplus(double x) {
    return x > 0.0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x));
}

inline double sigmoid(double x) {
    return x >= 0.0 ? 1.0 / (1.0 + std::exp(-x)) : std::exp(x) / (1.0 + std::exp(x));
}

// Binary cross-entropy of sigmoid(logit) against target y in {0, 1},
// computed in logit space: softplus(z) - y z. Exact 0 in saturation.
inline double bce_with_logit(double logit, double target) {
    return softplus(logit) - target * logit;
}

inline double logsumexp(std::span<const double> xs) {
    double m = xs[0];
    for (const double x : xs) {
        m = std::max(m, x);
    }
    double acc = 0.0;
    for (const double x : xs) {
        acc += std::exp(x - m);
    }
    return m + std::log(acc);
}

// Softmax cross-entropy against class k, in logit space.
inline double cross_entropy_logits(std::span<const double> logits, int k) {
    return logsumexp(logits) - logits[static_cast<std::size_t>(k)];
}

// Shannon entropy, natural log; p log p taken as 0 at p = 0.
inline double entropy(std::span<const double> probs) {
    double h = 0.0;
    for (const double p : probs) {
        if (p > 0.0) {
            h -= p * std::log(p);
        }
    }
    return h;
}

}  // namespace activedet
