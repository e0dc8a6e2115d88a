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

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "activedet/geometry.hpp"

namespace activedet {

// One predicted box with its full class distribution.
// confidence == max(probs), category == argmax(probs), probs sum to 1 (1e-6).
struct Detection {
    BBox bbox;
    std::vector<double> probs;
    double confidence;
    int category;

    static Detection from_probs(BBox box, std::vector<double> probs) {
        if (probs.size() < 2) {
            throw std::invalid_argument("Detection: needs at least 2 category probabilities");
        }
        double sum = 0.0;
        double best = -1.0;
        int arg = 0;
        for (std::size_t k = 0; k < probs.size(); ++k) {
            const double p = probs[k];
            if (!(p >= 0.0) || !std::isfinite(p)) {
                throw std::invalid_argument("Detection: probabilities must be finite and >= 0");
            }
            sum += p;
            if (p > best) {
                best = p;
                arg = static_cast<int>(k);
            }
        }
        if (std::abs(sum - 1.0) > 1e-6) {
            throw std::invalid_argument("Detection: probabilities must sum to 1 within 1e-6");
        }
        return Detection{std::move(box), std::move(probs), best, arg};
    }
};

// All post-filter detections of one image. May be empty; every detection
// carries the same number of categories.
struct ImagePredictions {
    std::int64_t image_id = 0;
    std::vector<Detection> detections;
};

}  // namespace activedet
