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

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "activedet/eval.hpp"

namespace activedet::toy {

// Generation parameters for the synthetic detection environment.
//
// A scene is a grid_size x grid_size grid of feature vectors. Feature layout
// per cell (feature_dim >= 7):
//   dim 0        object marker: +1 on object cells, -1 on background
//   dims 1..4    box regression target (dx, dy, log w, log h) of the object,
//                relative to the cell; 0 on background
//   dims 5..     unit-norm category prototype; 0 on background
// Gaussian noise of scale noise_sigma is added to every dimension, so both
// classification and localization are learnable but imperfect.
struct DatasetConfig {
    int grid_size = 8;
    int feature_dim = 16;
    int n_categories = 10;
    int max_objects = 6;
    double zipf_exponent = 1.0;  // category long-tail; 0 = uniform
    double noise_sigma = 0.3;
};

struct SyntheticScene {
    std::int64_t image_id = 0;
    int grid_size = 0;
    int feature_dim = 0;
    std::vector<double> features;  // (grid^2) * feature_dim, row-major cells
    std::vector<GtBox> objects;    // grid coordinates; at most one per cell

    std::span<const double> cell(int ix, int iy) const {
        const std::size_t offset =
            (static_cast<std::size_t>(iy) * grid_size + ix) * static_cast<std::size_t>(feature_dim);
        return {features.data() + offset, static_cast<std::size_t>(feature_dim)};
    }
    std::span<double> cell(int ix, int iy) {
        const std::size_t offset =
            (static_cast<std::size_t>(iy) * grid_size + ix) * static_cast<std::size_t>(feature_dim);
        return {features.data() + offset, static_cast<std::size_t>(feature_dim)};
    }
};

// Deterministic given (config, seed); image ids are 0..n_scenes-1. Category
// frequencies follow Zipf(zipf_exponent). Throws if n_scenes == 0.
std::vector<SyntheticScene> generate_dataset(std::size_t n_scenes, const DatasetConfig& config,
                                             std::uint64_t seed);

// The per-category prototype vectors used by generate_dataset for the same
// (config, seed); exposed so analytic oracle weights can be constructed.
std::vector<std::vector<double>> category_prototypes(const DatasetConfig& config, std::uint64_t seed);

// Zipf category weights (normalized), exposed for distribution tests.
std::vector<double> zipf_weights(int n_categories, double exponent);

// Horizontal mirror: grid cells reflected in x, boxes transformed, and the
// x-offset embedding (feature dim 1) negated so features stay consistent
// with the mirrored targets. Involution on boxes and features.
SyntheticScene mirror_scene(const SyntheticScene& scene);

enum class AugmentStrength { weak, strong };

struct AugmentParams {
    double weak_sigma = 0.05;
    double strong_sigma = 0.20;
    double mask_fraction = 0.15;  // strong only: CutOut analog, zeroes whole cells
};

// Seeded augmentation: a fair-coin mirror, additive feature noise, and (for
// strong) random cell masking. Masking never alters ground truth.
SyntheticScene augment(const SyntheticScene& scene, AugmentStrength strength,
                       const AugmentParams& params, std::uint64_t seed);

// Dataset snapshot as JSON (schema in the README) so a corpus can be
// replayed across runs and implementations.
std::string dataset_to_json(std::span<const SyntheticScene> scenes, const DatasetConfig& config);
std::vector<SyntheticScene> dataset_from_json(const std::string& text, DatasetConfig* config_out);

}  // namespace activedet::toy
