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

#include "activedet/toy/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "activedet/rng.hpp"

namespace activedet::toy {

namespace {

constexpr std::uint64_t kPrototypeStream = 0xA11CE5;
constexpr std::uint64_t kSceneStreamBase = 0x5CE4E000000000ULL;

constexpr int kBoxEmbedOffset = 1;  // dims 1..4
constexpr int kProtoOffset = 5;

void validate_config(const DatasetConfig& cfg) {
    if (cfg.grid_size < 2 || cfg.feature_dim < kProtoOffset + 2 || cfg.n_categories < 2 ||
        cfg.max_objects < 0 || cfg.max_objects > cfg.grid_size * cfg.grid_size ||
        cfg.zipf_exponent < 0.0 || cfg.noise_sigma < 0.0) {
        throw std::invalid_argument("DatasetConfig: invalid generation parameters");
    }
}

int sample_zipf(Rng& rng, const std::vector<double>& cumulative) {
    const double u = rng.uniform();
    for (std::size_t k = 0; k < cumulative.size(); ++k) {
        if (u < cumulative[k]) {
            return static_cast<int>(k);
        }
    }
    return static_cast<int>(cumulative.size()) - 1;
}

}  // namespace

std::vector<double> zipf_weights(int n_categories, double exponent) {
    std::vector<double> w(n_categories);
    double sum = 0.0;
    for (int k = 0; k < n_categories; ++k) {
        w[k] = std::pow(static_cast<double>(k + 1), -exponent);
        sum += w[k];
    }
    for (double& v : w) {
        v /= sum;
    }
    return w;
}

std::vector<std::vector<double>> category_prototypes(const DatasetConfig& config, std::uint64_t seed) {
    validate_config(config);
    const int proto_dim = config.feature_dim - kProtoOffset;
    Rng rng(derive_seed(seed, kPrototypeStream));
    std::vector<std::vector<double>> protos(config.n_categories);
    for (auto& p : protos) {
        p.resize(proto_dim);
        double norm2 = 0.0;
        for (double& v : p) {
            v = rng.normal();
            norm2 += v * v;
        }
        const double inv = 1.0 / std::sqrt(norm2);
        for (double& v : p) {
            v *= inv;
        }
    }
    return protos;
}

std::vector<SyntheticScene> generate_dataset(std::size_t n_scenes, const DatasetConfig& config,
                                             std::uint64_t seed) {
    validate_config(config);
    if (n_scenes == 0) {
        throw std::invalid_argument("generate_dataset: n_scenes must be >= 1");
    }
    const auto protos = category_prototypes(config, seed);
    const auto weights = zipf_weights(config.n_categories, config.zipf_exponent);
    std::vector<double> cumulative(weights.size());
    std::partial_sum(weights.begin(), weights.end(), cumulative.begin());

    const int g = config.grid_size;
    const int d = config.feature_dim;
    const std::size_t n_cells = static_cast<std::size_t>(g) * g;

    std::vector<SyntheticScene> scenes;
    scenes.reserve(n_scenes);
    for (std::size_t i = 0; i < n_scenes; ++i) {
        Rng rng(derive_seed(seed, kSceneStreamBase + i));
        SyntheticScene scene;
        scene.image_id = static_cast<std::int64_t>(i);
        scene.grid_size = g;
        scene.feature_dim = d;
        scene.features.assign(n_cells * d, 0.0);
        for (std::size_t c = 0; c < n_cells; ++c) {
            scene.features[c * d] = -1.0;  // background marker
        }

        const int n_objects = static_cast<int>(rng.below(config.max_objects + 1));
        std::vector<int> cells(n_cells);
        std::iota(cells.begin(), cells.end(), 0);
        for (int j = 0; j < n_objects; ++j) {
            const std::size_t pick = j + rng.below(n_cells - j);
            std::swap(cells[j], cells[pick]);
        }

        for (int j = 0; j < n_objects; ++j) {
            const int ix = cells[j] % g;
            const int iy = cells[j] / g;
            const int category = sample_zipf(rng, cumulative);
            const double cx = ix + 0.5 + rng.uniform(-0.35, 0.35);
            const double cy = iy + 0.5 + rng.uniform(-0.35, 0.35);
            const double w = std::exp(rng.uniform(std::log(0.7), std::log(2.0)));
            const double h = std::exp(rng.uniform(std::log(0.7), std::log(2.0)));
            const double x0 = std::max(0.0, cx - 0.5 * w);
            const double y0 = std::max(0.0, cy - 0.5 * h);
            const double x1 = std::min(static_cast<double>(g), cx + 0.5 * w);
            const double y1 = std::min(static_cast<double>(g), cy + 0.5 * h);
            const BBox box(x0, y0, x1, y1);
            scene.objects.push_back({category, box});

            auto f = scene.cell(ix, iy);
            f[0] = 1.0;
            f[kBoxEmbedOffset + 0] = box.center_x() - (ix + 0.5);
            f[kBoxEmbedOffset + 1] = box.center_y() - (iy + 0.5);
            f[kBoxEmbedOffset + 2] = std::log(box.width());
            f[kBoxEmbedOffset + 3] = std::log(box.height());
            for (int k = 0; k < d - kProtoOffset; ++k) {
                f[kProtoOffset + k] = protos[category][k];
            }
        }

        if (config.noise_sigma > 0.0) {
            for (double& v : scene.features) {
                v += config.noise_sigma * rng.normal();
            }
        }
        scenes.push_back(std::move(scene));
    }
    return scenes;
}

SyntheticScene mirror_scene(const SyntheticScene& scene) {
    const int g = scene.grid_size;
    const int d = scene.feature_dim;
    SyntheticScene out = scene;
    for (int iy = 0; iy < g; ++iy) {
        for (int ix = 0; ix < g; ++ix) {
            auto src = scene.cell(ix, iy);
            auto dst = out.cell(g - 1 - ix, iy);
            for (int k = 0; k < d; ++k) {
                dst[k] = src[k];
            }
            dst[kBoxEmbedOffset] = -dst[kBoxEmbedOffset];  // x offset flips sign
        }
    }
    out.objects.clear();
    for (const GtBox& obj : scene.objects) {
        out.objects.push_back(
            {obj.category, BBox(g - obj.box.x_max, obj.box.y_min, g - obj.box.x_min, obj.box.y_max)});
    }
    return out;
}

SyntheticScene augment(const SyntheticScene& scene, AugmentStrength strength,
                       const AugmentParams& params, std::uint64_t seed) {
    Rng rng(seed);
    SyntheticScene out = rng.bernoulli(0.5) ? mirror_scene(scene) : scene;
    const double sigma = strength == AugmentStrength::weak ? params.weak_sigma : params.strong_sigma;
    if (sigma > 0.0) {
        for (double& v : out.features) {
            v += sigma * rng.normal();
        }
    }
    if (strength == AugmentStrength::strong && params.mask_fraction > 0.0) {
        const int g = out.grid_size;
        for (int iy = 0; iy < g; ++iy) {
            for (int ix = 0; ix < g; ++ix) {
                if (rng.bernoulli(params.mask_fraction)) {
                    auto f = out.cell(ix, iy);
                    std::fill(f.begin(), f.end(), 0.0);
                }
            }
        }
    }
    return out;
}

std::string dataset_to_json(std::span<const SyntheticScene> scenes, const DatasetConfig& config) {
    nlohmann::ordered_json doc;
    doc["grid_size"] = config.grid_size;
    doc["feature_dim"] = config.feature_dim;
    doc["n_categories"] = config.n_categories;
    doc["scenes"] = nlohmann::ordered_json::array();
    for (const SyntheticScene& scene : scenes) {
        nlohmann::ordered_json s;
        s["image_id"] = scene.image_id;
        s["features"] = scene.features;
        s["objects"] = nlohmann::ordered_json::array();
        for (const GtBox& obj : scene.objects) {
            s["objects"].push_back({{"category", obj.category},
                                    {"bbox", {obj.box.x_min, obj.box.y_min, obj.box.x_max, obj.box.y_max}}});
        }
        doc["scenes"].push_back(std::move(s));
    }
    return doc.dump();
}

std::vector<SyntheticScene> dataset_from_json(const std::string& text, DatasetConfig* config_out) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("dataset JSON: parse error: ") + e.what());
    }
    DatasetConfig cfg;
    try {
        cfg.grid_size = doc.at("grid_size").get<int>();
        cfg.feature_dim = doc.at("feature_dim").get<int>();
        cfg.n_categories = doc.at("n_categories").get<int>();
        std::vector<SyntheticScene> scenes;
        for (const auto& s : doc.at("scenes")) {
            SyntheticScene scene;
            scene.image_id = s.at("image_id").get<std::int64_t>();
            scene.grid_size = cfg.grid_size;
            scene.feature_dim = cfg.feature_dim;
            scene.features = s.at("features").get<std::vector<double>>();
            const std::size_t expect = static_cast<std::size_t>(cfg.grid_size) * cfg.grid_size *
                                       static_cast<std::size_t>(cfg.feature_dim);
            if (scene.features.size() != expect) {
                throw std::invalid_argument("dataset JSON: feature length mismatch for image " +
                                            std::to_string(scene.image_id));
            }
            for (const auto& o : s.at("objects")) {
                const auto& b = o.at("bbox");
                scene.objects.push_back({o.at("category").get<int>(),
                                         BBox(b.at(0).get<double>(), b.at(1).get<double>(),
                                              b.at(2).get<double>(), b.at(3).get<double>())});
            }
            scenes.push_back(std::move(scene));
        }
        if (config_out != nullptr) {
            *config_out = cfg;
        }
        return scenes;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("dataset JSON: ") + e.what());
    }
}

}  // namespace activedet::toy
