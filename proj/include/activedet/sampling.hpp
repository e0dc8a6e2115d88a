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

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "activedet/detection.hpp"

namespace activedet {

// Per-image acquisition scores. difficulty is the mean class-distribution
// entropy over boxes, information the sum of per-box top confidences,
// diversity the count of distinct predicted categories. combined holds the
// L-p combination once the batch has been normalized.
struct SampleScore {
    std::int64_t image_id = 0;
    double difficulty = 0.0;
    double information = 0.0;
    double diversity = 0.0;
    double combined = 0.0;
};

// A pool's scores plus the per-metric maxima used for normalization.
struct ScoreBatch {
    std::vector<SampleScore> scores;
    std::array<double, 3> maxima{0.0, 0.0, 0.0};  // difficulty, information, diversity
};

enum class Strategy { difficulty, information, diversity, autonorm, random };

Strategy parse_strategy(const std::string& name);
std::string strategy_name(Strategy s);
// All five, in a fixed order (ablation sweeps).
std::span<const Strategy> all_strategies();

// Mean Shannon entropy (natural log) of the per-box class distributions;
// 0 for images with no detections. Range [0, log n_categories].
double difficulty_score(const ImagePredictions& preds);

// Sum of per-box maximum class probabilities; 0 when empty.
double information_score(const ImagePredictions& preds);

// Number of distinct predicted categories.
int diversity_score(const ImagePredictions& preds);

struct ScoreOptions {
    // When true, images with zero surviving detections are treated as
    // maximally uncertain after normalization (all three normalized metrics
    // set to 1) instead of scoring 0 and ranking last.
    bool empty_images_first = false;
};

// Raw metrics for every image; combined left at 0, maxima filled in.
ScoreBatch score_pool(std::span<const ImagePredictions> pool);

// Divides each metric column by its batch maximum. Columns whose maximum is 0
// become all zeros. Throws on an empty batch.
ScoreBatch normalize_batch(const ScoreBatch& batch);

// (s1^p + s2^p + s3^p)^(1/p); the p = 1 case is computed as the plain sum.
double combine_lp(double s1, double s2, double s3, double p);

// Fills `combined` per row from the (normalized) metric columns.
void apply_combination(ScoreBatch& batch, double p, const ScoreOptions& options = {});

// Deterministic top-n selection. Score strategies sort by the strategy's
// column descending with ties broken by ascending image_id; random draws a
// seeded uniform sample without replacement. Throws if n exceeds the batch.
std::vector<std::int64_t> rank_and_select(const ScoreBatch& batch, Strategy strategy, std::size_t n,
                                          std::uint64_t seed);

// Full ranking (rank_and_select with n = batch size).
std::vector<std::int64_t> rank_all(const ScoreBatch& batch, Strategy strategy, std::uint64_t seed);

// Score-table export/import: columns image_id,difficulty,information,
// diversity,combined. Floats fixed at 6 decimal places; rows in the given
// order. JSON mirrors the CSV as an array of objects.
std::string scores_to_csv(std::span<const SampleScore> rows);
std::string scores_to_json(std::span<const SampleScore> rows);
std::vector<SampleScore> scores_from_csv(const std::string& text);
std::vector<SampleScore> scores_from_json(const std::string& text);

}  // namespace activedet
