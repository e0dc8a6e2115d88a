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
#include <map>
#include <span>
#include <vector>

#include "activedet/detection.hpp"

namespace activedet {

struct GtBox {
    int category;
    BBox box;
};

// image_id -> ground-truth boxes. An entry must exist (possibly empty) for
// every predicted image.
using GroundTruth = std::map<std::int64_t, std::vector<GtBox>>;

// Average precision, mean over iou_thresholds and over the categories present
// in the ground truth. Per category/threshold: predictions are visited in
// descending confidence and greedily matched to the unmatched ground-truth
// box of highest IoU (>= threshold) in the same image; the PR curve is
// integrated with all-point interpolation.
double evaluate_ap(std::span<const ImagePredictions> preds, const GroundTruth& truths,
                   std::span<const double> iou_thresholds);

// The ten thresholds 0.50, 0.55, ..., 0.95.
std::vector<double> coco_iou_thresholds();

}  // namespace activedet
