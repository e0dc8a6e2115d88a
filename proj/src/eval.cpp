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

#include "activedet/eval.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace activedet {

namespace {

struct FlatPrediction {
    double confidence;
    std::int64_t image_id;
    std::size_t index_in_image;
    const Detection* det;
};

// AP for one category at one IoU threshold, all-point interpolation.
double category_ap(const std::vector<FlatPrediction>& preds, const GroundTruth& truths, int category,
                   double threshold) {
    std::size_t n_gt = 0;
    for (const auto& [id, boxes] : truths) {
        for (const GtBox& g : boxes) {
            if (g.category == category) {
                ++n_gt;
            }
        }
    }
    if (n_gt == 0) {
        return 0.0;
    }

    // image_id -> matched flags over that image's gt boxes of this category.
    std::map<std::int64_t, std::vector<bool>> used;
    std::vector<bool> is_tp;
    is_tp.reserve(preds.size());
    for (const FlatPrediction& p : preds) {
        if (p.det->category != category) {
            continue;
        }
        const auto& gt_boxes = truths.at(p.image_id);
        auto& flags = used[p.image_id];
        flags.resize(gt_boxes.size(), false);
        double best_iou = 0.0;
        std::size_t best = gt_boxes.size();
        for (std::size_t j = 0; j < gt_boxes.size(); ++j) {
            if (gt_boxes[j].category != category || flags[j]) {
                continue;
            }
            const double v = iou(p.det->bbox, gt_boxes[j].box);
            if (v >= threshold && v > best_iou) {
                best_iou = v;
                best = j;
            }
        }
        if (best < gt_boxes.size()) {
            flags[best] = true;
            is_tp.push_back(true);
        } else {
            is_tp.push_back(false);
        }
    }
    if (is_tp.empty()) {
        return 0.0;
    }

    std::vector<double> precision(is_tp.size());
    std::vector<double> recall(is_tp.size());
    std::size_t tp = 0;
    for (std::size_t i = 0; i < is_tp.size(); ++i) {
        tp += is_tp[i] ? 1 : 0;
        precision[i] = static_cast<double>(tp) / static_cast<double>(i + 1);
        recall[i] = static_cast<double>(tp) / static_cast<double>(n_gt);
    }
    // Precision envelope from the right, then sum recall increments.
    for (std::size_t i = precision.size() - 1; i-- > 0;) {
        precision[i] = std::max(precision[i], precision[i + 1]);
    }
    double ap = 0.0;
    double prev_recall = 0.0;
    for (std::size_t i = 0; i < precision.size(); ++i) {
        ap += (recall[i] - prev_recall) * precision[i];
        prev_recall = recall[i];
    }
    return ap;
}

}  // namespace

double evaluate_ap(std::span<const ImagePredictions> preds, const GroundTruth& truths,
                   std::span<const double> iou_thresholds) {
    std::set<int> categories;
    for (const auto& [id, boxes] : truths) {
        for (const GtBox& g : boxes) {
            categories.insert(g.category);
        }
    }
    if (categories.empty() || iou_thresholds.empty()) {
        return 0.0;
    }

    std::vector<FlatPrediction> flat;
    for (const ImagePredictions& image : preds) {
        if (truths.find(image.image_id) == truths.end()) {
            throw std::invalid_argument("evaluate_ap: no ground truth for image_id " +
                                        std::to_string(image.image_id));
        }
        for (std::size_t j = 0; j < image.detections.size(); ++j) {
            flat.push_back({image.detections[j].confidence, image.image_id, j, &image.detections[j]});
        }
    }
    std::sort(flat.begin(), flat.end(), [](const FlatPrediction& a, const FlatPrediction& b) {
        if (a.confidence != b.confidence) {
            return a.confidence > b.confidence;
        }
        if (a.image_id != b.image_id) {
            return a.image_id < b.image_id;
        }
        return a.index_in_image < b.index_in_image;
    });

    double total = 0.0;
    for (const double threshold : iou_thresholds) {
        for (const int category : categories) {
            total += category_ap(flat, truths, category, threshold);
        }
    }
    return total / (static_cast<double>(iou_thresholds.size()) * static_cast<double>(categories.size()));
}

std::vector<double> coco_iou_thresholds() {
    std::vector<double> ts;
    for (int i = 0; i < 10; ++i) {
        ts.push_back(0.5 + 0.05 * i);
    }
    return ts;
}

}  // namespace activedet
