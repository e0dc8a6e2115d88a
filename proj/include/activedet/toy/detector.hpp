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

#include <optional>
#include <span>
#include <vector>

#include "activedet/detection.hpp"
#include "activedet/ssod/params.hpp"
#include "activedet/ssod/pseudo_labels.hpp"
#include "activedet/toy/synthetic.hpp"

namespace activedet::toy {

// Minimal two-stage detector over the synthetic grid. All three heads are
// linear in the cell features and shared across cells:
//   stage one   objectness logit  w_obj . f + b_obj   (proposal gate)
//   stage two   class logits      W_cls f + b_cls     (softmax)
//   regression  box offsets       W_box f + b_box     (dx, dy, log w, log h
//                                                      relative to the cell)
//
// Parameter layout inside the flat ModelParams vector, sizes for feature
// dim D and N categories (total (D+1) * (N+5)):
//   [0, D)                      w_obj
//   [D]                         b_obj
//   [D+1, D+1+N*D)              W_cls, row-major
//   [.., +N)                    b_cls
//   [.., +4*D)                  W_box, row-major
//   [.., +4)                    b_box
struct DetectorShape {
    int grid_size = 8;
    int feature_dim = 16;
    int n_categories = 10;

    std::size_t param_count() const {
        return static_cast<std::size_t>(feature_dim + 1) * (n_categories + 5);
    }
};

struct SupervisedLossTerms {
    double total = 0.0;
    double cls = 0.0;  // both classification stages
    double loc = 0.0;
};

// Per-cell assignment to pseudo-boxes: index into the pseudo list, or -1 for
// background. One entry per grid cell, row-major.
using CellMatching = std::vector<int>;

class ToyDetector {
public:
    explicit ToyDetector(DetectorShape shape);

    const DetectorShape& shape() const { return shape_; }
    ModelParams zero_params() const;

    // Raw inference: cells whose objectness gate passes 0.5 emit a Detection
    // with full softmax probabilities and a decoded box. NMS and confidence
    // filtering are the caller's business.
    ImagePredictions detect(const ModelParams& params, const SyntheticScene& scene) const;

    // Decoded box of every cell (the proposal set used for matching).
    std::vector<BBox> decode_boxes(const ModelParams& params, const SyntheticScene& scene) const;

    // Mean over the batch of objectness BCE (all cells), class cross-entropy
    // and smooth-L1 box regression (cells holding a ground-truth center).
    // When grad != nullptr, adds grad_weight * dL/dparams into it. Throws on
    // an empty batch.
    SupervisedLossTerms supervised_loss(const ModelParams& params,
                                        std::span<const SyntheticScene> batch, double grad_weight = 0.0,
                                        std::vector<double>* grad = nullptr) const;

    // Proposal-to-pseudo-box assignment: each cell's decoded box is matched
    // to the pseudo-box of highest IoU, floor 0.5; unmatched cells are
    // background.
    CellMatching match_cells(const ModelParams& student, const SyntheticScene& scene,
                             const PseudoLabels& pseudo) const;

    // Mean over the batch of the two classification stages against the given
    // matching: objectness BCE toward matched/unmatched and class
    // cross-entropy at matched cells. Carries no box-regression term; images
    // with an empty pseudo set contribute zero.
    double unsupervised_loss(const ModelParams& params, std::span<const SyntheticScene> batch,
                             std::span<const PseudoLabels> pseudo, std::span<const CellMatching> matching,
                             double grad_weight = 0.0, std::vector<double>* grad = nullptr) const;

    // Analytic weights built from the generator prototypes: correct gating,
    // near-one-hot class probabilities and exact box recovery on noise-free
    // scenes.
    ModelParams oracle_params(const std::vector<std::vector<double>>& prototypes,
                              double logit_scale = 25.0) const;

private:
    struct HeadView;
    HeadView view(const ModelParams& params) const;
    struct GradView;
    GradView grad_view(std::vector<double>& grad) const;
    void check_params(const ModelParams& params) const;
    void check_scene(const SyntheticScene& scene) const;

    DetectorShape shape_;
};

// Target encoding of a ground-truth box relative to cell (ix, iy).
std::array<double, 4> encode_box(const BBox& box, int ix, int iy);
// Inverse of encode_box; log-sizes clamped to [-6, 6] before exponentiation.
BBox decode_box(const std::array<double, 4>& t, int ix, int iy);
// Cell holding the box center (clamped to the grid).
std::pair<int, int> center_cell(const BBox& box, int grid_size);

}  // namespace activedet::toy
