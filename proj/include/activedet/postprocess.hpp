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

#include "activedet/detection.hpp"

namespace activedet {

// Greedy class-wise non-maximum suppression. Candidates are visited in
// descending confidence (ties keep input order); a detection is kept iff no
// already-kept detection of the same category overlaps it with
// iou > iou_threshold. Output is in visit order.
std::vector<Detection> nms(std::span<const Detection> dets, double iou_threshold);

// Keeps detections with confidence >= tau (inclusive), preserving order.
std::vector<Detection> filter_by_confidence(std::span<const Detection> dets, double tau);

}  // namespace activedet
