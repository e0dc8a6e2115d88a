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

#include "activedet/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "activedet/losses.hpp"
#include "activedet/rng.hpp"

namespace activedet {

namespace {

const std::array<Strategy, 5> kAllStrategies = {Strategy::difficulty, Strategy::information,
                                                Strategy::diversity, Strategy::autonorm, Strategy::random};

std::string format_fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

double metric_value(const SampleScore& s, Strategy strategy) {
    switch (strategy) {
        case Strategy::difficulty:
            return s.difficulty;
        case Strategy::information:
            return s.information;
        case Strategy::diversity:
            return s.diversity;
        case Strategy::autonorm:
            return s.combined;
        case Strategy::random:
            return 0.0;
    }
    return 0.0;
}

}  // namespace

Strategy parse_strategy(const std::string& name) {
    if (name == "difficulty") return Strategy::difficulty;
    if (name == "information") return Strategy::information;
    if (name == "diversity") return Strategy::diversity;
    if (name == "autonorm") return Strategy::autonorm;
    if (name == "random") return Strategy::random;
    throw std::invalid_argument("unknown strategy: " + name);
}

std::string strategy_name(Strategy s) {
    switch (s) {
        case Strategy::difficulty:
            return "difficulty";
        case Strategy::information:
            return "information";
        case Strategy::diversity:
            return "diversity";
        case Strategy::autonorm:
            return "autonorm";
        case Strategy::random:
            return "random";
    }
    return "unknown";
}

std::span<const Strategy> all_strategies() {
    return kAllStrategies;
}

double difficulty_score(const ImagePredictions& preds) {
    if (preds.detections.empty()) {
        return 0.0;
    }
    double total = 0.0;
    for (const Detection& d : preds.detections) {
        total += entropy(d.probs);
    }
    return total / static_cast<double>(preds.detections.size());
}

double information_score(const ImagePredictions& preds) {
    double total = 0.0;
    for (const Detection& d : preds.detections) {
        total += d.confidence;
    }
    return total;
}

int diversity_score(const ImagePredictions& preds) {
    std::set<int> categories;
    for (const Detection& d : preds.detections) {
        categories.insert(d.category);
    }
    return static_cast<int>(categories.size());
}

ScoreBatch score_pool(std::span<const ImagePredictions> pool) {
    ScoreBatch batch;
    batch.scores.reserve(pool.size());
    for (const ImagePredictions& preds : pool) {
        SampleScore s;
        s.image_id = preds.image_id;
        s.difficulty = difficulty_score(preds);
        s.information = information_score(preds);
        s.diversity = static_cast<double>(diversity_score(preds));
        batch.scores.push_back(s);
        batch.maxima[0] = std::max(batch.maxima[0], s.difficulty);
        batch.maxima[1] = std::max(batch.maxima[1], s.information);
        batch.maxima[2] = std::max(batch.maxima[2], s.diversity);
    }
    return batch;
}

ScoreBatch normalize_batch(const ScoreBatch& batch) {
    if (batch.scores.empty()) {
        throw std::invalid_argument("normalize_batch: empty batch");
    }
    ScoreBatch out = batch;
    for (SampleScore& s : out.scores) {
        s.difficulty = batch.maxima[0] > 0.0 ? s.difficulty / batch.maxima[0] : 0.0;
        s.information = batch.maxima[1] > 0.0 ? s.information / batch.maxima[1] : 0.0;
        s.diversity = batch.maxima[2] > 0.0 ? s.diversity / batch.maxima[2] : 0.0;
    }
    for (double& m : out.maxima) {
        m = m > 0.0 ? 1.0 : 0.0;
    }
    return out;
}

double combine_lp(double s1, double s2, double s3, double p) {
    if (p == 1.0) {
        return s1 + s2 + s3;
    }
    return std::pow(std::pow(s1, p) + std::pow(s2, p) + std::pow(s3, p), 1.0 / p);
}

void apply_combination(ScoreBatch& batch, double p, const ScoreOptions& options) {
    for (SampleScore& s : batch.scores) {
        if (options.empty_images_first && s.difficulty == 0.0 && s.information == 0.0 &&
            s.diversity == 0.0) {
            s.difficulty = 1.0;
            s.information = 1.0;
            s.diversity = 1.0;
        }
        s.combined = combine_lp(s.difficulty, s.information, s.diversity, p);
    }
}

std::vector<std::int64_t> rank_and_select(const ScoreBatch& batch, Strategy strategy, std::size_t n,
                                          std::uint64_t seed) {
    if (n > batch.scores.size()) {
        throw std::invalid_argument("rank_and_select: requested " + std::to_string(n) + " of " +
                                    std::to_string(batch.scores.size()) + " samples");
    }
    std::vector<std::int64_t> ids;
    ids.reserve(batch.scores.size());

    if (strategy == Strategy::random) {
        for (const SampleScore& s : batch.scores) {
            ids.push_back(s.image_id);
        }
        // Canonical start order, then a seeded partial Fisher-Yates.
        std::sort(ids.begin(), ids.end());
        Rng rng(seed);
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t j = i + static_cast<std::size_t>(rng.below(ids.size() - i));
            std::swap(ids[i], ids[j]);
        }
        ids.resize(n);
        return ids;
    }

    std::vector<const SampleScore*> rows;
    rows.reserve(batch.scores.size());
    for (const SampleScore& s : batch.scores) {
        rows.push_back(&s);
    }
    std::sort(rows.begin(), rows.end(), [&](const SampleScore* a, const SampleScore* b) {
        const double va = metric_value(*a, strategy);
        const double vb = metric_value(*b, strategy);
        if (va != vb) {
            return va > vb;
        }
        return a->image_id < b->image_id;
    });
    for (std::size_t i = 0; i < n; ++i) {
        ids.push_back(rows[i]->image_id);
    }
    return ids;
}

std::vector<std::int64_t> rank_all(const ScoreBatch& batch, Strategy strategy, std::uint64_t seed) {
    return rank_and_select(batch, strategy, batch.scores.size(), seed);
}

std::string scores_to_csv(std::span<const SampleScore> rows) {
    std::ostringstream out;
    out << "image_id,difficulty,information,diversity,combined\n";
    for (const SampleScore& s : rows) {
        out << s.image_id << ',' << format_fixed6(s.difficulty) << ',' << format_fixed6(s.information)
            << ',' << format_fixed6(s.diversity) << ',' << format_fixed6(s.combined) << '\n';
    }
    return out.str();
}

std::string scores_to_json(std::span<const SampleScore> rows) {
    std::ostringstream out;
    out << "[\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const SampleScore& s = rows[i];
        out << "  {\"image_id\": " << s.image_id << ", \"difficulty\": " << format_fixed6(s.difficulty)
            << ", \"information\": " << format_fixed6(s.information)
            << ", \"diversity\": " << format_fixed6(s.diversity)
            << ", \"combined\": " << format_fixed6(s.combined) << '}';
        if (i + 1 < rows.size()) {
            out << ',';
        }
        out << '\n';
    }
    out << "]\n";
    return out.str();
}

std::vector<SampleScore> scores_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) {
        throw std::invalid_argument("score CSV: empty input");
    }
    if (line != "image_id,difficulty,information,diversity,combined") {
        throw std::invalid_argument("score CSV: unexpected header: " + line);
    }
    std::vector<SampleScore> rows;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        std::istringstream fields(line);
        std::string field;
        std::array<std::string, 5> parts;
        std::size_t count = 0;
        while (std::getline(fields, field, ',')) {
            if (count >= parts.size()) {
                throw std::invalid_argument("score CSV: too many fields on line " + std::to_string(line_no));
            }
            parts[count++] = field;
        }
        if (count != parts.size()) {
            throw std::invalid_argument("score CSV: expected 5 fields on line " + std::to_string(line_no));
        }
        SampleScore s;
        try {
            s.image_id = std::stoll(parts[0]);
            s.difficulty = std::stod(parts[1]);
            s.information = std::stod(parts[2]);
            s.diversity = std::stod(parts[3]);
            s.combined = std::stod(parts[4]);
        } catch (const std::exception&) {
            throw std::invalid_argument("score CSV: malformed number on line " + std::to_string(line_no));
        }
        rows.push_back(s);
    }
    return rows;
}

std::vector<SampleScore> scores_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("score JSON: parse error: ") + e.what());
    }
    if (!doc.is_array()) {
        throw std::invalid_argument("score JSON: expected a top-level array");
    }
    std::vector<SampleScore> rows;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const auto& item = doc[i];
        if (!item.is_object()) {
            throw std::invalid_argument("score JSON: element " + std::to_string(i) + " is not an object");
        }
        try {
            SampleScore s;
            s.image_id = item.at("image_id").get<std::int64_t>();
            s.difficulty = item.at("difficulty").get<double>();
            s.information = item.at("information").get<double>();
            s.diversity = item.at("diversity").get<double>();
            s.combined = item.at("combined").get<double>();
            rows.push_back(s);
        } catch (const nlohmann::json::exception& e) {
            throw std::invalid_argument("score JSON: element " + std::to_string(i) + ": " + e.what());
        }
    }
    return rows;
}

}  // namespace activedet
