// Copyright 2026 The qwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QWALK_EXPERIMENTS_H
#define QWALK_EXPERIMENTS_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qwalk/coin.h"
#include "qwalk/dynamics.h"
#include "qwalk/graph.h"
#include "qwalk/rotation.h"
#include "qwalk/shunts.h"
#include "qwalk/spectral.h"
#include "qwalk/walks.h"

namespace qwalk {

/// Trace and entropy of the average mixing matrix, plus the spectral flags.
struct MixingSummary {
    double trace = 0.0;
    double total_entropy = 0.0;
    double trace_lower_bound = 0.0;
    int num_groups = 0;
    bool walk_regular = false;
    bool uniform = false;
    bool simple_spectrum = false;
    std::vector<std::string> warnings;
};

MixingSummary summarize(const SpectralDecomposition &sd, const AverageMixingMatrix &mix);
MixingSummary summarize_walk(const TransitionUnitary &u);

struct EmbeddingRow {
    uint64_t index = 0;
    RotationSystem rotation;
    int genus = 0;
    MixingSummary mixing;
};

/// One row per rotation system, in enumeration order, for the arc-reversal
/// walk with the given coin. Work is spread over worker_count() threads.
std::vector<EmbeddingRow> run_embeddings(const Graph &g, const Coin &coin);
/// make_coin(kind, d) for the graph's degree d; throws PreconditionError on an irregular graph.
std::vector<EmbeddingRow> run_embeddings(const Graph &g, CoinKind kind);

/// Rows collapsed by (genus, trace rounded to 6 decimals).
struct TraceGroup {
    int genus = 0;
    std::string trace;  // 6 decimals
    int count = 0;
};

/// Sorted by genus ascending, then trace descending.
std::vector<TraceGroup> group_by_genus_and_trace(const std::vector<EmbeddingRow> &rows);

struct GenusRange {
    int genus = 0;
    double min_trace = 0.0;
    double max_trace = 0.0;
    int count = 0;
};

/// Checks that every trace at genus g exceeds every trace at the next genus present.
struct MonotonicityReport {
    std::vector<GenusRange> ranges;
    bool holds = true;
};

MonotonicityReport monotonicity_report(const std::vector<EmbeddingRow> &rows);

struct ShuntRow {
    int index = 0;
    ShuntDecomposition decomposition;
    std::string signature;
    bool symmetric = false;
    MixingSummary mixing;
};

/// One row per shunt decomposition, in enumeration order, for the shunt walk with the given coin.
std::vector<ShuntRow> run_shunts(const Graph &g, const Coin &coin);
std::vector<ShuntRow> run_shunts(const Graph &g, CoinKind kind);

struct SignatureGroup {
    std::string signature;
    bool symmetric = false;
    int count = 0;
    double min_trace = 0.0;
    double max_trace = 0.0;
    int representative = 0;  // row index of the first member
};

/// Grouped by (signature, symmetric), in order of first appearance.
std::vector<SignatureGroup> group_by_signature(const std::vector<ShuntRow> &rows);

struct SymmetricMaxCheck {
    bool has_symmetric = false;
    double max_trace = 0.0;
    double max_symmetric_trace = 0.0;
    /// True when no symmetric row exists or one attains the maximum (to tol).
    bool holds = true;
};

SymmetricMaxCheck symmetric_max_check(const std::vector<ShuntRow> &rows, double tol = 1e-9);

struct HittingSummary {
    std::optional<int> one_shot;
    std::optional<int> concurrent;
    ExpectedHitting expected;
    int k_max = 0;
};

HittingSummary hitting_summary(
    const TransitionUnitary &u, int x, int y, double eps, std::optional<int> k_max = std::nullopt,
    double tail_tol = 1e-6);

struct SzegedyReport {
    int num_vertices = 0;
    int dim = 0;
    int support = 0;
    double unitarity_error = 0.0;
    ReflectionOrder order = ReflectionOrder::kR2R1;
    Arc from;
    Arc to;
    double eps = 0.0;
    MixingSummary mixing;
    HittingSummary hitting;
};

/// The two-reflection walk of the simple random walk on g, with hitting times
/// from state (from) to state (to). Throws ParameterError if either pair is not an edge of g.
SzegedyReport run_szegedy(
    const Graph &g, Arc from, Arc to, double eps, ReflectionOrder order = ReflectionOrder::kR2R1,
    std::optional<int> k_max = std::nullopt);

enum class WalkModel { kArcReversal, kShunt, kSzegedy };

WalkModel parse_walk_model(std::string_view name);
std::string walk_model_name(WalkModel model);

/// A single walk selected for the mix and hit commands. For the coined
/// models the structure is either the enumeration index or explicit text
/// (a rotation system or a shunt decomposition); with neither, index 0 is used.
struct WalkSelection {
    WalkModel model = WalkModel::kArcReversal;
    CoinKind coin = CoinKind::kCirculant7;
    std::optional<uint64_t> structure_index;
    std::optional<std::string> structure_text;
};

struct SelectedWalk {
    TransitionUnitary unitary;
    std::string structure;  // human-readable form of what was built
    uint64_t structure_id = 0;
};

SelectedWalk build_selected_walk(const Graph &g, const WalkSelection &sel);

}  // namespace qwalk

#endif
