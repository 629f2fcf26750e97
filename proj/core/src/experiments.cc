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

#include "qwalk/experiments.h"

#include <algorithm>
#include <cstdio>
#include <map>

#include "qwalk/errors.h"
#include "qwalk/parallel.h"

namespace qwalk {

namespace {

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

int regular_degree_or_throw(const Graph &g) {
    int d = g.regular_degree();
    if (d <= 0) {
        throw PreconditionError("this experiment needs a regular graph without isolated vertices");
    }
    return d;
}

}  // namespace

MixingSummary summarize(const SpectralDecomposition &sd, const AverageMixingMatrix &mix) {
    MixingSummary s;
    s.trace = mix.trace;
    s.total_entropy = mix.total_entropy;
    s.trace_lower_bound = trace_lower_bound(sd);
    s.num_groups = static_cast<int>(sd.groups.size());
    s.walk_regular = mix.walk_regular;
    s.uniform = mix.uniform;
    s.simple_spectrum = mix.simple_spectrum;
    s.warnings = sd.warnings;
    return s;
}

MixingSummary summarize_walk(const TransitionUnitary &u) {
    auto sd = spectral_decomposition(u);
    return summarize(sd, average_mixing_matrix(sd));
}

std::vector<EmbeddingRow> run_embeddings(const Graph &g, const Coin &coin) {
    require_rotation_compatible(coin);
    std::vector<RotationSystem> systems;
    auto stream = enumerate_rotation_systems(g);
    systems.reserve(stream.size());
    RotationSystem rot;
    while (stream.next(rot)) {
        systems.push_back(rot);
    }
    std::vector<uint64_t> ids(systems.size());
    for (size_t i = 0; i < ids.size(); i++) {
        ids[i] = i;
    }
    return parallel_map(ids, [&](uint64_t i) {
        EmbeddingRow row;
        row.index = i;
        row.rotation = systems[i];
        row.genus = make_embedding(g, systems[i]).genus;
        row.mixing = summarize_walk(arc_reversal_from_rotation(g, systems[i], coin));
        return row;
    });
}

std::vector<EmbeddingRow> run_embeddings(const Graph &g, CoinKind kind) {
    return run_embeddings(g, make_coin(kind, regular_degree_or_throw(g)));
}

std::vector<TraceGroup> group_by_genus_and_trace(const std::vector<EmbeddingRow> &rows) {
    std::map<std::pair<int, std::string>, int> counts;
    for (const auto &r : rows) {
        counts[{r.genus, fixed6(r.mixing.trace)}]++;
    }
    std::vector<TraceGroup> out;
    for (const auto &[key, count] : counts) {
        out.push_back({key.first, key.second, count});
    }
    std::sort(out.begin(), out.end(), [](const TraceGroup &a, const TraceGroup &b) {
        if (a.genus != b.genus) {
            return a.genus < b.genus;
        }
        return std::stod(a.trace) > std::stod(b.trace);
    });
    return out;
}

MonotonicityReport monotonicity_report(const std::vector<EmbeddingRow> &rows) {
    std::map<int, GenusRange> by_genus;
    for (const auto &r : rows) {
        auto it = by_genus.find(r.genus);
        if (it == by_genus.end()) {
            by_genus[r.genus] = {r.genus, r.mixing.trace, r.mixing.trace, 1};
            continue;
        }
        it->second.min_trace = std::min(it->second.min_trace, r.mixing.trace);
        it->second.max_trace = std::max(it->second.max_trace, r.mixing.trace);
        it->second.count++;
    }
    MonotonicityReport report;
    for (const auto &[genus, range] : by_genus) {
        if (!report.ranges.empty() && !(report.ranges.back().min_trace > range.max_trace)) {
            report.holds = false;
        }
        report.ranges.push_back(range);
    }
    return report;
}

std::vector<ShuntRow> run_shunts(const Graph &g, const Coin &coin) {
    auto decs = enumerate_shunt_decompositions(g);
    std::vector<int> ids(decs.size());
    for (size_t i = 0; i < ids.size(); i++) {
        ids[i] = static_cast<int>(i);
    }
    return parallel_map(ids, [&](int i) {
        ShuntRow row;
        row.index = i;
        row.decomposition = decs[i];
        row.signature = cycle_signature(decs[i]);
        row.symmetric = is_symmetric(decs[i]);
        row.mixing = summarize_walk(shunt_unitary(g, decs[i], coin));
        return row;
    });
}

std::vector<ShuntRow> run_shunts(const Graph &g, CoinKind kind) {
    return run_shunts(g, make_coin(kind, regular_degree_or_throw(g)));
}

std::vector<SignatureGroup> group_by_signature(const std::vector<ShuntRow> &rows) {
    std::vector<SignatureGroup> out;
    for (const auto &r : rows) {
        auto it = std::find_if(out.begin(), out.end(), [&](const SignatureGroup &sg) {
            return sg.signature == r.signature && sg.symmetric == r.symmetric;
        });
        if (it == out.end()) {
            out.push_back({r.signature, r.symmetric, 1, r.mixing.trace, r.mixing.trace, r.index});
            continue;
        }
        it->count++;
        it->min_trace = std::min(it->min_trace, r.mixing.trace);
        it->max_trace = std::max(it->max_trace, r.mixing.trace);
    }
    return out;
}

SymmetricMaxCheck symmetric_max_check(const std::vector<ShuntRow> &rows, double tol) {
    SymmetricMaxCheck c;
    bool first = true;
    for (const auto &r : rows) {
        c.max_trace = first ? r.mixing.trace : std::max(c.max_trace, r.mixing.trace);
        first = false;
        if (r.symmetric) {
            c.max_symmetric_trace = c.has_symmetric ? std::max(c.max_symmetric_trace, r.mixing.trace) : r.mixing.trace;
            c.has_symmetric = true;
        }
    }
    c.holds = !c.has_symmetric || c.max_symmetric_trace >= c.max_trace - tol;
    return c;
}

HittingSummary hitting_summary(
    const TransitionUnitary &u, int x, int y, double eps, std::optional<int> k_max, double tail_tol) {
    int l = u.dim();
    if (x < 0 || x >= l || y < 0 || y >= l) {
        throw ParameterError("state index out of range");
    }
    Eigen::VectorXcd ex = Eigen::VectorXcd::Unit(l, x);
    Eigen::VectorXcd ey = Eigen::VectorXcd::Unit(l, y);
    HittingSummary h;
    h.k_max = k_max.value_or(default_k_max(l));
    h.one_shot = one_shot_hitting(u.matrix, ex, ey, eps, h.k_max);
    h.concurrent = concurrent_hitting(u.matrix, ex, ey, eps, h.k_max);
    h.expected = expected_hitting(u.matrix, ex, ey, tail_tol, h.k_max);
    return h;
}

SzegedyReport run_szegedy(
    const Graph &g, Arc from, Arc to, double eps, ReflectionOrder order, std::optional<int> k_max) {
    for (Arc a : {from, to}) {
        if (a.tail < 0 || a.tail >= g.num_vertices() || a.head < 0 || a.head >= g.num_vertices() ||
            !g.has_edge(a.tail, a.head)) {
            throw ParameterError(
                "(" + std::to_string(a.tail) + "," + std::to_string(a.head) + ") is not an arc of the graph");
        }
    }
    auto mc = MarkovChain::simple_random_walk(g);
    auto u = szegedy_unitary(mc, order);
    SzegedyReport r;
    r.num_vertices = g.num_vertices();
    r.dim = u.dim();
    r.support = static_cast<int>(szegedy_support(mc).size());
    r.unitarity_error = unitarity_error(u.matrix);
    r.order = order;
    r.from = from;
    r.to = to;
    r.eps = eps;
    r.mixing = summarize_walk(u);
    r.hitting = hitting_summary(u, u.state_of(from.tail, from.head), u.state_of(to.tail, to.head), eps, k_max);
    return r;
}

WalkModel parse_walk_model(std::string_view name) {
    if (name == "arc-reversal" || name == "embeddings") {
        return WalkModel::kArcReversal;
    }
    if (name == "shunt" || name == "shunts") {
        return WalkModel::kShunt;
    }
    if (name == "szegedy") {
        return WalkModel::kSzegedy;
    }
    throw ParameterError("unknown walk model '" + std::string(name) + "'");
}

std::string walk_model_name(WalkModel model) {
    switch (model) {
        case WalkModel::kArcReversal:
            return "arc-reversal";
        case WalkModel::kShunt:
            return "shunt";
        case WalkModel::kSzegedy:
            return "szegedy";
    }
    return "";
}

SelectedWalk build_selected_walk(const Graph &g, const WalkSelection &sel) {
    SelectedWalk out;
    if (sel.model == WalkModel::kSzegedy) {
        out.unitary = szegedy_unitary(MarkovChain::simple_random_walk(g));
        out.structure = "simple random walk";
        return out;
    }
    Coin coin = make_coin(sel.coin, regular_degree_or_throw(g));
    if (sel.model == WalkModel::kArcReversal) {
        RotationSystem rot;
        if (sel.structure_text) {
            rot = parse_rotation(*sel.structure_text);
            rot.validate(g);
            auto stream = enumerate_rotation_systems(g);
            RotationSystem cand;
            for (uint64_t i = 0; stream.next(cand); i++) {
                if (cand == rot) {
                    out.structure_id = i;
                    break;
                }
            }
        } else {
            out.structure_id = sel.structure_index.value_or(0);
            if (out.structure_id >= count_rotation_systems(g)) {
                throw ParameterError("rotation system index out of range");
            }
            rot = rotation_system_at(g, out.structure_id);
        }
        out.unitary = arc_reversal_from_rotation(g, rot, coin);
        out.structure = format_rotation(rot, true);
        return out;
    }
    ShuntDecomposition dec;
    if (sel.structure_text) {
        dec = parse_decomposition(*sel.structure_text, g.num_vertices());
        dec.validate(g);
        auto all = enumerate_shunt_decompositions(g);
        auto key = dec.canonical();
        for (size_t i = 0; i < all.size(); i++) {
            if (all[i] == key) {
                out.structure_id = i;
                break;
            }
        }
    } else {
        auto all = enumerate_shunt_decompositions(g);
        out.structure_id = sel.structure_index.value_or(0);
        if (out.structure_id >= all.size()) {
            throw ParameterError("shunt decomposition index out of range");
        }
        dec = all[out.structure_id];
    }
    out.unitary = shunt_unitary(g, dec, coin);
    out.structure = format_decomposition(dec);
    return out;
}

}  // namespace qwalk
