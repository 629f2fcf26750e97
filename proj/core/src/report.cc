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

#include "qwalk/report.h"

#include <cstdio>

namespace qwalk {

std::string format_fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string format_full(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\n") == std::string_view::npos) {
        return std::string(s);
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

std::string format_arc(Arc a) {
    return "(" + std::to_string(a.tail) + "," + std::to_string(a.head) + ")";
}

namespace {

std::string num(double v, bool raw) {
    return raw ? format_full(v) : format_fixed6(v);
}

std::string flag(bool b) {
    return b ? "true" : "false";
}

}  // namespace

void write_embeddings_csv(std::ostream &os, const std::vector<EmbeddingRow> &rows, bool raw) {
    os << "index,rotation,genus,trace,total_entropy,walk_regular,uniform\n";
    for (const auto &r : rows) {
        os << r.index << ',' << csv_field(format_rotation(r.rotation, true)) << ',' << r.genus << ','
           << num(r.mixing.trace, raw) << ',' << num(r.mixing.total_entropy, raw) << ','
           << flag(r.mixing.walk_regular) << ',' << flag(r.mixing.uniform) << '\n';
    }
}

void write_trace_groups_csv(std::ostream &os, const std::vector<TraceGroup> &groups) {
    os << "genus,trace,count\n";
    for (const auto &g : groups) {
        os << g.genus << ',' << g.trace << ',' << g.count << '\n';
    }
}

nlohmann::json mixing_summary_json(const MixingSummary &s) {
    return {
        {"trace", s.trace},
        {"total_entropy", s.total_entropy},
        {"trace_lower_bound", s.trace_lower_bound},
        {"eigenvalue_groups", s.num_groups},
        {"walk_regular", s.walk_regular},
        {"uniform", s.uniform},
        {"simple_spectrum", s.simple_spectrum},
        {"warnings", s.warnings},
    };
}

nlohmann::json embeddings_json(const std::vector<EmbeddingRow> &rows) {
    auto out = nlohmann::json::array();
    for (const auto &r : rows) {
        out.push_back({
            {"index", r.index},
            {"rotation", rotation_to_json(r.rotation)},
            {"genus", r.genus},
            {"trace", r.mixing.trace},
            {"total_entropy", r.mixing.total_entropy},
            {"walk_regular", r.mixing.walk_regular},
            {"uniform", r.mixing.uniform},
        });
    }
    return out;
}

nlohmann::json trace_groups_json(const std::vector<TraceGroup> &groups) {
    auto out = nlohmann::json::array();
    for (const auto &g : groups) {
        out.push_back({{"genus", g.genus}, {"trace", g.trace}, {"count", g.count}});
    }
    return out;
}

nlohmann::json monotonicity_json(const MonotonicityReport &report) {
    auto ranges = nlohmann::json::array();
    for (const auto &r : report.ranges) {
        ranges.push_back({{"genus", r.genus}, {"min_trace", r.min_trace}, {"max_trace", r.max_trace}, {"count", r.count}});
    }
    return {{"holds", report.holds}, {"genera", ranges}};
}

void write_shunts_csv(std::ostream &os, const std::vector<ShuntRow> &rows, bool raw) {
    os << "index,shunts,signature,symmetric,trace,total_entropy\n";
    for (const auto &r : rows) {
        os << r.index << ',' << csv_field(format_decomposition(r.decomposition)) << ',' << csv_field(r.signature)
           << ',' << flag(r.symmetric) << ',' << num(r.mixing.trace, raw) << ','
           << num(r.mixing.total_entropy, raw) << '\n';
    }
}

void write_signature_groups_csv(std::ostream &os, const std::vector<SignatureGroup> &groups) {
    os << "signature,symmetric,count,min_trace,max_trace,representative\n";
    for (const auto &g : groups) {
        os << csv_field(g.signature) << ',' << flag(g.symmetric) << ',' << g.count << ','
           << format_fixed6(g.min_trace) << ',' << format_fixed6(g.max_trace) << ',' << g.representative << '\n';
    }
}

nlohmann::json shunts_json(const std::vector<ShuntRow> &rows) {
    auto out = nlohmann::json::array();
    for (const auto &r : rows) {
        out.push_back({
            {"index", r.index},
            {"shunts", r.decomposition.shunts},
            {"cycles", format_decomposition(r.decomposition)},
            {"signature", r.signature},
            {"symmetric", r.symmetric},
            {"trace", r.mixing.trace},
            {"total_entropy", r.mixing.total_entropy},
        });
    }
    return out;
}

nlohmann::json signature_groups_json(const std::vector<SignatureGroup> &groups) {
    auto out = nlohmann::json::array();
    for (const auto &g : groups) {
        out.push_back({
            {"signature", g.signature},
            {"symmetric", g.symmetric},
            {"count", g.count},
            {"min_trace", g.min_trace},
            {"max_trace", g.max_trace},
            {"representative", g.representative},
        });
    }
    return out;
}

nlohmann::json symmetric_max_json(const SymmetricMaxCheck &check) {
    return {
        {"has_symmetric", check.has_symmetric},
        {"max_trace", check.max_trace},
        {"max_symmetric_trace", check.has_symmetric ? nlohmann::json(check.max_symmetric_trace) : nlohmann::json()},
        {"holds", check.holds},
    };
}

void write_matrix_csv(std::ostream &os, const Eigen::MatrixXd &m, const std::vector<std::string> &labels) {
    os << "arc";
    for (int j = 0; j < m.cols(); j++) {
        os << ',' << csv_field(labels.at(j));
    }
    os << '\n';
    for (int i = 0; i < m.rows(); i++) {
        os << csv_field(labels.at(i));
        for (int j = 0; j < m.cols(); j++) {
            os << ',' << format_full(m(i, j));
        }
        os << '\n';
    }
}

nlohmann::json complex_matrix_json(const TransitionUnitary &u) {
    auto rows = nlohmann::json::array();
    for (int i = 0; i < u.dim(); i++) {
        auto row = nlohmann::json::array();
        for (int j = 0; j < u.dim(); j++) {
            row.push_back({u.matrix(i, j).real(), u.matrix(i, j).imag()});
        }
        rows.push_back(std::move(row));
    }
    return {{"dim", u.dim()}, {"basis", u.labels()}, {"rows", rows}};
}

void write_complex_matrix_text(std::ostream &os, const Eigen::MatrixXcd &m) {
    char buf[96];
    for (int i = 0; i < m.rows(); i++) {
        for (int j = 0; j < m.cols(); j++) {
            std::snprintf(buf, sizeof buf, "%.17g%+.17gj", m(i, j).real(), m(i, j).imag());
            os << (j ? " " : "") << buf;
        }
        os << '\n';
    }
}

namespace {

nlohmann::json optional_int(const std::optional<int> &v) {
    return v ? nlohmann::json(*v) : nlohmann::json();
}

}  // namespace

nlohmann::json hitting_json(const HittingSummary &h) {
    return {
        {"k_max", h.k_max},
        {"one_shot", optional_int(h.one_shot)},
        {"concurrent", optional_int(h.concurrent)},
        {"expected",
         {
             {"value", h.expected.value},
             {"stop_mass", h.expected.stop_mass},
             {"truncation_bound", h.expected.truncation_bound},
             {"converged", h.expected.converged},
         }},
    };
}

nlohmann::json szegedy_json(const SzegedyReport &r, const std::string &graph6) {
    return {
        {"model", "szegedy"},
        {"graph6", graph6},
        {"vertices", r.num_vertices},
        {"order", r.order == ReflectionOrder::kR2R1 ? "R2R1" : "R1R2"},
        {"unitary", {{"dim", r.dim}, {"support", r.support}, {"unitarity_error", r.unitarity_error}}},
        {"mixing", mixing_summary_json(r.mixing)},
        {"from", format_arc(r.from)},
        {"to", format_arc(r.to)},
        {"eps", r.eps},
        {"hitting", hitting_json(r.hitting)},
    };
}

nlohmann::json hit_record_json(const HitRecord &r) {
    return {
        {"model", r.model},
        {"graph6", r.graph6},
        {"structure_id", r.structure_id},
        {"x", r.x},
        {"y", r.y},
        {"eps", r.eps},
        {"value",
         {
             {"one_shot", optional_int(r.hitting.one_shot)},
             {"concurrent", optional_int(r.hitting.concurrent)},
             {"expected", r.hitting.expected.value},
         }},
        {"flags",
         {
             {"k_max", r.hitting.k_max},
             {"one_shot_found", r.hitting.one_shot.has_value()},
             {"concurrent_found", r.hitting.concurrent.has_value()},
             {"expected_converged", r.hitting.expected.converged},
             {"stop_mass", r.hitting.expected.stop_mass},
             {"truncation_bound", r.hitting.expected.truncation_bound},
         }},
    };
}

}  // namespace qwalk
