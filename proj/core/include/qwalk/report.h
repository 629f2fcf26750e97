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

#ifndef QWALK_REPORT_H
#define QWALK_REPORT_H

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "qwalk/experiments.h"

namespace qwalk {

/// "%.6f", the rounded view used in tables.
std::string format_fixed6(double v);
/// "%.17g", the raw view.
std::string format_full(double v);
/// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_field(std::string_view s);
std::string format_arc(Arc a);

void write_embeddings_csv(std::ostream &os, const std::vector<EmbeddingRow> &rows, bool raw = false);
void write_trace_groups_csv(std::ostream &os, const std::vector<TraceGroup> &groups);
nlohmann::json embeddings_json(const std::vector<EmbeddingRow> &rows);
nlohmann::json trace_groups_json(const std::vector<TraceGroup> &groups);
nlohmann::json monotonicity_json(const MonotonicityReport &report);

void write_shunts_csv(std::ostream &os, const std::vector<ShuntRow> &rows, bool raw = false);
void write_signature_groups_csv(std::ostream &os, const std::vector<SignatureGroup> &groups);
nlohmann::json shunts_json(const std::vector<ShuntRow> &rows);
nlohmann::json signature_groups_json(const std::vector<SignatureGroup> &groups);
nlohmann::json symmetric_max_json(const SymmetricMaxCheck &check);

nlohmann::json mixing_summary_json(const MixingSummary &s);

/// Real matrix with a label header row and a label column; entries at 17 significant digits.
void write_matrix_csv(std::ostream &os, const Eigen::MatrixXd &m, const std::vector<std::string> &labels);

/// {"dim", "basis", "rows"} with rows of [re, im] pairs, row-major.
nlohmann::json complex_matrix_json(const TransitionUnitary &u);
/// One row per line, entries as "re+imj", readable by numpy.loadtxt(dtype=complex).
void write_complex_matrix_text(std::ostream &os, const Eigen::MatrixXcd &m);

nlohmann::json hitting_json(const HittingSummary &h);
nlohmann::json szegedy_json(const SzegedyReport &r, const std::string &graph6);

struct HitRecord {
    std::string model;
    std::string graph6;
    uint64_t structure_id = 0;
    std::string x;
    std::string y;
    double eps = 0.0;
    HittingSummary hitting;
};

/// {model, graph6, structure_id, x, y, eps, value, flags}.
nlohmann::json hit_record_json(const HitRecord &r);

}  // namespace qwalk

#endif
