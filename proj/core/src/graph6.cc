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

#include "qwalk/graph6.h"

#include <vector>

#include "qwalk/errors.h"

namespace qwalk {

namespace {

constexpr int kOffset = 63;
constexpr int kMaxByte = 126;
constexpr std::string_view kHeader = ">>graph6<<";

size_t body_length(int n) {
    size_t bits = static_cast<size_t>(n) * (n - 1) / 2;
    return (bits + 5) / 6;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    size_t base = 0;
    if (text.starts_with(kHeader)) {
        base = kHeader.size();
        text.remove_prefix(kHeader.size());
    }
    if (text.empty()) {
        throw ParseError("graph6: empty input", base);
    }
    int first = static_cast<unsigned char>(text[0]);
    if (first < kOffset || first > kMaxByte) {
        throw ParseError("graph6: size byte out of range", base);
    }
    if (first == kMaxByte) {
        throw ParseError("graph6: long-form sizes (n > 62) are not supported", base);
    }
    int n = first - kOffset;
    size_t expected = body_length(n);
    if (text.size() - 1 < expected) {
        throw ParseError(
            "graph6: truncated body, expected " + std::to_string(expected) + " bytes",
            base + text.size());
    }
    if (text.size() - 1 > expected) {
        throw ParseError("graph6: trailing bytes after body", base + 1 + expected);
    }

    std::vector<int> bits;
    bits.reserve(expected * 6);
    for (size_t i = 0; i < expected; i++) {
        int c = static_cast<unsigned char>(text[1 + i]);
        if (c < kOffset || c > kMaxByte) {
            throw ParseError("graph6: byte out of range 63..126", base + 1 + i);
        }
        int value = c - kOffset;
        for (int b = 5; b >= 0; b--) {
            bits.push_back((value >> b) & 1);
        }
    }

    std::vector<std::pair<int, int>> edges;
    size_t k = 0;
    for (int j = 1; j < n; j++) {
        for (int i = 0; i < j; i++, k++) {
            if (bits[k]) {
                edges.emplace_back(i, j);
            }
        }
    }
    for (; k < bits.size(); k++) {
        if (bits[k]) {
            throw ParseError("graph6: non-zero padding bits", base + text.size() - 1);
        }
    }
    return Graph::from_edges(n, edges);
}

std::string write_graph6(const Graph &g) {
    int n = g.num_vertices();
    if (n > kGraph6MaxVertices) {
        throw UnsupportedSizeError(
            "graph6: n=" + std::to_string(n) + " exceeds the short-form limit of 62");
    }
    std::string out;
    out.push_back(static_cast<char>(n + kOffset));
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; j++) {
        for (int i = 0; i < j; i++) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kOffset));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) {
        out.push_back(static_cast<char>((acc << (6 - filled)) + kOffset));
    }
    return out;
}

}  // namespace qwalk
