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

#include "qwalk/rotation.h"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>

#include "qwalk/errors.h"

namespace qwalk {

namespace {

uint64_t factorial(int k) {
    uint64_t f = 1;
    for (int i = 2; i <= k; i++) {
        if (f > std::numeric_limits<uint64_t>::max() / i) {
            throw UnsupportedSizeError("rotation-system count overflows 64 bits");
        }
        f *= i;
    }
    return f;
}

// The index-th lexicographic permutation of sorted `items`.
std::vector<int> nth_permutation(std::vector<int> items, uint64_t index) {
    std::vector<int> out;
    out.reserve(items.size());
    while (!items.empty()) {
        uint64_t block = factorial(static_cast<int>(items.size()) - 1);
        size_t pick = static_cast<size_t>(index / block);
        index %= block;
        out.push_back(items[pick]);
        items.erase(items.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    return out;
}

void require_nonisolated(const Graph &g) {
    for (int v = 0; v < g.num_vertices(); v++) {
        if (g.degree(v) == 0) {
            throw PreconditionError(
                "rotation systems need every vertex to have a neighbor; vertex " +
                std::to_string(v) + " is isolated");
        }
    }
}

}  // namespace

int RotationSystem::next(int u, int v) const {
    const auto &c = cycles[u];
    auto it = std::find(c.begin(), c.end(), v);
    if (it == c.end()) {
        throw ParameterError(
            std::to_string(v) + " is not in the rotation at vertex " + std::to_string(u));
    }
    ++it;
    return it == c.end() ? c.front() : *it;
}

int RotationSystem::prev(int u, int v) const {
    const auto &c = cycles[u];
    auto it = std::find(c.begin(), c.end(), v);
    if (it == c.end()) {
        throw ParameterError(
            std::to_string(v) + " is not in the rotation at vertex " + std::to_string(u));
    }
    return it == c.begin() ? c.back() : *(it - 1);
}

RotationSystem RotationSystem::canonical() const {
    RotationSystem out = *this;
    for (auto &c : out.cycles) {
        if (!c.empty()) {
            std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
        }
    }
    return out;
}

bool RotationSystem::operator==(const RotationSystem &other) const {
    return canonical().cycles == other.canonical().cycles;
}

void RotationSystem::validate(const Graph &g) const {
    if (num_vertices() != g.num_vertices()) {
        throw ParameterError(
            "rotation system has " + std::to_string(num_vertices()) + " vertices, graph has " +
            std::to_string(g.num_vertices()));
    }
    for (int u = 0; u < g.num_vertices(); u++) {
        auto sorted = cycles[u];
        std::sort(sorted.begin(), sorted.end());
        if (sorted != g.neighbors(u)) {
            throw ParameterError(
                "rotation at vertex " + std::to_string(u) +
                " is not a cyclic order of its neighbors");
        }
    }
}

uint64_t count_rotation_systems(const Graph &g) {
    uint64_t total = 1;
    for (int v = 0; v < g.num_vertices(); v++) {
        uint64_t f = factorial(std::max(g.degree(v) - 1, 0));
        if (total > std::numeric_limits<uint64_t>::max() / f) {
            throw UnsupportedSizeError("rotation-system count overflows 64 bits");
        }
        total *= f;
    }
    return total;
}

RotationSystem rotation_system_at(const Graph &g, uint64_t index) {
    require_nonisolated(g);
    uint64_t total = count_rotation_systems(g);
    if (index >= total) {
        throw ParameterError(
            "rotation-system index " + std::to_string(index) + " out of range (count " +
            std::to_string(total) + ")");
    }
    int n = g.num_vertices();
    RotationSystem rot;
    rot.cycles.resize(n);
    for (int u = n - 1; u >= 0; u--) {
        const auto &nb = g.neighbors(u);
        uint64_t radix = factorial(static_cast<int>(nb.size()) - 1);
        uint64_t digit = index % radix;
        index /= radix;
        std::vector<int> rest(nb.begin() + 1, nb.end());
        auto tail = nth_permutation(rest, digit);
        rot.cycles[u].push_back(nb.front());
        rot.cycles[u].insert(rot.cycles[u].end(), tail.begin(), tail.end());
    }
    return rot;
}

RotationSystemStream::RotationSystemStream(const Graph &g) {
    require_nonisolated(g);
    total_ = count_rotation_systems(g);
    for (int u = 0; u < g.num_vertices(); u++) {
        const auto &nb = g.neighbors(u);
        heads_.push_back(nb.front());
        tails_.emplace_back(nb.begin() + 1, nb.end());
    }
}

bool RotationSystemStream::next(RotationSystem &out) {
    if (produced_ == total_) {
        return false;
    }
    if (produced_ > 0) {
        // Odometer step: advance the last vertex, carrying leftwards on wrap.
        for (int u = static_cast<int>(tails_.size()) - 1; u >= 0; u--) {
            if (std::next_permutation(tails_[u].begin(), tails_[u].end())) {
                break;
            }
        }
    }
    produced_++;
    out.cycles.resize(tails_.size());
    for (size_t u = 0; u < tails_.size(); u++) {
        auto &c = out.cycles[u];
        c.clear();
        c.push_back(heads_[u]);
        c.insert(c.end(), tails_[u].begin(), tails_[u].end());
    }
    return true;
}

RotationSystemStream enumerate_rotation_systems(const Graph &g) {
    return RotationSystemStream(g);
}

FacialWalks facial_walks(const Graph &g, const RotationSystem &rot) {
    rot.validate(g);
    ArcTable arcs(g);
    FacialWalks out;
    out.face_of.assign(arcs.size(), -1);
    for (int start = 0; start < arcs.size(); start++) {
        if (out.face_of[start] != -1) {
            continue;
        }
        int face_id = out.num_faces();
        std::vector<int> face;
        int cur = start;
        while (out.face_of[cur] == -1) {
            out.face_of[cur] = face_id;
            face.push_back(cur);
            const Arc &a = arcs[cur];
            cur = arcs.index(a.head, rot.next(a.head, a.tail));
        }
        if (cur != start) {
            throw InternalConsistencyError("facial walk did not close at its first arc");
        }
        out.faces.push_back(std::move(face));
    }
    return out;
}

int genus(const Graph &g, const FacialWalks &faces) {
    int numerator = 2 - g.num_vertices() + g.num_edges() - faces.num_faces();
    if (numerator < 0 || numerator % 2 != 0) {
        throw InternalConsistencyError(
            "Euler numerator 2 - n + E - F = " + std::to_string(numerator) +
            " is not a non-negative even integer");
    }
    return numerator / 2;
}

Embedding make_embedding(const Graph &g, const RotationSystem &rot) {
    Embedding e;
    e.rotation = rot;
    e.faces = facial_walks(g, rot);
    e.genus = genus(g, e.faces);
    return e;
}

std::string format_rotation(const RotationSystem &rot, bool single_line) {
    std::string out;
    for (int u = 0; u < rot.num_vertices(); u++) {
        if (u > 0) {
            out += single_line ? ", " : "\n";
        }
        out += std::to_string(u) + ": (";
        for (size_t i = 0; i < rot.cycles[u].size(); i++) {
            if (i > 0) {
                out += ", ";
            }
            out += std::to_string(rot.cycles[u][i]);
        }
        out += ")";
    }
    return out;
}

namespace {

class RotationParser {
   public:
    explicit RotationParser(std::string_view text) : text_(text) {
    }

    RotationSystem parse() {
        std::map<int, std::vector<int>> entries;
        skip_separators();
        while (pos_ < text_.size()) {
            size_t entry_pos = pos_;
            int v = read_int();
            skip_space();
            expect(':');
            skip_space();
            expect('(');
            std::vector<int> cycle;
            skip_space();
            while (true) {
                cycle.push_back(read_int());
                skip_space();
                if (peek() == ',') {
                    pos_++;
                    skip_space();
                    continue;
                }
                expect(')');
                break;
            }
            if (!entries.emplace(v, std::move(cycle)).second) {
                throw ParseError("rotation: vertex " + std::to_string(v) + " listed twice", entry_pos);
            }
            skip_separators();
        }
        RotationSystem rot;
        int expected = 0;
        for (auto &[v, c] : entries) {
            if (v != expected) {
                throw ParseError("rotation: vertex " + std::to_string(expected) + " missing", 0);
            }
            rot.cycles.push_back(std::move(c));
            expected++;
        }
        return rot;
    }

   private:
    char peek() const {
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            pos_++;
        }
    }
    void skip_separators() {
        while (pos_ < text_.size() &&
               (std::isspace(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == ',' ||
                text_[pos_] == ';')) {
            pos_++;
        }
    }
    void expect(char c) {
        if (peek() != c) {
            throw ParseError(std::string("rotation: expected '") + c + "'", pos_);
        }
        pos_++;
    }
    int read_int() {
        size_t start = pos_;
        int value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            pos_++;
            if (value > 1'000'000) {
                throw ParseError("rotation: integer too large", start);
            }
        }
        if (pos_ == start) {
            throw ParseError("rotation: expected a vertex number", start);
        }
        return value;
    }

    std::string_view text_;
    size_t pos_ = 0;
};

}  // namespace

RotationSystem parse_rotation(std::string_view text) {
    return RotationParser(text).parse();
}

nlohmann::json rotation_to_json(const RotationSystem &rot) {
    nlohmann::json j = nlohmann::json::object();
    for (int u = 0; u < rot.num_vertices(); u++) {
        j[std::to_string(u)] = rot.cycles[u];
    }
    return j;
}

RotationSystem rotation_from_json(const nlohmann::json &j) {
    if (!j.is_object()) {
        throw ParseError("rotation JSON must be an object of vertex -> neighbor cycle", 0);
    }
    std::map<int, std::vector<int>> entries;
    for (auto it = j.begin(); it != j.end(); ++it) {
        int v = 0;
        try {
            v = std::stoi(it.key());
        } catch (const std::exception &) {
            throw ParseError("rotation JSON key '" + it.key() + "' is not a vertex number", 0);
        }
        entries[v] = it.value().get<std::vector<int>>();
    }
    RotationSystem rot;
    int expected = 0;
    for (auto &[v, c] : entries) {
        if (v != expected) {
            throw ParseError("rotation JSON: vertex " + std::to_string(expected) + " missing", 0);
        }
        rot.cycles.push_back(std::move(c));
        expected++;
    }
    return rot;
}

}  // namespace qwalk
