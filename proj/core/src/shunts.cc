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

#include "qwalk/shunts.h"

#include <algorithm>
#include <cctype>

#include "qwalk/errors.h"

namespace qwalk {

ShuntDecomposition ShuntDecomposition::canonical() const {
    ShuntDecomposition out = *this;
    std::sort(out.shunts.begin(), out.shunts.end());
    return out;
}

void ShuntDecomposition::validate(const Graph &g) const {
    int n = g.num_vertices();
    std::vector<int> count(static_cast<size_t>(n) * n, 0);
    for (const auto &p : shunts) {
        if (static_cast<int>(p.size()) != n) {
            throw ParameterError("shunt has the wrong number of vertices");
        }
        std::vector<char> hit(n, 0);
        for (int u = 0; u < n; u++) {
            int v = p[u];
            if (v < 0 || v >= n || hit[v]) {
                throw ParameterError("shunt " + format_permutation(p) + " is not a permutation");
            }
            hit[v] = 1;
            if (!g.has_edge(u, v)) {
                throw ParameterError(
                    "shunt maps " + std::to_string(u) + " to non-neighbor " + std::to_string(v));
            }
            count[static_cast<size_t>(u) * n + v]++;
        }
    }
    for (int u = 0; u < n; u++) {
        for (int v = 0; v < n; v++) {
            int want = g.has_edge(u, v) ? 1 : 0;
            if (count[static_cast<size_t>(u) * n + v] != want) {
                throw ParameterError("shunts do not sum to the adjacency matrix");
            }
        }
    }
}

void LinearOrders::validate(const Graph &g) const {
    if (num_vertices() != g.num_vertices()) {
        throw ParameterError("linear orders cover the wrong number of vertices");
    }
    for (int u = 0; u < g.num_vertices(); u++) {
        auto sorted = orders[u];
        std::sort(sorted.begin(), sorted.end());
        if (sorted != g.neighbors(u)) {
            throw ParameterError(
                "linear order at vertex " + std::to_string(u) + " is not a bijection onto its neighbors");
        }
    }
}

LinearOrders lexicographic_orders(const Graph &g) {
    LinearOrders lo;
    for (int u = 0; u < g.num_vertices(); u++) {
        lo.orders.push_back(g.neighbors(u));
    }
    return lo;
}

namespace {

struct ShuntSearch {
    const Graph &g;
    int n;
    int d;
    std::vector<Permutation> shunts;
    std::vector<std::vector<char>> taken;  // taken[j][v]: v already an image of shunt j
    const std::function<bool(const ShuntDecomposition &)> &visit;
    bool stopped = false;

    void run(int u) {
        if (stopped) {
            return;
        }
        if (u == n) {
            if (!visit(ShuntDecomposition{shunts})) {
                stopped = true;
            }
            return;
        }
        std::vector<int> images = g.neighbors(u);
        // Shunt j is anchored to the j-th neighbor of vertex 0, which fixes the
        // shunt order and yields each unordered decomposition exactly once.
        if (u == 0) {
            assign(u, images);
            return;
        }
        do {
            assign(u, images);
            if (stopped) {
                return;
            }
        } while (std::next_permutation(images.begin(), images.end()));
    }

    void assign(int u, const std::vector<int> &images) {
        for (int j = 0; j < d; j++) {
            if (taken[j][images[j]]) {
                return;
            }
        }
        for (int j = 0; j < d; j++) {
            shunts[j][u] = images[j];
            taken[j][images[j]] = 1;
        }
        run(u + 1);
        for (int j = 0; j < d; j++) {
            taken[j][images[j]] = 0;
        }
    }
};

}  // namespace

void for_each_shunt_decomposition(
    const Graph &g, const std::function<bool(const ShuntDecomposition &)> &visit) {
    int d = g.regular_degree();
    if (d < 0) {
        throw PreconditionError("shunt-decompositions need a regular graph");
    }
    int n = g.num_vertices();
    if (n == 0 || d == 0) {
        return;
    }
    ShuntSearch search{
        g, n, d, std::vector<Permutation>(d, Permutation(n, -1)),
        std::vector<std::vector<char>>(d, std::vector<char>(n, 0)), visit};
    search.run(0);
}

std::vector<ShuntDecomposition> enumerate_shunt_decompositions(const Graph &g) {
    std::vector<ShuntDecomposition> out;
    for_each_shunt_decomposition(g, [&](const ShuntDecomposition &dec) {
        out.push_back(dec);
        return true;
    });
    return out;
}

bool is_symmetric(const ShuntDecomposition &dec) {
    for (const auto &p : dec.shunts) {
        for (size_t u = 0; u < p.size(); u++) {
            if (p[p[u]] != static_cast<int>(u)) {
                return false;
            }
        }
    }
    return true;
}

std::vector<int> cycle_type(const Permutation &perm) {
    std::vector<char> seen(perm.size(), 0);
    std::vector<int> lengths;
    for (size_t s = 0; s < perm.size(); s++) {
        if (seen[s]) {
            continue;
        }
        int len = 0;
        for (size_t x = s; !seen[x]; x = static_cast<size_t>(perm[x])) {
            seen[x] = 1;
            len++;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

std::string cycle_signature(const ShuntDecomposition &dec) {
    std::vector<std::string> parts;
    for (const auto &p : dec.shunts) {
        std::string s = "[";
        auto lengths = cycle_type(p);
        for (size_t i = 0; i < lengths.size(); i++) {
            s += (i ? "," : "") + std::to_string(lengths[i]);
        }
        parts.push_back(s + "]");
    }
    std::sort(parts.begin(), parts.end());
    std::string out;
    for (size_t i = 0; i < parts.size(); i++) {
        out += (i ? "|" : "") + parts[i];
    }
    return out;
}

ShuntDecomposition validate_linear_orders_for_shunt_model(const Graph &g, const LinearOrders &lo) {
    int d = g.regular_degree();
    if (d < 0) {
        throw PreconditionError("the shunt model needs a regular graph");
    }
    lo.validate(g);
    int n = g.num_vertices();
    ShuntDecomposition dec{std::vector<Permutation>(d, Permutation(n, -1))};
    for (int j = 0; j < d; j++) {
        std::vector<char> received(n, 0);
        for (int u = 0; u < n; u++) {
            int v = lo.orders[u][j];
            if (received[v]) {
                throw InvalidOrdersError(v, j);
            }
            received[v] = 1;
            dec.shunts[j][u] = v;
        }
    }
    return dec;
}

LinearOrders linear_orders_from_decomposition(const ShuntDecomposition &dec) {
    LinearOrders lo;
    lo.orders.assign(dec.num_vertices(), std::vector<int>(dec.degree()));
    for (int j = 0; j < dec.degree(); j++) {
        for (int u = 0; u < dec.num_vertices(); u++) {
            lo.orders[u][j] = dec.shunts[j][u];
        }
    }
    return lo;
}

std::string format_permutation(const Permutation &perm) {
    std::vector<char> seen(perm.size(), 0);
    std::string out;
    for (size_t s = 0; s < perm.size(); s++) {
        if (seen[s] || perm[s] == static_cast<int>(s)) {
            seen[s] = 1;
            continue;
        }
        out += "(";
        bool first = true;
        for (size_t x = s; !seen[x]; x = static_cast<size_t>(perm[x])) {
            seen[x] = 1;
            out += (first ? "" : ",") + std::to_string(x);
            first = false;
        }
        out += ")";
    }
    return out.empty() ? "()" : out;
}

std::string format_decomposition(const ShuntDecomposition &dec) {
    std::string out = "{";
    for (size_t j = 0; j < dec.shunts.size(); j++) {
        out += (j ? ", " : "") + format_permutation(dec.shunts[j]);
    }
    return out + "}";
}

namespace {

class CycleParser {
   public:
    CycleParser(std::string_view text, int n) : text_(text), n_(n) {
    }

    ShuntDecomposition parse() {
        ShuntDecomposition dec;
        skip_space();
        expect('{');
        skip_space();
        while (peek() != '}') {
            dec.shunts.push_back(parse_permutation());
            skip_space();
            if (peek() == ',') {
                pos_++;
                skip_space();
            } else if (peek() != '}') {
                throw ParseError("cycle notation: expected ',' or '}'", pos_);
            }
        }
        pos_++;
        skip_space();
        if (pos_ != text_.size()) {
            throw ParseError("cycle notation: trailing characters", pos_);
        }
        return dec;
    }

   private:
    Permutation parse_permutation() {
        Permutation p(n_);
        for (int i = 0; i < n_; i++) {
            p[i] = i;
        }
        std::vector<char> used(n_, 0);
        if (peek() != '(') {
            throw ParseError("cycle notation: expected '('", pos_);
        }
        while (peek() == '(') {
            pos_++;
            std::vector<int> cycle;
            while (true) {
                skip_space();
                size_t at = pos_;
                int v = read_int();
                if (v >= n_ || used[v]) {
                    throw ParseError("cycle notation: vertex out of range or repeated", at);
                }
                used[v] = 1;
                cycle.push_back(v);
                skip_space();
                if (peek() == ',') {
                    pos_++;
                    continue;
                }
                if (peek() != ')') {
                    throw ParseError("cycle notation: expected ',' or ')'", pos_);
                }
                pos_++;
                break;
            }
            for (size_t i = 0; i < cycle.size(); i++) {
                p[cycle[i]] = cycle[(i + 1) % cycle.size()];
            }
            skip_space();
        }
        return p;
    }

    char peek() const {
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            pos_++;
        }
    }
    void expect(char c) {
        if (peek() != c) {
            throw ParseError(std::string("cycle notation: expected '") + c + "'", pos_);
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
                throw ParseError("cycle notation: integer too large", start);
            }
        }
        if (pos_ == start) {
            throw ParseError("cycle notation: expected a vertex number", start);
        }
        return value;
    }

    std::string_view text_;
    int n_;
    size_t pos_ = 0;
};

}  // namespace

ShuntDecomposition parse_decomposition(std::string_view text, int n) {
    return CycleParser(text, n).parse();
}

}  // namespace qwalk
