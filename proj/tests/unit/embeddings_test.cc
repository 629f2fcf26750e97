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

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "qwalk/errors.h"
#include "qwalk/gem.h"
#include "qwalk/graph6.h"
#include "qwalk/rotation.h"
#include "support/graphs.h"
#include "support/oracles.h"

namespace qwalk {
namespace {

using testing::complete_bipartite;
using testing::complete_graph;
using testing::cycle_graph;

const char *kPlanarK4 = "0: (1, 2, 3), 1: (0, 3, 2), 2: (0, 1, 3), 3: (0, 2, 1)";

std::map<int, int> genus_histogram(const Graph &g) {
    std::map<int, int> hist;
    auto stream = enumerate_rotation_systems(g);
    RotationSystem rot;
    while (stream.next(rot)) {
        hist[make_embedding(g, rot).genus]++;
    }
    return hist;
}

TEST(RotationSystems, CountsMatchFactorialProduct) {
    EXPECT_EQ(count_rotation_systems(complete_graph(4)), 16u);
    EXPECT_EQ(count_rotation_systems(complete_bipartite(3, 3)), 64u);
    EXPECT_EQ(count_rotation_systems(Graph::from_edges(2, {{0, 1}})), 1u);
    EXPECT_EQ(count_rotation_systems(complete_graph(5)), 7776u);  // (3!)^5
}

TEST(RotationSystems, StreamYieldsEachSystemOnceInIndexOrder) {
    for (const Graph &g : {complete_graph(4), complete_bipartite(3, 3), testing::prism_k2_k3()}) {
        auto stream = enumerate_rotation_systems(g);
        EXPECT_EQ(stream.size(), count_rotation_systems(g));
        std::set<std::vector<std::vector<int>>> seen;
        RotationSystem rot;
        uint64_t i = 0;
        while (stream.next(rot)) {
            EXPECT_NO_THROW(rot.validate(g));
            EXPECT_TRUE(seen.insert(rot.canonical().cycles).second);
            EXPECT_EQ(rot, rotation_system_at(g, i));
            for (int u = 0; u < g.num_vertices(); u++) {
                EXPECT_EQ(rot.cycles[u].front(), g.neighbors(u).front());
            }
            i++;
        }
        EXPECT_EQ(i, stream.size());
    }
}

TEST(RotationSystems, IsolatedVertexIsRejected) {
    Graph g = Graph::from_edges(3, {{0, 1}});
    EXPECT_THROW(enumerate_rotation_systems(g), PreconditionError);
}

TEST(RotationSystems, GenusHistograms) {
    EXPECT_EQ(genus_histogram(complete_bipartite(3, 3)), (std::map<int, int>{{1, 40}, {2, 24}}));
    EXPECT_EQ(genus_histogram(testing::prism_k2_k3()), (std::map<int, int>{{0, 2}, {1, 38}, {2, 24}}));
    EXPECT_EQ(genus_histogram(testing::cube_q3()), (std::map<int, int>{{0, 2}, {1, 54}, {2, 200}}));
}

TEST(RotationSystems, NextAndPrev) {
    RotationSystem rot = parse_rotation(kPlanarK4);
    EXPECT_EQ(rot.next(0, 1), 2);
    EXPECT_EQ(rot.next(0, 3), 1);
    EXPECT_EQ(rot.prev(0, 1), 3);
    EXPECT_EQ(rot.next(1, 0), 3);
}

TEST(RotationSystems, EqualityIgnoresStartingPoint) {
    RotationSystem a{{{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}}};
    RotationSystem b{{{2, 3, 1}, {3, 0, 2}, {0, 1, 3}, {1, 2, 0}}};
    RotationSystem c{{{1, 3, 2}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}}};
    EXPECT_EQ(a, b);
    EXPECT_FALSE(a == c);
}

TEST(RotationSystems, ValidateRejectsWrongNeighbors) {
    Graph g = complete_graph(4);
    RotationSystem bad{{{1, 2, 2}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}}};
    EXPECT_THROW(bad.validate(g), ParameterError);
    RotationSystem short_list{{{1, 2}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}}};
    EXPECT_THROW(short_list.validate(g), ParameterError);
}

TEST(FacialWalks, PlanarK4HasFourFaces) {
    Graph g = complete_graph(4);
    auto faces = facial_walks(g, parse_rotation(kPlanarK4));
    EXPECT_EQ(faces.num_faces(), 4);
    EXPECT_EQ(genus(g, faces), 0);
}

TEST(FacialWalks, TriangleHasTwoFacesOfLengthThree) {
    Graph g = cycle_graph(3);
    auto faces = facial_walks(g, rotation_system_at(g, 0));
    ASSERT_EQ(faces.num_faces(), 2);
    EXPECT_EQ(faces.faces[0].size(), 3u);
    EXPECT_EQ(faces.faces[1].size(), 3u);
}

TEST(FacialWalks, K33FirstEntropyRowHasGenusOne) {
    Graph g = complete_bipartite(3, 3);
    auto rot = parse_rotation("0:(3,5,4),1:(3,5,4),2:(3,4,5),3:(0,2,1),4:(0,1,2),5:(0,2,1)");
    EXPECT_EQ(make_embedding(g, rot).genus, 1);
}

TEST(FacialWalks, TreesArePlanarWithOneFace) {
    Graph star = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}});
    auto stream = enumerate_rotation_systems(star);
    RotationSystem rot;
    while (stream.next(rot)) {
        auto faces = facial_walks(star, rot);
        EXPECT_EQ(faces.num_faces(), 1);
        EXPECT_EQ(genus(star, faces), 0);
    }
}

void expect_faces_partition_arcs(const Graph &g, const RotationSystem &rot) {
    ArcTable arcs(g);
    auto faces = facial_walks(g, rot);
    std::vector<int> seen(arcs.size(), 0);
    for (int f = 0; f < faces.num_faces(); f++) {
        const auto &walk = faces.faces[f];
        for (size_t i = 0; i < walk.size(); i++) {
            seen[walk[i]]++;
            EXPECT_EQ(faces.face_of[walk[i]], f);
            Arc a = arcs[walk[i]];
            Arc b = arcs[walk[(i + 1) % walk.size()]];
            EXPECT_EQ(b.tail, a.head);
            EXPECT_EQ(b.head, rot.next(a.head, a.tail));
        }
    }
    for (int c : seen) {
        EXPECT_EQ(c, 1);
    }
    int numerator = 2 - g.num_vertices() + g.num_edges() - faces.num_faces();
    EXPECT_GE(numerator, 0);
    EXPECT_EQ(numerator % 2, 0);
}

TEST(FacialWalks, PartitionAndEulerParityOnRandomCubicGraphs) {
    std::mt19937_64 rng(5);
    for (int n = 4; n <= 12; n += 2) {
        for (int trial = 0; trial < 3; trial++) {
            Graph g = testing::random_cubic_graph(n, rng);
            uint64_t total = count_rotation_systems(g);
            for (int s = 0; s < 40; s++) {
                expect_faces_partition_arcs(g, rotation_system_at(g, rng() % total));
            }
        }
    }
}

TEST(RotationText, FormatAndParseRoundTrip) {
    RotationSystem rot = parse_rotation(kPlanarK4);
    EXPECT_EQ(format_rotation(rot, true), kPlanarK4);
    EXPECT_EQ(format_rotation(rot), "0: (1, 2, 3)\n1: (0, 3, 2)\n2: (0, 1, 3)\n3: (0, 2, 1)");
    EXPECT_EQ(parse_rotation(format_rotation(rot)), rot);
    EXPECT_EQ(rotation_from_json(rotation_to_json(rot)), rot);
    EXPECT_EQ(rotation_to_json(rot)["1"], nlohmann::json({0, 3, 2}));
}

TEST(RotationText, ParseErrorsCarryOffsets) {
    EXPECT_THROW(parse_rotation("0: (1, 2"), ParseError);
    EXPECT_THROW(parse_rotation("0 (1, 2)"), ParseError);
    EXPECT_THROW(parse_rotation("x: (1)"), ParseError);
    try {
        parse_rotation("0: (1, 2), 1: (0, q)");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.offset(), 18u);
    }
}

// ---- gems ----

TEST(Gem, PlanarCyclesGivePrisms) {
    for (int n : {3, 4, 5}) {
        Graph c = cycle_graph(n);
        Gem gem = build_gem(c, rotation_system_at(c, 0));
        EXPECT_EQ(gem.num_flags(), 4 * n);
        EXPECT_TRUE(testing::isomorphic(gem.as_graph, testing::prism(2 * n))) << n;
    }
}

TEST(Gem, AxiomsAndOrientabilityForEveryRotationSystem) {
    for (const Graph &g : {complete_graph(4), complete_bipartite(3, 3), testing::prism_k2_k3()}) {
        auto stream = enumerate_rotation_systems(g);
        RotationSystem rot;
        while (stream.next(rot)) {
            Gem gem = build_gem(g, rot);
            EXPECT_TRUE(check_gem_axioms(gem).all());
            EXPECT_EQ(gem.as_graph.regular_degree(), 3);
            EXPECT_TRUE(is_orientable(gem));
            for (int f = 0; f < gem.num_flags(); f++) {
                for (int c = 0; c < 3; c++) {
                    EXPECT_EQ(gem.color(f, gem.tau[c][f]), c);
                }
            }
        }
    }
}

TEST(Gem, FlagsRecordIncidences) {
    Graph g = complete_graph(4);
    RotationSystem rot = parse_rotation(kPlanarK4);
    Gem gem = build_gem(g, rot);
    auto faces = facial_walks(g, rot);
    for (int f = 0; f < gem.num_flags(); f++) {
        const auto &a = gem.flags[f];
        const auto &b = gem.flags[gem.tau[0][f]];
        EXPECT_NE(a.vertex, b.vertex);
        EXPECT_EQ(a.edge, b.edge);
        EXPECT_EQ(a.face, b.face);
        const auto &c = gem.flags[gem.tau[2][f]];
        EXPECT_EQ(a.vertex, c.vertex);
        EXPECT_EQ(a.edge, c.edge);
        const auto &d = gem.flags[gem.tau[1][f]];
        EXPECT_EQ(a.vertex, d.vertex);
        EXPECT_EQ(a.face, d.face);
        EXPECT_LT(a.face, faces.num_faces());
    }
}

TEST(Gem, NeedsMinimumDegreeTwo) {
    Graph path = testing::path_graph(3);
    EXPECT_THROW(build_gem(path, rotation_system_at(path, 0)), PreconditionError);
}

TEST(Gem, SyntheticOddCycleIsNotOrientable) {
    Gem gem;
    gem.as_graph = complete_graph(4);
    EXPECT_FALSE(is_orientable(gem));
}

// Relabeling that maps every shunt of `from` onto the same-index shunt of `to`.
bool shunts_conjugate(const ShuntDecomposition &from, const ShuntDecomposition &to) {
    int n = from.num_vertices();
    std::vector<int> sigma(n);
    for (int i = 0; i < n; i++) {
        sigma[i] = i;
    }
    do {
        bool ok = true;
        for (int c = 0; c < from.degree() && ok; c++) {
            for (int u = 0; u < n && ok; u++) {
                ok = sigma[from.shunts[c][u]] == to.shunts[c][sigma[u]];
            }
        }
        if (ok) {
            return true;
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return false;
}

TEST(GemQuotient, PlanarTriangleRecoversColoredPrism) {
    Graph c3 = cycle_graph(3);
    Gem gem = build_gem(c3, rotation_system_at(c3, 0));
    auto results = gem_quotient(gem);
    ASSERT_FALSE(results.empty());
    // Red (tau0), blue (tau1), green (tau2) shunts of the drawn K2 x K3, relabeled 0-based.
    ShuntDecomposition drawn{{
        {1, 2, 0, 5, 3, 4},  // (0 1 2)(3 5 4)
        {2, 0, 1, 4, 5, 3},  // (0 2 1)(3 4 5)
        {5, 3, 4, 1, 2, 0},  // (0 5)(1 3)(2 4)
    }};
    Graph drawn_y = testing::from_adjacency({{1, 2, 5}, {0, 2, 3}, {0, 1, 4}, {1, 4, 5}, {2, 3, 5}, {0, 3, 4}});
    ASSERT_NO_THROW(drawn.validate(drawn_y));
    bool found = false;
    for (const auto &q : results) {
        if (testing::isomorphic(q.y, drawn_y) && shunts_conjugate(q.shunts, drawn)) {
            found = true;
        }
    }
    EXPECT_TRUE(found);
}

TEST(GemQuotient, OutputsAreValidQuotients) {
    for (const Graph &g : {cycle_graph(3), cycle_graph(4), complete_graph(4)}) {
        auto stream = enumerate_rotation_systems(g);
        RotationSystem rot;
        while (stream.next(rot)) {
            Gem gem = build_gem(g, rot);
            GemQuotientOptions opts;
            opts.max_results = 8;
            auto results = gem_quotient(gem, opts);
            for (const auto &q : results) {
                int n = q.y.num_vertices();
                EXPECT_EQ(2 * n, gem.num_flags());
                ASSERT_NO_THROW(q.shunts.validate(q.y));
                // sum_j Q_j equals its transpose.
                std::vector<int> sum(n * n, 0);
                for (const auto &p : q.shunts.shunts) {
                    for (int u = 0; u < n; u++) {
                        sum[u * n + p[u]]++;
                    }
                }
                for (int u = 0; u < n; u++) {
                    for (int v = 0; v < n; v++) {
                        EXPECT_EQ(sum[u * n + v], sum[v * n + u]);
                        EXPECT_EQ(sum[u * n + v], q.y.has_edge(u, v) ? 1 : 0);
                    }
                }
                EXPECT_TRUE(testing::isomorphic(bipartite_double_cover(q.y), gem.as_graph));
                for (int f = 0; f < gem.num_flags(); f++) {
                    EXPECT_EQ(q.involution[q.involution[f]], f);
                    EXPECT_NE(q.involution[f], f);
                    EXPECT_FALSE(gem.as_graph.has_edge(f, q.involution[f]));
                }
            }
        }
    }
}

TEST(GemQuotient, ColorPreservingInvolutionsGiveSymmetricShunts) {
    Graph c3 = cycle_graph(3);
    Gem gem = build_gem(c3, rotation_system_at(c3, 0));
    GemQuotientOptions opts;
    opts.color_preserving = true;
    for (const auto &q : gem_quotient(gem, opts)) {
        EXPECT_TRUE(is_symmetric(q.shunts));
    }
}

TEST(GemQuotient, NonBipartiteGemGivesEmptyList) {
    Gem gem;
    gem.as_graph = complete_graph(4);
    gem.tau = {std::vector<int>{1, 0, 3, 2}, std::vector<int>{2, 3, 0, 1}, std::vector<int>{3, 2, 1, 0}};
    gem.flags.resize(4);
    EXPECT_TRUE(gem_quotient(gem).empty());
}

}  // namespace
}  // namespace qwalk
