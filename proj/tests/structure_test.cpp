#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "enumerators.hpp"
#include "unipoly/chord_diagram.hpp"
#include "unipoly/structure.hpp"

using namespace unipoly;
using unipoly::testing::all_dissections;

namespace {

PolytopeGraph three_triangles_plus(std::size_t isolated)
{
    PolytopeGraph g(9 + isolated);
    for (Vertex base : {0, 3, 6})
        for (auto [u, v] : {Edge{0, 1}, {1, 2}, {0, 2}})
            g.add_edge(base + u, base + v);
    return g;
}

// Articulation points by deletion: v separates if removing it increases the
// number of components among the remaining vertices.
std::vector<Vertex> cut_vertices_by_deletion(const PolytopeGraph& g)
{
    const auto n = g.vertex_count();
    const auto base = connected_components(g).size();
    std::vector<Vertex> out;
    for (std::size_t v = 0; v < n; ++v) {
        std::vector<Vertex> keep;
        for (std::size_t u = 0; u < n; ++u)
            if (u != v)
                keep.push_back(static_cast<Vertex>(u));
        if (connected_components(g.induced(keep)).size() > base - (g.degree(static_cast<Vertex>(v)) == 0 ? 1 : 0))
            out.push_back(static_cast<Vertex>(v));
    }
    return out;
}

bool has_cycle(const PolytopeGraph& g)
{
    return g.edge_count() + connected_components(g).size() > g.vertex_count();
}

}  // namespace

TEST(Decompose, ThreeTrianglesAndFiveIsolated)
{
    const auto d = decompose(three_triangles_plus(5));
    EXPECT_EQ(d.z_set.size(), 5u);
    EXPECT_TRUE(d.y_set.empty());
    EXPECT_EQ(d.b_vertices.size(), 9u);
    EXPECT_EQ(d.b_graph.edge_count(), 9u);
    EXPECT_EQ(d.cyclic_component_count, 3u);
    EXPECT_EQ(d.cyclic_block_count(), 3u);
    EXPECT_TRUE(d.separating_in_g.empty());
    for (const auto& b : d.blocks) {
        EXPECT_TRUE(b.cyclic);
        EXPECT_EQ(b.vertices.size(), 3u);
    }
}

TEST(Decompose, SixCycle)
{
    const auto d = decompose(cycle_graph(6));
    EXPECT_TRUE(d.z_set.empty());
    EXPECT_TRUE(d.y_set.empty());
    EXPECT_EQ(d.b_graph, cycle_graph(6));
    ASSERT_EQ(d.blocks.size(), 1u);
    EXPECT_TRUE(d.blocks[0].cyclic);
    EXPECT_EQ(d.cyclic_component_count, 1u);
}

TEST(Decompose, Star)
{
    const auto d = decompose(complete_bipartite_graph(1, 3));
    EXPECT_TRUE(d.z_set.empty());
    EXPECT_EQ(d.y_set.size(), 3u);
    EXPECT_EQ(d.b_vertices, (std::vector<Vertex>{0}));
    EXPECT_EQ(d.b_graph.edge_count(), 0u);
    EXPECT_EQ(d.cyclic_component_count, 0u);
    EXPECT_EQ(d.tree_component_count, 1u);
    EXPECT_EQ(d.blocks.size(), 3u);
    EXPECT_EQ(d.endblocks.size(), 3u);
    EXPECT_EQ(d.separating_in_g, (std::vector<Vertex>{0}));
}

TEST(Decompose, SeparatingInGVersusB)
{
    // Triangle 0,1,2 with a pendant at 2 and a path 0-4-5.
    PolytopeGraph g(7);
    for (auto [u, v] : {Edge{0, 1}, {1, 2}, {0, 2}, {2, 3}, {0, 4}, {4, 5}})
        g.add_edge(u, v);
    const auto d = decompose(g);
    EXPECT_EQ(d.z_set, (std::vector<Vertex>{6}));
    EXPECT_EQ(d.y_set, (std::vector<Vertex>{3, 5}));
    EXPECT_EQ(d.b_vertices, (std::vector<Vertex>{0, 1, 2, 4}));
    EXPECT_EQ(d.separating_in_g, (std::vector<Vertex>{0, 2, 4}));
    EXPECT_EQ(d.separating_in_b, (std::vector<Vertex>{0}));
    EXPECT_EQ(d.b_blocks.size(), 2u);
    EXPECT_EQ(d.endblocks.size(), 2u);
}

TEST(Decompose, InvariantsOnAllSmallChordGraphs)
{
    for (int n = 3; n <= 9; ++n)
        for (const auto& cd : all_dissections(n)) {
            const auto g = chord_graph(cd);
            const auto d = decompose(g);

            std::vector<Vertex> all = d.z_set;
            all.insert(all.end(), d.y_set.begin(), d.y_set.end());
            all.insert(all.end(), d.b_vertices.begin(), d.b_vertices.end());
            std::sort(all.begin(), all.end());
            ASSERT_EQ(all.size(), static_cast<std::size_t>(n));
            for (int v = 0; v < n; ++v)
                ASSERT_EQ(all[static_cast<std::size_t>(v)], v);

            std::size_t block_edges = 0;
            for (const auto& b : d.blocks) {
                block_edges += b.edges.size();
                if (b.cyclic)
                    ASSERT_GE(b.vertices.size(), 3u);
                else
                    ASSERT_EQ(b.edges.size(), 1u);
            }
            ASSERT_EQ(block_edges, g.edge_count());

            ASSERT_EQ(d.separating_in_g, cut_vertices_by_deletion(g)) << cd.to_string();
            ASSERT_EQ(d.separating_in_b, [&] {
                std::vector<Vertex> out;
                for (Vertex v : cut_vertices_by_deletion(d.b_graph))
                    out.push_back(d.b_vertices[static_cast<std::size_t>(v)]);
                return out;
            }()) << cd.to_string();

            std::size_t cyclic = 0;
            for (const auto& comp : connected_components(g))
                cyclic += has_cycle(g.induced(comp)) ? 1 : 0;
            ASSERT_EQ(d.cyclic_component_count, cyclic);
            ASSERT_EQ(count_cyclic_components(g), cyclic);

            if (d.b_blocks.size() >= 2) {
                ASSERT_GE(d.b_endblocks.size(), 2u) << cd.to_string();
            }
        }
}

TEST(Caterpillar, Examples)
{
    EXPECT_EQ(recognize_caterpillar(path_graph(5)), (Caterpillar{{2, 2, 2}}));
    EXPECT_EQ(recognize_caterpillar(complete_bipartite_graph(1, 4)), (Caterpillar{{4}}));
    EXPECT_EQ(recognize_caterpillar(PolytopeGraph(1)), (Caterpillar{{0}}));
    EXPECT_EQ(recognize_caterpillar(path_graph(2)), (Caterpillar{{1}}));

    PolytopeGraph spider(7);
    for (auto [u, v] : {Edge{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}})
        spider.add_edge(u, v);
    EXPECT_FALSE(recognize_caterpillar(spider));
    EXPECT_FALSE(recognize_caterpillar(cycle_graph(4)));
    EXPECT_FALSE(recognize_caterpillar(disjoint_union(path_graph(2), path_graph(2))));
}

TEST(Caterpillar, ReportsLeastOrientation)
{
    // Spine 0-1-2 with 3, 1 and 0 extra leaves: degrees 4,3,2 read backwards is 2,3,4.
    PolytopeGraph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    auto add_leaf = [&g](Vertex at) {
        PolytopeGraph h(g.vertex_count() + 1);
        for (auto [u, v] : g.edges())
            h.add_edge(u, v);
        h.add_edge(at, static_cast<Vertex>(g.vertex_count()));
        g = h;
    };
    for (int i = 0; i < 3; ++i)
        add_leaf(0);
    add_leaf(1);
    add_leaf(2);
    const auto c = recognize_caterpillar(g);
    ASSERT_TRUE(c);
    EXPECT_EQ(c->spine_degrees.front(), std::min(c->spine_degrees.front(), c->spine_degrees.back()));
    EXPECT_EQ(c->spine_degrees, (std::vector<int>{2, 3, 4}));
}

TEST(CyclicComponents, Examples)
{
    EXPECT_EQ(count_cyclic_components(three_triangles_plus(0)), 3u);
    EXPECT_EQ(count_cyclic_components(path_graph(6)), 0u);
    EXPECT_EQ(count_cyclic_components(disjoint_union(disjoint_union(cycle_graph(4), cycle_graph(3)), path_graph(2))), 2u);
    EXPECT_EQ(count_cyclic_components(PolytopeGraph(0)), 0u);
}

TEST(BlockBound, Examples)
{
    const auto exc = check_block_bound(decompose(three_triangles_plus(5)), 5);
    EXPECT_EQ(exc.block_excess, 3);
    EXPECT_EQ(exc.block_rhs, 5);
    EXPECT_TRUE(exc.block_holds);
    EXPECT_EQ(exc.k, 3);
    EXPECT_FALSE(exc.violated());

    PolytopeGraph tri(6);
    for (auto [u, v] : {Edge{0, 1}, {1, 2}, {0, 2}})
        tri.add_edge(u, v);
    const auto one = check_block_bound(decompose(tri), 3);
    EXPECT_EQ(one.block_rhs, 3);
    EXPECT_TRUE(one.block_holds);

    const auto seven = check_block_bound(decompose(disjoint_union(cycle_graph(7), PolytopeGraph(3))), 3);
    EXPECT_EQ(seven.block_rhs, 7);
    EXPECT_FALSE(seven.block_holds);
    EXPECT_TRUE(seven.violated());
    EXPECT_TRUE(seven.cyclic_applicable);
    EXPECT_FALSE(seven.cyclic_holds);
}

// The bounds are consequences of the chord model itself, so they hold on every
// dissection where they apply.
TEST(BlockBound, HoldsOnEveryDissection)
{
    for (int n = 3; n <= 10; ++n)
        for (const auto& cd : all_dissections(n)) {
            const auto d = decompose(chord_graph(cd));
            const auto r = check_block_bound(d, d.z_set.size());
            ASSERT_FALSE(r.violated()) << cd.to_string() << " " << bound_report_to_json(r).dump();
            ASSERT_EQ(r.p, n + 1);
        }
}

TEST(StructureJson, Fields)
{
    const auto d = decompose(three_triangles_plus(5));
    const auto j = decomposition_to_json(d);
    EXPECT_EQ(j["z_set"].size(), 5u);
    EXPECT_EQ(j["cyclic_component_count"], 3);
    EXPECT_EQ(j["blocks"].size(), 3u);
    const auto r = bound_report_to_json(check_block_bound(d, 5));
    EXPECT_EQ(r["violated"], false);
}
