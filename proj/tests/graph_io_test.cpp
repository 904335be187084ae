#include <gtest/gtest.h>

#include <random>

#include "unipoly/graph_io.hpp"

using namespace unipoly;

TEST(Graph6, KnownStrings)
{
    EXPECT_EQ(to_graph6(PolytopeGraph(0)), "?");
    EXPECT_EQ(to_graph6(PolytopeGraph(1)), "@");
    EXPECT_EQ(to_graph6(complete_graph(2)), "A_");
    EXPECT_EQ(to_graph6(complete_graph(3)), "Bw");
    EXPECT_EQ(to_graph6(complete_graph(4)), "C~");
    EXPECT_EQ(to_graph6(complete_graph(5)), "D~{");
    EXPECT_EQ(to_graph6(PolytopeGraph(5)), "D??");
}

TEST(Graph6, ParsesKnownStrings)
{
    EXPECT_EQ(from_graph6("C~"), complete_graph(4));
    EXPECT_EQ(from_graph6("D~{"), complete_graph(5));
    EXPECT_EQ(from_graph6(">>graph6<<Bw\n"), complete_graph(3));
    EXPECT_EQ(from_graph6("?").vertex_count(), 0u);
}

TEST(Graph6, LongSizeFieldRoundTrips)
{
    for (std::size_t n : {62u, 63u, 64u, 200u}) {
        PolytopeGraph g = cycle_graph(n);
        const auto text = to_graph6(g);
        if (n >= 63) {
            EXPECT_EQ(text[0], '~');
        }
        EXPECT_EQ(from_graph6(text), g) << n;
    }
}

TEST(Graph6, RandomRoundTrip)
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const auto n = static_cast<std::size_t>(rng() % 20);
        PolytopeGraph g(n);
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v)
                if (rng() % 2)
                    g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
        EXPECT_EQ(from_graph6(to_graph6(g)), g);
    }
}

TEST(Graph6, RejectsMalformed)
{
    for (const char* bad : {"", "C", "C~~", "A~", " C~", "~", "~?", "C\x01", "B{"})
        EXPECT_THROW(from_graph6(bad), std::invalid_argument) << bad;
}

TEST(GraphJson, RoundTrip)
{
    const auto g = wheel_graph(6);
    const auto j = graph_to_json(g);
    EXPECT_EQ(j["n"], 6);
    EXPECT_EQ(j["edges"].size(), g.edge_count());
    EXPECT_EQ(graph_from_json(j), g);
    EXPECT_EQ(graph_from_json(nlohmann::json::parse(j.dump())), g);
}

TEST(GraphJson, RejectsMalformed)
{
    EXPECT_THROW(graph_from_json(nlohmann::json::parse(R"({"edges":[]})")), std::invalid_argument);
    EXPECT_THROW(graph_from_json(nlohmann::json::parse(R"({"n":2,"edges":[[0,2]]})")), std::invalid_argument);
    EXPECT_THROW(graph_from_json(nlohmann::json::parse(R"({"n":2,"edges":[[0]]})")), std::invalid_argument);
}
