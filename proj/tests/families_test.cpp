#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "unipoly/chord_diagram.hpp"
#include "unipoly/families.hpp"
#include "unipoly/structure.hpp"

using namespace unipoly;

namespace {

DegreeSequence seq(const char* text)
{
    return DegreeSequence::parse(text);
}

// Every spec the row constraints admit at order p, before deduplication.
std::vector<FamilySpec> sweep(int p)
{
    std::vector<FamilySpec> out;
    for (auto tag : {FamilyTag::B1, FamilyTag::B2, FamilyTag::B3, FamilyTag::D, FamilyTag::EXC}) {
        for (int x = 0; x <= p; ++x) {
            const auto spec = make_family_spec(tag, p, x);
            if (!spec_violation(spec) && std::find(out.begin(), out.end(), spec) == out.end())
                out.push_back(spec);
        }
    }
    for (int a = 0; a <= p; ++a)
        for (int x = 0; x <= 2 * p; ++x) {
            const auto spec = make_family_spec(FamilyTag::C, p, x, a);
            if (!spec_violation(spec))
                out.push_back(spec);
        }
    return out;
}

int count_of(const DegreeSequence& s, int value)
{
    return static_cast<int>(std::count(s.entries().begin(), s.entries().end(), value));
}

}  // namespace

TEST(FamilyTag, RoundTripsNames)
{
    for (auto tag : {FamilyTag::B1, FamilyTag::B2, FamilyTag::B3, FamilyTag::C, FamilyTag::D, FamilyTag::EXC})
        EXPECT_EQ(parse_family_tag(to_string(tag)), tag);
    EXPECT_FALSE(parse_family_tag("B4"));
    EXPECT_EQ(to_string(Scope::OutOfScopeA), "OUT_OF_SCOPE_A");
}

TEST(FamilySpec, RowConstraints)
{
    EXPECT_FALSE(spec_violation(make_family_spec(FamilyTag::B1, 10, 3)));
    EXPECT_TRUE(spec_violation(make_family_spec(FamilyTag::B1, 9, 3)));
    EXPECT_TRUE(spec_violation(make_family_spec(FamilyTag::B1, 10, 4)));
    EXPECT_TRUE(spec_violation(make_family_spec(FamilyTag::B1, 10, 2)));
    EXPECT_FALSE(spec_violation(make_family_spec(FamilyTag::B2, 15)));
    EXPECT_TRUE(spec_violation(make_family_spec(FamilyTag::B2, 14)));
    EXPECT_TRUE(spec_violation(make_family_spec(FamilyTag::B2, 11)));
    EXPECT_FALSE(spec_violation(make_family_spec(FamilyTag::B3, 22)));
    EXPECT_TRUE(spec_violation(make_family_spec(FamilyTag::B3, 17)));
    EXPECT_TRUE(spec_violation(make_family_spec(FamilyTag::B3, 23)));
    EXPECT_FALSE(spec_violation(make_family_spec(FamilyTag::C, 9, 3, 3)));
    EXPECT_TRUE(spec_violation(make_family_spec(FamilyTag::C, 9, 4, 3)));   // x even
    EXPECT_TRUE(spec_violation(make_family_spec(FamilyTag::C, 9, 1, 3)));   // below 1 + 2 ceil((a-2)/2)
    EXPECT_TRUE(spec_violation(make_family_spec(FamilyTag::C, 9, 5, 3)));   // above 2a - 3
    EXPECT_TRUE(spec_violation(make_family_spec(FamilyTag::C, 11, 3, 4)));  // a > p/3
    EXPECT_TRUE(spec_violation(make_family_spec(FamilyTag::C, 8, 3, 3)));   // a <= p/3 fails at p = 8
    EXPECT_FALSE(spec_violation(make_family_spec(FamilyTag::D, 12)));
    EXPECT_TRUE(spec_violation(make_family_spec(FamilyTag::D, 14)));
    EXPECT_FALSE(spec_violation(make_family_spec(FamilyTag::EXC, 15)));
    EXPECT_TRUE(spec_violation(make_family_spec(FamilyTag::EXC, 16)));
    EXPECT_EQ(make_family_spec(FamilyTag::EXC, 0).p, 15);
    EXPECT_EQ(make_family_spec(FamilyTag::B2, 15).a, 4);
    EXPECT_EQ(make_family_spec(FamilyTag::B3, 22).a, 5);
    EXPECT_EQ(make_family_spec(FamilyTag::D, 12).a, 3);
}

TEST(FamilySpec, DerivedParameters)
{
    const auto c = make_family_spec(FamilyTag::C, 9, 3, 3);
    EXPECT_EQ(family_y(c), 1);
    EXPECT_EQ(family_path_length(c), 2);
    const auto c2 = make_family_spec(FamilyTag::C, 20, 5, 5);
    EXPECT_EQ(family_y(c2), 3);
    EXPECT_EQ(family_path_length(c2), 7);
}

TEST(FamilySequence, DisplayedRows)
{
    EXPECT_EQ(family_sequence(make_family_spec(FamilyTag::B1, 10, 3)), seq("9,6,6,6,4,4,4,3,3,3"));
    EXPECT_EQ(family_sequence(make_family_spec(FamilyTag::B2, 15)), seq("14,7,7,7,7,4,4,4,4,4,4,3,3,3,3"));
    EXPECT_EQ(family_sequence(make_family_spec(FamilyTag::C, 9, 3, 3)), seq("8,6,5,5,5,4,3,3,3"));
    EXPECT_EQ(family_sequence(make_family_spec(FamilyTag::D, 12)), seq("11,6,6,6,6,4,4,4,4,3,3,3"));
    EXPECT_EQ(family_sequence(make_family_spec(FamilyTag::EXC, 15)), seq("14,5^9,3^5"));
    EXPECT_EQ(family_sequence(make_family_spec(FamilyTag::B3, 22)), seq("21,8^5,4^11,3^5"));
}

TEST(Classify, Examples)
{
    const auto check = [](const char* text, FamilySpec expected) {
        const auto m = classify(seq(text));
        EXPECT_EQ(m.scope, Scope::InScope) << text;
        EXPECT_TRUE(m.unigraphic()) << text;
        EXPECT_NE(std::find(m.matches.begin(), m.matches.end(), expected), m.matches.end()) << text;
    };
    check("14,7,7,7,7,4,4,4,4,4,4,3,3,3,3", make_family_spec(FamilyTag::B2, 15));
    check("9,6,6,6,4,4,4,3,3,3", make_family_spec(FamilyTag::B1, 10, 3));
    check("8,6,5,5,5,4,3,3,3", make_family_spec(FamilyTag::C, 9, 3, 3));
    check("11,6,6,6,6,4,4,4,4,3,3,3", make_family_spec(FamilyTag::D, 12));
    check("14,5,5,5,5,5,5,5,5,5,3,3,3,3,3", make_family_spec(FamilyTag::EXC, 15));
}

TEST(Classify, Scopes)
{
    const auto wheel = classify(seq("12,3^12"));
    EXPECT_TRUE(wheel.matches.empty());
    EXPECT_EQ(wheel.scope, Scope::OutOfScopeA);
    EXPECT_FALSE(wheel.unigraphic());

    EXPECT_EQ(sequence_scope(seq("5,4,4,3,3,3")), Scope::OutOfScopeP);   // a = 3, p = 6
    EXPECT_EQ(sequence_scope(seq("9,5,5,5,5,4,4,3,3,3")), Scope::InScope);
    EXPECT_EQ(sequence_scope(seq("8,4,4,4,4,4,4,4,4")), Scope::OutOfScopeA);  // a = 0
    EXPECT_EQ(sequence_scope(seq("9,6,6,6,4,4,4,3,3")), Scope::Infeasible);    // d1 != p-1
    EXPECT_EQ(sequence_scope(seq("9,6,6,6,4,4,4,3,3,2")), Scope::Infeasible);
    EXPECT_EQ(sequence_scope(seq("9,6,6,6,4,4,4,4,3,3")), Scope::Infeasible);  // odd sum
    EXPECT_EQ(classify(seq("9,5,5,5,5,4,4,3,3,3")).matches.size(), 0u);
}

TEST(Iterate, SmallOrders)
{
    EXPECT_TRUE(iterate_family_sequences(7).empty());
    EXPECT_TRUE(iterate_family_sequences(8).empty());

    const auto p9 = iterate_family_sequences(9);
    ASSERT_EQ(p9.size(), 1u);
    EXPECT_EQ(p9[0].second, make_family_spec(FamilyTag::C, 9, 3, 3));

    const auto p12 = iterate_family_sequences(12);
    std::vector<FamilySpec> specs;
    for (const auto& [s, spec] : p12)
        specs.push_back(spec);
    EXPECT_EQ(specs, (std::vector<FamilySpec>{make_family_spec(FamilyTag::B1, 12, 3),
                                              make_family_spec(FamilyTag::B1, 12, 4),
                                              make_family_spec(FamilyTag::C, 12, 3, 3),
                                              make_family_spec(FamilyTag::C, 12, 3, 4),
                                              make_family_spec(FamilyTag::C, 12, 5, 4),
                                              make_family_spec(FamilyTag::D, 12)}));
}

TEST(Iterate, MatchesIndependentSweep)
{
    for (int p = 7; p <= 40; ++p) {
        std::map<DegreeSequence, int> seen;
        for (const auto& spec : sweep(p))
            seen[family_sequence(spec)]++;
        const auto listed = iterate_family_sequences(p);
        ASSERT_EQ(listed.size(), seen.size()) << p;
        for (const auto& [s, spec] : listed) {
            ASSERT_EQ(family_sequence(spec), s);
            ASSERT_TRUE(seen.count(s));
        }
    }
}

// Classifier and constructor agree, and the row arithmetic gives the
// displayed exponents.
TEST(Construct, EveryRowUpToThirty)
{
    for (int p = 8; p <= 30; ++p)
        for (const auto& spec : sweep(p)) {
            const auto cd = construct(spec);
            const auto f = to_polytope(cd);
            const auto s = degree_sequence(f);
            ASSERT_EQ(s, family_sequence(spec)) << cd.to_string();
            ASSERT_TRUE(is_planar(f));
            ASSERT_TRUE(is_k_connected(f, 3));
            ASSERT_EQ(radius(f), 1);
            ASSERT_EQ(static_cast<int>(s.p()), p);
            ASSERT_EQ(static_cast<int>(s.a()), spec.a);
            const auto m = classify(s);
            ASSERT_NE(std::find(m.matches.begin(), m.matches.end(), spec), m.matches.end());
            if (spec.tag == FamilyTag::B1) {
                ASSERT_EQ(count_of(s, 4), p - 7) << p;
            }
        }
}

TEST(Construct, Examples)
{
    const auto b1 = construct(make_family_spec(FamilyTag::B1, 10, 3));
    EXPECT_EQ(chord_degree_sequence(b1).entries, (std::vector<int>{3, 3, 3, 1, 1, 1, 0, 0, 0}));

    const auto c = construct(make_family_spec(FamilyTag::C, 9, 3, 3));
    EXPECT_EQ(degree_sequence(to_polytope(c)), seq("8,6,5,5,5,4,3,3,3"));

    const auto exc = construct(make_family_spec(FamilyTag::EXC, 15));
    EXPECT_EQ(exc.rim(), 14);
    EXPECT_EQ(chord_degree_sequence(exc).entries, (std::vector<int>{2, 2, 2, 2, 2, 2, 2, 2, 2, 0, 0, 0, 0, 0}));
    const auto d = decompose(chord_graph(exc));
    EXPECT_EQ(d.cyclic_component_count, 3u);
    EXPECT_EQ(d.z_set.size(), 5u);
}

TEST(Construct, RejectsInvalidSpecs)
{
    try {
        construct(make_family_spec(FamilyTag::B2, 14));
        FAIL();
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("B2"), std::string::npos);
    }
    EXPECT_THROW(construct(make_family_spec(FamilyTag::C, 9, 4, 3)), std::invalid_argument);
    EXPECT_THROW(construct(make_family_spec(FamilyTag::EXC, 14)), std::invalid_argument);
}

TEST(Structure, MinimumOrderShapes)
{
    const auto chord_g = [](FamilySpec spec) { return chord_graph(construct(spec)); };

    // B1: one triangle block, every other block a pendant edge.
    {
        const auto d = decompose(chord_g(make_family_spec(FamilyTag::B1, 10, 3)));
        EXPECT_EQ(d.cyclic_block_count(), 1u);
        EXPECT_EQ(d.nontrivial_component_count, 1u);
        EXPECT_EQ(d.z_set.size(), 3u);
        EXPECT_EQ(d.b_vertices.size(), 3u);
        EXPECT_EQ(d.b_graph.edge_count(), 3u);
    }
    // B2: B is the diamond.
    {
        const auto d = decompose(chord_g(make_family_spec(FamilyTag::B2, 15)));
        EXPECT_EQ(d.cyclic_block_count(), 1u);
        EXPECT_EQ(d.b_vertices.size(), 4u);
        EXPECT_EQ(d.b_graph.edge_count(), 5u);
        EXPECT_EQ(d.z_set.size(), 4u);
    }
    // B3: B is a triangulated pentagon.
    {
        const auto d = decompose(chord_g(make_family_spec(FamilyTag::B3, 22)));
        EXPECT_EQ(d.cyclic_block_count(), 1u);
        EXPECT_EQ(d.b_vertices.size(), 5u);
        EXPECT_EQ(d.b_graph.edge_count(), 7u);
        EXPECT_EQ(d.z_set.size(), 5u);
    }
    // D: triangle plus one bridge between core vertices; all four cores equal.
    {
        const auto spec = make_family_spec(FamilyTag::D, 12);
        const auto g = chord_g(spec);
        const auto d = decompose(g);
        EXPECT_EQ(d.cyclic_block_count(), 1u);
        EXPECT_EQ(d.b_vertices.size(), 4u);
        EXPECT_EQ(d.b_graph.edge_count(), 4u);
        EXPECT_EQ(d.b_blocks.size(), 2u);
        for (Vertex v : d.b_vertices)
            EXPECT_EQ(static_cast<int>(g.degree(v)), spec.p / 4);
    }
    // EXC: three triangle components.
    {
        const auto d = decompose(chord_g(make_family_spec(FamilyTag::EXC, 15)));
        EXPECT_EQ(d.cyclic_component_count, 3u);
        EXPECT_EQ(d.nontrivial_component_count, 3u);
        for (const auto& b : d.blocks)
            EXPECT_EQ(b.vertices.size(), 3u);
    }
}

// C: triangles at u and v joined by a u-v path of length p - 3a + 2.
TEST(Structure, BouquetsJoinedByPath)
{
    for (int p = 9; p <= 24; ++p)
        for (const auto& spec : sweep(p)) {
            if (spec.tag != FamilyTag::C)
                continue;
            const auto g = chord_graph(construct(spec));
            const auto d = decompose(g);
            ASSERT_EQ(d.nontrivial_component_count, 1u);
            ASSERT_EQ(d.z_set.size(), static_cast<std::size_t>(spec.a));
            const auto triangles = static_cast<std::size_t>((spec.x - 1) / 2 + (family_y(spec) - 1) / 2);
            ASSERT_EQ(d.cyclic_block_count(), triangles);
            std::size_t bridges = 0;
            for (const auto& b : d.blocks) {
                if (b.cyclic)
                    ASSERT_EQ(b.vertices.size(), 3u);
                else
                    ++bridges;
            }
            ASSERT_EQ(bridges, static_cast<std::size_t>(family_path_length(spec)));
            // u has chord degree x and v has y.
            std::vector<int> degs;
            for (std::size_t v = 0; v < g.vertex_count(); ++v)
                degs.push_back(static_cast<int>(g.degree(static_cast<Vertex>(v))));
            ASSERT_NE(std::find(degs.begin(), degs.end(), spec.x), degs.end());
            ASSERT_NE(std::find(degs.begin(), degs.end(), family_y(spec)), degs.end());
            ASSERT_TRUE(std::all_of(degs.begin(), degs.end(), [&](int k) {
                return k == 0 || k == 2 || k == spec.x || k == family_y(spec);
            }));
        }
}

TEST(FamilyJson, Fields)
{
    const auto s = seq("8,6,5,5,5,4,3,3,3");
    const auto j = family_match_to_json(s, classify(s));
    EXPECT_EQ(j["p"], 9);
    EXPECT_EQ(j["a"], 3);
    EXPECT_EQ(j["scope"], "IN_SCOPE");
    EXPECT_EQ(j["unigraphic"], true);
    ASSERT_EQ(j["matches"].size(), 1u);
    EXPECT_EQ(j["matches"][0]["family"], "C");
}
