#include "fixtures.hpp"

#include <stdexcept>

namespace unipoly::testing {

namespace {

// Smallest rim with at least `isolated` spare vertices that takes the graph.
ChordDiagram place(std::size_t vertices, std::vector<Edge> edges, int isolated = 4)
{
    const PolytopeGraph g(vertices, std::move(edges));
    const int n = static_cast<int>(vertices);
    for (int rim = n + isolated; rim <= 3 * n + isolated; ++rim)
        if (auto cd = layout(g, rim); cd && static_cast<int>(chord_degree_sequence(*cd).zeros()) >= isolated)
            return *cd;
    throw std::logic_error("fixture has no rim layout");
}

}  // namespace

std::vector<RuleFixture> rule_fixtures()
{
    std::vector<RuleFixture> out;
    // Triangle and a separate edge.
    out.push_back({RewriteRule::AcyclicBlockMerge, place(5, {{0, 1}, {1, 2}, {0, 2}, {3, 4}})});
    // C4 and a star K1,3.
    out.push_back({RewriteRule::CaterpillarAbsorb, place(8, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}, {4, 6}, {4, 7}})});
    // C4 with a pendant.
    out.push_back({RewriteRule::PendantRotate, place(5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}})});
    // Fan-triangulated hexagon with leaves at 2, 4 and 5.
    out.push_back({RewriteRule::HexagonDiagonalFlip,
                   place(9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {0, 2}, {0, 3}, {0, 4}, {2, 6}, {4, 7}, {5, 8}})});
    // Hexagon split by 0-3 into two quadrilaterals, one leaf at every block vertex.
    out.push_back({RewriteRule::RegionBoundaryMove,
                   place(12, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {0, 3},
                              {0, 6}, {1, 7}, {2, 8}, {3, 9}, {4, 10}, {5, 11}})});
    // Pentagon with diagonal 0-2, leaves at 0 and 2.
    out.push_back({RewriteRule::PentagonCaseMove,
                   place(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 2}, {0, 5}, {2, 6}})});
    // Triangle 0,1,2 hanging from 0 via 0-3; vertex 3 carries two leaves.
    out.push_back({RewriteRule::SpineDetach, place(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {3, 5}})});
    // Triangle 0,1,2 with a path 0-3-4-5.
    out.push_back({RewriteRule::PathTriangleSwap, place(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {4, 5}})});
    // C4 whose vertex 0 has a leaf and a neighbour 5 with two leaves; vertex 1 has a leaf.
    out.push_back({RewriteRule::PendantBulkTransfer,
                   place(9, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {0, 5}, {5, 6}, {5, 7}, {1, 8}})});
    // Diamond 0,1,2,3 (diagonal 1-3) joined at 0 to a vertex 4 with three leaves.
    out.push_back({RewriteRule::CornerSwap,
                   place(8, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {1, 3}, {0, 4}, {4, 5}, {4, 6}, {4, 7}})});
    // Triangles 0,1,2 and 4,5,6 joined by the path 0-3-4; leaves at 1 and 2.
    out.push_back({RewriteRule::TrianglePairSwap,
                   place(9, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {4, 5}, {5, 6}, {4, 6}, {1, 7}, {2, 8}})});
    // C4 with a neighbour 4 of vertex 0 carrying two leaves.
    out.push_back({RewriteRule::Degree2Swap, place(7, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {4, 5}, {4, 6}})});
    return out;
}

}  // namespace unipoly::testing
