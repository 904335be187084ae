#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "unipoly/graph.hpp"

namespace unipoly {

/// A block (maximal 2-connected subgraph or bridge). Cyclic iff it is not K2.
struct Block {
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    bool cyclic = false;
};

/// Blocks of a graph, with cut vertices and endblocks (blocks containing
/// exactly one cut vertex). Isolated vertices form no block.
struct BlockStructure {
    std::vector<Block> blocks;
    std::vector<Vertex> separating;
    std::vector<std::size_t> endblocks;
};

BlockStructure block_structure(const PolytopeGraph& g);

/// Split of a chord graph G into Z (degree 0), Y (degree 1) and B = G - Z - Y.
/// All vertex sets use G's labels and are sorted.
struct Decomposition {
    std::size_t vertex_count = 0;
    std::vector<Vertex> z_set;
    std::vector<Vertex> y_set;
    /// V(B); vertex i of b_graph is b_vertices[i].
    std::vector<Vertex> b_vertices;
    PolytopeGraph b_graph;

    /// Blocks of G and the vertices separating in G.
    std::vector<Block> blocks;
    std::vector<std::size_t> endblocks;
    std::vector<Vertex> separating_in_g;

    /// Blocks of B (in G's labels) and the vertices separating in B.
    std::vector<Block> b_blocks;
    std::vector<std::size_t> b_endblocks;
    std::vector<Vertex> separating_in_b;

    /// Components of G containing a cycle.
    std::size_t cyclic_component_count = 0;
    /// Components of G with at least one edge.
    std::size_t nontrivial_component_count = 0;
    /// Components of G with at least one edge and no cycle.
    std::size_t tree_component_count = 0;

    std::size_t cyclic_block_count() const noexcept;
};

Decomposition decompose(const PolytopeGraph& g);

/// Tree in which every vertex is within distance one of the spine path.
/// The one-vertex tree is reported with spine {0}.
struct Caterpillar {
    std::vector<int> spine_degrees;

    std::size_t length() const noexcept { return spine_degrees.size(); }
    friend bool operator==(const Caterpillar&, const Caterpillar&) = default;
};

/// Spine degrees in the lexicographically smaller orientation, or nullopt if
/// g is not a caterpillar (not a tree, disconnected, or a leafless path
/// skeleton that branches).
std::optional<Caterpillar> recognize_caterpillar(const PolytopeGraph& g);

std::size_t count_cyclic_components(const PolytopeGraph& g);

/// Passive record of the block-counting bounds on a chord graph with `a`
/// isolated vertices and p = |V(G)| + 1.
///
///   a >= 2 + sum over blocks (|V(B_j)| - 2)          always checked
///   p <= 2a + 2 + k                                   when G - Z is connected
///                                                     and |V(G - Z)| <= 3 +
///                                                     sum_cyclic (|V(B_j)| - 1)
///   a >= 3 + k                                        when some cyclic block
///                                                     has >= 4 vertices
///
/// with k the number of cyclic blocks of G.
struct BoundReport {
    long long p = 0;
    long long a = 0;
    long long k = 0;
    long long block_excess = 0;

    long long block_rhs = 0;
    bool block_holds = true;

    bool order_applicable = false;
    long long order_rhs = 0;
    bool order_holds = true;

    bool cyclic_applicable = false;
    long long cyclic_rhs = 0;
    bool cyclic_holds = true;

    bool violated() const noexcept
    {
        return !block_holds || (order_applicable && !order_holds) || (cyclic_applicable && !cyclic_holds);
    }
};

BoundReport check_block_bound(const Decomposition& d, std::size_t a);

nlohmann::json decomposition_to_json(const Decomposition& d);
nlohmann::json bound_report_to_json(const BoundReport& r);

}  // namespace unipoly
