#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace unipoly {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1.
///
/// Neighbour lists are kept sorted, so two graphs built from the same edge
/// set compare equal regardless of insertion order. Loops, parallel edges and
/// out-of-range endpoints are rejected with std::invalid_argument.
class PolytopeGraph {
public:
    PolytopeGraph() = default;
    explicit PolytopeGraph(std::size_t vertex_count);
    PolytopeGraph(std::size_t vertex_count, std::span<const Edge> edges);

    std::size_t vertex_count() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }

    bool has_edge(Vertex u, Vertex v) const;
    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);

    const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
    std::size_t degree(Vertex v) const { return neighbors(v).size(); }

    /// Edges as (u, v) with u < v, sorted lexicographically.
    std::vector<Edge> edges() const;

    /// Graph with vertex v renamed to perm[v].
    PolytopeGraph relabeled(std::span<const Vertex> perm) const;

    /// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
    PolytopeGraph induced(std::span<const Vertex> vertices) const;

    friend bool operator==(const PolytopeGraph&, const PolytopeGraph&) = default;

private:
    void check_vertex(Vertex v) const;

    std::vector<std::vector<Vertex>> adjacency_;
    std::size_t edge_count_ = 0;
};

/// Degree multiset d_1 >= d_2 >= ... >= d_p.
class DegreeSequence {
public:
    DegreeSequence() = default;
    explicit DegreeSequence(std::vector<int> entries);

    /// Accepts "9,6,6,6,4,4,4,3,3,3", "9 6^3 4^3 3^3" and mixtures such as
    /// "14,5^9,3^5". Throws std::invalid_argument on malformed text.
    static DegreeSequence parse(std::string_view text);

    const std::vector<int>& entries() const noexcept { return entries_; }
    std::size_t p() const noexcept { return entries_.size(); }
    /// Number of entries equal to 3.
    std::size_t a() const noexcept;
    long long sum() const noexcept;
    bool even_sum() const noexcept { return sum() % 2 == 0; }
    bool empty() const noexcept { return entries_.empty(); }
    int operator[](std::size_t i) const { return entries_.at(i); }

    /// Comma form, e.g. "9,6,6,6,4,4,4,3,3,3".
    std::string to_string() const;
    /// Power form, e.g. "9 6^3 4^3 3^3".
    std::string to_power_string() const;

    friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;
    friend auto operator<=>(const DegreeSequence&, const DegreeSequence&) = default;

private:
    std::vector<int> entries_;
};

DegreeSequence degree_sequence(const PolytopeGraph& g);

/// Components ordered by their least vertex; each component sorted.
std::vector<std::vector<Vertex>> connected_components(const PolytopeGraph& g);
bool is_connected(const PolytopeGraph& g);

/// Exact planarity test.
bool is_planar(const PolytopeGraph& g);

/// True iff g has more than k vertices and no vertex cut of size < k.
bool is_k_connected(const PolytopeGraph& g, int k);

/// Minimum eccentricity. Throws std::domain_error("infinite radius") when g
/// is disconnected or empty.
int radius(const PolytopeGraph& g);

/// Vertices adjacent to every other vertex.
std::vector<Vertex> universal_vertices(const PolytopeGraph& g);

// Small named graphs, used by tests, benchmarks and the CLI.
PolytopeGraph complete_graph(std::size_t n);
PolytopeGraph cycle_graph(std::size_t n);
PolytopeGraph path_graph(std::size_t n);
/// Hub n-1 joined to the cycle 0..n-2.
PolytopeGraph wheel_graph(std::size_t n);
PolytopeGraph complete_bipartite_graph(std::size_t left, std::size_t right);
PolytopeGraph disjoint_union(const PolytopeGraph& a, const PolytopeGraph& b);

}  // namespace unipoly
