#include "unipoly/rewrites.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "unipoly/canonical.hpp"
#include "unipoly/oracle.hpp"
#include "unipoly/structure.hpp"

namespace unipoly {

namespace {

constexpr std::array kRules{
    RewriteRule::AcyclicBlockMerge,   RewriteRule::CaterpillarAbsorb, RewriteRule::PendantRotate,
    RewriteRule::HexagonDiagonalFlip, RewriteRule::RegionBoundaryMove, RewriteRule::PentagonCaseMove,
    RewriteRule::SpineDetach,         RewriteRule::PathTriangleSwap,  RewriteRule::PendantBulkTransfer,
    RewriteRule::CornerSwap,          RewriteRule::TrianglePairSwap,  RewriteRule::Degree2Swap,
};

Edge edge(Vertex u, Vertex v)
{
    return {std::min(u, v), std::max(u, v)};
}

bool contains(const std::vector<Vertex>& sorted, Vertex v)
{
    return std::binary_search(sorted.begin(), sorted.end(), v);
}

// Everything a matcher looks at, computed once per diagram.
struct Context {
    explicit Context(const ChordDiagram& cd) : g(chord_graph(cd)), dec(decompose(g))
    {
        const auto n = g.vertex_count();
        component.assign(n, -1);
        const auto comps = connected_components(g);
        for (std::size_t c = 0; c < comps.size(); ++c)
            for (Vertex v : comps[c])
                component[static_cast<std::size_t>(v)] = static_cast<int>(c);
        components = comps;
        in_cyclic_block.assign(n, 0);
        for (const auto& b : dec.blocks)
            if (b.cyclic)
                for (Vertex v : b.vertices)
                    in_cyclic_block[static_cast<std::size_t>(v)] = 1;
    }

    bool leaf(Vertex v) const { return g.degree(v) == 1; }

    std::vector<Vertex> leaves_at(Vertex v) const
    {
        std::vector<Vertex> out;
        for (Vertex w : g.neighbors(v))
            if (leaf(w))
                out.push_back(w);
        return out;
    }

    std::size_t non_leaf_neighbours(Vertex v) const
    {
        return g.degree(v) - leaves_at(v).size();
    }

    /// B as a single 2-connected block, if it is one.
    const Block* b_single_block() const
    {
        if (dec.b_blocks.size() != 1 || !dec.b_blocks[0].cyclic ||
            dec.b_blocks[0].vertices.size() != dec.b_vertices.size())
            return nullptr;
        return &dec.b_blocks[0];
    }

    PolytopeGraph g;
    Decomposition dec;
    std::vector<int> component;
    std::vector<std::vector<Vertex>> components;
    std::vector<char> in_cyclic_block;
};

// Vertex labels of a chord graph are rim positions, so a 2-connected block's
// boundary is its vertex list in increasing order. Faces come from cutting
// along diagonals.
void split_faces(const std::vector<Vertex>& poly, const PolytopeGraph& g, std::vector<std::vector<Vertex>>& out)
{
    const std::size_t m = poly.size();
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 2; b < m; ++b) {
            if (a == 0 && b == m - 1)
                continue;
            if (!g.has_edge(poly[a], poly[b]))
                continue;
            std::vector<Vertex> left(poly.begin() + static_cast<std::ptrdiff_t>(a),
                                     poly.begin() + static_cast<std::ptrdiff_t>(b) + 1);
            std::vector<Vertex> right(poly.begin() + static_cast<std::ptrdiff_t>(b), poly.end());
            right.insert(right.end(), poly.begin(), poly.begin() + static_cast<std::ptrdiff_t>(a) + 1);
            split_faces(left, g, out);
            split_faces(right, g, out);
            return;
        }
    out.push_back(poly);
}

std::vector<std::vector<Vertex>> block_faces(const Block& b, const PolytopeGraph& g)
{
    std::vector<std::vector<Vertex>> faces;
    split_faces(b.vertices, g, faces);
    return faces;
}

bool face_has_edge(const std::vector<Vertex>& face, Vertex u, Vertex v)
{
    const std::size_t m = face.size();
    for (std::size_t i = 0; i < m; ++i)
        if (edge(face[i], face[(i + 1) % m]) == edge(u, v))
            return true;
    return false;
}

// Neighbour of v along the face other than `other`.
Vertex face_neighbour(const std::vector<Vertex>& face, Vertex v, Vertex other)
{
    const std::size_t m = face.size();
    for (std::size_t i = 0; i < m; ++i)
        if (face[i] == v) {
            Vertex prev = face[(i + m - 1) % m], next = face[(i + 1) % m];
            return prev == other ? next : prev;
        }
    return -1;
}

// Pairs of faces sharing a diagonal (u, v).
struct FacePair {
    const std::vector<Vertex>* first;
    const std::vector<Vertex>* second;
    Vertex u, v;
};

std::vector<FacePair> adjacent_faces(const std::vector<std::vector<Vertex>>& faces, const Block& b)
{
    std::vector<FacePair> out;
    for (const auto& [u, v] : b.edges)
        for (std::size_t i = 0; i < faces.size(); ++i)
            for (std::size_t j = 0; j < faces.size(); ++j)
                if (i != j && face_has_edge(faces[i], u, v) && face_has_edge(faces[j], u, v))
                    out.push_back({&faces[i], &faces[j], u, v});
    return out;
}

// Cyclic order of a chordless cycle block.
std::vector<Vertex> cycle_order(const Block& b, const PolytopeGraph& g)
{
    std::vector<Vertex> order{b.vertices.front()};
    Vertex prev = -1;
    while (order.size() < b.vertices.size()) {
        Vertex cur = order.back(), next = -1;
        for (Vertex w : g.neighbors(cur))
            if (w != prev && contains(b.vertices, w)) {
                next = w;
                break;
            }
        prev = cur;
        order.push_back(next);
    }
    return order;
}

bool is_chordless_cycle(const Block& b)
{
    return b.cyclic && b.edges.size() == b.vertices.size();
}

bool is_triangulated(const Block& b)
{
    return b.cyclic && b.edges.size() == 2 * b.vertices.size() - 3;
}

Vertex block_cut_vertex(const Block& b, const std::vector<Vertex>& separating)
{
    Vertex cut = -1;
    for (Vertex v : b.vertices)
        if (std::find(separating.begin(), separating.end(), v) != separating.end())
            cut = v;
    return cut;
}

std::vector<Vertex> block_neighbours(const Block& b, Vertex v)
{
    std::vector<Vertex> out;
    for (const auto& [x, y] : b.edges) {
        if (x == v)
            out.push_back(y);
        else if (y == v)
            out.push_back(x);
    }
    return out;
}

using Swaps = std::vector<EdgeSwap>;

// G - ww' - u1ui + wu1 + uiw': splice a bridge of one component into a cycle of another.
void acyclic_block_merge(const Context& c, Swaps& out)
{
    for (const auto& cyc : c.dec.blocks) {
        if (!cyc.cyclic)
            continue;
        for (const auto& bridge : c.dec.blocks) {
            if (bridge.cyclic)
                continue;
            const auto [b0, b1] = bridge.edges.front();
            if (c.component[static_cast<std::size_t>(b0)] == c.component[static_cast<std::size_t>(cyc.vertices[0])])
                continue;
            for (const auto& [x, y] : cyc.edges)
                for (auto [u1, ui] : {Edge{x, y}, Edge{y, x}})
                    for (auto [w, w2] : {Edge{b0, b1}, Edge{b1, b0}})
                        out.push_back({{edge(w, w2), edge(u1, ui)}, {edge(w, u1), edge(ui, w2)}});
        }
    }
}

// A cycle component opened up and hung from a leaf at an end of a caterpillar's spine.
void caterpillar_absorb(const Context& c, Swaps& out)
{
    for (const auto& cyc : c.components) {
        if (cyc.size() < 3)
            continue;
        bool is_cycle = std::all_of(cyc.begin(), cyc.end(), [&](Vertex v) { return c.g.degree(v) == 2; });
        if (!is_cycle)
            continue;
        std::vector<Edge> cycle_edges;
        for (Vertex v : cyc)
            for (Vertex w : c.g.neighbors(v))
                if (v < w)
                    cycle_edges.emplace_back(v, w);
        for (const auto& tree : c.components) {
            if (tree.size() < 2)
                continue;
            const auto sub = c.g.induced(tree);
            if (sub.edge_count() + 1 != tree.size() || !recognize_caterpillar(sub))
                continue;
            for (Vertex y : tree) {
                if (!c.leaf(y))
                    continue;
                const Vertex end = c.g.neighbors(y).front();
                // The spine end has at most one non-leaf neighbour.
                if (tree.size() > 2 && c.non_leaf_neighbours(end) > 1)
                    continue;
                for (const auto& [x, z] : cycle_edges)
                    for (auto [u1, ui] : {Edge{x, z}, Edge{z, x}})
                        out.push_back({{edge(end, y), edge(ui, u1)}, {edge(end, u1), edge(ui, y)}});
            }
        }
    }
}

// G - yb1 - b2b3 + yb2 + b1b3 on a chordless cyclic block of length >= 4.
void pendant_rotate(const Context& c, Swaps& out)
{
    for (const auto& b : c.dec.blocks) {
        if (!is_chordless_cycle(b) || b.vertices.size() < 4)
            continue;
        const auto order = cycle_order(b, c.g);
        const std::size_t m = order.size();
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t step : {std::size_t{1}, m - 1}) {
                const Vertex b1 = order[i];
                const Vertex b2 = order[(i + step) % m];
                const Vertex b3 = order[(i + 2 * step) % m];
                for (Vertex y : c.leaves_at(b1))
                    out.push_back({{edge(y, b1), edge(b2, b3)}, {edge(y, b2), edge(b1, b3)}});
            }
    }
}

// Flip a diagonal of a triangulated B on >= 6 vertices and move one pendant
// from each new diagonal end to an old one.
void hexagon_diagonal_flip(const Context& c, Swaps& out)
{
    const Block* b = c.b_single_block();
    if (!b || b->vertices.size() < 6 || !is_triangulated(*b))
        return;
    const auto& vs = b->vertices;
    const std::size_t m = vs.size();
    for (const auto& [j1, j2] : b->edges) {
        auto i1 = std::lower_bound(vs.begin(), vs.end(), j1) - vs.begin();
        auto i2 = std::lower_bound(vs.begin(), vs.end(), j2) - vs.begin();
        if (i2 - i1 == 1 || (i1 == 0 && static_cast<std::size_t>(i2) == m - 1))
            continue;
        std::vector<Vertex> common;
        for (Vertex w : block_neighbours(*b, j1))
            if (c.g.has_edge(w, j2) && contains(vs, w))
                common.push_back(w);
        if (common.size() != 2)
            continue;
        for (auto [j3, j4] : {Edge{common[0], common[1]}, Edge{common[1], common[0]}})
            for (Vertex y3 : c.leaves_at(j3))
                for (Vertex y4 : c.leaves_at(j4))
                    out.push_back({{edge(j1, j2), edge(y3, j3), edge(y4, j4)},
                                   {edge(j3, j4), edge(y3, j1), edge(y4, j2)}});
    }
}

// Across a diagonal j1j2 bounding a region of size >= 4: replace it by j1j3
// and move a pendant of j3 to j2.
void region_boundary_move(const Context& c, Swaps& out)
{
    const Block* b = c.b_single_block();
    if (!b || is_chordless_cycle(*b) || is_triangulated(*b))
        return;
    const auto faces = block_faces(*b, c.g);
    for (const auto& fp : adjacent_faces(faces, *b)) {
        const auto& r1 = *fp.first;
        if (r1.size() < 4 || r1.size() < fp.second->size())
            continue;
        for (auto [j1, j2] : {Edge{fp.u, fp.v}, Edge{fp.v, fp.u}}) {
            const Vertex j3 = face_neighbour(r1, j2, j1);
            for (Vertex y : c.leaves_at(j3))
                out.push_back({{edge(j1, j2), edge(y, j3)}, {edge(j1, j3), edge(y, j2)}});
        }
    }
}

// Quadrilateral j1j2j3j4 and triangle j4j5j1 sharing j1j4:
// G - j3j4 + j1j3 - yj1 + yj4.
void pentagon_case_move(const Context& c, Swaps& out)
{
    for (const auto& b : c.dec.blocks) {
        if (!b.cyclic || b.vertices.size() < 5)
            continue;
        const auto faces = block_faces(b, c.g);
        for (const auto& fp : adjacent_faces(faces, b)) {
            if (fp.first->size() != 4 || fp.second->size() != 3)
                continue;
            for (auto [j1, j4] : {Edge{fp.u, fp.v}, Edge{fp.v, fp.u}}) {
                const Vertex j3 = face_neighbour(*fp.first, j4, j1);
                for (Vertex y : c.leaves_at(j1))
                    out.push_back({{edge(j3, j4), edge(y, j1)}, {edge(j1, j3), edge(y, j4)}});
            }
        }
    }
}

// G - yc1 + c1u1 - u1u2 + u2y: c1 leaves the spine and joins an endblock.
void spine_detach(const Context& c, Swaps& out)
{
    for (std::size_t v = 0; v < c.g.vertex_count(); ++v) {
        const auto c1 = static_cast<Vertex>(v);
        if (c.in_cyclic_block[v] || c.g.degree(c1) < 3)
            continue;
        const auto leaves = c.leaves_at(c1);
        if (leaves.empty())
            continue;
        for (const auto& b1 : c.dec.blocks) {
            if (!b1.cyclic)
                continue;
            auto cuts = std::count_if(b1.vertices.begin(), b1.vertices.end(),
                                      [&](Vertex x) { return contains(c.dec.separating_in_g, x); });
            if (cuts != 1)
                continue;
            const Vertex u = block_cut_vertex(b1, c.dec.separating_in_g);
            for (const auto& [x, z] : b1.edges) {
                if (x == u || z == u)
                    continue;
                for (auto [u1, u2] : {Edge{x, z}, Edge{z, x}})
                    for (Vertex y : leaves)
                        out.push_back({{edge(y, c1), edge(u1, u2)}, {edge(c1, u1), edge(u2, y)}});
            }
        }
    }
}

// Path u c1 c2 c3 leaving a cyclic block at u, with c1, c2 of degree two:
// G - c2c3 + c2u + c3w - wu closes the triangle u c1 c2.
void path_triangle_swap(const Context& c, Swaps& out)
{
    for (const auto& b1 : c.dec.blocks) {
        if (!b1.cyclic)
            continue;
        for (Vertex u : b1.vertices)
            for (Vertex c1 : c.g.neighbors(u)) {
                if (contains(b1.vertices, c1) || c.g.degree(c1) != 2)
                    continue;
                for (Vertex c2 : c.g.neighbors(c1)) {
                    if (c2 == u || contains(b1.vertices, c2) || c.g.degree(c2) != 2)
                        continue;
                    for (Vertex c3 : c.g.neighbors(c2)) {
                        if (c3 == c1)
                            continue;
                        for (Vertex w : block_neighbours(b1, u))
                            out.push_back({{edge(c2, c3), edge(w, u)}, {edge(c2, u), edge(c3, w)}});
                    }
                }
            }
    }
}

// G - w1'y1' - ... - w1'yi' + yy1' + ... + yyi': a vertex with one
// non-leaf neighbour hands all its leaves to a leaf elsewhere.
void pendant_bulk_transfer(const Context& c, Swaps& out)
{
    for (std::size_t v = 0; v < c.g.vertex_count(); ++v) {
        const auto w = static_cast<Vertex>(v);
        const auto leaves = c.leaves_at(w);
        if (leaves.empty() || c.non_leaf_neighbours(w) != 1)
            continue;
        for (std::size_t t = 0; t < c.g.vertex_count(); ++t) {
            const auto y = static_cast<Vertex>(t);
            if (!c.leaf(y) || c.g.neighbors(y).front() == w || y == w)
                continue;
            EdgeSwap s;
            for (Vertex l : leaves) {
                s.remove.push_back(edge(w, l));
                s.add.push_back(edge(y, l));
            }
            out.push_back(std::move(s));
        }
    }
}

// A triangulated 4- or 5-vertex endblock of B whose cut vertex w0 has two
// block neighbours w1, w2, and a vertex u with two leaves y1, y2:
// G - uy1 - uy2 + uw1 + uw2 - w0w1 - w0w2 + w0y1 + w0y2.
void corner_swap(const Context& c, Swaps& out)
{
    for (std::size_t bi : c.dec.b_endblocks) {
        const auto& b = c.dec.b_blocks[bi];
        const auto m = b.vertices.size();
        if ((m != 4 && m != 5) || !is_triangulated(b))
            continue;
        const Vertex w0 = block_cut_vertex(b, c.dec.separating_in_b);
        if (w0 < 0)
            continue;
        const auto nb = block_neighbours(b, w0);
        if (nb.size() != 2)
            continue;
        const Vertex w1 = nb[0], w2 = nb[1];
        for (std::size_t v = 0; v < c.g.vertex_count(); ++v) {
            const auto u = static_cast<Vertex>(v);
            if (contains(b.vertices, u) || c.component[v] != c.component[static_cast<std::size_t>(w0)])
                continue;
            const auto leaves = c.leaves_at(u);
            for (std::size_t i = 0; i < leaves.size(); ++i)
                for (std::size_t j = i + 1; j < leaves.size(); ++j) {
                    const Vertex y1 = leaves[i], y2 = leaves[j];
                    out.push_back({{edge(u, y1), edge(u, y2), edge(w0, w1), edge(w0, w2)},
                                   {edge(u, w1), edge(u, w2), edge(w0, y1), edge(w0, y2)}});
                }
        }
    }
}

// Two triangle endblocks (w0 w1 w2), (w0' w1' w2') with leaves y1 at w1 and
// y2 at w2: G - w1y1 - w2y2 + w1w2' + w2w2' - w0'w2' - w1'w2' + w1'y1 + w0'y2.
void triangle_pair_swap(const Context& c, Swaps& out)
{
    std::vector<const Block*> triangles;
    for (std::size_t bi : c.dec.b_endblocks)
        if (c.dec.b_blocks[bi].vertices.size() == 3)
            triangles.push_back(&c.dec.b_blocks[bi]);
    auto corners = [&](const Block& t) {
        const Vertex cut = block_cut_vertex(t, c.dec.separating_in_b);
        std::vector<Vertex> rest;
        for (Vertex v : t.vertices)
            if (v != cut)
                rest.push_back(v);
        return std::pair{cut, rest};
    };
    for (const Block* t : triangles)
        for (const Block* t2 : triangles) {
            if (t == t2)
                continue;
            auto [w0, rest] = corners(*t);
            auto [v0, rest2] = corners(*t2);
            if (w0 < 0 || v0 < 0)
                continue;
            for (auto [w1, w2] : {Edge{rest[0], rest[1]}, Edge{rest[1], rest[0]}})
                for (auto [v1, v2] : {Edge{rest2[0], rest2[1]}, Edge{rest2[1], rest2[0]}})
                    for (Vertex y1 : c.leaves_at(w1))
                        for (Vertex y2 : c.leaves_at(w2))
                            out.push_back({{edge(w1, y1), edge(w2, y2), edge(v0, v2), edge(v1, v2)},
                                           {edge(w1, v2), edge(w2, v2), edge(v1, y1), edge(v0, y2)}});
        }
}

// v with l >= 2 leaves and one other neighbour; w of degree two on a cyclic
// block takes l - 1 of them, swapping the two degrees.
void degree2_swap(const Context& c, Swaps& out)
{
    for (std::size_t a = 0; a < c.g.vertex_count(); ++a) {
        const auto v = static_cast<Vertex>(a);
        const auto leaves = c.leaves_at(v);
        if (leaves.size() < 2 || c.non_leaf_neighbours(v) != 1)
            continue;
        for (std::size_t b = 0; b < c.g.vertex_count(); ++b) {
            const auto w = static_cast<Vertex>(b);
            if (w == v || !c.in_cyclic_block[b] || c.g.degree(w) != 2)
                continue;
            EdgeSwap s;
            for (std::size_t k = 0; k + 1 < leaves.size(); ++k) {
                s.remove.push_back(edge(v, leaves[k]));
                s.add.push_back(edge(w, leaves[k]));
            }
            out.push_back(std::move(s));
        }
    }
}

Swaps matches(const Context& c, RewriteRule rule)
{
    Swaps out;
    switch (rule) {
    case RewriteRule::AcyclicBlockMerge: acyclic_block_merge(c, out); break;
    case RewriteRule::CaterpillarAbsorb: caterpillar_absorb(c, out); break;
    case RewriteRule::PendantRotate: pendant_rotate(c, out); break;
    case RewriteRule::HexagonDiagonalFlip: hexagon_diagonal_flip(c, out); break;
    case RewriteRule::RegionBoundaryMove: region_boundary_move(c, out); break;
    case RewriteRule::PentagonCaseMove: pentagon_case_move(c, out); break;
    case RewriteRule::SpineDetach: spine_detach(c, out); break;
    case RewriteRule::PathTriangleSwap: path_triangle_swap(c, out); break;
    case RewriteRule::PendantBulkTransfer: pendant_bulk_transfer(c, out); break;
    case RewriteRule::CornerSwap: corner_swap(c, out); break;
    case RewriteRule::TrianglePairSwap: triangle_pair_swap(c, out); break;
    case RewriteRule::Degree2Swap: degree2_swap(c, out); break;
    }
    std::erase_if(out, [&](const EdgeSwap& s) { return !apply_swap(c.g, s); });
    return out;
}

// Backtracking over rim orders. A vertex may only be placed when every vertex
// between it and its earliest placed neighbour is already saturated, which
// keeps all chords non-crossing.
class RimLayout {
public:
    explicit RimLayout(const PolytopeGraph& g) : g_(g), n_(static_cast<int>(g.vertex_count()))
    {
        const auto n = g.vertex_count();
        pos_.assign(n, -1);
        open_.resize(n);
        for (std::size_t v = 0; v < n; ++v)
            open_[v] = static_cast<int>(g.degree(static_cast<Vertex>(v)));
        twin_.assign(n, std::vector<char>(n, 0));
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v) {
                auto nu = g.neighbors(static_cast<Vertex>(u)), nv = g.neighbors(static_cast<Vertex>(v));
                std::erase(nu, static_cast<Vertex>(v));
                std::erase(nv, static_cast<Vertex>(u));
                twin_[u][v] = twin_[v][u] = nu == nv;
            }
    }

    std::optional<std::vector<Vertex>> run()
    {
        Vertex first = 0;
        for (Vertex v = 1; v < n_; ++v)
            if (g_.degree(v) > g_.degree(first))
                first = v;
        put(first, 0);
        if (place(1))
            return order_;
        return std::nullopt;
    }

private:
    void put(Vertex w, int k)
    {
        pos_[static_cast<std::size_t>(w)] = k;
        order_.push_back(w);
        for (Vertex x : g_.neighbors(w))
            --open_[static_cast<std::size_t>(x)];
    }

    void take(Vertex w)
    {
        pos_[static_cast<std::size_t>(w)] = -1;
        order_.pop_back();
        for (Vertex x : g_.neighbors(w))
            ++open_[static_cast<std::size_t>(x)];
    }

    bool admissible(Vertex w, int k) const
    {
        if (g_.has_edge(order_.back(), w))
            return false;
        if (k == n_ - 1 && g_.has_edge(w, order_.front()))
            return false;
        int earliest = k;
        for (Vertex x : g_.neighbors(w)) {
            const int px = pos_[static_cast<std::size_t>(x)];
            if (px >= 0)
                earliest = std::min(earliest, px);
        }
        for (int c = earliest + 1; c < k; ++c) {
            const Vertex u = order_[static_cast<std::size_t>(c)];
            if (open_[static_cast<std::size_t>(u)] - (g_.has_edge(u, w) ? 1 : 0) > 0)
                return false;
        }
        return true;
    }

    bool place(int k)
    {
        if (k == n_)
            return true;
        std::vector<Vertex> tried;
        for (Vertex w = 0; w < n_; ++w) {
            if (pos_[static_cast<std::size_t>(w)] >= 0)
                continue;
            if (std::any_of(tried.begin(), tried.end(),
                            [&](Vertex t) { return twin_[static_cast<std::size_t>(t)][static_cast<std::size_t>(w)]; }))
                continue;
            tried.push_back(w);
            if (!admissible(w, k))
                continue;
            put(w, k);
            if (place(k + 1))
                return true;
            take(w);
        }
        return false;
    }

    const PolytopeGraph& g_;
    int n_;
    std::vector<int> pos_;
    std::vector<int> open_;
    std::vector<Vertex> order_;
    std::vector<std::vector<char>> twin_;
};

}  // namespace

std::span<const RewriteRule> all_rewrite_rules() noexcept
{
    return kRules;
}

std::string_view to_string(RewriteRule rule) noexcept
{
    switch (rule) {
    case RewriteRule::AcyclicBlockMerge: return "acyclic_block_merge";
    case RewriteRule::CaterpillarAbsorb: return "caterpillar_absorb";
    case RewriteRule::PendantRotate: return "pendant_rotate";
    case RewriteRule::HexagonDiagonalFlip: return "hexagon_diagonal_flip";
    case RewriteRule::RegionBoundaryMove: return "region_boundary_move";
    case RewriteRule::PentagonCaseMove: return "pentagon_case_move";
    case RewriteRule::SpineDetach: return "spine_detach";
    case RewriteRule::PathTriangleSwap: return "path_triangle_swap";
    case RewriteRule::PendantBulkTransfer: return "pendant_bulk_transfer";
    case RewriteRule::CornerSwap: return "corner_swap";
    case RewriteRule::TrianglePairSwap: return "triangle_pair_swap";
    case RewriteRule::Degree2Swap: return "degree2_swap";
    }
    return "?";
}

std::optional<RewriteRule> parse_rewrite_rule(std::string_view name)
{
    for (auto rule : kRules)
        if (to_string(rule) == name)
            return rule;
    return std::nullopt;
}

std::optional<PolytopeGraph> apply_swap(const PolytopeGraph& g, const EdgeSwap& swap)
{
    std::vector<Edge> removed, added;
    for (const auto& [u, v] : swap.remove)
        removed.push_back(edge(u, v));
    for (const auto& [u, v] : swap.add)
        added.push_back(edge(u, v));
    std::sort(removed.begin(), removed.end());
    std::sort(added.begin(), added.end());
    if (std::adjacent_find(removed.begin(), removed.end()) != removed.end() ||
        std::adjacent_find(added.begin(), added.end()) != added.end())
        return std::nullopt;
    PolytopeGraph out = g;
    for (const auto& [u, v] : removed) {
        if (!g.has_edge(u, v))
            return std::nullopt;
        out.remove_edge(u, v);
    }
    for (const auto& [u, v] : added) {
        if (u == v || g.has_edge(u, v))
            return std::nullopt;
        out.add_edge(u, v);
    }
    return out;
}

std::vector<EdgeSwap> rule_matches(const ChordDiagram& cd, RewriteRule rule)
{
    return matches(Context(cd), rule);
}

std::optional<ChordDiagram> layout(const PolytopeGraph& g, int rim)
{
    const auto n = static_cast<std::size_t>(rim);
    if (rim < 3 || g.vertex_count() > n)
        return std::nullopt;
    PolytopeGraph h(n, g.edges());
    if (static_cast<int>(h.edge_count()) > rim - 3)
        return std::nullopt;
    // Outerplanar iff planar after adding a universal vertex.
    PolytopeGraph cone(n + 1, h.edges());
    for (std::size_t v = 0; v < n; ++v)
        cone.add_edge(static_cast<Vertex>(v), static_cast<Vertex>(n));
    if (!is_planar(cone))
        return std::nullopt;

    auto order = RimLayout(h).run();
    if (!order)
        return std::nullopt;
    std::vector<int> pos(n);
    for (std::size_t i = 0; i < n; ++i)
        pos[static_cast<std::size_t>((*order)[i])] = static_cast<int>(i);
    std::vector<Chord> chords;
    for (const auto& [u, v] : h.edges())
        chords.emplace_back(pos[static_cast<std::size_t>(u)], pos[static_cast<std::size_t>(v)]);
    return dihedral_canonical(ChordDiagram(rim, std::move(chords)));
}

std::vector<ChordDiagram> apply_rule(const ChordDiagram& cd, RewriteRule rule)
{
    const Context c(cd);
    std::set<ChordDiagram> results;
    std::set<std::vector<Edge>> tried;
    for (const auto& swap : matches(c, rule)) {
        auto g2 = apply_swap(c.g, swap);
        if (!g2 || !tried.insert(g2->edges()).second)
            continue;
        if (auto laid = layout(*g2, cd.rim()))
            results.insert(*laid);
    }
    return {results.begin(), results.end()};
}

std::optional<Witness> find_witness(const DegreeSequence& s, int depth)
{
    const auto report = enumerate_realizations(s, {.limit = 2});
    if (report.class_count == 0)
        return std::nullopt;
    std::set<ChordDiagram> seen(report.representatives.begin(), report.representatives.end());
    std::vector<ChordDiagram> level = report.representatives;
    for (int d = 0; d < depth && !level.empty(); ++d) {
        std::vector<ChordDiagram> next;
        for (const auto& cd : level) {
            const auto form = canonical_form(to_polytope(cd));
            for (auto rule : kRules)
                for (const auto& result : apply_rule(cd, rule)) {
                    if (canonical_form(to_polytope(result)) != form)
                        return Witness{s, std::string(to_string(rule)), cd, result};
                    if (seen.insert(result).second)
                        next.push_back(result);
                }
        }
        level = std::move(next);
    }
    if (report.class_count >= 2)
        return Witness{s, "oracle", report.representatives[0], report.representatives[1]};
    return std::nullopt;
}

nlohmann::json witness_to_json(const Witness& w)
{
    return {{"sequence", w.sequence.entries()},
            {"rule", w.rule},
            {"before", diagram_to_json(w.before)},
            {"after", diagram_to_json(w.after)}};
}

}  // namespace unipoly
