#include "unipoly/structure.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <tuple>

namespace unipoly {

namespace {

std::vector<Vertex> sorted_unique(std::vector<Vertex> v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

BlockStructure block_structure(const PolytopeGraph& g)
{
    const std::size_t n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<Edge> stack;
    BlockStructure out;
    int timer = 0;

    std::function<void(Vertex, Vertex)> dfs = [&](Vertex v, Vertex parent) {
        const auto vi = static_cast<std::size_t>(v);
        disc[vi] = low[vi] = timer++;
        for (Vertex w : g.neighbors(v)) {
            const auto wi = static_cast<std::size_t>(w);
            if (w == parent)
                continue;
            if (disc[wi] < 0) {
                stack.emplace_back(v, w);
                dfs(w, v);
                low[vi] = std::min(low[vi], low[wi]);
                if (low[wi] >= disc[vi]) {
                    Block block;
                    while (true) {
                        Edge e = stack.back();
                        stack.pop_back();
                        block.edges.emplace_back(std::min(e.first, e.second), std::max(e.first, e.second));
                        block.vertices.push_back(e.first);
                        block.vertices.push_back(e.second);
                        if (e == Edge{v, w})
                            break;
                    }
                    block.vertices = sorted_unique(std::move(block.vertices));
                    std::sort(block.edges.begin(), block.edges.end());
                    block.cyclic = block.vertices.size() >= 3;
                    out.blocks.push_back(std::move(block));
                }
            } else if (disc[wi] < disc[vi]) {
                stack.emplace_back(v, w);
                low[vi] = std::min(low[vi], disc[wi]);
            }
        }
    };
    for (std::size_t s = 0; s < n; ++s)
        if (disc[s] < 0)
            dfs(static_cast<Vertex>(s), -1);

    // Deterministic order: by sorted vertex list.
    std::sort(out.blocks.begin(), out.blocks.end(),
              [](const Block& x, const Block& y) { return std::tie(x.vertices, x.edges) < std::tie(y.vertices, y.edges); });

    std::vector<int> membership(n, 0);
    for (const auto& b : out.blocks)
        for (Vertex v : b.vertices)
            ++membership[static_cast<std::size_t>(v)];
    for (std::size_t v = 0; v < n; ++v)
        if (membership[v] >= 2)
            out.separating.push_back(static_cast<Vertex>(v));
    for (std::size_t i = 0; i < out.blocks.size(); ++i) {
        auto cuts = std::count_if(out.blocks[i].vertices.begin(), out.blocks[i].vertices.end(),
                                  [&](Vertex v) { return membership[static_cast<std::size_t>(v)] >= 2; });
        if (cuts == 1)
            out.endblocks.push_back(i);
    }
    return out;
}

std::size_t Decomposition::cyclic_block_count() const noexcept
{
    return static_cast<std::size_t>(std::count_if(blocks.begin(), blocks.end(), [](const Block& b) { return b.cyclic; }));
}

Decomposition decompose(const PolytopeGraph& g)
{
    Decomposition d;
    d.vertex_count = g.vertex_count();
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        auto deg = g.degree(static_cast<Vertex>(v));
        if (deg == 0)
            d.z_set.push_back(static_cast<Vertex>(v));
        else if (deg == 1)
            d.y_set.push_back(static_cast<Vertex>(v));
        else
            d.b_vertices.push_back(static_cast<Vertex>(v));
    }
    d.b_graph = g.induced(d.b_vertices);

    auto gs = block_structure(g);
    d.blocks = std::move(gs.blocks);
    d.endblocks = std::move(gs.endblocks);
    d.separating_in_g = std::move(gs.separating);

    auto bs = block_structure(d.b_graph);
    auto to_g = [&](Vertex i) { return d.b_vertices[static_cast<std::size_t>(i)]; };
    for (auto& block : bs.blocks) {
        for (auto& v : block.vertices)
            v = to_g(v);
        for (auto& [u, v] : block.edges) {
            u = to_g(u);
            v = to_g(v);
        }
        d.b_blocks.push_back(std::move(block));
    }
    d.b_endblocks = std::move(bs.endblocks);
    for (Vertex v : bs.separating)
        d.separating_in_b.push_back(to_g(v));

    for (const auto& comp : connected_components(g)) {
        if (comp.size() < 2)
            continue;
        ++d.nontrivial_component_count;
        std::size_t edges = 0;
        for (Vertex v : comp)
            edges += g.degree(v);
        edges /= 2;
        if (edges >= comp.size())
            ++d.cyclic_component_count;
        else
            ++d.tree_component_count;
    }
    return d;
}

std::size_t count_cyclic_components(const PolytopeGraph& g)
{
    std::size_t count = 0;
    for (const auto& comp : connected_components(g)) {
        std::size_t edges = 0;
        for (Vertex v : comp)
            edges += g.degree(v);
        if (edges / 2 >= comp.size())
            ++count;
    }
    return count;
}

std::optional<Caterpillar> recognize_caterpillar(const PolytopeGraph& g)
{
    const std::size_t n = g.vertex_count();
    if (n == 0 || !is_connected(g) || g.edge_count() + 1 != n)
        return std::nullopt;
    if (n == 1)
        return Caterpillar{{0}};
    if (n == 2)
        return Caterpillar{{1}};

    std::vector<Vertex> spine;
    std::vector<char> on_spine(n, 0);
    for (std::size_t v = 0; v < n; ++v)
        if (g.degree(static_cast<Vertex>(v)) >= 2) {
            spine.push_back(static_cast<Vertex>(v));
            on_spine[v] = 1;
        }
    auto spine_degree = [&](Vertex v) {
        return std::count_if(g.neighbors(v).begin(), g.neighbors(v).end(),
                             [&](Vertex w) { return on_spine[static_cast<std::size_t>(w)] != 0; });
    };
    Vertex start = -1;
    for (Vertex v : spine) {
        auto sd = spine_degree(v);
        if (sd > 2)
            return std::nullopt;
        if (sd <= 1 && start < 0)
            start = v;
    }
    // The non-leaf vertices of a tree induce a subtree; with max degree 2 it is a path.
    std::vector<Vertex> order{start};
    Vertex prev = -1;
    while (order.size() < spine.size()) {
        Vertex cur = order.back(), next = -1;
        for (Vertex w : g.neighbors(cur))
            if (on_spine[static_cast<std::size_t>(w)] && w != prev)
                next = w;
        prev = cur;
        order.push_back(next);
    }
    std::vector<int> forward, backward;
    for (Vertex v : order)
        forward.push_back(static_cast<int>(g.degree(v)));
    backward.assign(forward.rbegin(), forward.rend());
    return Caterpillar{std::min(forward, backward)};
}

BoundReport check_block_bound(const Decomposition& d, std::size_t a)
{
    BoundReport r;
    r.p = static_cast<long long>(d.vertex_count) + 1;
    r.a = static_cast<long long>(a);
    r.k = static_cast<long long>(d.cyclic_block_count());

    long long cyclic_span = 0;
    bool has_large = false;
    for (const auto& b : d.blocks) {
        const auto m = static_cast<long long>(b.vertices.size());
        r.block_excess += m - 2;
        if (b.cyclic) {
            cyclic_span += m - 1;
            has_large = has_large || m >= 4;
        }
    }
    r.block_rhs = 2 + r.block_excess;
    r.block_holds = r.a >= r.block_rhs;

    std::size_t non_isolated_components = d.nontrivial_component_count;
    const auto non_isolated = static_cast<long long>(d.vertex_count - d.z_set.size());
    r.order_applicable = r.k >= 1 && non_isolated_components == 1 && non_isolated <= 3 + cyclic_span;
    r.order_rhs = 2 * r.a + 2 + r.k;
    r.order_holds = r.p <= r.order_rhs;

    r.cyclic_applicable = has_large;
    r.cyclic_rhs = 3 + r.k;
    r.cyclic_holds = r.a >= r.cyclic_rhs;
    return r;
}

namespace {

nlohmann::json blocks_json(const std::vector<Block>& blocks, const std::vector<std::size_t>& ends)
{
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        nlohmann::json edges = nlohmann::json::array();
        for (const auto& [u, v] : blocks[i].edges)
            edges.push_back({u, v});
        arr.push_back({{"vertices", blocks[i].vertices},
                       {"edges", std::move(edges)},
                       {"cyclic", blocks[i].cyclic},
                       {"endblock", std::find(ends.begin(), ends.end(), i) != ends.end()}});
    }
    return arr;
}

}  // namespace

nlohmann::json decomposition_to_json(const Decomposition& d)
{
    nlohmann::json b_edges = nlohmann::json::array();
    for (const auto& [u, v] : d.b_graph.edges())
        b_edges.push_back({d.b_vertices[static_cast<std::size_t>(u)], d.b_vertices[static_cast<std::size_t>(v)]});
    return {
        {"vertex_count", d.vertex_count},
        {"z_set", d.z_set},
        {"y_set", d.y_set},
        {"b_vertices", d.b_vertices},
        {"b_edges", std::move(b_edges)},
        {"blocks", blocks_json(d.blocks, d.endblocks)},
        {"separating_vertices_in_g", d.separating_in_g},
        {"b_blocks", blocks_json(d.b_blocks, d.b_endblocks)},
        {"separating_vertices_in_b", d.separating_in_b},
        {"cyclic_component_count", d.cyclic_component_count},
        {"nontrivial_component_count", d.nontrivial_component_count},
        {"tree_component_count", d.tree_component_count},
    };
}

nlohmann::json bound_report_to_json(const BoundReport& r)
{
    return {
        {"p", r.p},
        {"a", r.a},
        {"k", r.k},
        {"block_bound", {{"lhs_a", r.a}, {"rhs", r.block_rhs}, {"holds", r.block_holds}}},
        {"order_bound", {{"applicable", r.order_applicable}, {"lhs_p", r.p}, {"rhs", r.order_rhs}, {"holds", r.order_holds}}},
        {"cyclic_bound",
         {{"applicable", r.cyclic_applicable}, {"lhs_a", r.a}, {"rhs", r.cyclic_rhs}, {"holds", r.cyclic_holds}}},
        {"violated", r.violated()},
    };
}

}  // namespace unipoly
