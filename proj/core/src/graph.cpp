#include "unipoly/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace unipoly {

PolytopeGraph::PolytopeGraph(std::size_t vertex_count) : adjacency_(vertex_count) {}

PolytopeGraph::PolytopeGraph(std::size_t vertex_count, std::span<const Edge> edges) : adjacency_(vertex_count)
{
    for (const auto& [u, v] : edges)
        add_edge(u, v);
}

void PolytopeGraph::check_vertex(Vertex v) const
{
    if (v < 0 || static_cast<std::size_t>(v) >= adjacency_.size())
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
}

bool PolytopeGraph::has_edge(Vertex u, Vertex v) const
{
    check_vertex(u);
    check_vertex(v);
    const auto& nu = adjacency_[static_cast<std::size_t>(u)];
    return std::binary_search(nu.begin(), nu.end(), v);
}

void PolytopeGraph::add_edge(Vertex u, Vertex v)
{
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw std::invalid_argument("loop at vertex " + std::to_string(u));
    auto& nu = adjacency_[static_cast<std::size_t>(u)];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it != nu.end() && *it == v)
        throw std::invalid_argument("parallel edge " + std::to_string(u) + "-" + std::to_string(v));
    nu.insert(it, v);
    auto& nv = adjacency_[static_cast<std::size_t>(v)];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++edge_count_;
}

void PolytopeGraph::remove_edge(Vertex u, Vertex v)
{
    if (!has_edge(u, v))
        throw std::invalid_argument("no edge " + std::to_string(u) + "-" + std::to_string(v));
    auto& nu = adjacency_[static_cast<std::size_t>(u)];
    nu.erase(std::lower_bound(nu.begin(), nu.end(), v));
    auto& nv = adjacency_[static_cast<std::size_t>(v)];
    nv.erase(std::lower_bound(nv.begin(), nv.end(), u));
    --edge_count_;
}

std::vector<Edge> PolytopeGraph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (std::size_t u = 0; u < adjacency_.size(); ++u)
        for (Vertex v : adjacency_[u])
            if (static_cast<Vertex>(u) < v)
                out.emplace_back(static_cast<Vertex>(u), v);
    return out;
}

PolytopeGraph PolytopeGraph::relabeled(std::span<const Vertex> perm) const
{
    if (perm.size() != vertex_count())
        throw std::invalid_argument("permutation size mismatch");
    PolytopeGraph out(vertex_count());
    for (const auto& [u, v] : edges())
        out.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return out;
}

PolytopeGraph PolytopeGraph::induced(std::span<const Vertex> vertices) const
{
    std::vector<int> index(vertex_count(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        check_vertex(vertices[i]);
        index[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
    }
    PolytopeGraph out(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (Vertex w : neighbors(vertices[i])) {
            int j = index[static_cast<std::size_t>(w)];
            if (j > static_cast<int>(i))
                out.add_edge(static_cast<Vertex>(i), j);
        }
    return out;
}

DegreeSequence::DegreeSequence(std::vector<int> entries) : entries_(std::move(entries))
{
    for (int d : entries_)
        if (d < 0)
            throw std::invalid_argument("negative degree");
    std::sort(entries_.begin(), entries_.end(), std::greater<>());
}

namespace {

int parse_int(std::string_view tok, std::string_view whole)
{
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
        throw std::invalid_argument("malformed degree sequence '" + std::string(whole) + "'");
    return value;
}

}  // namespace

DegreeSequence DegreeSequence::parse(std::string_view text)
{
    // Drop whitespace around '^' so "5 ^ 9" reads as one token.
    std::string cleaned;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j])))
                ++j;
            bool before_caret = j < text.size() && text[j] == '^';
            bool after_caret = !cleaned.empty() && cleaned.back() == '^';
            if (!before_caret && !after_caret)
                cleaned.push_back(' ');
            i = j - 1;
            continue;
        }
        cleaned.push_back(c);
    }

    const auto malformed = [&] { return std::invalid_argument("malformed degree sequence '" + std::string(text) + "'"); };
    constexpr std::size_t max_entries = 100000;
    std::vector<int> entries;
    std::size_t pos = 0;
    while (pos < cleaned.size()) {
        int commas = 0;
        while (pos < cleaned.size() && (cleaned[pos] == ',' || cleaned[pos] == ' '))
            commas += cleaned[pos++] == ',';
        if (commas > 1 || (commas == 1 && (entries.empty() || pos >= cleaned.size())))
            throw malformed();
        if (pos >= cleaned.size())
            break;
        std::size_t end = cleaned.find_first_of(", ", pos);
        if (end == std::string::npos)
            end = cleaned.size();
        std::string_view tok(cleaned.data() + pos, end - pos);
        auto caret = tok.find('^');
        if (caret == std::string_view::npos) {
            entries.push_back(parse_int(tok, text));
        } else {
            int value = parse_int(tok.substr(0, caret), text);
            int power = parse_int(tok.substr(caret + 1), text);
            if (power < 1)
                throw std::invalid_argument("exponent must be positive in '" + std::string(text) + "'");
            if (static_cast<std::size_t>(power) > max_entries - entries.size())
                throw std::invalid_argument("degree sequence too long");
            entries.insert(entries.end(), static_cast<std::size_t>(power), value);
        }
        pos = end;
    }
    if (entries.empty())
        throw std::invalid_argument("empty degree sequence");
    return DegreeSequence(std::move(entries));
}

std::size_t DegreeSequence::a() const noexcept
{
    return static_cast<std::size_t>(std::count(entries_.begin(), entries_.end(), 3));
}

long long DegreeSequence::sum() const noexcept
{
    return std::accumulate(entries_.begin(), entries_.end(), 0LL);
}

std::string DegreeSequence::to_string() const
{
    std::ostringstream out;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        out << (i ? "," : "") << entries_[i];
    return out.str();
}

std::string DegreeSequence::to_power_string() const
{
    std::ostringstream out;
    for (std::size_t i = 0; i < entries_.size();) {
        std::size_t j = i;
        while (j < entries_.size() && entries_[j] == entries_[i])
            ++j;
        out << (i ? " " : "") << entries_[i];
        if (j - i > 1)
            out << '^' << (j - i);
        i = j;
    }
    return out.str();
}

DegreeSequence degree_sequence(const PolytopeGraph& g)
{
    std::vector<int> d(g.vertex_count());
    for (std::size_t v = 0; v < d.size(); ++v)
        d[v] = static_cast<int>(g.degree(static_cast<Vertex>(v)));
    return DegreeSequence(std::move(d));
}

namespace {

// Components of g with the vertices flagged in `removed` deleted.
std::size_t count_components_without(const PolytopeGraph& g, const std::vector<char>& removed)
{
    const std::size_t n = g.vertex_count();
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack;
    std::size_t count = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (removed[s] || seen[s])
            continue;
        ++count;
        seen[s] = 1;
        stack.push_back(static_cast<Vertex>(s));
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(v)) {
                auto wi = static_cast<std::size_t>(w);
                if (!removed[wi] && !seen[wi]) {
                    seen[wi] = 1;
                    stack.push_back(w);
                }
            }
        }
    }
    return count;
}

std::vector<int> bfs_distances(const PolytopeGraph& g, Vertex source)
{
    std::vector<int> dist(g.vertex_count(), -1);
    std::deque<Vertex> queue{source};
    dist[static_cast<std::size_t>(source)] = 0;
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(v))
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

}  // namespace

std::vector<std::vector<Vertex>> connected_components(const PolytopeGraph& g)
{
    const std::size_t n = g.vertex_count();
    std::vector<char> seen(n, 0);
    std::vector<std::vector<Vertex>> out;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s])
            continue;
        std::vector<Vertex> comp{static_cast<Vertex>(s)};
        seen[s] = 1;
        for (std::size_t head = 0; head < comp.size(); ++head)
            for (Vertex w : g.neighbors(comp[head]))
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const PolytopeGraph& g)
{
    return g.vertex_count() > 0 && connected_components(g).size() == 1;
}

bool is_planar(const PolytopeGraph& g)
{
    using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    BoostGraph bg(g.vertex_count());
    for (const auto& [u, v] : g.edges())
        boost::add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v), bg);
    return boost::boyer_myrvold_planarity_test(bg);
}

bool is_k_connected(const PolytopeGraph& g, int k)
{
    if (k < 1)
        throw std::invalid_argument("connectivity order must be at least 1");
    const std::size_t n = g.vertex_count();
    if (n <= static_cast<std::size_t>(k))
        return false;
    std::vector<char> removed(n, 0);
    // Try every vertex set of size < k as a cut.
    std::function<bool(std::size_t, int)> has_cut = [&](std::size_t start, int left) -> bool {
        if (count_components_without(g, removed) != 1)
            return true;
        if (left == 0)
            return false;
        for (std::size_t v = start; v < n; ++v) {
            removed[v] = 1;
            bool cut = has_cut(v + 1, left - 1);
            removed[v] = 0;
            if (cut)
                return true;
        }
        return false;
    };
    return !has_cut(0, k - 1);
}

int radius(const PolytopeGraph& g)
{
    if (!is_connected(g))
        throw std::domain_error("infinite radius");
    int best = static_cast<int>(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        auto dist = bfs_distances(g, static_cast<Vertex>(v));
        best = std::min(best, *std::max_element(dist.begin(), dist.end()));
    }
    return best;
}

std::vector<Vertex> universal_vertices(const PolytopeGraph& g)
{
    std::vector<Vertex> out;
    const std::size_t n = g.vertex_count();
    for (std::size_t v = 0; v < n; ++v)
        if (g.degree(static_cast<Vertex>(v)) + 1 == n)
            out.push_back(static_cast<Vertex>(v));
    return out;
}

PolytopeGraph complete_graph(std::size_t n)
{
    PolytopeGraph g(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    return g;
}

PolytopeGraph cycle_graph(std::size_t n)
{
    if (n < 3)
        throw std::invalid_argument("cycle needs at least 3 vertices");
    PolytopeGraph g(n);
    for (std::size_t v = 0; v < n; ++v)
        g.add_edge(static_cast<Vertex>(v), static_cast<Vertex>((v + 1) % n));
    return g;
}

PolytopeGraph path_graph(std::size_t n)
{
    PolytopeGraph g(n);
    for (std::size_t v = 0; v + 1 < n; ++v)
        g.add_edge(static_cast<Vertex>(v), static_cast<Vertex>(v + 1));
    return g;
}

PolytopeGraph wheel_graph(std::size_t n)
{
    if (n < 4)
        throw std::invalid_argument("wheel needs at least 4 vertices");
    PolytopeGraph g(n);
    const std::size_t rim = n - 1;
    for (std::size_t v = 0; v < rim; ++v) {
        g.add_edge(static_cast<Vertex>(v), static_cast<Vertex>((v + 1) % rim));
        g.add_edge(static_cast<Vertex>(v), static_cast<Vertex>(rim));
    }
    return g;
}

PolytopeGraph complete_bipartite_graph(std::size_t left, std::size_t right)
{
    PolytopeGraph g(left + right);
    for (std::size_t u = 0; u < left; ++u)
        for (std::size_t v = 0; v < right; ++v)
            g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(left + v));
    return g;
}

PolytopeGraph disjoint_union(const PolytopeGraph& a, const PolytopeGraph& b)
{
    PolytopeGraph g(a.vertex_count() + b.vertex_count());
    for (const auto& [u, v] : a.edges())
        g.add_edge(u, v);
    const auto shift = static_cast<Vertex>(a.vertex_count());
    for (const auto& [u, v] : b.edges())
        g.add_edge(u + shift, v + shift);
    return g;
}

}  // namespace unipoly
