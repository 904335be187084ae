#include "unipoly/chord_diagram.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>
#include <stdexcept>

#include "unipoly/canonical.hpp"

namespace unipoly {

bool chords_cross(Chord x, Chord y) noexcept
{
    auto [a, b] = x;
    auto [c, d] = y;
    return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

ChordDiagram::ChordDiagram(int rim, std::vector<Chord> chords) : rim_(rim), chords_(std::move(chords))
{
    if (rim_ < 3)
        throw std::invalid_argument("rim must have at least 3 vertices");
    for (auto& [a, b] : chords_) {
        if (a > b)
            std::swap(a, b);
        if (a < 0 || b >= rim_)
            throw std::invalid_argument("chord " + std::to_string(a) + "-" + std::to_string(b) + " out of range");
        if (a == b)
            throw std::invalid_argument("chord " + std::to_string(a) + "-" + std::to_string(b) + " is a loop");
        if (b - a == 1 || (a == 0 && b == rim_ - 1))
            throw std::invalid_argument("chord " + std::to_string(a) + "-" + std::to_string(b) + " is a rim edge");
    }
    std::sort(chords_.begin(), chords_.end());
    if (std::adjacent_find(chords_.begin(), chords_.end()) != chords_.end())
        throw std::invalid_argument("duplicate chord");
    for (std::size_t i = 0; i < chords_.size(); ++i)
        for (std::size_t j = i + 1; j < chords_.size(); ++j)
            if (chords_cross(chords_[i], chords_[j]))
                throw std::invalid_argument("chords " + std::to_string(chords_[i].first) + "-" +
                                            std::to_string(chords_[i].second) + " and " +
                                            std::to_string(chords_[j].first) + "-" +
                                            std::to_string(chords_[j].second) + " cross");
}

namespace {

int parse_number(std::string_view tok, std::string_view whole)
{
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
        throw std::invalid_argument("malformed diagram '" + std::string(whole) + "'");
    return value;
}

}  // namespace

ChordDiagram ChordDiagram::parse(std::string_view text)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s.push_back(c);
    auto colon = s.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("diagram needs 'n:' prefix: '" + std::string(text) + "'");
    int rim = parse_number(std::string_view(s).substr(0, colon), text);
    std::vector<Chord> chords;
    std::string_view body = std::string_view(s).substr(colon + 1);
    while (!body.empty()) {
        auto comma = body.find(',');
        std::string_view tok = body.substr(0, comma);
        auto dash = tok.find('-');
        if (dash == std::string_view::npos)
            throw std::invalid_argument("malformed chord '" + std::string(tok) + "'");
        chords.emplace_back(parse_number(tok.substr(0, dash), text), parse_number(tok.substr(dash + 1), text));
        if (comma == std::string_view::npos)
            break;
        body.remove_prefix(comma + 1);
        if (body.empty())
            throw std::invalid_argument("trailing comma in '" + std::string(text) + "'");
    }
    return ChordDiagram(rim, std::move(chords));
}

std::string ChordDiagram::to_string() const
{
    std::ostringstream out;
    out << rim_ << ":";
    for (std::size_t i = 0; i < chords_.size(); ++i)
        out << (i ? "," : " ") << chords_[i].first << "-" << chords_[i].second;
    return out.str();
}

std::size_t ChordDegreeSequence::zeros() const noexcept
{
    return static_cast<std::size_t>(std::count(entries.begin(), entries.end(), 0));
}

std::vector<int> chord_degrees(const ChordDiagram& cd)
{
    std::vector<int> deg(static_cast<std::size_t>(cd.rim()), 0);
    for (const auto& [a, b] : cd.chords()) {
        ++deg[static_cast<std::size_t>(a)];
        ++deg[static_cast<std::size_t>(b)];
    }
    return deg;
}

ChordDegreeSequence chord_degree_sequence(const ChordDiagram& cd)
{
    auto deg = chord_degrees(cd);
    std::sort(deg.begin(), deg.end(), std::greater<>());
    return {std::move(deg)};
}

PolytopeGraph to_polytope(const ChordDiagram& cd)
{
    const int n = cd.rim();
    PolytopeGraph f(static_cast<std::size_t>(n + 1));
    for (int v = 0; v < n; ++v) {
        f.add_edge(v, (v + 1) % n);
        f.add_edge(v, n);
    }
    for (const auto& [a, b] : cd.chords())
        f.add_edge(a, b);
    return f;
}

PolytopeGraph chord_graph(const ChordDiagram& cd)
{
    PolytopeGraph g(static_cast<std::size_t>(cd.rim()));
    for (const auto& [a, b] : cd.chords())
        g.add_edge(a, b);
    return g;
}

ChordDiagram dihedral_image(const ChordDiagram& cd, int shift, bool reflect)
{
    const int n = cd.rim();
    auto map = [&](int v) {
        if (reflect)
            v = (n - v) % n;
        return ((v + shift) % n + n) % n;
    };
    std::vector<Chord> chords;
    chords.reserve(cd.chords().size());
    for (const auto& [a, b] : cd.chords()) {
        int x = map(a), y = map(b);
        chords.emplace_back(std::min(x, y), std::max(x, y));
    }
    return ChordDiagram(n, std::move(chords));
}

ChordDiagram dihedral_canonical(const ChordDiagram& cd)
{
    const int n = cd.rim();
    std::vector<Chord> best = cd.chords();
    std::vector<Chord> cur(cd.chords().size());
    for (int reflect = 0; reflect < 2; ++reflect)
        for (int shift = 0; shift < n; ++shift) {
            for (std::size_t i = 0; i < cd.chords().size(); ++i) {
                auto [a, b] = cd.chords()[i];
                if (reflect) {
                    a = (n - a) % n;
                    b = (n - b) % n;
                }
                a = (a + shift) % n;
                b = (b + shift) % n;
                cur[i] = {std::min(a, b), std::max(a, b)};
            }
            std::sort(cur.begin(), cur.end());
            if (cur < best)
                best = cur;
        }
    return ChordDiagram(n, std::move(best));
}

namespace {

// Rim order of a 2-connected outerplanar graph, by peeling degree-2 vertices
// and splicing them back between their two neighbours.
std::vector<Vertex> outer_cycle(const PolytopeGraph& h)
{
    const std::size_t m = h.vertex_count();
    std::vector<std::set<Vertex>> adj(m);
    for (const auto& [u, v] : h.edges()) {
        adj[static_cast<std::size_t>(u)].insert(v);
        adj[static_cast<std::size_t>(v)].insert(u);
    }
    std::vector<char> alive(m, 1);
    struct Peel {
        Vertex v, x, y;
    };
    std::vector<Peel> peeled;
    std::size_t remaining = m;
    while (remaining > 3) {
        Vertex v = -1;
        for (std::size_t c = 0; c < m; ++c)
            if (alive[c] && adj[c].size() == 2) {
                v = static_cast<Vertex>(c);
                break;
            }
        if (v < 0)
            return {};
        auto it = adj[static_cast<std::size_t>(v)].begin();
        Vertex x = *it++;
        Vertex y = *it;
        adj[static_cast<std::size_t>(x)].erase(v);
        adj[static_cast<std::size_t>(y)].erase(v);
        adj[static_cast<std::size_t>(x)].insert(y);
        adj[static_cast<std::size_t>(y)].insert(x);
        adj[static_cast<std::size_t>(v)].clear();
        alive[static_cast<std::size_t>(v)] = 0;
        --remaining;
        peeled.push_back({v, x, y});
    }
    std::vector<Vertex> cycle;
    for (std::size_t c = 0; c < m; ++c)
        if (alive[c])
            cycle.push_back(static_cast<Vertex>(c));
    if (cycle.size() != 3)
        return {};
    for (auto p = peeled.rbegin(); p != peeled.rend(); ++p) {
        const std::size_t len = cycle.size();
        bool placed = false;
        for (std::size_t i = 0; i < len && !placed; ++i) {
            Vertex s = cycle[i], t = cycle[(i + 1) % len];
            if ((s == p->x && t == p->y) || (s == p->y && t == p->x)) {
                cycle.insert(cycle.begin() + static_cast<std::ptrdiff_t>(i + 1), p->v);
                placed = true;
            }
        }
        if (!placed)
            return {};
    }
    return cycle;
}

}  // namespace

ChordDiagram from_polytope(const PolytopeGraph& f)
{
    const auto fail = [] { return std::invalid_argument("not a radius-1 3-polytope"); };
    if (f.vertex_count() < 4 || !is_connected(f) || radius(f) != 1 || !is_planar(f) || !is_k_connected(f, 3))
        throw fail();

    const auto labeling = canonical_labeling(f);
    Vertex apex = -1;
    for (Vertex v : universal_vertices(f))
        if (apex < 0 || labeling.label[static_cast<std::size_t>(v)] < labeling.label[static_cast<std::size_t>(apex)])
            apex = v;

    std::vector<Vertex> rest;
    for (std::size_t v = 0; v < f.vertex_count(); ++v)
        if (static_cast<Vertex>(v) != apex)
            rest.push_back(static_cast<Vertex>(v));
    const PolytopeGraph h = f.induced(rest);
    const auto cycle = outer_cycle(h);
    if (cycle.size() != h.vertex_count())
        throw fail();

    const int n = static_cast<int>(cycle.size());
    std::vector<int> pos(cycle.size());
    for (int i = 0; i < n; ++i)
        pos[static_cast<std::size_t>(cycle[static_cast<std::size_t>(i)])] = i;
    for (int i = 0; i < n; ++i)
        if (!h.has_edge(cycle[static_cast<std::size_t>(i)], cycle[static_cast<std::size_t>((i + 1) % n)]))
            throw fail();
    std::vector<Chord> chords;
    for (const auto& [u, v] : h.edges()) {
        int a = pos[static_cast<std::size_t>(u)], b = pos[static_cast<std::size_t>(v)];
        if (a > b)
            std::swap(a, b);
        if (b - a == 1 || (a == 0 && b == n - 1))
            continue;
        chords.emplace_back(a, b);
    }
    try {
        return dihedral_canonical(ChordDiagram(n, std::move(chords)));
    } catch (const std::invalid_argument&) {
        throw fail();
    }
}

nlohmann::json diagram_to_json(const ChordDiagram& cd)
{
    nlohmann::json chords = nlohmann::json::array();
    for (const auto& [a, b] : cd.chords())
        chords.push_back({a, b});
    return {{"rim", cd.rim()}, {"chords", std::move(chords)}};
}

ChordDiagram diagram_from_json(const nlohmann::json& j)
{
    try {
        std::vector<Chord> chords;
        for (const auto& c : j.at("chords")) {
            if (!c.is_array() || c.size() != 2)
                throw std::invalid_argument("chord must be a pair");
            chords.emplace_back(c[0].get<int>(), c[1].get<int>());
        }
        return ChordDiagram(j.at("rim").get<int>(), std::move(chords));
    } catch (const nlohmann::json::exception& ex) {
        throw std::invalid_argument(std::string("bad diagram JSON: ") + ex.what());
    }
}

}  // namespace unipoly
