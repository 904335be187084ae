#include "unipoly/graph_io.hpp"

#include <cstdint>
#include <stdexcept>

namespace unipoly {

namespace {

constexpr int kBias = 63;

void append_size(std::string& out, std::uint64_t n)
{
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    } else {
        out += "~~";
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
}

int sextet(char c)
{
    int v = static_cast<unsigned char>(c) - kBias;
    if (v < 0 || v > 63)
        throw std::invalid_argument(std::string("invalid graph6 character '") + c + "'");
    return v;
}

}  // namespace

std::string to_graph6(const PolytopeGraph& g)
{
    const std::size_t n = g.vertex_count();
    std::string out;
    append_size(out, n);
    int acc = 0;
    int bits = 0;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                bits = 0;
            }
        }
    if (bits > 0)
        out.push_back(static_cast<char>((acc << (6 - bits)) + kBias));
    return out;
}

PolytopeGraph from_graph6(std::string_view text)
{
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header)
        text.remove_prefix(header.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
        text.remove_suffix(1);
    if (text.empty())
        throw std::invalid_argument("empty graph6 string");

    std::size_t pos = 0;
    std::uint64_t n = 0;
    if (text[0] != '~') {
        n = static_cast<std::uint64_t>(sextet(text[0]));
        pos = 1;
    } else if (text.size() >= 2 && text[1] == '~') {
        if (text.size() < 8)
            throw std::invalid_argument("truncated graph6 size field");
        for (std::size_t k = 2; k < 8; ++k)
            n = (n << 6) | static_cast<std::uint64_t>(sextet(text[k]));
        pos = 8;
    } else {
        if (text.size() < 4)
            throw std::invalid_argument("truncated graph6 size field");
        for (std::size_t k = 1; k < 4; ++k)
            n = (n << 6) | static_cast<std::uint64_t>(sextet(text[k]));
        pos = 4;
    }
    if (n > 100000)
        throw std::invalid_argument("graph6 order too large");

    const std::uint64_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::uint64_t expected = (pairs + 5) / 6;
    if (text.size() - pos != expected)
        throw std::invalid_argument("graph6 body has wrong length");

    PolytopeGraph g(static_cast<std::size_t>(n));
    std::uint64_t k = 0;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i, ++k) {
            int value = sextet(text[pos + k / 6]);
            if ((value >> (5 - k % 6)) & 1)
                g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
        }
    // Padding bits must be zero.
    if (pairs % 6 != 0) {
        int last = sextet(text.back());
        if (last & ((1 << (6 - pairs % 6)) - 1))
            throw std::invalid_argument("graph6 padding bits set");
    }
    return g;
}

nlohmann::json graph_to_json(const PolytopeGraph& g)
{
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [u, v] : g.edges())
        edges.push_back({u, v});
    return {{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

PolytopeGraph graph_from_json(const nlohmann::json& j)
{
    try {
        const auto n = j.at("n").get<long long>();
        if (n < 0)
            throw std::invalid_argument("negative vertex count");
        PolytopeGraph g(static_cast<std::size_t>(n));
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2)
                throw std::invalid_argument("edge must be a pair");
            g.add_edge(e[0].get<Vertex>(), e[1].get<Vertex>());
        }
        return g;
    } catch (const nlohmann::json::exception& ex) {
        throw std::invalid_argument(std::string("bad graph JSON: ") + ex.what());
    }
}

}  // namespace unipoly
