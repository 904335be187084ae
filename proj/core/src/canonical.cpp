#include "unipoly/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace unipoly {

namespace {

class CanonicalSearch {
public:
    explicit CanonicalSearch(const PolytopeGraph& g) : g_(g), n_(g.vertex_count()), words_((n_ + 63) / 64), rows_(n_ * words_, 0)
    {
        for (const auto& [u, v] : g.edges()) {
            set_bit(u, v);
            set_bit(v, u);
        }
    }

    CanonicalLabeling run()
    {
        std::vector<int> colors(n_, 0);
        search(std::move(colors));
        CanonicalLabeling out;
        out.label = std::move(best_label_);
        out.form.certificate = std::move(best_);
        return out;
    }

private:
    void set_bit(Vertex u, Vertex v)
    {
        rows_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64);
    }

    bool adjacent(std::size_t u, std::size_t v) const { return (rows_[u * words_ + v / 64] >> (v % 64)) & 1U; }

    bool twins(std::size_t u, std::size_t w) const
    {
        for (std::size_t k = 0; k < words_; ++k) {
            std::uint64_t diff = rows_[u * words_ + k] ^ rows_[w * words_ + k];
            if (u / 64 == k)
                diff &= ~(std::uint64_t{1} << (u % 64));
            if (w / 64 == k)
                diff &= ~(std::uint64_t{1} << (w % 64));
            if (diff)
                return false;
        }
        return true;
    }

    // Colours are renumbered 0..k-1 in signature order, which keeps the cell
    // order a function of the isomorphism class only. Returns the cell count.
    std::size_t refine(std::vector<int>& colors) const
    {
        std::vector<int> distinct(colors);
        std::sort(distinct.begin(), distinct.end());
        std::size_t cells = static_cast<std::size_t>(std::unique(distinct.begin(), distinct.end()) - distinct.begin());
        std::vector<std::vector<int>> sig(n_);
        std::vector<std::size_t> order(n_);
        while (true) {
            for (std::size_t v = 0; v < n_; ++v) {
                auto& s = sig[v];
                s.clear();
                s.push_back(colors[v]);
                for (Vertex w : g_.neighbors(static_cast<Vertex>(v)))
                    s.push_back(colors[static_cast<std::size_t>(w)]);
                std::sort(s.begin() + 1, s.end());
            }
            std::iota(order.begin(), order.end(), std::size_t{0});
            std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return sig[x] < sig[y]; });
            int next = 0;
            for (std::size_t i = 0; i < n_; ++i) {
                if (i > 0 && sig[order[i]] != sig[order[i - 1]])
                    ++next;
                colors[order[i]] = next;
            }
            std::size_t now = static_cast<std::size_t>(next) + 1;
            if (now == cells)
                return cells;
            cells = now;
        }
    }

    void search(std::vector<int> colors)
    {
        if (n_ == 0) {
            best_ = encode({});
            return;
        }
        std::size_t cells = refine(colors);
        if (cells == n_) {
            std::string enc = encode(colors);
            if (best_label_.empty() || enc < best_) {
                best_ = std::move(enc);
                best_label_.assign(colors.begin(), colors.end());
            }
            return;
        }
        // First non-singleton cell.
        std::vector<std::size_t> count(cells, 0);
        for (int c : colors)
            ++count[static_cast<std::size_t>(c)];
        int target = 0;
        while (count[static_cast<std::size_t>(target)] == 1)
            ++target;
        std::vector<std::size_t> cell;
        for (std::size_t v = 0; v < n_; ++v)
            if (colors[v] == target)
                cell.push_back(v);

        std::vector<std::size_t> tried;
        for (std::size_t v : cell) {
            if (std::any_of(tried.begin(), tried.end(), [&](std::size_t t) { return twins(t, v); }))
                continue;
            tried.push_back(v);
            std::vector<int> child(n_);
            for (std::size_t x = 0; x < n_; ++x)
                child[x] = 2 * colors[x] + (colors[x] == target && x != v ? 1 : 0);
            search(std::move(child));
        }
    }

    std::string encode(const std::vector<int>& colors) const
    {
        std::vector<std::size_t> at(n_);
        for (std::size_t v = 0; v < n_; ++v)
            at[static_cast<std::size_t>(colors[v])] = v;
        std::string out;
        out.reserve(4 + n_ * n_ / 16);
        const auto n32 = static_cast<std::uint32_t>(n_);
        for (int shift = 24; shift >= 0; shift -= 8)
            out.push_back(static_cast<char>((n32 >> shift) & 0xFF));
        unsigned char byte = 0;
        int bits = 0;
        for (std::size_t j = 1; j < n_; ++j)
            for (std::size_t i = 0; i < j; ++i) {
                byte = static_cast<unsigned char>((byte << 1) | (adjacent(at[i], at[j]) ? 1 : 0));
                if (++bits == 8) {
                    out.push_back(static_cast<char>(byte));
                    byte = 0;
                    bits = 0;
                }
            }
        if (bits)
            out.push_back(static_cast<char>(byte << (8 - bits)));
        return out;
    }

    const PolytopeGraph& g_;
    std::size_t n_;
    std::size_t words_;
    std::vector<std::uint64_t> rows_;
    std::string best_;
    std::vector<Vertex> best_label_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const PolytopeGraph& g)
{
    return CanonicalSearch(g).run();
}

CanonicalForm canonical_form(const PolytopeGraph& g)
{
    return canonical_labeling(g).form;
}

bool are_isomorphic(const PolytopeGraph& a, const PolytopeGraph& b)
{
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return false;
    if (degree_sequence(a) != degree_sequence(b))
        return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace unipoly
