#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "unipoly/graph.hpp"

namespace unipoly {

/// Certificate of an isomorphism class: equal iff the graphs are isomorphic.
struct CanonicalForm {
    std::string certificate;

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalLabeling {
    /// label[v] is the position of v in the canonical ordering.
    std::vector<Vertex> label;
    CanonicalForm form;
};

/// Individualisation-refinement canonical labeling.
///
/// Colour refinement by sorted neighbour-colour signatures, then backtracking
/// over the first non-singleton cell. The certificate is the least packed
/// adjacency matrix over all leaves. Transposing two twin vertices is an
/// automorphism, so only one vertex per twin class of a cell is branched on.
CanonicalLabeling canonical_labeling(const PolytopeGraph& g);

CanonicalForm canonical_form(const PolytopeGraph& g);

bool are_isomorphic(const PolytopeGraph& a, const PolytopeGraph& b);

}  // namespace unipoly

template <>
struct std::hash<unipoly::CanonicalForm> {
    std::size_t operator()(const unipoly::CanonicalForm& f) const noexcept
    {
        return std::hash<std::string>{}(f.certificate);
    }
};
