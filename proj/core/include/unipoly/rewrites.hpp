#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "unipoly/chord_diagram.hpp"
#include "unipoly/graph.hpp"

namespace unipoly {

/// Degree-preserving edge swaps on the chord graph G. Each rule matches a
/// local configuration, deletes and adds edges of G, and re-embeds the result
/// on the rim with layout().
enum class RewriteRule {
    AcyclicBlockMerge,
    CaterpillarAbsorb,
    PendantRotate,
    HexagonDiagonalFlip,
    RegionBoundaryMove,
    PentagonCaseMove,
    SpineDetach,
    PathTriangleSwap,
    PendantBulkTransfer,
    CornerSwap,
    TrianglePairSwap,
    Degree2Swap,
};

std::span<const RewriteRule> all_rewrite_rules() noexcept;
std::string_view to_string(RewriteRule rule) noexcept;
std::optional<RewriteRule> parse_rewrite_rule(std::string_view name);

/// Edge deletions and additions on G.
struct EdgeSwap {
    std::vector<Edge> remove;
    std::vector<Edge> add;
};

/// Every instance of the rule's pattern in chord_graph(cd), as edge swaps.
/// Instances whose additions already exist in G are dropped.
std::vector<EdgeSwap> rule_matches(const ChordDiagram& cd, RewriteRule rule);

/// The swap applied to g, or nullopt if a deletion is missing or an addition
/// is present.
std::optional<PolytopeGraph> apply_swap(const PolytopeGraph& g, const EdgeSwap& swap);

/// Results of every match, re-laid-out, dihedral-canonical, sorted and unique.
std::vector<ChordDiagram> apply_rule(const ChordDiagram& cd, RewriteRule rule);

/// A rim order of g's vertices (padded with isolated vertices up to `rim`)
/// in which g's edges are pairwise non-crossing chords and no edge joins
/// rim neighbours. Result is dihedral-canonical; nullopt if none exists.
std::optional<ChordDiagram> layout(const PolytopeGraph& g, int rim);

struct Witness {
    DegreeSequence sequence;
    /// Rule name, or "oracle" when two enumerated classes are reported directly.
    std::string rule;
    ChordDiagram before;
    ChordDiagram after;
};

/// Applies every rule breadth-first from each enumerated realisation, up to
/// `depth` steps, and reports the first step whose result is not isomorphic
/// to its input. Falls back to two distinct enumerated classes.
std::optional<Witness> find_witness(const DegreeSequence& s, int depth);

nlohmann::json witness_to_json(const Witness& w);

}  // namespace unipoly
