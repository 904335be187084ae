#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "unipoly/graph.hpp"

namespace unipoly {

/// Chord between two rim positions, stored with first < second.
using Chord = std::pair<int, int>;

/// True iff the chords cross strictly. Chords sharing an endpoint never cross.
bool chords_cross(Chord x, Chord y) noexcept;

/// A polygon with rim vertices 0..n-1 in cyclic order plus a set of pairwise
/// non-crossing chords. Together with an apex joined to every rim vertex this
/// is a radius-1 3-polytope on n+1 vertices.
///
/// Chords are normalised (first < second) and kept sorted. The constructor
/// throws std::invalid_argument for n < 3, out-of-range or duplicate chords,
/// chords along a rim edge, and crossing pairs.
class ChordDiagram {
public:
    ChordDiagram(int rim, std::vector<Chord> chords);

    /// "9: 0-2,2-4,0-4"; whitespace-insensitive, "6:" for no chords.
    static ChordDiagram parse(std::string_view text);

    int rim() const noexcept { return rim_; }
    const std::vector<Chord>& chords() const noexcept { return chords_; }
    int polytope_order() const noexcept { return rim_ + 1; }

    std::string to_string() const;

    friend bool operator==(const ChordDiagram&, const ChordDiagram&) = default;
    friend auto operator<=>(const ChordDiagram&, const ChordDiagram&) = default;

private:
    int rim_ = 3;
    std::vector<Chord> chords_;
};

/// Non-increasing multiset of chord counts at rim vertices. Entry + 3 is the
/// degree of that rim vertex in the polytope.
struct ChordDegreeSequence {
    std::vector<int> entries;

    std::size_t zeros() const noexcept;
    friend bool operator==(const ChordDegreeSequence&, const ChordDegreeSequence&) = default;
};

/// Chord count per rim position.
std::vector<int> chord_degrees(const ChordDiagram& cd);
ChordDegreeSequence chord_degree_sequence(const ChordDiagram& cd);

/// Apex is vertex n, rim vertices keep their positions.
PolytopeGraph to_polytope(const ChordDiagram& cd);

/// The chords as a graph on the n rim vertices.
PolytopeGraph chord_graph(const ChordDiagram& cd);

/// Removes the universal vertex with the least canonical label and reads the
/// rim off the unique Hamiltonian cycle of the remainder. Result is
/// dihedral-canonical. Throws std::invalid_argument("not a radius-1
/// 3-polytope") when f is not planar, 3-connected and of radius one.
ChordDiagram from_polytope(const PolytopeGraph& f);

/// Least sorted chord list over the 2n rotations and reflections.
ChordDiagram dihedral_canonical(const ChordDiagram& cd);

/// The diagram with every rim position p mapped to (p + shift) mod n, after
/// reflecting p -> (n - p) mod n when `reflect` is set.
ChordDiagram dihedral_image(const ChordDiagram& cd, int shift, bool reflect);

/// {"rim": n, "chords": [[a,b],...]}
nlohmann::json diagram_to_json(const ChordDiagram& cd);
ChordDiagram diagram_from_json(const nlohmann::json& j);

}  // namespace unipoly
