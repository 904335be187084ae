#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "unipoly/chord_diagram.hpp"
#include "unipoly/graph.hpp"

namespace unipoly {

struct RealizationReport {
    DegreeSequence sequence;
    std::size_t class_count = 0;
    /// Least dihedral-canonical diagram of each class found, sorted.
    std::vector<ChordDiagram> representatives;
    /// The search stopped because `limit` classes were found.
    bool truncated = false;
    std::uint64_t nodes_explored = 0;
};

struct EnumerateOptions {
    /// Stop once this many classes are known. A limit forces a sequential search.
    std::optional<std::size_t> limit;
    std::size_t jobs = 1;
};

/// Every radius-1 3-polytope with degree sequence s, up to isomorphism.
///
/// Rim vertices are processed in order; at each vertex the forward chords are
/// chosen by include/exclude over increasing far endpoint, bounded by the
/// innermost enclosing chord. A vertex's chord count is fixed once its
/// forward chords are chosen and is matched against the remaining multiset.
/// A rotation puts a vertex of maximum chord degree at position 0. Results
/// are deduplicated by dihedral_canonical and then by canonical_form.
RealizationReport enumerate_realizations(const DegreeSequence& s, const EnumerateOptions& options = {});

bool is_unigraphic(const DegreeSequence& s);

/// Chord-degree multiset {d_i - 3} over the rim, or nullopt when s cannot be
/// realised for arithmetic reasons (d_1 != p-1, an entry outside [3, p-1],
/// odd sum, too many chords).
std::optional<std::vector<int>> rim_chord_degrees(const DegreeSequence& s);

/// All sequences of order p with d_1 = p-1, d_i in [3, p-1], even sum,
/// a >= 3 and p >= 3a, in decreasing lexicographic order.
std::vector<DegreeSequence> admissible_sequences(int p);

struct Disagreement {
    DegreeSequence sequence;
    bool classified_unigraphic = false;
    bool oracle_unigraphic = false;
};

struct VerificationReport {
    int p_min = 0;
    int p_max = 0;
    std::size_t examined = 0;
    std::size_t agreements = 0;
    std::vector<Disagreement> disagreements;
    /// Confirmed unigraphic sequences per row (a sequence counts once per row).
    std::map<std::string, std::size_t> family_counts;
    std::vector<DegreeSequence> unigraphic;
};

VerificationReport verify_theorem(int p_min, int p_max, std::size_t jobs = 1);

nlohmann::json realization_report_to_json(const RealizationReport& r);
nlohmann::json verification_report_to_json(const VerificationReport& r);

}  // namespace unipoly
