#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "unipoly/chord_diagram.hpp"
#include "unipoly/graph.hpp"

namespace unipoly {

enum class FamilyTag { B1, B2, B3, C, D, EXC };

std::string_view to_string(FamilyTag tag) noexcept;
std::optional<FamilyTag> parse_family_tag(std::string_view text);

/// One row of the classification with its parameters.
///
/// x is used by B1 and C; a is the number of degree-3 vertices (fixed per
/// row except C, where it is free). Use make_family_spec to fill in fixed
/// values.
struct FamilySpec {
    FamilyTag tag = FamilyTag::B1;
    int p = 0;
    int x = 0;
    int a = 0;

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
    friend auto operator<=>(const FamilySpec&, const FamilySpec&) = default;
};

/// Builds a spec, supplying the fixed a of rows other than C (and p = 15 for
/// EXC when p is 0). x and a are ignored where the row has no such parameter.
FamilySpec make_family_spec(FamilyTag tag, int p, int x = 0, int a = 0);

/// Name of the first row constraint `spec` violates, or nullopt if valid.
std::optional<std::string> spec_violation(const FamilySpec& spec);

/// The degree sequence displayed for the row. Requires a valid spec.
DegreeSequence family_sequence(const FamilySpec& spec);

/// y = 2(a-1) - x, the chord degree of the second bouquet centre in row C.
int family_y(const FamilySpec& spec);
/// Length p - 3a + 2 of the path joining the two bouquet centres in row C.
int family_path_length(const FamilySpec& spec);

enum class Scope { InScope, OutOfScopeA, OutOfScopeP, Infeasible };

std::string_view to_string(Scope scope) noexcept;

struct FamilyMatch {
    std::vector<FamilySpec> matches;
    Scope scope = Scope::Infeasible;

    /// In scope and matched by at least one row.
    bool unigraphic() const noexcept { return scope == Scope::InScope && !matches.empty(); }
};

/// Scope of a sequence:
///   Infeasible   d_1 != p-1, some d_i outside [3, p-1], or odd sum;
///   OutOfScopeA  a < 3 or a > p/2;
///   OutOfScopeP  3 <= a <= p/2 but p < 3a;
///   InScope      a >= 3 and p >= 3a.
Scope sequence_scope(const DegreeSequence& s);

/// Every row whose sequence equals s.
FamilyMatch classify(const DegreeSequence& s);

/// Realisation of a row. Throws std::invalid_argument naming the violated
/// constraint for an invalid spec.
ChordDiagram construct(const FamilySpec& spec);

/// All valid specs at order p in row order (B1 by x, B2, B3, C by a then x,
/// D, EXC), deduplicated by sequence.
std::vector<std::pair<DegreeSequence, FamilySpec>> iterate_family_sequences(int p);

nlohmann::json family_spec_to_json(const FamilySpec& spec);
nlohmann::json family_match_to_json(const DegreeSequence& s, const FamilyMatch& m);

}  // namespace unipoly
