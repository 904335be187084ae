#pragma once

// Reference enumerators used as independent oracles in tests. They share no
// search code with the library: dissections come from include/exclude over
// the full diagonal list, polytopes from filtering every graph.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "unipoly/canonical.hpp"
#include "unipoly/chord_diagram.hpp"
#include "unipoly/graph.hpp"

namespace unipoly::testing {

/// Every non-crossing chord set on rim n (labelled, not reduced by symmetry).
std::vector<ChordDiagram> all_dissections(int n);

/// Polytope isomorphism classes of every dissection of rim p-1, by degree sequence.
std::map<DegreeSequence, std::set<CanonicalForm>> dissection_classes(int p);

/// Every graph on p vertices in which vertex p-1 is universal, filtered by
/// planarity and 3-connectivity, grouped by degree sequence.
std::map<DegreeSequence, std::set<CanonicalForm>> naive_radius_one_classes(int p);

/// Least upper-triangle adjacency string over all vertex permutations.
std::string brute_force_certificate(const PolytopeGraph& g);

/// Graph on n vertices whose edges are the set bits of mask over the
/// upper-triangle pairs (0,1), (0,2), ..., (n-2,n-1).
PolytopeGraph graph_from_mask(int n, unsigned long long mask);

}  // namespace unipoly::testing
