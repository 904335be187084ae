#pragma once

// One small chord diagram per rewrite rule, built as an abstract chord graph
// and placed on a rim with spare isolated vertices.

#include <vector>

#include "unipoly/chord_diagram.hpp"
#include "unipoly/rewrites.hpp"

namespace unipoly::testing {

struct RuleFixture {
    RewriteRule rule;
    ChordDiagram diagram;
};

std::vector<RuleFixture> rule_fixtures();

}  // namespace unipoly::testing
