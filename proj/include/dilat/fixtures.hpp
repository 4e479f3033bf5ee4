#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dilat/digraph.hpp"

namespace dilat {

/// Two-cycle digraph on 14 vertices: 8-cycle 1..8, 6-cycle 9..14, plus 1->9
/// and 14->1. Out-degree 2 at 1 and 14, in-degree 2 at 1 and 9.
MultiDigraph figure1_digraph();

/// 9-cycle 1->2->...->9->1 with loops at 3 and 7 and the four extra edges
/// 3->9, 9->6, 7->4, 4->1 (closing the 7-cycle 1,2,3,9,6,7,4). Matches the
/// edge set found by reconstruct_figure4().
MultiDigraph figure4_digraph();

std::vector<std::string> fixture_names();

/// Stored fixture in the digraph text format, with a descriptive header.
/// Throws FixtureNotFound for unknown names.
std::string fixture_text(std::string_view name);

}  // namespace dilat
