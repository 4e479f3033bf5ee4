#include "dilat/fixtures.hpp"

#include "dilat/errors.hpp"
#include "dilat/families.hpp"

namespace dilat {

MultiDigraph figure1_digraph() { return build_shape_22(8, 6, 1, 6); }

MultiDigraph figure4_digraph() {
  MultiDigraph d(9);
  for (int v = 0; v < 9; ++v) d.add_edge(v, (v + 1) % 9);
  d.add_edge(2, 2);
  d.add_edge(6, 6);
  d.add_edge(2, 8);
  d.add_edge(8, 5);
  d.add_edge(6, 3);
  d.add_edge(3, 0);
  return d;
}

std::vector<std::string> fixture_names() { return {"figure1", "figure4"}; }

std::string fixture_text(std::string_view name) {
  if (name == "figure1")
    return format_digraph(figure1_digraph(),
                          {"figure1: (2,2)-shape with cycles of length 8 and 6, through-cycle 7",
                           "characteristic polynomial x^14 - x^8 - x^7 - x^6 + 1"});
  if (name == "figure4")
    return format_digraph(figure4_digraph(),
                          {"figure4: monodromy digraph of the fibered knot 8_9",
                           "9-cycle, loops at 3 and 7, extra edges 3->9 9->6 7->4 4->1",
                           "characteristic polynomial x^9 - 2x^8 + x^7 - 4x^5 + 4x^4 - x^2 + 2x - 1"});
  throw FixtureNotFound("unknown fixture \"" + std::string(name) + "\" (known: figure1, figure4)");
}

}  // namespace dilat
