#ifndef GP_SURFACE_HPP
#define GP_SURFACE_HPP

#include <string>
#include <vector>

#include "gp/vstring.hpp"

namespace gp {

// One 4-valent vertex per arrow. Ports follow the disc model for a
// crossing: the incoming strand at the tail enters from below, the
// incoming strand at the head from the left, with the disc oriented
// counterclockwise. That fixes the counterclockwise port order
// (in_tail, out_head, out_tail, in_head).
enum Port : int {
  kInTail = 0,
  kOutHead = 1,
  kOutTail = 2,
  kInHead = 3,
};

struct RibbonEdge {
  int circle = 0;
  int slot = 0;       // arc starts at this endpoint slot
  int from_port = 0;  // global port id = 4 * vertex + Port
  int to_port = 0;
};

struct RibbonGraph {
  std::vector<Letter> arrow_of_vertex;  // sorted labels; vertex id = index
  std::vector<RibbonEdge> edges;        // one per core-circle arc
  int vertex_count() const { return static_cast<int>(arrow_of_vertex.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
};

struct SurfaceSummary {
  int boundary_components = 0;
  int euler_characteristic = 0;
  int genus = 0;
  bool planar() const { return genus == 0; }
};

RibbonGraph build_ribbon(const VirtualString& alpha);

// Boundary cycles of the thickened graph, as sequences of directed arcs
// "c<circle>a<slot><+|->". Every arc side appears in exactly one cycle.
std::vector<std::vector<std::string>> trace_boundaries(const RibbonGraph& rg);

int boundary_components(const RibbonGraph& rg);

SurfaceSummary genus(const VirtualString& alpha);

}  // namespace gp

#endif
