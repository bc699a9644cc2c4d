#include "gp/surface.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace gp {

RibbonGraph build_ribbon(const VirtualString& alpha) {
  RibbonGraph rg;
  rg.arrow_of_vertex.assign(alpha.labels().begin(), alpha.labels().end());
  std::map<Letter, int> vertex_of;
  for (int v = 0; v < rg.vertex_count(); ++v)
    vertex_of[rg.arrow_of_vertex[v]] = v;

  auto port = [&](const VEndpoint& ep, bool outgoing) {
    const int v = vertex_of.at(ep.label);
    const Port p = ep.is_tail ? (outgoing ? kOutTail : kInTail)
                              : (outgoing ? kOutHead : kInHead);
    return 4 * v + p;
  };

  for (int n = 0; n < alpha.circle_count(); ++n) {
    const auto& eps = alpha.circle(n);
    const int k = static_cast<int>(eps.size());
    for (int t = 0; t < k; ++t) {
      rg.edges.push_back(RibbonEdge{n, t, port(eps[t], true),
                                    port(eps[(t + 1) % k], false)});
    }
  }
  return rg;
}

std::vector<std::vector<std::string>> trace_boundaries(const RibbonGraph& rg) {
  // Darts: 2 per edge, id 2e (forward) and 2e+1 (reverse). A boundary walk
  // arrives at a port, steps to the counterclockwise-next port of the same
  // vertex, and leaves along that port's arc.
  const int n_edges = rg.edge_count();
  std::vector<int> dart_at_port(4 * rg.vertex_count(), -1);
  for (int e = 0; e < n_edges; ++e) {
    dart_at_port[rg.edges[e].from_port] = 2 * e;
    dart_at_port[rg.edges[e].to_port] = 2 * e + 1;
  }
  auto target_port = [&](int dart) {
    const RibbonEdge& e = rg.edges[dart / 2];
    return (dart % 2 == 0) ? e.to_port : e.from_port;
  };
  auto next_dart = [&](int dart) {
    const int p = target_port(dart);
    const int succ = (p / 4) * 4 + (p + 1) % 4;
    const int leaving = dart_at_port[succ];
    if (leaving < 0) throw std::logic_error("unused port in ribbon graph");
    return leaving;
  };

  std::vector<std::vector<std::string>> cycles;
  std::vector<bool> seen(2 * n_edges, false);
  for (int d0 = 0; d0 < 2 * n_edges; ++d0) {
    if (seen[d0]) continue;
    std::vector<std::string> cycle;
    int d = d0;
    do {
      seen[d] = true;
      const RibbonEdge& e = rg.edges[d / 2];
      cycle.push_back("c" + std::to_string(e.circle) + "a" +
                      std::to_string(e.slot) + (d % 2 == 0 ? "+" : "-"));
      d = next_dart(d);
    } while (d != d0);
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

int boundary_components(const RibbonGraph& rg) {
  return static_cast<int>(trace_boundaries(rg).size());
}

SurfaceSummary genus(const VirtualString& alpha) {
  const RibbonGraph rg = build_ribbon(alpha);
  SurfaceSummary s;
  s.boundary_components = boundary_components(rg);
  s.euler_characteristic = rg.vertex_count() - rg.edge_count();
  const int twice_genus = 2 - s.euler_characteristic - s.boundary_components;
  if (twice_genus < 0 || twice_genus % 2 != 0)
    throw std::logic_error("inconsistent boundary count");
  s.genus = twice_genus / 2;
  return s;
}

}  // namespace gp
