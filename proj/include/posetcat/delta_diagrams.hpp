#pragma once

// Small diagrams in the simplex category whose colimits are known ordinals:
// the pushout squares behind the face and degeneracy formulas, the spine
// gluing [m] from m edges, and the diagrams detecting the relation, the
// boundary of [2] and antisymmetry. Each comes with its claimed cocone so the
// colimit engine can confirm it.

#include <string>
#include <vector>

#include "posetcat/colimit.hpp"
#include "posetcat/delta.hpp"

namespace posetcat {

struct DeltaDiagram {
  struct Edge {
    int source;
    int target;
    DeltaMap map;
  };

  std::string name;
  std::vector<int> nodes;  // ordinals
  std::vector<Edge> edges;
  int apex = 0;
  std::vector<DeltaMap> legs;  // claimed colimit legs, one per node
};

inline DeltaDiagram to_delta_diagram(const DeltaSquare& sq) {
  const int span = sq.top.source().n;
  return {sq.name,
          {span, sq.top.target().n, sq.left.target().n},
          {{0, 1, sq.top}, {0, 2, sq.left}},
          sq.corner(),
          {compose(sq.right, sq.top), sq.right, sq.bottom}};
}

/// m copies of [1] glued end to start along m - 1 copies of [0]; the
/// colimit is [m] and edge k lands on (k, k+1).
inline DeltaDiagram spine_diagram(int m) {
  if (m < 1) throw Error(ErrorKind::InvalidSquare, "spine needs at least one edge");
  DeltaDiagram d{"spine m=" + std::to_string(m), {}, {}, m, {}};
  for (int k = 0; k < m; ++k) {
    d.nodes.push_back(1);
    d.legs.emplace_back(1, m, std::vector<int>{k, k + 1});
  }
  for (int k = 0; k + 1 < m; ++k) {
    const int vertex = static_cast<int>(d.nodes.size());
    d.nodes.push_back(0);
    d.legs.emplace_back(0, m, std::vector<int>{k + 1});
    d.edges.push_back({vertex, k, face(1, 0)});
    d.edges.push_back({vertex, k + 1, face(1, 1)});
  }
  return d;
}

/// Two copies of [1] sharing both endpoints; colimit [1]. Detects that a
/// 1-simplex is determined by its two faces.
inline DeltaDiagram relation_diagram() {
  return {"relation",
          {1, 1, 0, 0},
          {{2, 0, face(1, 1)}, {2, 1, face(1, 1)}, {3, 0, face(1, 0)}, {3, 1, face(1, 0)}},
          1,
          {DeltaMap::identity(1), DeltaMap::identity(1), face(1, 1), face(1, 0)}};
}

/// The three edges of [2] glued at their vertices; colimit [2].
inline DeltaDiagram boundary_diagram() {
  return {"boundary of [2]",
          {1, 1, 1, 0, 0, 0},
          {{3, 0, face(1, 1)},
           {3, 1, face(1, 1)},
           {4, 0, face(1, 0)},
           {4, 2, face(1, 1)},
           {5, 1, face(1, 0)},
           {5, 2, face(1, 0)}},
          2,
          {face(2, 2), face(2, 1), face(2, 0), DeltaMap(0, 2, {0}), DeltaMap(0, 2, {1}),
           DeltaMap(0, 2, {2})}};
}

/// Two copies of [1] glued head to tail in both directions; the resulting
/// cycle collapses to [0].
inline DeltaDiagram antisymmetry_diagram() {
  return {"antisymmetry",
          {1, 1, 0, 0},
          {{2, 0, face(1, 1)}, {2, 1, face(1, 0)}, {3, 0, face(1, 0)}, {3, 1, face(1, 1)}},
          0,
          {degeneracy(0, 0), degeneracy(0, 0), DeltaMap::identity(0), DeltaMap::identity(0)}};
}

struct RealizedDiagram {
  PosetDiagram diagram;
  Cocone claimed;
};

/// Poset diagram on ordinal posets plus the claimed cocone as monotone maps.
inline RealizedDiagram realize(const DeltaDiagram& dd) {
  RealizedDiagram out;
  std::vector<PosetRef> objects;
  for (std::size_t k = 0; k < dd.nodes.size(); ++k) {
    objects.push_back(share(ordinal_poset(dd.nodes[k])));
    out.diagram.add_node("n" + std::to_string(k) + "[" + std::to_string(dd.nodes[k]) + "]",
                         objects.back());
  }
  for (std::size_t e = 0; e < dd.edges.size(); ++e) {
    const auto& edge = dd.edges[e];
    out.diagram.add_edge("e" + std::to_string(e), edge.source, edge.target,
                         MonotoneMap::from_delta(edge.map, objects[edge.source], objects[edge.target]));
  }
  out.claimed.apex = share(ordinal_poset(dd.apex));
  for (std::size_t k = 0; k < dd.legs.size(); ++k) {
    out.claimed.legs.push_back(MonotoneMap::from_delta(dd.legs[k], objects[k], out.claimed.apex));
  }
  return out;
}

/// Outcome of feeding a claimed Delta colimit to colimit_delta.
struct DeltaColimitCheck {
  std::string name;
  bool claimed_commutes = false;
  bool exists_in_delta = false;
  int computed_corner = -1;        // size - 1 of the computed apex
  bool matches_claim = false;      // computed cocone equals the claimed one up to the unique iso

  bool passed() const { return claimed_commutes && exists_in_delta && matches_claim; }
};

inline DeltaColimitCheck check_delta_colimit(const DeltaDiagram& dd) {
  DeltaColimitCheck out{dd.name};
  const auto realized = realize(dd);
  out.claimed_commutes = commutes(realized.diagram, realized.claimed);
  const auto colimit = colimit_delta(realized.diagram);
  if (!colimit) return out;
  out.exists_in_delta = true;
  out.computed_corner = colimit->apex->size() - 1;
  if (out.computed_corner != dd.apex) return out;
  // Between finite total orders of equal size the only isomorphism is the
  // order-preserving bijection; the legs must agree through it.
  auto iso = isomorphism_values(*colimit->apex, *realized.claimed.apex);
  if (!iso) return out;
  bool agree = true;
  for (std::size_t k = 0; k < colimit->legs.size() && agree; ++k)
    for (int x = 0; x < colimit->legs[k].source().size() && agree; ++x)
      agree = (*iso)[colimit->legs[k](x)] == realized.claimed.legs[k](x);
  out.matches_claim = agree;
  return out;
}

}  // namespace posetcat
