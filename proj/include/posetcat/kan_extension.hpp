#pragma once

// Extension of a functor F on the simplex category to all finite posets by
// the colimit of F over the chains of P. The chain category is infinite, so
// the colimit is computed over chains of bounded length and the bound is
// raised until the comparison map between successive apexes is invertible.

#include <optional>
#include <string>
#include <vector>

#include "posetcat/colimit.hpp"
#include "posetcat/comma.hpp"
#include "posetcat/poset.hpp"

namespace posetcat {

struct ExtensionResult {
  PosetRef value;
  Cocone cocone;          // legs F([n]) -> value, one per chain
  int stabilization = 0;  // bound b with colim_b -> colim_{b+1} invertible
  CommaDiagram diagram;   // the comma diagram at that bound
};

/// The colimit at a fixed length bound, without any stabilization test.
inline ExtensionResult extend_at(const FunctorPresentation& f, const FinPoset& p, int bound,
                                 bool injective_only = false) {
  ExtensionResult out;
  out.stabilization = bound;
  out.diagram = comma_diagram(f, p, bound, injective_only);
  out.cocone = colimit_in(f.target(), out.diagram.diagram);
  out.value = out.cocone.apex;
  return out;
}

/// Raises the bound from initial_bound until two successive colimits agree
/// through the map induced by the inclusion of chain sets. Throws
/// NonStabilized past cap and InsufficientBound below the height of P.
inline ExtensionResult extend(const FunctorPresentation& f, const FinPoset& p, int initial_bound, int cap = -1,
                              bool injective_only = false) {
  if (initial_bound < height(p)) {
    throw Error(ErrorKind::InsufficientBound, "initial bound " + std::to_string(initial_bound) +
                                                  " is below the height " + std::to_string(height(p)));
  }
  if (cap < 0) cap = std::min(initial_bound + 3, f.max_n() - 1);
  if (cap + 1 > f.max_n()) throw Error(ErrorKind::Truncation, "cap + 1 exceeds the functor's max_n");
  ExtensionResult current = extend_at(f, p, initial_bound, injective_only);
  for (int b = initial_bound; b <= cap; ++b) {
    ExtensionResult next = extend_at(f, p, b + 1, injective_only);
    const MonotoneMap comparison = induced_map(current.diagram, current.cocone, next.diagram, next.cocone,
                                               [](const Chain& c) { return c; });
    if (comparison.is_isomorphism()) return current;
    if (b == cap) {
      throw Error(ErrorKind::NonStabilized, "no stabilization by bound " + std::to_string(cap) + ": " +
                                                describe(*current.value) + " vs " + describe(*next.value));
    }
    current = std::move(next);
  }
  throw Error(ErrorKind::NonStabilized, "cap below initial bound");
}

inline ExtensionResult extend(const FunctorPresentation& f, const FinPoset& p) {
  return extend(f, p, height(p));
}

/// F~(g) for monotone g : P -> Q, sending the leg of chain c to the leg of
/// g . c. Both sides are recomputed at a common bound over all chains.
inline MonotoneMap extend_map(const FunctorPresentation& f, const MonotoneMap& g, const ExtensionResult& on_p,
                              const ExtensionResult& on_q) {
  const int bound = std::max(on_p.stabilization, on_q.stabilization);
  auto refresh = [&](const ExtensionResult& r, const FinPoset& poset) {
    return r.stabilization == bound && !r.diagram.injective_only ? r : extend_at(f, poset, bound);
  };
  const ExtensionResult from = refresh(on_p, g.source());
  const ExtensionResult to = refresh(on_q, g.target());
  auto values = detail::map_out_of_apex(from.cocone, [&](int node, int e) {
    Chain image;
    for (int x : from.diagram.chains[node]) image.push_back(g(x));
    return to.cocone.legs[to.diagram.node_of.at(image)](e);
  });
  return MonotoneMap(on_p.value, on_q.value, std::move(values));
}

struct CocontinuityCheck {
  PosetRef extended_colimit;  // F~(colim D)
  PosetRef colimit_of_images; // colim F~(D)
  std::optional<MonotoneMap> iso;
  std::string witness;

  bool passed() const { return iso.has_value(); }
};

/// Compares F~ applied to the colimit of D with the colimit of F~ applied
/// to D, both computed outright.
inline CocontinuityCheck check_extension_cocontinuity(const FunctorPresentation& f, const PosetDiagram& d) {
  const Cocone colim = colimit_pos(d);
  CocontinuityCheck out;
  out.extended_colimit = extend(f, *colim.apex).value;

  std::vector<ExtensionResult> images;
  for (int k = 0; k < d.node_count(); ++k) images.push_back(extend(f, d.node(k)));
  PosetDiagram image_diagram;
  for (int k = 0; k < d.node_count(); ++k) image_diagram.add_node(d.node_id(k), images[k].value);
  for (const auto& e : d.edges()) {
    image_diagram.add_edge(e.id, e.source, e.target, extend_map(f, e.map, images[e.source], images[e.target]));
  }
  out.colimit_of_images = colimit_in(f.target(), image_diagram).apex;
  out.iso = find_isomorphism(out.extended_colimit, out.colimit_of_images);
  if (!out.iso) {
    out.witness = "F~(colim D) = " + describe(*out.extended_colimit) +
                  " but colim F~(D) = " + describe(*out.colimit_of_images);
  }
  return out;
}

}  // namespace posetcat
