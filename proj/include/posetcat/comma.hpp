#pragma once

// Functors out of the simplex category presented by generator images, and
// the truncated comma category of chains [n] -> P with its images under
// such a functor.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "posetcat/colimit.hpp"
#include "posetcat/delta.hpp"
#include "posetcat/poset.hpp"
#include "posetcat/simplicial.hpp"

namespace posetcat {

enum class TargetCategory { Pos, Set };

inline std::string_view to_string(TargetCategory t) { return t == TargetCategory::Pos ? "Pos" : "Set"; }

/// A functor from the simplex category into finite posets or finite sets,
/// given on objects [0..max_n] and on generators. Images of generators are
/// checked against every simplicial identity instance up to max_n.
class FunctorPresentation {
 public:
  using ObjectRule = std::function<FinPoset(int n)>;
  /// Value table of the image of face(n, i) or degeneracy(n, i).
  using GeneratorRule = std::function<std::vector<int>(GeneratorKind kind, int n, int i)>;

  FunctorPresentation(std::string name, TargetCategory target, ObjectRule on_objects,
                      GeneratorRule on_generators, int max_n)
      : name_(std::move(name)), target_(target), max_n_(max_n) {
    if (max_n < 1) throw Error(ErrorKind::InvalidMap, "functor presentations need max_n >= 1");
    for (int n = 0; n <= max_n; ++n) {
      objects_.push_back(share(on_objects(n)));
      if (target == TargetCategory::Set && objects_.back()->comparabilities() != objects_.back()->size()) {
        throw Error(ErrorKind::WrongSubcategory, name_ + ": Set-valued functor must give discrete objects");
      }
    }
    faces_.resize(max_n + 1);
    degeneracies_.resize(max_n + 1);
    for (int n = 0; n <= max_n; ++n) {
      for (int i = 0; n >= 1 && i <= n; ++i) {
        faces_[n].emplace_back(objects_[n - 1], objects_[n], on_generators(GeneratorKind::Face, n, i));
      }
      for (int i = 0; n + 1 <= max_n && i <= n; ++i) {
        degeneracies_[n].emplace_back(objects_[n + 1], objects_[n],
                                      on_generators(GeneratorKind::Degeneracy, n, i));
      }
    }
    for (const auto& inst : identity_instances(max_n)) {
      if (!same_values(image_of_word(inst.source, inst.lhs_word), image_of_word(inst.source, inst.rhs_word))) {
        throw Error(ErrorKind::IdentityViolation, name_ + ": generator images violate " + inst.label);
      }
    }
  }

  const std::string& name() const { return name_; }
  TargetCategory target() const { return target_; }
  int max_n() const { return max_n_; }

  const PosetRef& object(int n) const {
    if (n < 0 || n > max_n_) throw Error(ErrorKind::Truncation, name_ + ": object beyond max_n");
    return objects_[n];
  }

  const MonotoneMap& image(const Generator& g) const {
    if (g.kind == GeneratorKind::Face) return faces_.at(g.n).at(g.i);
    return degeneracies_.at(g.n).at(g.i);
  }

  /// F(f), composed from generator images along the normal form of f.
  MonotoneMap map_image(const DeltaMap& f) const {
    if (f.source().n > max_n_ || f.target().n > max_n_) {
      throw Error(ErrorKind::Truncation, name_ + ": map beyond max_n");
    }
    const GeneratorWord word = factorize(f);
    MonotoneMap result = MonotoneMap::identity(objects_[f.source().n]);
    int level = f.source().n;
    for (auto it = word.degeneracies.rbegin(); it != word.degeneracies.rend(); ++it) {
      result = compose(degeneracies_[level - 1][*it], result);
      --level;
    }
    for (int i : word.faces) {
      result = compose(faces_[level + 1][i], result);
      ++level;
    }
    return result;
  }

  /// The inclusion of the simplex category into posets.
  static FunctorPresentation inclusion(int max_n = 8) {
    return FunctorPresentation(
        "inclusion", TargetCategory::Pos, [](int n) { return ordinal_poset(n); },
        [](GeneratorKind kind, int n, int i) { return generator(kind, n, i).values(); }, max_n);
  }

  /// [n] |-> [n] x Q, f |-> f x id.
  static FunctorPresentation product_with(const FinPoset& q, int max_n = 8) {
    return FunctorPresentation(
        "product-with " + describe(q), TargetCategory::Pos, [q](int n) { return product(ordinal_poset(n), q); },
        [q](GeneratorKind kind, int n, int i) {
          const DeltaMap g = generator(kind, n, i);
          std::vector<int> values;
          for (int a : g.values())
            for (int b = 0; b < q.size(); ++b) values.push_back(a * q.size() + b);
          return values;
        },
        max_n);
  }

  /// The constant one-point set; its extension counts connected components.
  static FunctorPresentation point(int max_n = 8) {
    return FunctorPresentation(
        "point", TargetCategory::Set, [](int) { return antichain(1); },
        [](GeneratorKind, int, int) { return std::vector<int>{0}; }, max_n);
  }

 private:
  MonotoneMap image_of_word(int source, const std::vector<Generator>& word) const {
    MonotoneMap result = MonotoneMap::identity(objects_[source]);
    for (const auto& g : word) result = compose(image(g), result);
    return result;
  }

  std::string name_;
  TargetCategory target_;
  int max_n_;
  std::vector<PosetRef> objects_;
  std::vector<std::vector<MonotoneMap>> faces_;
  std::vector<std::vector<MonotoneMap>> degeneracies_;
};

/// Truncated comma category i/P: nodes are monotone maps x : [n] -> P with
/// n <= bound (weakly increasing tuples), edges are the triangles
/// f : [n] -> [m] with y . f = x other than identities. Payloads are the
/// functor's images.
struct CommaDiagram {
  int bound = 0;
  bool injective_only = false;
  PosetDiagram diagram;
  std::vector<Chain> chains;  // node k is chains[k]
  std::vector<DeltaMap> edge_maps;
  std::map<Chain, int> node_of;
};

inline CommaDiagram comma_diagram(const FunctorPresentation& functor, const FinPoset& p, int bound,
                                  bool injective_only = false) {
  if (bound < 0) throw Error(ErrorKind::InsufficientBound, "comma diagram bound must be non-negative");
  if (bound > functor.max_n()) {
    throw Error(ErrorKind::Truncation, "comma bound " + std::to_string(bound) + " exceeds functor max_n");
  }
  CommaDiagram out;
  out.bound = bound;
  out.injective_only = injective_only;
  for (int n = 0; n <= bound; ++n) {
    for (Chain& c : chains(p, n, injective_only)) {
      out.node_of.emplace(c, static_cast<int>(out.chains.size()));
      out.diagram.add_node(chain_id(p, c), functor.object(n));
      out.chains.push_back(std::move(c));
    }
  }
  std::map<std::pair<int, int>, std::pair<std::vector<DeltaMap>, std::vector<MonotoneMap>>> images;
  auto maps_between = [&](int n, int m) -> const auto& {
    auto it = images.find({n, m});
    if (it == images.end()) {
      std::vector<DeltaMap> maps;
      std::vector<MonotoneMap> payloads;
      for (DeltaMap& f : all_delta_maps(n, m)) {
        if (injective_only && !f.injective()) continue;
        payloads.push_back(functor.map_image(f));
        maps.push_back(std::move(f));
      }
      it = images.emplace(std::pair{n, m}, std::pair{std::move(maps), std::move(payloads)}).first;
    }
    return it->second;
  };
  for (int y = 0; y < static_cast<int>(out.chains.size()); ++y) {
    const Chain& target_chain = out.chains[y];
    const int m = static_cast<int>(target_chain.size()) - 1;
    for (int n = 0; n <= bound; ++n) {
      const auto& [maps, payloads] = maps_between(n, m);
      for (std::size_t k = 0; k < maps.size(); ++k) {
        if (n == m && maps[k].is_identity()) continue;
        Chain source_chain(n + 1);
        for (int j = 0; j <= n; ++j) source_chain[j] = target_chain[maps[k](j)];
        auto x = out.node_of.find(source_chain);
        if (x == out.node_of.end()) continue;  // only possible when restricting to injective chains
        out.diagram.add_edge("e" + std::to_string(out.edge_maps.size()), x->second, y, payloads[k]);
        out.edge_maps.push_back(maps[k]);
      }
    }
  }
  return out;
}

inline Cocone colimit_in(TargetCategory target, const PosetDiagram& d) {
  return target == TargetCategory::Pos ? colimit_pos(d) : colimit_set(d);
}

namespace detail {

/// Map out of a comma colimit apex given by a rule on (node, element) pairs;
/// checks the rule is constant on each apex point.
template <typename Rule>
std::vector<int> map_out_of_apex(const Cocone& colimit, Rule&& rule) {
  std::vector<int> values(colimit.apex->size(), -1);
  for (std::size_t k = 0; k < colimit.legs.size(); ++k) {
    const auto& leg = colimit.legs[k];
    for (int e = 0; e < leg.source().size(); ++e) {
      const int v = rule(static_cast<int>(k), e);
      int& slot = values[leg(e)];
      if (slot == -1) {
        slot = v;
      } else if (slot != v) {
        throw Error(ErrorKind::Protocol, "induced map is not well defined on the colimit");
      }
    }
  }
  if (std::find(values.begin(), values.end(), -1) != values.end()) {
    throw Error(ErrorKind::Protocol, "colimit legs are not jointly surjective");
  }
  return values;
}

}  // namespace detail

/// The map between comma colimits induced by sending each chain c of the
/// first diagram to transform(c) in the second.
template <typename Transform>
MonotoneMap induced_map(const CommaDiagram& from, const Cocone& from_colimit, const CommaDiagram& to,
                        const Cocone& to_colimit, Transform&& transform) {
  auto values = detail::map_out_of_apex(from_colimit, [&](int node, int e) {
    const Chain image = transform(from.chains[node]);
    auto it = to.node_of.find(image);
    if (it == to.node_of.end()) throw Error(ErrorKind::Truncation, "chain image missing from target diagram");
    return to_colimit.legs[it->second](e);
  });
  return MonotoneMap(from_colimit.apex, to_colimit.apex, std::move(values));
}

}  // namespace posetcat
