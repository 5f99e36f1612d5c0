#pragma once

// Colimits of finite diagrams of posets: glue in Set, take the smallest
// preorder making the legs monotone, then collapse its strongly connected
// components. Also reflection into Tos and Delta, and a bounded check of the
// universal property.

#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "posetcat/corpus.hpp"
#include "posetcat/delta.hpp"
#include "posetcat/poset.hpp"

namespace posetcat {

struct DiagramEdge {
  std::string id;
  int source = 0;
  int target = 0;
  MonotoneMap map;
};

/// Finite multidigraph of posets and monotone maps, read as a presentation of
/// a free category: no commutativity relations among edges.
class PosetDiagram {
 public:
  int add_node(std::string id, PosetRef poset) {
    if (!index_.emplace(id, node_count()).second) {
      throw Error(ErrorKind::InvalidDiagram, "duplicate node '" + id + "'");
    }
    node_ids_.push_back(std::move(id));
    nodes_.push_back(std::move(poset));
    return static_cast<int>(nodes_.size()) - 1;
  }

  void add_edge(std::string id, int source, int target, MonotoneMap map) {
    if (source < 0 || source >= node_count() || target < 0 || target >= node_count()) {
      throw Error(ErrorKind::InvalidDiagram, "edge '" + id + "' has unknown endpoint");
    }
    auto matches = [](const PosetRef& a, const PosetRef& b) { return a == b || *a == *b; };
    if (!matches(map.source_ref(), nodes_[source]) || !matches(map.target_ref(), nodes_[target])) {
      throw Error(ErrorKind::InvalidDiagram, "edge '" + id + "' map does not match its endpoints");
    }
    edges_.push_back({std::move(id), source, target, std::move(map)});
  }

  int node_count() const { return static_cast<int>(nodes_.size()); }
  const FinPoset& node(int k) const { return *nodes_.at(k); }
  const PosetRef& node_ref(int k) const { return nodes_.at(k); }
  const std::string& node_id(int k) const { return node_ids_.at(k); }
  const std::vector<DiagramEdge>& edges() const { return edges_; }

  std::optional<int> node_index(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  int total_elements() const {
    int total = 0;
    for (const auto& p : nodes_) total += p->size();
    return total;
  }

 private:
  std::vector<std::string> node_ids_;
  std::vector<PosetRef> nodes_;
  std::vector<DiagramEdge> edges_;
  std::unordered_map<std::string, int> index_;
};

/// Apex plus one leg per diagram node (same order as the nodes).
struct Cocone {
  PosetRef apex;
  std::vector<MonotoneMap> legs;
};

inline bool commutes(const PosetDiagram& d, const Cocone& c) {
  if (static_cast<int>(c.legs.size()) != d.node_count()) return false;
  for (int k = 0; k < d.node_count(); ++k) {
    if (!(c.legs[k].source() == d.node(k)) || !(c.legs[k].target() == *c.apex)) return false;
  }
  for (const auto& e : d.edges()) {
    for (int x = 0; x < d.node(e.source).size(); ++x) {
      if (c.legs[e.target](e.map(x)) != c.legs[e.source](x)) return false;
    }
  }
  return true;
}

/// Every apex element is hit by some leg.
inline bool jointly_surjective(const Cocone& c) {
  std::vector<char> hit(c.apex->size(), 0);
  for (const auto& leg : c.legs)
    for (int v : leg.values()) hit[v] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; });
}

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
};

/// Offsets of each node's carrier inside the disjoint union.
inline std::vector<int> carrier_offsets(const PosetDiagram& d) {
  std::vector<int> offsets(d.node_count() + 1, 0);
  for (int k = 0; k < d.node_count(); ++k) offsets[k + 1] = offsets[k] + d.node(k).size();
  return offsets;
}

/// Stage 1: quotient of the disjoint union by x ~ f(x). Returns, for every
/// disjoint-union element, its class index; classes numbered by first
/// occurrence.
inline std::vector<int> glue_carriers(const PosetDiagram& d, const std::vector<int>& offsets,
                                      int& class_count) {
  const int total = offsets.back();
  UnionFind uf(total);
  for (const auto& e : d.edges()) {
    for (int x = 0; x < d.node(e.source).size(); ++x) {
      uf.unite(offsets[e.source] + x, offsets[e.target] + e.map(x));
    }
  }
  std::vector<int> root_class(total, -1);
  std::vector<int> cls(total);
  class_count = 0;
  for (int g = 0; g < total; ++g) {
    int r = uf.find(g);
    if (root_class[r] == -1) root_class[r] = class_count++;
    cls[g] = root_class[r];
  }
  return cls;
}

/// Stage 2 helper: reflexive-transitive closure by repeated squaring.
inline Relation close_by_squaring(Relation r) {
  const int n = r.size();
  r.close_reflexive();
  while (true) {
    Relation next = r;
    bool changed = false;
    for (int x = 0; x < n; ++x)
      for (int k = 0; k < n; ++k) {
        if (!r(x, k)) continue;
        for (int y = 0; y < n; ++y) {
          if (r(k, y) && !next(x, y)) {
            next.set(x, y);
            changed = true;
          }
        }
      }
    if (!changed) return r;
    r = std::move(next);
  }
}

/// Stage 3 helper: Tarjan's strongly connected components of the relation
/// read as a digraph. Component ids are renumbered by smallest member.
inline std::vector<int> strongly_connected_components(const Relation& r, int& count) {
  const int n = r.size();
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1), stack;
  std::vector<char> on_stack(n, 0);
  int next_index = 0;
  int raw_count = 0;
  auto visit = [&](auto&& self, int v) -> void {
    index[v] = low[v] = next_index++;
    stack.push_back(v);
    on_stack[v] = 1;
    for (int w = 0; w < n; ++w) {
      if (w == v || !r(v, w)) continue;
      if (index[w] == -1) {
        self(self, w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      int w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = 0;
        comp[w] = raw_count;
      } while (w != v);
      ++raw_count;
    }
  };
  for (int v = 0; v < n; ++v)
    if (index[v] == -1) visit(visit, v);

  std::vector<int> renumber(raw_count, -1);
  count = 0;
  for (int v = 0; v < n; ++v) {
    if (renumber[comp[v]] == -1) renumber[comp[v]] = count++;
    comp[v] = renumber[comp[v]];
  }
  return comp;
}

/// Names apex points after a representative element, falling back to
/// "node:element" when bare names would collide.
inline std::vector<std::string> apex_names(const PosetDiagram& d, const std::vector<int>& offsets,
                                           const std::vector<int>& point_of, int points) {
  std::vector<int> representative(points, -1);
  for (int g = 0; g < offsets.back(); ++g)
    if (representative[point_of[g]] == -1) representative[point_of[g]] = g;
  auto locate = [&](int g) {
    int node = static_cast<int>(std::upper_bound(offsets.begin(), offsets.end(), g) - offsets.begin()) - 1;
    return std::pair{node, g - offsets[node]};
  };
  std::vector<std::string> bare(points), qualified(points);
  for (int p = 0; p < points; ++p) {
    auto [node, x] = locate(representative[p]);
    bare[p] = d.node(node).element(x);
    qualified[p] = d.node_id(node) + ":" + bare[p];
  }
  std::vector<std::string> sorted = bare;
  std::sort(sorted.begin(), sorted.end());
  bool distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  return distinct ? bare : qualified;
}

inline Cocone assemble_cocone(const PosetDiagram& d, const std::vector<int>& offsets,
                              const std::vector<int>& point_of, FinPoset apex) {
  Cocone c{share(std::move(apex)), {}};
  for (int k = 0; k < d.node_count(); ++k) {
    std::vector<int> values(d.node(k).size());
    for (int x = 0; x < d.node(k).size(); ++x) values[x] = point_of[offsets[k] + x];
    c.legs.emplace_back(d.node_ref(k), c.apex, std::move(values));
  }
  return c;
}

}  // namespace detail

inline Cocone colimit_pos(const PosetDiagram& d) {
  const auto offsets = detail::carrier_offsets(d);
  int classes = 0;
  const auto cls = detail::glue_carriers(d, offsets, classes);

  Relation generated(classes);
  for (int k = 0; k < d.node_count(); ++k) {
    const FinPoset& p = d.node(k);
    for (int x = 0; x < p.size(); ++x)
      for (int y = 0; y < p.size(); ++y)
        if (p.leq(x, y)) generated.set(cls[offsets[k] + x], cls[offsets[k] + y]);
  }
  const Relation preorder = detail::close_by_squaring(std::move(generated));

  int points = 0;
  const auto comp = detail::strongly_connected_components(preorder, points);
  std::vector<int> class_rep(points, -1);
  for (int c = 0; c < classes; ++c)
    if (class_rep[comp[c]] == -1) class_rep[comp[c]] = c;
  Relation leq(points);
  for (int a = 0; a < points; ++a)
    for (int b = 0; b < points; ++b)
      if (preorder(class_rep[a], class_rep[b])) leq.set(a, b);

  std::vector<int> point_of(offsets.back());
  for (int g = 0; g < offsets.back(); ++g) point_of[g] = comp[cls[g]];
  FinPoset apex(detail::apex_names(d, offsets, point_of, points), std::move(leq));
  return detail::assemble_cocone(d, offsets, point_of, std::move(apex));
}

/// Colimit in finite sets: nodes must carry discrete orders.
inline Cocone colimit_set(const PosetDiagram& d) {
  for (int k = 0; k < d.node_count(); ++k) {
    if (d.node(k).comparabilities() != d.node(k).size()) {
      throw Error(ErrorKind::WrongSubcategory, "node '" + d.node_id(k) + "' is not a discrete set");
    }
  }
  const auto offsets = detail::carrier_offsets(d);
  int classes = 0;
  const auto cls = detail::glue_carriers(d, offsets, classes);
  Relation leq(classes);
  leq.close_reflexive();
  FinPoset apex(detail::apex_names(d, offsets, cls, classes), std::move(leq));
  return detail::assemble_cocone(d, offsets, cls, std::move(apex));
}

inline std::optional<Cocone> colimit_tos(const PosetDiagram& d) {
  for (int k = 0; k < d.node_count(); ++k) {
    if (!d.node(k).is_total()) {
      throw Error(ErrorKind::WrongSubcategory, "node '" + d.node_id(k) + "' is not totally ordered");
    }
  }
  Cocone c = colimit_pos(d);
  if (!c.apex->is_total()) return std::nullopt;
  return c;
}

inline std::optional<Cocone> colimit_delta(const PosetDiagram& d) {
  for (int k = 0; k < d.node_count(); ++k) {
    if (d.node(k).empty() || !d.node(k).is_total()) {
      throw Error(ErrorKind::WrongSubcategory,
                  "node '" + d.node_id(k) + "' is not a finite non-empty total order");
    }
  }
  Cocone c = colimit_pos(d);
  if (c.apex->empty() || !c.apex->is_total()) return std::nullopt;
  return c;
}

/// Human-readable reason why a Delta colimit is missing.
inline std::string missing_delta_colimit_reason(const PosetDiagram& d, const Cocone& pos_colimit) {
  if (d.node_count() == 0) return "no initial object in Δ (empty diagram)";
  if (d.edges().empty() && d.node_count() >= 2) return "no coproducts in Δ";
  return "colimit in Pos is " + describe(*pos_colimit.apex) + ", which is not totally ordered";
}

// ---------------------------------------------------------------------------
// Bounded universal-property verification.

namespace detail {

/// Counts assignments of variables to points of `target` satisfying binary
/// constraints; independent components are counted separately and
/// multiplied, and each component is counted by a left-to-right search that
/// memoises on the values of the still-relevant (frontier) variables.
class AssignmentCounter {
 public:
  enum class Kind { Leq, Eq };
  struct Constraint {
    int a;
    int b;
    Kind kind;
  };

  AssignmentCounter(int variables, std::vector<Constraint> constraints, const FinPoset& target)
      : variables_(variables), constraints_(std::move(constraints)), target_(target) {}

  std::uint64_t count() const {
    if (variables_ == 0) return 1;
    if (target_.empty()) return 0;
    std::vector<std::vector<std::pair<int, std::size_t>>> adjacent(variables_);
    for (std::size_t c = 0; c < constraints_.size(); ++c) {
      adjacent[constraints_[c].a].emplace_back(constraints_[c].b, c);
      adjacent[constraints_[c].b].emplace_back(constraints_[c].a, c);
    }
    std::vector<char> seen(variables_, 0);
    std::uint64_t total = 1;
    for (int start = 0; start < variables_ && total != 0; ++start) {
      if (seen[start]) continue;
      std::vector<int> order{start};
      seen[start] = 1;
      for (std::size_t q = 0; q < order.size(); ++q)
        for (auto [w, c] : adjacent[order[q]])
          if (!seen[w]) {
            seen[w] = 1;
            order.push_back(w);
          }
      total *= count_component(order, adjacent);
    }
    return total;
  }

 private:
  std::uint64_t count_component(const std::vector<int>& order,
                                const std::vector<std::vector<std::pair<int, std::size_t>>>& adjacent) const {
    const int m = static_cast<int>(order.size());
    std::vector<int> position(variables_, -1);
    for (int k = 0; k < m; ++k) position[order[k]] = k;
    // frontier[k]: assigned positions (< k) with a constraint reaching >= k.
    std::vector<std::vector<int>> frontier(m + 1);
    for (int k = 0; k <= m; ++k)
      for (int i = 0; i < k; ++i) {
        bool live = false;
        for (auto [w, c] : adjacent[order[i]]) live = live || position[w] >= k;
        if (live) frontier[k].push_back(i);
      }
    std::vector<int> values(m, -1);
    std::vector<std::unordered_map<std::string, std::uint64_t>> memo(m + 1);
    auto consistent = [&](int k, int v) {
      for (auto [w, c] : adjacent[order[k]]) {
        const int pw = position[w];
        if (pw >= k) continue;
        const auto& con = constraints_[c];
        const int va = con.a == order[k] ? v : values[pw];
        const int vb = con.b == order[k] ? v : values[pw];
        if (con.a == con.b) {
          if (con.kind == Kind::Eq) continue;
          if (!target_.leq(v, v)) return false;
          continue;
        }
        if (con.kind == Kind::Eq ? va != vb : !target_.leq(va, vb)) return false;
      }
      return true;
    };
    auto search = [&](auto&& self, int k) -> std::uint64_t {
      if (k == m) return 1;
      std::string key;
      key.reserve(frontier[k].size());
      for (int i : frontier[k]) key.push_back(static_cast<char>(values[i]));
      if (auto it = memo[k].find(key); it != memo[k].end()) return it->second;
      std::uint64_t total = 0;
      for (int v = 0; v < target_.size(); ++v) {
        if (!consistent(k, v)) continue;
        values[k] = v;
        total += self(self, k + 1);
      }
      values[k] = -1;
      memo[k].emplace(std::move(key), total);
      return total;
    };
    return search(search, 0);
  }

  int variables_;
  std::vector<Constraint> constraints_;
  const FinPoset& target_;
};

/// Number of cocones over d with apex q, counted directly from the diagram.
inline std::uint64_t count_cocones(const PosetDiagram& d, const FinPoset& q) {
  using Counter = AssignmentCounter;
  const auto offsets = carrier_offsets(d);
  std::vector<Counter::Constraint> constraints;
  for (int k = 0; k < d.node_count(); ++k)
    for (auto [x, y] : d.node(k).covers())
      constraints.push_back({offsets[k] + x, offsets[k] + y, Counter::Kind::Leq});
  for (const auto& e : d.edges())
    for (int x = 0; x < d.node(e.source).size(); ++x)
      constraints.push_back({offsets[e.source] + x, offsets[e.target] + e.map(x), Counter::Kind::Eq});
  return Counter(offsets.back(), std::move(constraints), q).count();
}

inline std::uint64_t count_monotone_maps(const FinPoset& p, const FinPoset& q) {
  using Counter = AssignmentCounter;
  std::vector<Counter::Constraint> constraints;
  for (auto [x, y] : p.covers()) constraints.push_back({x, y, Counter::Kind::Leq});
  return Counter(p.size(), std::move(constraints), q).count();
}

}  // namespace detail

enum class Tristate { Holds, Fails, NotEvaluated };

inline std::string_view to_string(Tristate t) {
  switch (t) {
    case Tristate::Holds: return "holds";
    case Tristate::Fails: return "fails";
    case Tristate::NotEvaluated: return "not-evaluated";
  }
  return "?";
}

struct ApexCheck {
  FinPoset apex;           // test apex, one per isomorphism class
  std::uint64_t cocones;   // cocones over the diagram with this apex
  std::uint64_t mediators; // monotone maps from the candidate apex
  Tristate existence;
  Tristate uniqueness;

  bool passed() const { return existence == Tristate::Holds && uniqueness == Tristate::Holds; }
};

struct UniversalReport {
  int apex_bound = 0;
  bool jointly_surjective = true;
  std::vector<ApexCheck> checks;
  std::vector<std::string> witnesses;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const ApexCheck& c) { return c.passed(); });
  }
  std::uint64_t cocones_tested() const {
    std::uint64_t total = 0;
    for (const auto& c : checks) total += c.cocones;
    return total;
  }
};

/// For every test apex Q with at most `apex_bound` points (one per
/// isomorphism class), checks that each cocone over d with apex Q factors
/// uniquely through the candidate. Precomposition with jointly surjective
/// legs is injective, so in that case uniqueness always holds and existence
/// for all cocones is equivalent to the two counts agreeing. Without joint
/// surjectivity two mediators are exhibited into [1].
inline UniversalReport verify_universal(const PosetDiagram& d, const Cocone& candidate, int apex_bound) {
  if (!commutes(d, candidate)) throw Error(ErrorKind::InvalidCocone, "candidate cocone does not commute");
  UniversalReport report;
  report.apex_bound = apex_bound;
  report.jointly_surjective = jointly_surjective(candidate);
  const FinPoset& apex = *candidate.apex;

  if (!report.jointly_surjective) {
    std::vector<char> hit(apex.size(), 0);
    for (const auto& leg : candidate.legs)
      for (int v : leg.values()) hit[v] = 1;
    const int missed = static_cast<int>(std::find(hit.begin(), hit.end(), 0) - hit.begin());
    std::string up, strict;
    for (int y = 0; y < apex.size(); ++y) {
      up += (y ? "," : "") + std::to_string(apex.leq(missed, y) ? 1 : 0);
      strict += (y ? "," : "") + std::to_string(apex.less(missed, y) ? 1 : 0);
    }
    report.witnesses.push_back("apex element '" + apex.element(missed) +
                               "' is hit by no leg; mediators (" + up + ") and (" + strict +
                               ") into [1] agree on every leg");
  }

  for (int n = 0; n <= apex_bound; ++n) {
    for (const FinPoset& q : posets_up_to_iso(n)) {
      ApexCheck check{q, detail::count_cocones(d, q), detail::count_monotone_maps(apex, q),
                      Tristate::NotEvaluated, Tristate::NotEvaluated};
      if (report.jointly_surjective) {
        check.uniqueness = Tristate::Holds;
        check.existence = check.mediators == check.cocones ? Tristate::Holds : Tristate::Fails;
        if (check.existence == Tristate::Fails) {
          report.witnesses.push_back("apex " + describe(q) + ": " + std::to_string(check.cocones) +
                                     " cocones but only " + std::to_string(check.mediators) +
                                     " mediating maps");
        }
      } else {
        const bool two_point_chain = q.size() == 2 && q.is_total();
        check.uniqueness = two_point_chain ? Tristate::Fails : Tristate::NotEvaluated;
      }
      report.checks.push_back(std::move(check));
    }
  }
  return report;
}

}  // namespace posetcat
