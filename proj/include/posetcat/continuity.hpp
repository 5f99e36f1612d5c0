#pragma once

// Continuity diagnostics for truncated simplicial sets. Each check mirrors one
// limit diagram that a presheaf sending Delta-colimits to limits must
// respect; when all pass, the simplicial set is rebuilt as the nerve of the
// partial order read off its 1-simplices. Also the density colimit of a poset
// over its chains and the bijection between monotone maps and nerve maps.

#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "posetcat/colimit.hpp"
#include "posetcat/comma.hpp"
#include "posetcat/poset.hpp"
#include "posetcat/simplicial.hpp"

namespace posetcat {

enum class Verdict { Pass, Fail, Skipped };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Skipped: return "SKIPPED";
  }
  return "?";
}

struct CheckEntry {
  std::string name;  // e.g. "face-formula[3,1]"
  Verdict verdict = Verdict::Pass;
  std::string witness;
};

/// Verdicts of one check family; passes iff no entry failed or was skipped.
struct FamilyVerdict {
  std::string family;
  std::vector<CheckEntry> entries;
  std::string note;

  bool passed() const {
    return std::all_of(entries.begin(), entries.end(),
                       [](const CheckEntry& e) { return e.verdict == Verdict::Pass; });
  }
  bool failed() const {
    return std::any_of(entries.begin(), entries.end(),
                       [](const CheckEntry& e) { return e.verdict == Verdict::Fail; });
  }
  void add(std::string name, bool ok, std::string witness = {}) {
    entries.push_back({std::move(name), ok ? Verdict::Pass : Verdict::Fail, ok ? std::string{} : std::move(witness)});
  }
};

using VertexTuple = std::vector<int>;

namespace detail {

inline std::string tuple_text(const TruncatedSimplicialSet& x, const VertexTuple& t) {
  std::string out = "(";
  for (std::size_t k = 0; k < t.size(); ++k) out += (k ? "," : "") + x.simplex(0, t[k]);
  return out + ")";
}

}  // namespace detail

/// The edge of an n-simplex between vertices k and k+1, via the composite
/// d_0 ... d_{k-1} d_{k+2} ... d_n (rightmost acts first).
inline int spine_edge(const TruncatedSimplicialSet& x, int n, int simplex, int k) {
  int level = n;
  int cur = simplex;
  for (int m = n; m >= k + 2; --m) cur = x.face(level--, m, cur);
  for (int m = k - 1; m >= 0; --m) cur = x.face(level--, m, cur);
  return cur;
}

/// Vertex tuple of an n-simplex read off its spine edges. The second member
/// is false when consecutive edges disagree on their shared vertex.
inline std::pair<VertexTuple, bool> vertex_tuple(const TruncatedSimplicialSet& x, int n, int simplex) {
  if (n == 0) return {{simplex}, true};
  VertexTuple out;
  bool coherent = true;
  for (int k = 0; k < n; ++k) {
    const int edge = spine_edge(x, n, simplex, k);
    const int start = x.face(1, 1, edge);
    const int end = x.face(1, 0, edge);
    if (k == 0) {
      out.push_back(start);
    } else if (out.back() != start) {
      coherent = false;
    }
    out.push_back(end);
  }
  return {out, coherent};
}

/// Pairs (d_1 e, d_0 e) over all 1-simplices; the relation <=_X.
inline Relation edge_relation(const TruncatedSimplicialSet& x) {
  Relation r(x.level_size(0));
  if (x.truncation() == 0) {
    r.close_reflexive();
    return r;
  }
  for (int e = 0; e < x.level_size(1); ++e) r.set(x.face(1, 1, e), x.face(1, 0, e));
  return r;
}

inline FamilyVerdict check_relation_injective(const TruncatedSimplicialSet& x) {
  FamilyVerdict v{"relation-injective", {}, {}};
  if (x.truncation() < 1) {
    v.note = "no 1-simplices below truncation 1";
    return v;
  }
  std::map<std::pair<int, int>, int> seen;
  for (int e = 0; e < x.level_size(1); ++e) {
    const std::pair key{x.face(1, 1, e), x.face(1, 0, e)};
    auto [it, fresh] = seen.emplace(key, e);
    if (!fresh) {
      v.add("relation-injective", false,
            "1-simplices " + x.simplex(1, it->second) + " and " + x.simplex(1, e) + " both lie over (" +
                x.simplex(0, key.first) + "," + x.simplex(0, key.second) + ")");
      return v;
    }
  }
  v.add("relation-injective", true);
  if (x.level_size(1) == 0) v.note = "X_1 is empty";
  return v;
}

/// The relation as a table; refuses unless the 1-simplices are determined by
/// their endpoints.
inline Relation extract_order(const TruncatedSimplicialSet& x) {
  if (!check_relation_injective(x).passed()) {
    throw Error(ErrorKind::Protocol, "relation is only defined once <d_1, d_0> is injective");
  }
  return edge_relation(x);
}

namespace detail {

inline std::vector<VertexTuple> relation_chains(const Relation& r, int n) {
  std::vector<VertexTuple> out;
  VertexTuple cur;
  auto extend = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == n + 1) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v < r.size(); ++v) {
      if (!cur.empty() && !r(cur.back(), v)) continue;
      cur.push_back(v);
      self(self);
      cur.pop_back();
    }
  };
  extend(extend);
  return out;
}

}  // namespace detail

/// X_n is in bijection with the <=_X-increasing (n+1)-tuples of vertices.
inline FamilyVerdict check_chain_condition(const TruncatedSimplicialSet& x, int n) {
  FamilyVerdict v{"chain-condition", {}, {}};
  const std::string name = "chain-condition[" + std::to_string(n) + "]";
  if (n < 2 || n > x.truncation()) {
    throw Error(ErrorKind::Truncation, "chain condition needs 2 <= n <= K");
  }
  const Relation r = edge_relation(x);
  std::map<VertexTuple, int> image;
  for (int s = 0; s < x.level_size(n); ++s) {
    auto [tuple, coherent] = vertex_tuple(x, n, s);
    if (!coherent) {
      v.add(name, false, "spine of " + x.simplex(n, s) + " does not close up");
      return v;
    }
    auto [it, fresh] = image.emplace(tuple, s);
    if (!fresh) {
      v.add(name, false,
            "simplices " + x.simplex(n, it->second) + " and " + x.simplex(n, s) + " share vertices " +
                detail::tuple_text(x, tuple));
      return v;
    }
  }
  for (const auto& chain : detail::relation_chains(r, n)) {
    if (!image.count(chain)) {
      v.add(name, false, "no simplex over chain " + detail::tuple_text(x, chain));
      return v;
    }
  }
  v.add(name, true);
  return v;
}

inline FamilyVerdict check_face_formulas(const TruncatedSimplicialSet& x) {
  FamilyVerdict v{"face-formula", {}, {}};
  if (x.truncation() < 2) {
    v.note = "no levels >= 2";
    return v;
  }
  for (int n = 2; n <= x.truncation(); ++n) {
    for (int i = 0; i <= n; ++i) {
      std::string witness;
      for (int s = 0; s < x.level_size(n) && witness.empty(); ++s) {
        VertexTuple expected = vertex_tuple(x, n, s).first;
        expected.erase(expected.begin() + i);
        const int face = x.face(n, i, s);
        const VertexTuple actual = vertex_tuple(x, n - 1, face).first;
        if (actual != expected) {
          witness = "n=" + std::to_string(n) + " i=" + std::to_string(i) + " simplex " + x.simplex(n, s) +
                    ": d_i gives " + detail::tuple_text(x, actual) + ", expected " +
                    detail::tuple_text(x, expected);
        }
      }
      v.add("face-formula[" + std::to_string(n) + "," + std::to_string(i) + "]", witness.empty(), witness);
    }
  }
  // Transitivity of <=_X, witnessed by d_1 on the 2-simplex over each
  // composable pair.
  const Relation r = edge_relation(x);
  std::map<VertexTuple, int> triangles;
  for (int s = 0; s < x.level_size(2); ++s) triangles.emplace(vertex_tuple(x, 2, s).first, s);
  std::string witness;
  for (int a = 0; a < r.size() && witness.empty(); ++a)
    for (int b = 0; b < r.size() && witness.empty(); ++b)
      for (int c = 0; c < r.size() && witness.empty() && r(a, b); ++c) {
        if (!r(b, c)) continue;
        auto it = triangles.find({a, b, c});
        if (it == triangles.end()) {
          witness = "no 2-simplex over " + detail::tuple_text(x, {a, b, c});
        } else if (vertex_tuple(x, 1, x.face(2, 1, it->second)).first != VertexTuple{a, c}) {
          witness = "d_1 of " + x.simplex(2, it->second) + " does not join its outer vertices";
        }
      }
  v.add("face-formula[transitivity]", witness.empty(), witness);
  return v;
}

inline FamilyVerdict check_degeneracy_formulas(const TruncatedSimplicialSet& x) {
  FamilyVerdict v{"degeneracy-formula", {}, {}};
  if (x.truncation() < 1) {
    v.note = "no degeneracies below truncation 1";
    return v;
  }
  for (int n = 0; n < x.truncation(); ++n) {
    for (int i = 0; i <= n; ++i) {
      std::string witness;
      for (int s = 0; s < x.level_size(n) && witness.empty(); ++s) {
        VertexTuple expected = vertex_tuple(x, n, s).first;
        expected.insert(expected.begin() + i, expected[i]);
        const VertexTuple actual = vertex_tuple(x, n + 1, x.degeneracy(n, i, s)).first;
        if (actual != expected) {
          witness = "n=" + std::to_string(n) + " i=" + std::to_string(i) + " simplex " + x.simplex(n, s) +
                    ": s_i gives " + detail::tuple_text(x, actual) + ", expected " +
                    detail::tuple_text(x, expected);
        }
      }
      v.add("degeneracy-formula[" + std::to_string(n) + "," + std::to_string(i) + "]", witness.empty(), witness);
    }
  }
  const Relation r = edge_relation(x);
  std::string witness;
  for (int a = 0; a < r.size() && witness.empty(); ++a)
    if (!r(a, a)) witness = "no 1-simplex over (" + x.simplex(0, a) + "," + x.simplex(0, a) + ")";
  v.add("degeneracy-formula[reflexivity]", witness.empty(), witness);
  return v;
}

inline FamilyVerdict check_antisymmetry(const TruncatedSimplicialSet& x) {
  FamilyVerdict v{"antisymmetry", {}, {}};
  if (x.truncation() < 1) {
    v.note = "no 1-simplices below truncation 1";
    return v;
  }
  const Relation r = edge_relation(x);
  for (int a = 0; a < r.size(); ++a)
    for (int b = a + 1; b < r.size(); ++b)
      if (r(a, b) && r(b, a)) {
        v.add("antisymmetry", false,
              "both (" + x.simplex(0, a) + "," + x.simplex(0, b) + ") and (" + x.simplex(0, b) + "," +
                  x.simplex(0, a) + ") are 1-simplices");
        return v;
      }
  v.add("antisymmetry", true);
  return v;
}

/// X rebuilt as a nerve: P = (X_0, <=_X) and the levelwise bijection
/// X -> N(P) sending a simplex to its vertex tuple.
struct Reconstruction {
  PosetRef poset;
  SSetRef nerve;
  SimplicialMap iso;
};

struct ContinuityReport {
  int truncation = 0;
  std::vector<FamilyVerdict> families;
  Relation relation;
  std::optional<Reconstruction> reconstruction;

  bool passed() const {
    return std::all_of(families.begin(), families.end(), [](const FamilyVerdict& f) { return f.passed(); });
  }
  const FamilyVerdict* family(const std::string& name) const {
    for (const auto& f : families)
      if (f.family == name) return &f;
    return nullptr;
  }
  std::vector<std::string> failed_families() const {
    std::vector<std::string> out;
    for (const auto& f : families)
      if (f.failed() && std::find(out.begin(), out.end(), f.family) == out.end()) out.push_back(f.family);
    return out;
  }
};

namespace detail {

inline ContinuityReport run_checks(const TruncatedSimplicialSet& x) {
  ContinuityReport report;
  report.truncation = x.truncation();
  report.relation = edge_relation(x);
  report.families.push_back(check_relation_injective(x));
  FamilyVerdict chains{"chain-condition", {}, {}};
  for (int n = 2; n <= x.truncation(); ++n) {
    auto level = check_chain_condition(x, n);
    chains.entries.insert(chains.entries.end(), level.entries.begin(), level.entries.end());
  }
  if (x.truncation() < 2) chains.note = "no levels >= 2";
  report.families.push_back(std::move(chains));
  report.families.push_back(check_face_formulas(x));
  report.families.push_back(check_degeneracy_formulas(x));
  report.families.push_back(check_antisymmetry(x));
  return report;
}

inline Reconstruction rebuild(const SSetRef& x, const Relation& r) {
  auto poset = share(FinPoset(x->level(0), r));
  auto target = std::make_shared<const TruncatedSimplicialSet>(nerve(*poset, x->truncation()));
  std::vector<std::vector<int>> components(x->truncation() + 1);
  for (int n = 0; n <= x->truncation(); ++n) {
    for (int s = 0; s < x->level_size(n); ++s) {
      auto image = target->find(n, chain_id(*poset, vertex_tuple(*x, n, s).first));
      if (!image) throw Error(ErrorKind::Protocol, "vertex tuple missing from rebuilt nerve");
      components[n].push_back(*image);
    }
  }
  SimplicialMap iso(x, target, std::move(components));
  if (!iso.levelwise_bijective()) throw Error(ErrorKind::Protocol, "rebuilt comparison map is not bijective");
  return {std::move(poset), std::move(target), std::move(iso)};
}

}  // namespace detail

/// Runs every check family; on success attaches the reconstruction.
inline ContinuityReport check_continuity(const SSetRef& x) {
  ContinuityReport report = detail::run_checks(*x);
  if (report.passed()) report.reconstruction = detail::rebuild(x, report.relation);
  return report;
}

inline ContinuityReport check_continuity(const TruncatedSimplicialSet& x) {
  return check_continuity(std::make_shared<const TruncatedSimplicialSet>(x));
}

inline Reconstruction reconstruct(const SSetRef& x) {
  ContinuityReport report = check_continuity(x);
  if (!report.reconstruction) {
    throw Error(ErrorKind::Protocol, "reconstruction needs a simplicial set passing every continuity check");
  }
  return std::move(*report.reconstruction);
}

inline std::string to_text(const ContinuityReport& report) {
  std::ostringstream out;
  out << "continuity up to truncation " << report.truncation << ": " << (report.passed() ? "PASS" : "FAIL")
      << "\n";
  for (const auto& f : report.families) {
    out << "  " << f.family << ": " << (f.passed() ? "PASS" : f.failed() ? "FAIL" : "SKIPPED");
    if (!f.note.empty()) out << " (" << f.note << ")";
    out << "\n";
    for (const auto& e : f.entries) {
      if (e.verdict == Verdict::Pass) continue;
      out << "    " << e.name << ": " << to_string(e.verdict) << " " << e.witness << "\n";
    }
  }
  if (report.reconstruction) out << "  reconstructed poset: " << describe(*report.reconstruction->poset) << "\n";
  return out.str();
}

inline std::string to_machine(const ContinuityReport& report) {
  std::ostringstream out;
  out << "truncation=" << report.truncation << "\n";
  out << "result=" << (report.passed() ? "PASS" : "FAIL") << "\n";
  for (const auto& f : report.families) {
    out << "check." << f.family << "=" << (f.passed() ? "PASS" : f.failed() ? "FAIL" : "SKIPPED") << "\n";
    for (const auto& e : f.entries) {
      out << "check." << e.name << "=" << to_string(e.verdict) << "\n";
      if (!e.witness.empty()) out << "witness." << e.name << "=" << e.witness << "\n";
    }
  }
  if (report.reconstruction) out << "reconstructed=" << describe(*report.reconstruction->poset) << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------

/// The poset as the colimit of all chains [n] -> P with n <= bound.
struct DensityReport {
  int bound = 0;
  CommaDiagram comma;
  Cocone colimit;
  std::optional<MonotoneMap> canonical;  // apex -> P induced by the chains
  bool canonical_is_iso = false;
  bool stable = false;  // bound + 1 gives an isomorphic apex via the comparison map
  std::optional<MonotoneMap> iso;

  bool passed() const { return canonical_is_iso && stable; }
};

inline DensityReport density_colimit(const PosetRef& p, int bound) {
  if (bound < height(*p)) {
    throw Error(ErrorKind::InsufficientBound, "bound " + std::to_string(bound) + " is below the height " +
                                                  std::to_string(height(*p)));
  }
  const auto inclusion = FunctorPresentation::inclusion(std::max(bound + 1, 1));
  DensityReport report;
  report.bound = bound;
  report.comma = comma_diagram(inclusion, *p, bound);
  report.colimit = colimit_pos(report.comma.diagram);
  if (!report.colimit.apex->empty() || !p->empty()) {
    auto values = detail::map_out_of_apex(report.colimit, [&](int node, int e) { return report.comma.chains[node][e]; });
    report.canonical.emplace(report.colimit.apex, p, std::move(values));
    report.canonical_is_iso = report.canonical->is_isomorphism();
  } else {
    report.canonical_is_iso = true;
  }
  const CommaDiagram next = comma_diagram(inclusion, *p, bound + 1);
  const Cocone next_colimit = colimit_pos(next.diagram);
  report.stable = induced_map(report.comma, report.colimit, next, next_colimit,
                              [](const Chain& c) { return c; })
                      .is_isomorphism();
  report.iso = find_isomorphism(report.colimit.apex, p);
  return report;
}

/// Monotone maps P -> Q against simplicial maps N(P) -> N(Q).
struct FullFaithfulReport {
  std::size_t monotone_maps = 0;
  std::size_t simplicial_maps = 0;
  bool injective = false;   // distinct monotone maps give distinct nerve maps
  bool surjective = false;  // every simplicial map is a nerve map

  bool passed() const { return injective && surjective && monotone_maps == simplicial_maps; }
};

inline FullFaithfulReport fully_faithful_witness(const PosetRef& p, const PosetRef& q, int k) {
  if (k < 1) throw Error(ErrorKind::Truncation, "full faithfulness witness needs K >= 1");
  auto np = std::make_shared<const TruncatedSimplicialSet>(nerve(*p, k));
  auto nq = std::make_shared<const TruncatedSimplicialSet>(nerve(*q, k));
  const auto maps = monotone_maps(*p, *q);
  const auto tables = simplicial_map_tables(*np, *nq);
  FullFaithfulReport report{maps.size(), tables.size(), true, true};
  std::map<std::vector<std::vector<int>>, int> images;
  for (const auto& values : maps) {
    const SimplicialMap image = nerve_map(MonotoneMap(p, q, values), np, nq);
    if (!images.emplace(image.components(), 1).second) report.injective = false;
  }
  for (const auto& table : tables)
    if (!images.count(table)) report.surjective = false;
  return report;
}

}  // namespace posetcat
