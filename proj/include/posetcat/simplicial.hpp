#pragma once

// Truncated simplicial sets: levels X_0..X_K with face and degeneracy tables,
// the nerve of a finite poset, and simplicial maps.

#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "posetcat/delta.hpp"
#include "posetcat/error.hpp"
#include "posetcat/poset.hpp"

namespace posetcat {

/// Raw level and table data. faces[n][i][x] = d_i(x) for x in X_n (n >= 1),
/// degeneracies[n][i][x] = s_i(x) for x in X_n (n < K). Entries index into
/// the adjacent level.
struct SimplicialData {
  std::string name = "X";
  int truncation = 0;
  std::vector<std::vector<std::string>> simplices;
  std::vector<std::vector<std::vector<int>>> faces;
  std::vector<std::vector<std::vector<int>>> degeneracies;

  int level_size(int n) const { return static_cast<int>(simplices.at(n).size()); }
};

/// A violated instance of a dual simplicial identity.
struct IdentityViolation {
  std::string identity;  // e.g. "d_i s_j = id"
  int n = 0;             // level of the simplex the composite starts from
  int i = 0;
  int j = 0;
  std::string simplex;

  std::string message() const {
    std::ostringstream out;
    out << identity << " fails at n=" << n << " i=" << i << " j=" << j << " on simplex " << simplex;
    return out.str();
  }
};

namespace detail {

inline void check_shape(const SimplicialData& data) {
  const int k = data.truncation;
  auto fail = [](const std::string& what) { throw Error(ErrorKind::IdentityViolation, what); };
  if (k < 0) fail("truncation level must be non-negative");
  if (static_cast<int>(data.simplices.size()) != k + 1) fail("expected K + 1 levels");
  if (static_cast<int>(data.faces.size()) != k + 1) fail("face tables must be indexed by level 0..K");
  if (static_cast<int>(data.degeneracies.size()) != k + 1) {
    fail("degeneracy tables must be indexed by level 0..K");
  }
  for (int n = 0; n <= k; ++n) {
    const int expected_faces = n == 0 ? 0 : n + 1;
    if (static_cast<int>(data.faces[n].size()) != expected_faces) {
      fail("level " + std::to_string(n) + " needs " + std::to_string(expected_faces) + " face tables");
    }
    for (int i = 0; i < expected_faces; ++i) {
      const auto& table = data.faces[n][i];
      if (static_cast<int>(table.size()) != data.level_size(n)) {
        fail("d_" + std::to_string(i) + " on level " + std::to_string(n) + " is not total");
      }
      for (int v : table)
        if (v < 0 || v >= data.level_size(n - 1)) {
          fail("d_" + std::to_string(i) + " on level " + std::to_string(n) + " leaves level " +
               std::to_string(n - 1));
        }
    }
    const int expected_degeneracies = n < k ? n + 1 : 0;
    if (static_cast<int>(data.degeneracies[n].size()) != expected_degeneracies) {
      fail("level " + std::to_string(n) + " needs " + std::to_string(expected_degeneracies) +
           " degeneracy tables");
    }
    for (int i = 0; i < expected_degeneracies; ++i) {
      const auto& table = data.degeneracies[n][i];
      if (static_cast<int>(table.size()) != data.level_size(n)) {
        fail("s_" + std::to_string(i) + " on level " + std::to_string(n) + " is not total");
      }
      for (int v : table)
        if (v < 0 || v >= data.level_size(n + 1)) {
          fail("s_" + std::to_string(i) + " on level " + std::to_string(n) + " leaves level " +
               std::to_string(n + 1));
        }
    }
  }
}

}  // namespace detail

/// First violated instance of the dual identities, checked wherever both
/// sides lie inside the truncation:
///   d_i d_j = d_{j-1} d_i  (i < j)        s_i s_j = s_{j+1} s_i  (i <= j)
///   d_i s_j = s_{j-1} d_i  (i < j)        d_j s_j = d_{j+1} s_j = id
///   d_i s_j = s_j d_{i-1}  (i > j + 1)
/// Table shapes must already be valid.
inline std::optional<IdentityViolation> find_identity_violation(const SimplicialData& x) {
  const int k = x.truncation;
  auto d = [&](int n, int i, int s) { return x.faces[n][i][s]; };
  auto s = [&](int n, int i, int t) { return x.degeneracies[n][i][t]; };
  for (int n = 2; n <= k; ++n)
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i < j; ++i)
        for (int t = 0; t < x.level_size(n); ++t)
          if (d(n - 1, i, d(n, j, t)) != d(n - 1, j - 1, d(n, i, t))) {
            return IdentityViolation{"d_i d_j = d_(j-1) d_i", n, i, j, x.simplices[n][t]};
          }
  for (int n = 0; n + 2 <= k; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= j; ++i)
        for (int t = 0; t < x.level_size(n); ++t)
          if (s(n + 1, i, s(n, j, t)) != s(n + 1, j + 1, s(n, i, t))) {
            return IdentityViolation{"s_i s_j = s_(j+1) s_i", n, i, j, x.simplices[n][t]};
          }
  for (int n = 0; n + 1 <= k; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= n + 1; ++i)
        for (int t = 0; t < x.level_size(n); ++t) {
          const int lhs = d(n + 1, i, s(n, j, t));
          if (i == j || i == j + 1) {
            if (lhs != t) return IdentityViolation{"d_i s_j = id", n, i, j, x.simplices[n][t]};
          } else if (i < j) {
            if (lhs != s(n - 1, j - 1, d(n, i, t))) {
              return IdentityViolation{"d_i s_j = s_(j-1) d_i", n, i, j, x.simplices[n][t]};
            }
          } else if (lhs != s(n - 1, j, d(n, i - 1, t))) {
            return IdentityViolation{"d_i s_j = s_j d_(i-1)", n, i, j, x.simplices[n][t]};
          }
        }
  return std::nullopt;
}

class TruncatedSimplicialSet {
 public:
  /// Wraps data after checking only that the tables are total. Used for
  /// diagnosing malformed inputs; make_sset is the validating constructor.
  static TruncatedSimplicialSet unchecked(SimplicialData data) {
    detail::check_shape(data);
    return TruncatedSimplicialSet(std::move(data));
  }

  const std::string& name() const { return data_.name; }
  int truncation() const { return data_.truncation; }
  int level_size(int n) const { return data_.level_size(n); }
  const std::vector<std::string>& level(int n) const { return data_.simplices.at(n); }
  const std::string& simplex(int n, int x) const { return data_.simplices.at(n).at(x); }
  int face(int n, int i, int x) const { return data_.faces[n][i][x]; }
  int degeneracy(int n, int i, int x) const { return data_.degeneracies[n][i][x]; }
  const SimplicialData& data() const { return data_; }

  std::optional<int> find(int n, const std::string& id) const {
    auto it = index_[n].find(id);
    if (it == index_[n].end()) return std::nullopt;
    return it->second;
  }

  /// The same data cut down to truncation level k.
  TruncatedSimplicialSet restrict_to(int k) const {
    if (k < 0 || k > truncation()) throw Error(ErrorKind::Truncation, "cannot restrict to that level");
    SimplicialData out = data_;
    out.truncation = k;
    out.simplices.resize(k + 1);
    out.faces.resize(k + 1);
    out.degeneracies.resize(k + 1);
    out.degeneracies[k].clear();
    return TruncatedSimplicialSet(std::move(out));
  }

 private:
  explicit TruncatedSimplicialSet(SimplicialData data) : data_(std::move(data)) {
    index_.resize(data_.simplices.size());
    for (std::size_t n = 0; n < data_.simplices.size(); ++n)
      for (std::size_t x = 0; x < data_.simplices[n].size(); ++x) {
        if (!index_[n].emplace(data_.simplices[n][x], static_cast<int>(x)).second) {
          throw Error(ErrorKind::IdentityViolation,
                      "duplicate simplex id '" + data_.simplices[n][x] + "' at level " + std::to_string(n));
        }
      }
  }

  SimplicialData data_;
  std::vector<std::unordered_map<std::string, int>> index_;
};

using SSetRef = std::shared_ptr<const TruncatedSimplicialSet>;

/// Validating constructor: tables total and every dual identity instance
/// inside the truncation holds.
inline TruncatedSimplicialSet make_sset(SimplicialData data) {
  detail::check_shape(data);
  if (auto violation = find_identity_violation(data)) {
    throw Error(ErrorKind::IdentityViolation, violation->message());
  }
  return TruncatedSimplicialSet::unchecked(std::move(data));
}

/// Simplex id used by the nerve: bare element at level 0, "(a,b,...)" above.
inline std::string chain_id(const FinPoset& p, const Chain& c) {
  if (c.size() == 1) return p.element(c[0]);
  std::string out = "(";
  for (std::size_t k = 0; k < c.size(); ++k) out += (k ? "," : "") + p.element(c[k]);
  return out + ")";
}

/// Nerve of P truncated at K: n-simplices are weakly increasing (n+1)-tuples,
/// d_i deletes position i and s_i repeats it.
inline TruncatedSimplicialSet nerve(const FinPoset& p, int k) {
  if (k < 0) throw Error(ErrorKind::Truncation, "truncation must be non-negative");
  SimplicialData data;
  data.name = "N";
  data.truncation = k;
  std::vector<std::vector<Chain>> levels;
  std::vector<std::map<Chain, int>> lookup(k + 1);
  for (int n = 0; n <= k; ++n) {
    levels.push_back(chains(p, n));
    std::vector<std::string> ids;
    for (std::size_t t = 0; t < levels[n].size(); ++t) {
      ids.push_back(chain_id(p, levels[n][t]));
      lookup[n].emplace(levels[n][t], static_cast<int>(t));
    }
    data.simplices.push_back(std::move(ids));
  }
  data.faces.resize(k + 1);
  data.degeneracies.resize(k + 1);
  for (int n = 1; n <= k; ++n) {
    for (int i = 0; i <= n; ++i) {
      std::vector<int> table;
      for (const Chain& c : levels[n]) {
        Chain smaller = c;
        smaller.erase(smaller.begin() + i);
        table.push_back(lookup[n - 1].at(smaller));
      }
      data.faces[n].push_back(std::move(table));
    }
  }
  for (int n = 0; n < k; ++n) {
    for (int i = 0; i <= n; ++i) {
      std::vector<int> table;
      for (const Chain& c : levels[n]) {
        Chain bigger = c;
        bigger.insert(bigger.begin() + i, c[i]);
        table.push_back(lookup[n + 1].at(bigger));
      }
      data.degeneracies[n].push_back(std::move(table));
    }
  }
  return make_sset(std::move(data));
}

/// X(f) : X_m -> X_n for f : [n] -> [m], through the normal form of f:
/// with f = delta_{i_k}..delta_{i_1} sigma_{j_1}..sigma_{j_l}, apply
/// d_{i_k}, ..., d_{i_1} and then s_{j_1}, ..., s_{j_l}.
inline std::vector<int> evaluate(const TruncatedSimplicialSet& x, const DeltaMap& f) {
  if (f.source().n > x.truncation() || f.target().n > x.truncation()) {
    throw Error(ErrorKind::Truncation, "map " + to_string(f) + " leaves truncation level " +
                                           std::to_string(x.truncation()));
  }
  const GeneratorWord word = factorize(f);
  std::vector<int> out(x.level_size(f.target().n));
  for (int t = 0; t < static_cast<int>(out.size()); ++t) {
    int level = f.target().n;
    int cur = t;
    for (auto it = word.faces.rbegin(); it != word.faces.rend(); ++it) cur = x.face(level--, *it, cur);
    for (int j : word.degeneracies) cur = x.degeneracy(level++, j, cur);
    out[t] = cur;
  }
  return out;
}

class SimplicialMap {
 public:
  SimplicialMap(SSetRef source, SSetRef target, std::vector<std::vector<int>> components)
      : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
    const auto& x = *source_;
    const auto& y = *target_;
    if (x.truncation() != y.truncation()) {
      throw Error(ErrorKind::InvalidMap, "simplicial map needs equal truncation levels");
    }
    if (static_cast<int>(components_.size()) != x.truncation() + 1) {
      throw Error(ErrorKind::InvalidMap, "one component per level expected");
    }
    for (int n = 0; n <= x.truncation(); ++n) {
      if (static_cast<int>(components_[n].size()) != x.level_size(n)) {
        throw Error(ErrorKind::InvalidMap, "component " + std::to_string(n) + " is not total");
      }
      for (int v : components_[n])
        if (v < 0 || v >= y.level_size(n)) {
          throw Error(ErrorKind::InvalidMap, "component " + std::to_string(n) + " leaves target level");
        }
    }
    if (auto bad = first_noncommuting()) throw Error(ErrorKind::InvalidMap, *bad);
  }

  const TruncatedSimplicialSet& source() const { return *source_; }
  const TruncatedSimplicialSet& target() const { return *target_; }
  const SSetRef& source_ref() const { return source_; }
  const SSetRef& target_ref() const { return target_; }
  const std::vector<std::vector<int>>& components() const { return components_; }
  int operator()(int n, int x) const { return components_[n][x]; }

  bool levelwise_bijective() const {
    for (int n = 0; n <= source_->truncation(); ++n) {
      if (source_->level_size(n) != target_->level_size(n)) return false;
      std::vector<char> hit(target_->level_size(n), 0);
      for (int v : components_[n]) {
        if (hit[v]) return false;
        hit[v] = 1;
      }
    }
    return true;
  }

  friend bool operator==(const SimplicialMap& a, const SimplicialMap& b) {
    return a.components_ == b.components_;
  }

 private:
  std::optional<std::string> first_noncommuting() const {
    const auto& x = *source_;
    const auto& y = *target_;
    for (int n = 1; n <= x.truncation(); ++n)
      for (int i = 0; i <= n; ++i)
        for (int t = 0; t < x.level_size(n); ++t)
          if (components_[n - 1][x.face(n, i, t)] != y.face(n, i, components_[n][t])) {
            return "component does not commute with d_" + std::to_string(i) + " at " + x.simplex(n, t);
          }
    for (int n = 0; n < x.truncation(); ++n)
      for (int i = 0; i <= n; ++i)
        for (int t = 0; t < x.level_size(n); ++t)
          if (components_[n + 1][x.degeneracy(n, i, t)] != y.degeneracy(n, i, components_[n][t])) {
            return "component does not commute with s_" + std::to_string(i) + " at " + x.simplex(n, t);
          }
    return std::nullopt;
  }

  SSetRef source_;
  SSetRef target_;
  std::vector<std::vector<int>> components_;
};

inline SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  std::vector<std::vector<int>> components(f.components().size());
  for (std::size_t n = 0; n < components.size(); ++n)
    for (int v : f.components()[n]) components[n].push_back(g.components()[n][v]);
  return SimplicialMap(f.source_ref(), g.target_ref(), std::move(components));
}

inline SimplicialMap identity_map(const SSetRef& x) {
  std::vector<std::vector<int>> components(x->truncation() + 1);
  for (int n = 0; n <= x->truncation(); ++n)
    for (int t = 0; t < x->level_size(n); ++t) components[n].push_back(t);
  return SimplicialMap(x, x, std::move(components));
}

/// N(f) : N(P) -> N(Q), applying f pointwise to tuples.
inline SimplicialMap nerve_map(const MonotoneMap& f, const SSetRef& np, const SSetRef& nq) {
  const FinPoset& p = f.source();
  const FinPoset& q = f.target();
  std::vector<std::vector<int>> components(np->truncation() + 1);
  for (int n = 0; n <= np->truncation(); ++n) {
    for (const Chain& c : chains(p, n)) {
      Chain image;
      for (int v : c) image.push_back(f(v));
      auto target = nq->find(n, chain_id(q, image));
      if (!target) throw Error(ErrorKind::InvalidMap, "target nerve lacks simplex " + chain_id(q, image));
      components[n].push_back(*target);
    }
  }
  return SimplicialMap(np, nq, std::move(components));
}

inline SimplicialMap nerve_map(const MonotoneMap& f, int k) {
  return nerve_map(f, std::make_shared<const TruncatedSimplicialSet>(nerve(f.source(), k)),
                   std::make_shared<const TruncatedSimplicialSet>(nerve(f.target(), k)));
}

/// Component tables of every simplicial map X -> Y. Levels are filled bottom
/// up; a simplex is assigned a target simplex whose faces are the images of
/// its faces, and a degenerate simplex s_i(x) is forced to s_i of x's image.
inline std::vector<std::vector<std::vector<int>>> simplicial_map_tables(const TruncatedSimplicialSet& x,
                                                                        const TruncatedSimplicialSet& y) {
  if (x.truncation() != y.truncation()) {
    throw Error(ErrorKind::Truncation, "simplicial maps need equal truncation levels");
  }
  const int k = x.truncation();
  // Degeneracy constraints landing on each simplex: (level n-1, i, source).
  std::vector<std::vector<std::vector<std::pair<int, int>>>> forced(k + 1);
  for (int n = 0; n <= k; ++n) forced[n].resize(x.level_size(n));
  for (int n = 0; n < k; ++n)
    for (int i = 0; i <= n; ++i)
      for (int t = 0; t < x.level_size(n); ++t) forced[n + 1][x.degeneracy(n, i, t)].emplace_back(i, t);

  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> comp(k + 1);
  for (int n = 0; n <= k; ++n) comp[n].assign(x.level_size(n), -1);

  auto assign = [&](auto&& self, int n, int t) -> void {
    if (n > k) {
      out.push_back(comp);
      return;
    }
    if (t == x.level_size(n)) {
      self(self, n + 1, 0);
      return;
    }
    for (int v = 0; v < y.level_size(n); ++v) {
      bool ok = true;
      for (int i = 0; i <= n && n > 0 && ok; ++i) ok = y.face(n, i, v) == comp[n - 1][x.face(n, i, t)];
      for (auto [i, src] : forced[n][t]) {
        if (!ok) break;
        ok = y.degeneracy(n - 1, i, comp[n - 1][src]) == v;
      }
      if (!ok) continue;
      comp[n][t] = v;
      self(self, n, t + 1);
    }
    comp[n][t] = -1;
  };
  assign(assign, 0, 0);
  return out;
}

inline std::vector<SimplicialMap> simplicial_maps(const SSetRef& x, const SSetRef& y) {
  std::vector<SimplicialMap> out;
  for (auto& table : simplicial_map_tables(*x, *y)) out.emplace_back(x, y, std::move(table));
  return out;
}

}  // namespace posetcat
