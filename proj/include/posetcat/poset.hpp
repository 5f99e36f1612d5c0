#pragma once

// Finite partial orders, monotone maps, chains, linear extensions and order
// isomorphisms.

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "posetcat/delta.hpp"
#include "posetcat/error.hpp"

namespace posetcat {

/// Square boolean relation over element indices, row-major.
class Relation {
 public:
  Relation() = default;
  explicit Relation(int size) : size_(size), cells_(static_cast<std::size_t>(size) * size, 0) {}

  int size() const { return size_; }
  bool operator()(int x, int y) const { return cells_[index(x, y)] != 0; }
  void set(int x, int y, bool value = true) { cells_[index(x, y)] = value ? 1 : 0; }

  void close_reflexive() {
    for (int x = 0; x < size_; ++x) set(x, x);
  }
  /// Warshall closure.
  void close_transitive() {
    for (int k = 0; k < size_; ++k)
      for (int x = 0; x < size_; ++x)
        if ((*this)(x, k))
          for (int y = 0; y < size_; ++y)
            if ((*this)(k, y)) set(x, y);
  }

  bool reflexive() const {
    for (int x = 0; x < size_; ++x)
      if (!(*this)(x, x)) return false;
    return true;
  }
  bool transitive() const {
    for (int x = 0; x < size_; ++x)
      for (int y = 0; y < size_; ++y)
        if ((*this)(x, y))
          for (int z = 0; z < size_; ++z)
            if ((*this)(y, z) && !(*this)(x, z)) return false;
    return true;
  }
  bool antisymmetric() const {
    for (int x = 0; x < size_; ++x)
      for (int y = x + 1; y < size_; ++y)
        if ((*this)(x, y) && (*this)(y, x)) return false;
    return true;
  }

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::size_t index(int x, int y) const { return static_cast<std::size_t>(x) * size_ + y; }

  int size_ = 0;
  std::vector<char> cells_;
};

class FinPoset {
 public:
  FinPoset() = default;

  /// Takes a relation that must already be a partial order.
  FinPoset(std::vector<std::string> elements, Relation leq)
      : elements_(std::move(elements)), leq_(std::move(leq)) {
    if (leq_.size() != static_cast<int>(elements_.size())) {
      throw Error(ErrorKind::InvalidPoset, "relation size does not match element count");
    }
    for (int k = 0; k < size(); ++k) {
      if (!index_.emplace(elements_[k], k).second) {
        throw Error(ErrorKind::InvalidPoset, "duplicate element '" + elements_[k] + "'");
      }
    }
    if (!leq_.reflexive()) throw Error(ErrorKind::InvalidPoset, "relation is not reflexive");
    if (!leq_.transitive()) throw Error(ErrorKind::InvalidPoset, "relation is not transitive");
    if (!leq_.antisymmetric()) {
      throw Error(ErrorKind::AntisymmetryViolation, "relation is not antisymmetric");
    }
  }

  int size() const { return static_cast<int>(elements_.size()); }
  bool empty() const { return elements_.empty(); }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::string& element(int k) const { return elements_.at(k); }
  const Relation& relation() const { return leq_; }

  std::optional<int> index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  int at(const std::string& id) const {
    auto k = index_of(id);
    if (!k) throw Error(ErrorKind::InvalidPoset, "unknown element '" + id + "'");
    return *k;
  }

  bool leq(int x, int y) const { return leq_(x, y); }
  bool less(int x, int y) const { return x != y && leq_(x, y); }
  bool comparable(int x, int y) const { return leq_(x, y) || leq_(y, x); }

  bool is_total() const {
    for (int x = 0; x < size(); ++x)
      for (int y = x + 1; y < size(); ++y)
        if (!comparable(x, y)) return false;
    return true;
  }

  /// Number of pairs x <= y, reflexive ones included.
  int comparabilities() const {
    int count = 0;
    for (int x = 0; x < size(); ++x)
      for (int y = 0; y < size(); ++y) count += leq(x, y);
    return count;
  }

  /// Hasse covers x < y with nothing strictly in between.
  std::vector<std::pair<int, int>> covers() const {
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < size(); ++x)
      for (int y = 0; y < size(); ++y) {
        if (!less(x, y)) continue;
        bool direct = true;
        for (int z = 0; z < size() && direct; ++z) direct = !(less(x, z) && less(z, y));
        if (direct) out.emplace_back(x, y);
      }
    return out;
  }

  friend bool operator==(const FinPoset& a, const FinPoset& b) {
    return a.elements_ == b.elements_ && a.leq_ == b.leq_;
  }

 private:
  std::vector<std::string> elements_;
  Relation leq_;
  std::unordered_map<std::string, int> index_;
};

using PosetRef = std::shared_ptr<const FinPoset>;

inline PosetRef share(FinPoset p) { return std::make_shared<const FinPoset>(std::move(p)); }

/// Builds the reflexive-transitive closure of the declared pairs. A cycle
/// through distinct elements is reported with one offending cycle.
inline FinPoset make_poset(std::vector<std::string> elements,
                           const std::vector<std::pair<std::string, std::string>>& declared) {
  std::unordered_map<std::string, int> index;
  for (int k = 0; k < static_cast<int>(elements.size()); ++k) {
    if (!index.emplace(elements[k], k).second) {
      throw Error(ErrorKind::InvalidPoset, "duplicate element '" + elements[k] + "'");
    }
  }
  const int n = static_cast<int>(elements.size());
  Relation leq(n);
  std::vector<std::vector<int>> successors(n);
  for (const auto& [lo, hi] : declared) {
    auto a = index.find(lo);
    auto b = index.find(hi);
    if (a == index.end() || b == index.end()) {
      throw Error(ErrorKind::InvalidPoset, "pair mentions unknown element: " + lo + " <= " + hi);
    }
    leq.set(a->second, b->second);
    successors[a->second].push_back(b->second);
  }
  leq.close_reflexive();
  leq.close_transitive();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y || !leq(x, y) || !leq(y, x)) continue;
      // Recover an explicit cycle x -> ... -> y -> ... -> x by BFS.
      auto path = [&](int from, int to) {
        std::vector<int> parent(n, -1);
        std::vector<int> queue{from};
        parent[from] = from;
        for (std::size_t q = 0; q < queue.size(); ++q) {
          for (int s : successors[queue[q]]) {
            if (parent[s] == -1) {
              parent[s] = queue[q];
              queue.push_back(s);
            }
          }
        }
        std::vector<int> out;
        for (int v = to; v != from; v = parent[v]) out.push_back(v);
        std::reverse(out.begin(), out.end());
        return out;
      };
      std::string cycle = elements[x];
      for (int v : path(x, y)) cycle += " <= " + elements[v];
      for (int v : path(y, x)) cycle += " <= " + elements[v];
      throw Error(ErrorKind::AntisymmetryViolation, "cycle through distinct elements: " + cycle);
    }
  }
  return FinPoset(std::move(elements), std::move(leq));
}

/// The ordinal [n] as a poset with elements "0".."n".
inline FinPoset ordinal_poset(int n) {
  std::vector<std::string> elements;
  Relation leq(n + 1);
  for (int x = 0; x <= n; ++x) {
    elements.push_back(std::to_string(x));
    for (int y = x; y <= n; ++y) leq.set(x, y);
  }
  return FinPoset(std::move(elements), std::move(leq));
}

inline FinPoset antichain(int size) {
  std::vector<std::string> elements;
  Relation leq(size);
  for (int x = 0; x < size; ++x) {
    elements.push_back(std::to_string(x));
    leq.set(x, x);
  }
  return FinPoset(std::move(elements), std::move(leq));
}

/// Product order; elements are named "(p,q)".
inline FinPoset product(const FinPoset& p, const FinPoset& q) {
  std::vector<std::string> elements;
  const int n = p.size() * q.size();
  Relation leq(n);
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < q.size(); ++b) {
      elements.push_back("(" + p.element(a) + "," + q.element(b) + ")");
      for (int c = 0; c < p.size(); ++c)
        for (int d = 0; d < q.size(); ++d)
          if (p.leq(a, c) && q.leq(b, d)) leq.set(a * q.size() + b, c * q.size() + d);
    }
  return FinPoset(std::move(elements), std::move(leq));
}

/// Length (number of strict steps) of the longest strict chain; 0 for an
/// antichain or the empty poset.
inline int height(const FinPoset& p) {
  std::vector<int> depth(p.size(), 0);
  // Process in an order where smaller elements come first.
  std::vector<int> order(p.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    int below_a = 0, below_b = 0;
    for (int z = 0; z < p.size(); ++z) {
      below_a += p.less(z, a);
      below_b += p.less(z, b);
    }
    return below_a < below_b;
  });
  int best = 0;
  for (int y : order) {
    for (int x = 0; x < p.size(); ++x)
      if (p.less(x, y)) depth[y] = std::max(depth[y], depth[x] + 1);
    best = std::max(best, depth[y]);
  }
  return best;
}

class MonotoneMap {
 public:
  MonotoneMap(PosetRef source, PosetRef target, std::vector<int> values)
      : source_(std::move(source)), target_(std::move(target)), values_(std::move(values)) {
    if (static_cast<int>(values_.size()) != source_->size()) {
      throw Error(ErrorKind::InvalidMap, "value table length does not match source size");
    }
    for (int v : values_) {
      if (v < 0 || v >= target_->size()) throw Error(ErrorKind::InvalidMap, "value outside target");
    }
    for (int x = 0; x < source_->size(); ++x)
      for (int y = 0; y < source_->size(); ++y)
        if (source_->leq(x, y) && !target_->leq(values_[x], values_[y])) {
          throw Error(ErrorKind::InvalidMap, "map is not monotone at " + source_->element(x) +
                                                 " <= " + source_->element(y));
        }
  }

  static MonotoneMap identity(PosetRef p) {
    std::vector<int> values(p->size());
    std::iota(values.begin(), values.end(), 0);
    return MonotoneMap(p, p, std::move(values));
  }

  /// The ordinal map f as a monotone map between ordinal posets.
  static MonotoneMap from_delta(const DeltaMap& f, PosetRef source, PosetRef target) {
    return MonotoneMap(std::move(source), std::move(target), f.values());
  }

  const FinPoset& source() const { return *source_; }
  const FinPoset& target() const { return *target_; }
  const PosetRef& source_ref() const { return source_; }
  const PosetRef& target_ref() const { return target_; }
  const std::vector<int>& values() const { return values_; }
  int operator()(int x) const { return values_.at(x); }

  bool injective() const {
    std::vector<int> sorted = values_;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  }
  bool surjective() const {
    std::vector<char> hit(target_->size(), 0);
    for (int v : values_) hit[v] = 1;
    return std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; });
  }
  /// Bijective with monotone inverse.
  bool is_isomorphism() const {
    if (!injective() || !surjective()) return false;
    for (int x = 0; x < source_->size(); ++x)
      for (int y = 0; y < source_->size(); ++y)
        if (target_->leq(values_[x], values_[y]) != source_->leq(x, y)) return false;
    return true;
  }

 private:
  PosetRef source_;
  PosetRef target_;
  std::vector<int> values_;
};

/// g after f.
inline MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f) {
  if (f.target_ref() != g.source_ref() && !(f.target() == g.source())) {
    throw Error(ErrorKind::Composition, "monotone maps are not composable");
  }
  std::vector<int> values(f.values().size());
  for (std::size_t x = 0; x < values.size(); ++x) values[x] = g(f(static_cast<int>(x)));
  return MonotoneMap(f.source_ref(), g.target_ref(), std::move(values));
}

inline bool same_values(const MonotoneMap& a, const MonotoneMap& b) { return a.values() == b.values(); }

using Chain = std::vector<int>;

/// Weakly (or strictly) increasing (n+1)-tuples, lexicographic by index.
inline std::vector<Chain> chains(const FinPoset& p, int n, bool strict = false) {
  if (n < 0) throw Error(ErrorKind::InvalidMap, "chain length must be non-negative");
  std::vector<Chain> out;
  Chain current;
  auto extend = [&](auto&& self) -> void {
    if (static_cast<int>(current.size()) == n + 1) {
      out.push_back(current);
      return;
    }
    for (int x = 0; x < p.size(); ++x) {
      if (!current.empty() && !(strict ? p.less(current.back(), x) : p.leq(current.back(), x))) {
        continue;
      }
      current.push_back(x);
      self(self);
      current.pop_back();
    }
  };
  extend(extend);
  return out;
}

/// Every monotone map P -> Q as a value table, lexicographic order.
inline std::vector<std::vector<int>> monotone_maps(const FinPoset& p, const FinPoset& q) {
  std::vector<std::vector<int>> out;
  std::vector<int> values(p.size(), -1);
  auto assign = [&](auto&& self, int x) -> void {
    if (x == p.size()) {
      out.push_back(values);
      return;
    }
    for (int v = 0; v < q.size(); ++v) {
      bool ok = true;
      for (int y = 0; y < x && ok; ++y) {
        if (p.leq(y, x) && !q.leq(values[y], v)) ok = false;
        if (p.leq(x, y) && !q.leq(v, values[y])) ok = false;
      }
      if (!ok) continue;
      values[x] = v;
      self(self, x + 1);
    }
    values[x] = -1;
  };
  assign(assign, 0);
  return out;
}

/// Every permutation of P's indices compatible with <=, each listed bottom
/// first; lexicographic order.
inline std::vector<std::vector<int>> linear_extension_orders(const FinPoset& p) {
  std::vector<std::vector<int>> out;
  std::vector<int> order;
  std::vector<char> placed(p.size(), 0);
  auto extend = [&](auto&& self) -> void {
    if (static_cast<int>(order.size()) == p.size()) {
      out.push_back(order);
      return;
    }
    for (int x = 0; x < p.size(); ++x) {
      if (placed[x]) continue;
      bool minimal = true;
      for (int y = 0; y < p.size() && minimal; ++y) minimal = placed[y] || !p.less(y, x);
      if (!minimal) continue;
      placed[x] = 1;
      order.push_back(x);
      self(self);
      order.pop_back();
      placed[x] = 0;
    }
  };
  extend(extend);
  return out;
}

/// Each linear extension as a total order on the same elements (same indices).
inline std::vector<FinPoset> linear_extensions(const FinPoset& p) {
  std::vector<FinPoset> out;
  for (const auto& order : linear_extension_orders(p)) {
    Relation leq(p.size());
    for (std::size_t a = 0; a < order.size(); ++a)
      for (std::size_t b = a; b < order.size(); ++b) leq.set(order[a], order[b]);
    out.emplace_back(p.elements(), std::move(leq));
  }
  return out;
}

inline Relation intersection_of_extensions(const FinPoset& p) {
  Relation meet(p.size());
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y) meet.set(x, y);
  for (const auto& ext : linear_extensions(p)) {
    for (int x = 0; x < p.size(); ++x)
      for (int y = 0; y < p.size(); ++y)
        if (!ext.leq(x, y)) meet.set(x, y, false);
  }
  return meet;
}

/// Left inverse of an injective monotone map between total orders with a
/// finite non-empty source. With source x_0 < ... < x_n, g sends t to the
/// largest x_i with f(x_i) <= t, and to x_0 below f(x_0).
inline MonotoneMap split_retraction(const MonotoneMap& f) {
  const FinPoset& src = f.source();
  const FinPoset& tgt = f.target();
  if (src.empty()) throw Error(ErrorKind::NotSplitMonoCandidate, "source is empty");
  if (!src.is_total() || !tgt.is_total()) {
    throw Error(ErrorKind::NotSplitMonoCandidate, "source and target must be totally ordered");
  }
  if (!f.injective()) throw Error(ErrorKind::NotSplitMonoCandidate, "map is not injective");

  std::vector<int> xs(src.size());
  std::iota(xs.begin(), xs.end(), 0);
  std::sort(xs.begin(), xs.end(), [&](int a, int b) { return src.less(a, b); });

  std::vector<int> values(tgt.size());
  for (int t = 0; t < tgt.size(); ++t) {
    int chosen = xs.front();
    for (int x : xs) {
      if (tgt.leq(f(x), t)) chosen = x;
    }
    values[t] = chosen;
  }
  return MonotoneMap(f.target_ref(), f.source_ref(), std::move(values));
}

namespace detail {

struct ElementSignature {
  int below = 0;
  int above = 0;
  int level = 0;  // longest strict chain ending here
  friend auto operator<=>(const ElementSignature&, const ElementSignature&) = default;
};

inline std::vector<ElementSignature> signatures(const FinPoset& p) {
  std::vector<ElementSignature> sig(p.size());
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y) {
      sig[y].below += p.less(x, y);
      sig[x].above += p.less(x, y);
    }
  // Levels by repeated relaxation; below-counts give a valid processing order.
  std::vector<int> order(p.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return sig[a].below < sig[b].below; });
  for (int y : order)
    for (int x = 0; x < p.size(); ++x)
      if (p.less(x, y)) sig[y].level = std::max(sig[y].level, sig[x].level + 1);
  return sig;
}

/// Backtracking search for order isomorphisms; calls `found` for each one
/// until it returns false.
template <typename Found>
void search_isomorphisms(const FinPoset& p, const FinPoset& q, Found&& found) {
  if (p.size() != q.size() || p.comparabilities() != q.comparabilities()) return;
  const auto sp = signatures(p);
  const auto sq = signatures(q);
  {
    auto a = sp, b = sq;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return;
  }
  std::vector<int> image(p.size(), -1);
  std::vector<char> used(q.size(), 0);
  bool stop = false;
  auto assign = [&](auto&& self, int x) -> void {
    if (stop) return;
    if (x == p.size()) {
      stop = !found(image);
      return;
    }
    for (int v = 0; v < q.size() && !stop; ++v) {
      if (used[v] || sp[x] != sq[v]) continue;
      bool ok = true;
      for (int y = 0; y < x && ok; ++y) {
        ok = p.leq(x, y) == q.leq(v, image[y]) && p.leq(y, x) == q.leq(image[y], v);
      }
      if (!ok) continue;
      image[x] = v;
      used[v] = 1;
      self(self, x + 1);
      used[v] = 0;
      image[x] = -1;
    }
  };
  assign(assign, 0);
}

}  // namespace detail

/// First order isomorphism P -> Q in lexicographic order of value tables.
inline std::optional<std::vector<int>> isomorphism_values(const FinPoset& p, const FinPoset& q) {
  std::optional<std::vector<int>> out;
  detail::search_isomorphisms(p, q, [&](const std::vector<int>& image) {
    out = image;
    return false;
  });
  return out;
}

inline std::optional<MonotoneMap> find_isomorphism(const PosetRef& p, const PosetRef& q) {
  auto values = isomorphism_values(*p, *q);
  if (!values) return std::nullopt;
  return MonotoneMap(p, q, std::move(*values));
}

inline bool isomorphic(const FinPoset& p, const FinPoset& q) {
  return isomorphism_values(p, q).has_value();
}

inline std::vector<std::vector<int>> all_isomorphisms(const FinPoset& p, const FinPoset& q) {
  std::vector<std::vector<int>> out;
  detail::search_isomorphisms(p, q, [&](const std::vector<int>& image) {
    out.push_back(image);
    return true;
  });
  return out;
}

/// Copy of P with elements renamed through `names` (index-aligned).
inline FinPoset relabel(const FinPoset& p, std::vector<std::string> names) {
  return FinPoset(std::move(names), p.relation());
}

/// Order relation as "a<=b" text, strict pairs only, for messages and reports.
inline std::string describe(const FinPoset& p) {
  std::string out = "{";
  for (int x = 0; x < p.size(); ++x) out += (x ? "," : "") + p.element(x);
  out += "}";
  for (auto [x, y] : p.covers()) out += " " + p.element(x) + "<" + p.element(y);
  return out;
}

}  // namespace posetcat
