#pragma once

// Skeletal simplex category: finite ordinals [n] = {0,...,n} and the
// monotone maps between them, kept as explicit value tables.

#include <algorithm>
#include <compare>
#include <sstream>
#include <string>
#include <vector>

#include "posetcat/error.hpp"

namespace posetcat {

/// The object [n] of the simplex category; it has n + 1 elements.
struct Ordinal {
  int n = 0;

  constexpr int size() const { return n + 1; }
  friend constexpr auto operator<=>(const Ordinal&, const Ordinal&) = default;
};

class DeltaMap {
 public:
  DeltaMap(int source, int target, std::vector<int> values)
      : source_{source}, target_{target}, values_(std::move(values)) {
    if (source < 0 || target < 0) {
      throw Error(ErrorKind::InvalidMap, "ordinals must be non-negative");
    }
    if (static_cast<int>(values_.size()) != source + 1) {
      throw Error(ErrorKind::InvalidMap, "value table length does not match source ordinal");
    }
    for (std::size_t j = 0; j < values_.size(); ++j) {
      if (values_[j] < 0 || values_[j] > target) {
        throw Error(ErrorKind::InvalidMap, "value outside target ordinal");
      }
      if (j > 0 && values_[j - 1] > values_[j]) {
        throw Error(ErrorKind::InvalidMap, "value table is not weakly increasing");
      }
    }
  }

  static DeltaMap identity(int n) {
    std::vector<int> values(n + 1);
    for (int j = 0; j <= n; ++j) values[j] = j;
    return DeltaMap(n, n, std::move(values));
  }

  Ordinal source() const { return source_; }
  Ordinal target() const { return target_; }
  const std::vector<int>& values() const { return values_; }
  int operator()(int j) const { return values_.at(j); }

  bool is_identity() const { return source_ == target_ && *this == identity(source_.n); }
  bool injective() const {
    return std::adjacent_find(values_.begin(), values_.end()) == values_.end();
  }
  bool surjective() const {
    return values_.front() == 0 && values_.back() == target_.n &&
           std::adjacent_find(values_.begin(), values_.end(),
                              [](int a, int b) { return b > a + 1; }) == values_.end();
  }

  friend bool operator==(const DeltaMap&, const DeltaMap&) = default;
  friend auto operator<=>(const DeltaMap& a, const DeltaMap& b) {
    if (auto c = a.source_ <=> b.source_; c != 0) return c;
    if (auto c = a.target_ <=> b.target_; c != 0) return c;
    return a.values_ <=> b.values_;
  }

 private:
  Ordinal source_;
  Ordinal target_;
  std::vector<int> values_;
};

inline std::string to_string(const DeltaMap& f) {
  std::ostringstream out;
  out << "[" << f.source().n << "]->[" << f.target().n << "] (";
  for (std::size_t j = 0; j < f.values().size(); ++j) {
    out << (j ? "," : "") << f.values()[j];
  }
  out << ")";
  return out.str();
}

enum class GeneratorKind { Face, Degeneracy };

/// face(n, i) is delta_i : [n-1] -> [n], skipping i.
inline DeltaMap face(int n, int i) {
  if (n < 1 || i < 0 || i > n) {
    throw Error(ErrorKind::InvalidGenerator,
                "face index " + std::to_string(i) + " invalid for [" + std::to_string(n) + "]");
  }
  std::vector<int> values(n);
  for (int j = 0; j < n; ++j) values[j] = j < i ? j : j + 1;
  return DeltaMap(n - 1, n, std::move(values));
}

/// degeneracy(n, i) is sigma_i : [n+1] -> [n], hitting i twice.
inline DeltaMap degeneracy(int n, int i) {
  if (n < 0 || i < 0 || i > n) {
    throw Error(ErrorKind::InvalidGenerator,
                "degeneracy index " + std::to_string(i) + " invalid for [" + std::to_string(n) +
                    "]");
  }
  std::vector<int> values(n + 2);
  for (int j = 0; j <= n + 1; ++j) values[j] = j <= i ? j : j - 1;
  return DeltaMap(n + 1, n, std::move(values));
}

inline DeltaMap generator(GeneratorKind kind, int n, int i) {
  return kind == GeneratorKind::Face ? face(n, i) : degeneracy(n, i);
}

/// g after f.
inline DeltaMap compose(const DeltaMap& g, const DeltaMap& f) {
  if (f.target() != g.source()) {
    throw Error(ErrorKind::Composition, "cannot compose " + to_string(g) + " after " + to_string(f));
  }
  std::vector<int> values(f.values().size());
  for (std::size_t j = 0; j < values.size(); ++j) values[j] = g(f(static_cast<int>(j)));
  return DeltaMap(f.source().n, g.target().n, std::move(values));
}

/// Normal form delta_{faces[k-1]} ... delta_{faces[0]} sigma_{degeneracies[0]} ...
/// sigma_{degeneracies[l-1]}; both index lists strictly increasing. The
/// degeneracies act first, the faces last.
struct GeneratorWord {
  int source = 0;
  int target = 0;
  std::vector<int> faces;
  std::vector<int> degeneracies;

  friend bool operator==(const GeneratorWord&, const GeneratorWord&) = default;
};

inline GeneratorWord factorize(const DeltaMap& f) {
  GeneratorWord word{f.source().n, f.target().n, {}, {}};
  const auto& v = f.values();
  for (std::size_t j = 0; j + 1 < v.size(); ++j) {
    if (v[j] == v[j + 1]) word.degeneracies.push_back(static_cast<int>(j));
  }
  std::size_t k = 0;
  for (int t = 0; t <= f.target().n; ++t) {
    while (k < v.size() && v[k] < t) ++k;
    if (k == v.size() || v[k] != t) word.faces.push_back(t);
  }
  return word;
}

/// The ordinal reached after applying the degeneracies of a word.
inline int middle_ordinal(const GeneratorWord& word) {
  return word.source - static_cast<int>(word.degeneracies.size());
}

inline bool is_normal_form(const GeneratorWord& word) {
  auto strictly_increasing = [](const std::vector<int>& xs) {
    return std::adjacent_find(xs.begin(), xs.end(), std::greater_equal<>()) == xs.end();
  };
  if (!strictly_increasing(word.faces) || !strictly_increasing(word.degeneracies)) return false;
  const int middle = middle_ordinal(word);
  if (middle < 0 || middle + static_cast<int>(word.faces.size()) != word.target) return false;
  // sigma_{j_l} acts first on [source]; sigma_{j_r} then acts on [source - (l - r)].
  for (std::size_t r = 0; r < word.degeneracies.size(); ++r) {
    const int acting_on = middle + static_cast<int>(r) + 1;
    if (word.degeneracies[r] < 0 || word.degeneracies[r] > acting_on - 1) return false;
  }
  for (std::size_t r = 0; r < word.faces.size(); ++r) {
    const int lands_in = middle + static_cast<int>(r) + 1;
    if (word.faces[r] < 0 || word.faces[r] > lands_in) return false;
  }
  return true;
}

inline DeltaMap evaluate(const GeneratorWord& word) {
  if (!is_normal_form(word)) {
    throw Error(ErrorKind::InvalidGenerator, "generator word is not a valid normal form");
  }
  DeltaMap result = DeltaMap::identity(word.source);
  for (auto it = word.degeneracies.rbegin(); it != word.degeneracies.rend(); ++it) {
    result = compose(degeneracy(result.target().n - 1, *it), result);
  }
  for (int i : word.faces) result = compose(face(result.target().n + 1, i), result);
  return result;
}

/// Every monotone map [n] -> [m], in lexicographic order of value tables.
inline std::vector<DeltaMap> all_delta_maps(int n, int m) {
  std::vector<DeltaMap> out;
  std::vector<int> values(n + 1, 0);
  while (true) {
    out.emplace_back(n, m, values);
    int j = n;
    while (j >= 0 && values[j] == m) --j;
    if (j < 0) break;
    ++values[j];
    for (int k = j + 1; k <= n; ++k) values[k] = values[j];
  }
  return out;
}

/// A generator occurrence: face(n, i) or degeneracy(n, i).
struct Generator {
  GeneratorKind kind;
  int n;
  int i;

  DeltaMap map() const { return generator(kind, n, i); }
};

/// Composite of generators listed in the order they act (first acts first),
/// starting at [source].
inline DeltaMap evaluate_word(int source, const std::vector<Generator>& word) {
  DeltaMap result = DeltaMap::identity(source);
  for (const auto& g : word) result = compose(g.map(), result);
  return result;
}

/// One instance of a simplicial identity, both sides as generator words.
struct IdentityInstance {
  int family = 0;  // 1..5 in the classical ordering
  int i = 0;
  int j = 0;
  int source = 0;
  std::vector<Generator> lhs_word;
  std::vector<Generator> rhs_word;
  std::string label;

  DeltaMap lhs() const { return evaluate_word(source, lhs_word); }
  DeltaMap rhs() const { return evaluate_word(source, rhs_word); }
  bool holds() const { return lhs() == rhs(); }
};

struct IdentityReport {
  std::vector<IdentityInstance> instances;
  std::vector<char> verdicts;

  bool passed() const { return failures() == 0; }
  std::size_t failures() const {
    return static_cast<std::size_t>(std::count(verdicts.begin(), verdicts.end(), 0));
  }
};

namespace detail {

inline std::string identity_label(int family, int i, int j, int n) {
  static const char* names[] = {"", "δ_j δ_i = δ_i δ_(j-1)", "σ_j σ_i = σ_i σ_(j+1)",
                                "σ_j δ_i = δ_i σ_(j-1)", "σ_j δ_i = id",
                                "σ_j δ_i = δ_(i-1) σ_j"};
  std::ostringstream out;
  out << "family " << family << " (" << names[family] << ") i=" << i << " j=" << j << " n=" << n;
  return out.str();
}

}  // namespace detail

/// Every instance of the five identity families whose intermediate ordinals
/// all lie within [max_n]:
///   1. δ_j δ_i = δ_i δ_{j-1}       (i < j),      [n-2] -> [n]
///   2. σ_j σ_i = σ_i σ_{j+1}       (i <= j),     [n+2] -> [n]
///   3. σ_j δ_i = δ_i σ_{j-1}       (i < j),      [n] -> [n]
///   4. σ_j δ_i = id                (i = j, j+1), [n] -> [n]
///   5. σ_j δ_i = δ_{i-1} σ_j       (i > j + 1),  [n] -> [n]
inline std::vector<IdentityInstance> identity_instances(int max_n) {
  if (max_n < 1) throw Error(ErrorKind::InvalidGenerator, "max_n must be at least 1");
  using G = Generator;
  constexpr auto F = GeneratorKind::Face;
  constexpr auto D = GeneratorKind::Degeneracy;
  std::vector<IdentityInstance> out;
  auto add = [&](int family, int i, int j, int n, int source, std::vector<G> lhs, std::vector<G> rhs) {
    out.push_back({family, i, j, source, std::move(lhs), std::move(rhs),
                   detail::identity_label(family, i, j, n)});
  };
  for (int n = 2; n <= max_n; ++n)
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i < j; ++i)
        add(1, i, j, n, n - 2, {{F, n - 1, i}, {F, n, j}}, {{F, n - 1, j - 1}, {F, n, i}});
  for (int n = 0; n + 2 <= max_n; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= j; ++i)
        add(2, i, j, n, n + 2, {{D, n + 1, i}, {D, n, j}}, {{D, n + 1, j + 1}, {D, n, i}});
  for (int n = 0; n + 1 <= max_n; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= n + 1; ++i) {
        std::vector<G> lhs{{F, n + 1, i}, {D, n, j}};
        if (i < j) {
          add(3, i, j, n, n, lhs, {{D, n - 1, j - 1}, {F, n, i}});
        } else if (i == j || i == j + 1) {
          add(4, i, j, n, n, lhs, {});
        } else {
          add(5, i, j, n, n, lhs, {{D, n - 1, j}, {F, n, i - 1}});
        }
      }
  return out;
}

inline IdentityReport verify_simplicial_identities(int max_n) {
  IdentityReport report{identity_instances(max_n), {}};
  for (const auto& inst : report.instances) report.verdicts.push_back(inst.holds() ? 1 : 0);
  return report;
}

/// A commutative square of ordinals
///
///   span_source --top--> top_target
///        |                   |
///      left               right
///        v                   v
///   left_target --bottom--> corner
///
/// claimed to be a pushout.
struct DeltaSquare {
  std::string name;
  DeltaMap top;
  DeltaMap left;
  DeltaMap bottom;
  DeltaMap right;

  int corner() const { return right.target().n; }
  bool commutes() const { return compose(right, top) == compose(bottom, left); }
};

/// Composite of faces delta_{indices[0]} ... delta_{indices[k-1]} read as a
/// composition (so the last index acts first), starting from [start].
inline DeltaMap face_composite(int start, const std::vector<int>& indices) {
  DeltaMap result = DeltaMap::identity(start);
  for (auto it = indices.rbegin(); it != indices.rend(); ++it) {
    result = compose(face(result.target().n + 1, *it), result);
  }
  return result;
}

namespace detail {

/// Indices hi, hi-1, ..., lo (empty when hi < lo).
inline std::vector<int> descending(int hi, int lo) {
  std::vector<int> out;
  for (int k = hi; k >= lo; --k) out.push_back(k);
  return out;
}

inline std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace detail

enum class SquareCase { FaceFirst, FaceLast, FaceInner, Degeneracy };

/// The pushout squares from which face and degeneracy formulas on X_{n+3}
/// (resp. X_{n+2}) are read off:
///  - FaceFirst:  [0] -> [n+2] along delta_{n+2}..delta_1, [0] -> [1] along delta_0.
///  - FaceLast:   [0] -> [n+2] along delta_{n+1}..delta_0, [0] -> [1] along delta_1.
///  - FaceInner:  [1] -> [n+2] along delta_{n+2}..delta_{i+1} delta_{i-2}..delta_0,
///                [1] -> [2] along delta_1, for 0 < i < n + 3.
///  - Degeneracy: [1] -> [n+2] along delta_{n+2}..delta_{i+2} delta_{i-1}..delta_0,
///                [1] -> [0] along sigma_0, for 0 <= i <= n + 1.
inline DeltaSquare pushout_square(SquareCase which, int n, int i = 0) {
  using detail::concat;
  using detail::descending;
  if (n < 0) throw Error(ErrorKind::InvalidSquare, "n must be non-negative");
  switch (which) {
    case SquareCase::FaceFirst:
      return {"face-first n=" + std::to_string(n), face_composite(0, descending(n + 2, 1)),
              face(1, 0), face_composite(1, descending(n + 3, 2)), face(n + 3, 0)};
    case SquareCase::FaceLast:
      return {"face-last n=" + std::to_string(n), face_composite(0, descending(n + 1, 0)),
              face(1, 1), face_composite(1, descending(n + 1, 0)), face(n + 3, n + 3)};
    case SquareCase::FaceInner:
      if (i <= 0 || i >= n + 3) {
        throw Error(ErrorKind::InvalidSquare, "inner face square needs 0 < i < n + 3");
      }
      return {"face-inner n=" + std::to_string(n) + " i=" + std::to_string(i),
              face_composite(1, concat(descending(n + 2, i + 1), descending(i - 2, 0))), face(2, 1),
              face_composite(2, concat(descending(n + 3, i + 2), descending(i - 2, 0))),
              face(n + 3, i)};
    case SquareCase::Degeneracy:
      if (i < 0 || i > n + 1) {
        throw Error(ErrorKind::InvalidSquare, "degeneracy square needs 0 <= i <= n + 1");
      }
      return {"degeneracy n=" + std::to_string(n) + " i=" + std::to_string(i),
              face_composite(1, concat(descending(n + 2, i + 2), descending(i - 1, 0))),
              degeneracy(0, 0),
              face_composite(0, concat(descending(n + 1, i + 1), descending(i - 1, 0))),
              degeneracy(n + 1, i)};
  }
  throw Error(ErrorKind::InvalidSquare, "unknown square case");
}

/// All squares for n in [0, max_n] and every valid index.
inline std::vector<DeltaSquare> all_pushout_squares(int max_n) {
  std::vector<DeltaSquare> out;
  for (int n = 0; n <= max_n; ++n) {
    out.push_back(pushout_square(SquareCase::FaceFirst, n));
    out.push_back(pushout_square(SquareCase::FaceLast, n));
    for (int i = 1; i < n + 3; ++i) out.push_back(pushout_square(SquareCase::FaceInner, n, i));
    for (int i = 0; i <= n + 1; ++i) out.push_back(pushout_square(SquareCase::Degeneracy, n, i));
  }
  return out;
}

}  // namespace posetcat
