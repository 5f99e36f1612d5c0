#pragma once

// Finite posets up to isomorphism, generated from naturally labelled
// relations (x <= y only when x precedes y as an index).

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "posetcat/poset.hpp"

namespace posetcat {

namespace detail {

/// Invariant used to bucket candidates before the isomorphism test.
inline std::vector<int> coarse_invariant(const FinPoset& p) {
  auto sig = signatures(p);
  std::sort(sig.begin(), sig.end());
  std::vector<int> out{p.comparabilities()};
  for (const auto& s : sig) {
    out.push_back(s.below);
    out.push_back(s.above);
    out.push_back(s.level);
  }
  return out;
}

inline std::vector<FinPoset> generate_posets(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) slots.emplace_back(x, y);

  std::vector<std::string> names;
  for (int x = 0; x < n; ++x) names.push_back(std::to_string(x));

  std::map<std::vector<int>, std::vector<int>> buckets;  // invariant -> indices into out
  std::vector<FinPoset> out;
  const std::size_t subsets = std::size_t{1} << slots.size();
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    Relation leq(n);
    leq.close_reflexive();
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (mask >> s & 1) leq.set(slots[s].first, slots[s].second);
    if (!leq.transitive()) continue;
    FinPoset candidate(names, std::move(leq));
    auto& bucket = buckets[coarse_invariant(candidate)];
    bool seen = false;
    for (int k : bucket) {
      if (isomorphic(out[k], candidate)) {
        seen = true;
        break;
      }
    }
    if (!seen) {
      bucket.push_back(static_cast<int>(out.size()));
      out.push_back(std::move(candidate));
    }
  }
  return out;
}

}  // namespace detail

/// One representative per isomorphism class of posets with exactly n
/// elements (named "0".."n-1"). Deterministic; cached for n <= 6.
inline const std::vector<FinPoset>& posets_up_to_iso(int n) {
  if (n < 0 || n > 6) throw Error(ErrorKind::InvalidPoset, "corpus supports 0..6 elements");
  static std::mutex mutex;
  static std::map<int, std::vector<FinPoset>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, detail::generate_posets(n)).first;
  return it->second;
}

/// All classes with at most max_n elements, smallest first.
inline std::vector<FinPoset> poset_corpus(int max_n) {
  std::vector<FinPoset> out;
  for (int n = 0; n <= max_n; ++n) {
    const auto& level = posets_up_to_iso(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace posetcat
