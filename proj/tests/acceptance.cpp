// Acceptance run: prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "posetcat.hpp"

using namespace posetcat;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed = true;
  std::string detail;
};

/// Labeled partial orders on n points, counted by testing every reflexive
/// relation for antisymmetry and transitivity.
long brute_labeled_posets(int n) {
  std::vector<std::pair<int, int>> off;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b) off.emplace_back(a, b);
  long count = 0;
  const unsigned long total = 1ul << off.size();
  std::vector<char> r(n * n);
  for (unsigned long mask = 0; mask < total; ++mask) {
    std::fill(r.begin(), r.end(), 0);
    for (int a = 0; a < n; ++a) r[a * n + a] = 1;
    for (std::size_t k = 0; k < off.size(); ++k)
      if (mask >> k & 1) r[off[k].first * n + off[k].second] = 1;
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b) {
        if (a != b && r[a * n + b] && r[b * n + a]) ok = false;
        for (int c = 0; c < n && ok; ++c)
          if (r[a * n + b] && r[b * n + c] && !r[a * n + c]) ok = false;
      }
    count += ok;
  }
  return count;
}

Outcome criterion_1() {
  Outcome o;
  long factorial = 1;
  for (int n = 0; n <= 5; ++n) {
    if (n > 0) factorial *= n;
    long from_classes = 0;
    for (const FinPoset& p : posets_up_to_iso(n))
      from_classes += factorial / static_cast<long>(all_isomorphisms(p, p).size());
    const long labeled = brute_labeled_posets(n);
    if (from_classes != labeled) {
      o.passed = false;
      o.detail += " n=" + std::to_string(n) + ": classes give " + std::to_string(from_classes) +
                  " labeled, enumeration gives " + std::to_string(labeled) + ";";
    }
  }
  if (posets_up_to_iso(5).size() != 63) {
    o.passed = false;
    o.detail += " " + std::to_string(posets_up_to_iso(5).size()) + " classes at 5 elements;";
  }
  int checked = 0;
  for (const FinPoset& p : poset_corpus(5)) {
    ++checked;
    const auto report = check_continuity(nerve(p, 4));
    if (!report.passed()) {
      o.passed = false;
      o.detail += " fails on " + describe(p) + ";";
    }
  }
  o.detail = std::to_string(checked) + " posets, 63 classes at 5 elements confirmed by labeled enumeration" + o.detail;
  return o;
}

Outcome criterion_2() {
  Outcome o;
  int checked = 0, failures = 0;
  for (const FinPoset& p : poset_corpus(5)) {
    ++checked;
    const auto back = reconstruct(std::make_shared<const TruncatedSimplicialSet>(nerve(p, 4)));
    if (!find_isomorphism(share(p), back.poset)) ++failures;
  }
  o.passed = failures == 0;
  o.detail = std::to_string(checked) + " posets, " + std::to_string(failures) + " failures";
  return o;
}

Outcome criterion_3() {
  Outcome o;
  const auto corpus = poset_corpus(4);
  long pairs = 0;
  for (const FinPoset& p : corpus)
    for (const FinPoset& q : corpus) {
      ++pairs;
      const auto monotone = monotone_maps(p, q).size();
      const auto simplicial = simplicial_map_tables(nerve(p, 1), nerve(q, 1)).size();
      if (monotone != simplicial) {
        o.passed = false;
        o.detail += " " + describe(p) + " -> " + describe(q) + ";";
      }
    }
  o.detail = std::to_string(pairs) + " pairs" + o.detail;
  return o;
}

Outcome criterion_4() {
  Outcome o;
  int checked = 0;
  for (const FinPoset& p : poset_corpus(5)) {
    ++checked;
    if (!(intersection_of_extensions(p) == p.relation())) {
      o.passed = false;
      o.detail += " " + describe(p) + ";";
    }
  }
  o.detail = std::to_string(checked) + " posets" + o.detail;
  return o;
}

PosetDiagram random_diagram(std::mt19937& rng) {
  PosetDiagram d;
  const int nodes = 1 + static_cast<int>(rng() % 4);
  for (int k = 0; k < nodes; ++k) {
    const auto& classes = posets_up_to_iso(static_cast<int>(rng() % 5));
    d.add_node("n" + std::to_string(k), share(classes[rng() % classes.size()]));
  }
  const int edges = static_cast<int>(rng() % (nodes + 2));
  for (int e = 0; e < edges; ++e) {
    const int s = static_cast<int>(rng() % nodes), t = static_cast<int>(rng() % nodes);
    const auto maps = monotone_maps(d.node(s), d.node(t));
    if (maps.empty()) continue;
    d.add_edge("e" + std::to_string(e), s, t, MonotoneMap(d.node_ref(s), d.node_ref(t), maps[rng() % maps.size()]));
  }
  return d;
}

Outcome criterion_5() {
  Outcome o;
  std::mt19937 rng(20240531);
  std::uint64_t cocones = 0;
  for (int k = 0; k < 100; ++k) {
    const PosetDiagram d = random_diagram(rng);
    const auto report = verify_universal(d, colimit_pos(d), 6);
    cocones += report.cocones_tested();
    if (!report.passed()) {
      o.passed = false;
      o.detail += " diagram " + std::to_string(k) + ";";
    }
  }
  o.detail = "100 diagrams, " + std::to_string(cocones) + " cocones tested" + o.detail;
  return o;
}

Outcome criterion_6() {
  Outcome o;
  const auto squares = all_pushout_squares(3);
  for (const DeltaSquare& sq : squares) {
    const auto check = check_delta_colimit(to_delta_diagram(sq));
    if (!check.passed() || check.computed_corner != sq.corner()) {
      o.passed = false;
      o.detail += " " + sq.name + ";";
    }
  }
  o.detail = std::to_string(squares.size()) + " squares" + o.detail;
  return o;
}

Outcome criterion_7() {
  Outcome o;
  PosetDiagram d;
  d.add_node("a", share(ordinal_poset(0)));
  d.add_node("b", share(ordinal_poset(0)));
  const bool empty_in_delta = !colimit_delta(d).has_value();
  const Cocone pos = colimit_pos(d);
  const bool antichain_in_pos = isomorphic(*pos.apex, antichain(2));
  o.passed = empty_in_delta && antichain_in_pos;
  o.detail = std::string("colimit_delta ") + (empty_in_delta ? "empty" : "non-empty") + ", colimit_pos " +
             describe(*pos.apex);
  return o;
}

Outcome criterion_8() {
  Outcome o;
  int checked = 0;
  for (const FinPoset& p : poset_corpus(4)) {
    ++checked;
    const auto d = density_colimit(share(p), height(p));
    if (!d.passed() || !isomorphic(*d.colimit.apex, p)) {
      o.passed = false;
      o.detail += " " + describe(p) + ";";
    }
  }
  o.detail = std::to_string(checked) + " posets" + o.detail;
  return o;
}

/// P x [1] written out coordinatewise.
FinPoset product_with_two_chain(const FinPoset& p) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int x = 0; x < p.size(); ++x)
    for (int a = 0; a <= 1; ++a) names.push_back(p.element(x) + "/" + std::to_string(a));
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y)
      for (int a = 0; a <= 1; ++a)
        for (int b = a; b <= 1; ++b)
          if (p.leq(x, y) && !(x == y && a == b))
            pairs.emplace_back(p.element(x) + "/" + std::to_string(a), p.element(y) + "/" + std::to_string(b));
  return make_poset(names, pairs);
}

Outcome criterion_9() {
  Outcome o;
  const auto inc = FunctorPresentation::inclusion(8);
  const auto prod = FunctorPresentation::product_with(ordinal_poset(1), 8);
  int checked = 0, latest = 0;
  for (const FinPoset& p : poset_corpus(4)) {
    ++checked;
    const auto r = extend(inc, p);
    latest = std::max(latest, r.stabilization - height(p));
    if (!isomorphic(*r.value, p) || r.stabilization > height(p) + 1) {
      o.passed = false;
      o.detail += " inclusion at " + describe(p) + ";";
    }
    const auto q = extend(prod, p);
    if (!isomorphic(*q.value, product_with_two_chain(p))) {
      o.passed = false;
      o.detail += " product at " + describe(p) + ";";
    }
  }
  o.detail = std::to_string(checked) + " posets, stabilization at most height+" + std::to_string(latest) + o.detail;
  return o;
}

int index_of(const SimplicialData& d, int n, const std::string& id) {
  const auto& level = d.simplices[n];
  return static_cast<int>(std::find(level.begin(), level.end(), id) - level.begin());
}

void add_edge(SimplicialData& d, const std::string& id, const std::string& from, const std::string& to) {
  d.simplices[1].push_back(id);
  d.faces[1][0].push_back(index_of(d, 0, to));
  d.faces[1][1].push_back(index_of(d, 0, from));
}

struct Corruption {
  std::string kind;
  std::string named_check;
  SimplicialData data;
};

std::vector<Corruption> corruptions() {
  std::vector<Corruption> out;

  SimplicialData dup = nerve(ordinal_poset(1), 1).data();
  add_edge(dup, "again", "0", "1");
  out.push_back({"duplicate 1-simplex pair", "relation-injective", dup});

  SimplicialData broken = nerve(ordinal_poset(1), 2).data();
  broken.degeneracies[0][0][0] = index_of(broken, 1, "(1,1)");
  out.push_back({"broken simplicial identity", "simplicial-identities", broken});

  SimplicialData no_loop = nerve(ordinal_poset(1), 1).data();
  const int loop = index_of(no_loop, 1, "(1,1)");
  no_loop.simplices[1].erase(no_loop.simplices[1].begin() + loop);
  for (auto& table : no_loop.faces[1]) table.erase(table.begin() + loop);
  no_loop.degeneracies[0][0][1] = index_of(no_loop, 1, "(0,1)");
  out.push_back({"missing reflexive 1-simplex", "degeneracy-formula", no_loop});

  SimplicialData rewired = nerve(ordinal_poset(2), 2).data();
  rewired.faces[2][1][index_of(rewired, 2, "(0,1,2)")] = index_of(rewired, 1, "(0,1)");
  out.push_back({"rewired d1", "face-formula", rewired});

  SimplicialData sym;
  sym.name = "sym";
  sym.truncation = 1;
  sym.simplices = {{"a", "b"}, {}};
  sym.faces = {{}, {{}, {}}};
  sym.degeneracies = {{{}}, {}};
  add_edge(sym, "aa", "a", "a");
  add_edge(sym, "bb", "b", "b");
  add_edge(sym, "ab", "a", "b");
  add_edge(sym, "ba", "b", "a");
  sym.degeneracies[0][0] = {0, 1};
  out.push_back({"symmetric pair", "antisymmetry", sym});
  return out;
}

Outcome criterion_10() {
  Outcome o;
  for (const Corruption& c : corruptions()) {
    const bool validation_fails = find_identity_violation(c.data).has_value();
    const auto report =
        check_continuity(std::make_shared<const TruncatedSimplicialSet>(TruncatedSimplicialSet::unchecked(c.data)));
    const auto failed = report.failed_families();
    const bool exactly_named = failed == std::vector<std::string>{c.named_check};
    const bool passes_everything = !validation_fails && report.passed();
    const bool ok = (validation_fails || exactly_named) && !passes_everything;
    std::string families;
    for (const auto& f : failed) families += (families.empty() ? "" : ",") + f;
    o.detail += (o.detail.empty() ? "" : "; ") + c.kind + ": " +
                (validation_fails ? "validation fails" : "validation passes") + ", failed checks {" + families +
                "}";
    if (!ok) o.passed = false;
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"nerve continuity sweep (<= 5 elements, truncation 4)", criterion_1},
      {"reconstruction round trip (<= 5 elements)", criterion_2},
      {"full faithfulness at truncation 1 (<= 4 elements)", criterion_3},
      {"intersection of linear extensions (<= 5 elements)", criterion_4},
      {"universal property of 100 random colimits (apex bound 6)", criterion_5},
      {"pushout squares in the simplex category (n <= 3)", criterion_6},
      {"two points have no colimit in the simplex category", criterion_7},
      {"density at height (<= 4 elements)", criterion_8},
      {"left Kan extension of inclusion and product with [1]", criterion_9},
      {"corrupted simplicial sets are rejected", criterion_10},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    failures += !o.passed;
    std::ostringstream line;
    line.precision(2);
    line << std::fixed << (o.passed ? "PASS" : "FAIL") << " criterion " << (k + 1) << ": " << criteria[k].first
         << " [" << o.detail << "] (" << seconds << " s)";
    std::cout << line.str() << std::endl;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
