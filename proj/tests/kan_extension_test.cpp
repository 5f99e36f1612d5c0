#include <gtest/gtest.h>

#include <numeric>

#include "posetcat/corpus.hpp"
#include "posetcat/kan_extension.hpp"

using namespace posetcat;

namespace {

FinPoset vposet() { return make_poset({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}}); }

int components(const FinPoset& p) {
  std::vector<int> parent(p.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y)
      if (p.leq(x, y)) parent[find(x)] = find(y);
  int count = 0;
  for (int x = 0; x < p.size(); ++x) count += find(x) == x;
  return count;
}

// Triangles over P: for each chain y : [m] -> P and each f : [n] -> [m],
// y . f is again a chain, so every non-identity f is an edge.
std::size_t brute_comma_edges(const FinPoset& p, int bound) {
  std::size_t total = 0;
  for (int n = 0; n <= bound; ++n)
    for (int m = 0; m <= bound; ++m) {
      std::size_t maps = 0;
      for (const auto& f : all_delta_maps(n, m)) maps += !(n == m && f.is_identity());
      total += chains(p, m).size() * maps;
    }
  return total;
}

PosetDiagram glue_arrows() {
  PosetDiagram d;
  auto p = share(ordinal_poset(0)), a = share(ordinal_poset(1)), b = share(ordinal_poset(1));
  d.add_node("pt", p);
  d.add_node("left", a);
  d.add_node("right", b);
  d.add_edge("end", 0, 1, MonotoneMap::from_delta(face(1, 0), p, a));
  d.add_edge("start", 0, 2, MonotoneMap::from_delta(face(1, 1), p, b));
  return d;
}

PosetDiagram cycle_coequalizer() {
  PosetDiagram d;
  auto p = share(ordinal_poset(0)), a = share(ordinal_poset(1));
  d.add_node("pt", p);
  d.add_node("arrow", a);
  d.add_edge("d0", 0, 1, MonotoneMap::from_delta(face(1, 0), p, a));
  d.add_edge("d1", 0, 1, MonotoneMap::from_delta(face(1, 1), p, a));
  return d;
}

}  // namespace

TEST(FunctorPresentation, BuiltinsValidate) {
  const auto inc = FunctorPresentation::inclusion(5);
  EXPECT_EQ(inc.object(3)->size(), 4);
  for (int n = 0; n <= 4; ++n)
    for (int m = 0; m <= 4; ++m)
      for (const auto& f : all_delta_maps(n, m)) EXPECT_EQ(inc.map_image(f).values(), f.values());

  const auto prod = FunctorPresentation::product_with(ordinal_poset(1), 4);
  for (const auto& f : all_delta_maps(2, 3)) {
    const auto image = prod.map_image(f);
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b < 2; ++b) EXPECT_EQ(image(a * 2 + b), f(a) * 2 + b);
  }
  EXPECT_EQ(FunctorPresentation::point(3).object(2)->size(), 1);
}

TEST(FunctorPresentation, MapImageIsFunctorial) {
  const auto prod = FunctorPresentation::product_with(vposet(), 4);
  for (const auto& f : all_delta_maps(1, 2))
    for (const auto& g : all_delta_maps(2, 3))
      EXPECT_EQ(prod.map_image(compose(g, f)).values(), compose(prod.map_image(g), prod.map_image(f)).values());
}

TEST(FunctorPresentation, RejectsBrokenIdentities) {
  // Reversing faces but not degeneracies breaks the mixed identities.
  auto broken = [](GeneratorKind kind, int n, int i) {
    return generator(kind, n, kind == GeneratorKind::Face ? n - i : i).values();
  };
  try {
    FunctorPresentation("broken", TargetCategory::Pos, [](int n) { return ordinal_poset(n); }, broken, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IdentityViolation);
  }
  // Reversing both is the order-reversal automorphism and is accepted.
  auto reversed = [](GeneratorKind kind, int n, int i) {
    return generator(kind, n, n - i).values();
  };
  EXPECT_NO_THROW(FunctorPresentation("reversal", TargetCategory::Pos, [](int n) { return ordinal_poset(n); },
                                      reversed, 4));
}

TEST(FunctorPresentation, SetTargetNeedsDiscreteObjects) {
  EXPECT_THROW(FunctorPresentation("bad", TargetCategory::Set, [](int n) { return ordinal_poset(n); },
                                   [](GeneratorKind k, int n, int i) { return generator(k, n, i).values(); }, 3),
               Error);
}

TEST(CommaDiagram, Examples) {
  const auto inc = FunctorPresentation::inclusion(4);
  const auto pt = comma_diagram(inc, ordinal_poset(0), 1);
  EXPECT_EQ(pt.diagram.node_count(), 2);
  // Over a point every f is a triangle: d0, d1, s0, and (0,0), (1,1) on [1].
  EXPECT_EQ(pt.diagram.edges().size(), 5u);
  EXPECT_EQ(pt.diagram.edges().size(), brute_comma_edges(ordinal_poset(0), 1));

  const auto anti = comma_diagram(inc, antichain(2), 0);
  EXPECT_EQ(anti.diagram.node_count(), 2);
  EXPECT_TRUE(anti.diagram.edges().empty());

  const auto two = comma_diagram(inc, ordinal_poset(1), 1);
  EXPECT_EQ(two.diagram.node_count(), 5);
  EXPECT_EQ(two.diagram.edges().size(), brute_comma_edges(ordinal_poset(1), 1));
  for (std::size_t e = 0; e < two.edge_maps.size(); ++e) {
    const auto& edge = two.diagram.edges()[e];
    const Chain& x = two.chains[edge.source];
    const Chain& y = two.chains[edge.target];
    for (std::size_t j = 0; j < x.size(); ++j) EXPECT_EQ(y[two.edge_maps[e](static_cast<int>(j))], x[j]);
  }
}

TEST(Extend, InclusionGivesBackThePoset) {
  const auto inc = FunctorPresentation::inclusion(8);
  const auto v = extend(inc, vposet());
  EXPECT_TRUE(isomorphic(*v.value, vposet()));
  for (int n = 0; n <= 3; ++n) {
    const auto r = extend(inc, ordinal_poset(n));
    EXPECT_TRUE(isomorphic(*r.value, ordinal_poset(n)));
  }
  for (int n = 0; n <= 4; ++n)
    for (const FinPoset& p : posets_up_to_iso(n)) {
      const auto r = extend(inc, p);
      EXPECT_TRUE(isomorphic(*r.value, p)) << describe(p);
      EXPECT_LE(r.stabilization, height(p) + 1);
      EXPECT_TRUE(commutes(r.diagram.diagram, r.cocone));
    }
}

TEST(Extend, ProductWithChain) {
  const FinPoset q = ordinal_poset(1);
  const auto prod = FunctorPresentation::product_with(q, 8);
  for (int n = 0; n <= 4; ++n)
    for (const FinPoset& p : posets_up_to_iso(n)) {
      // Oracle: the product order written out by hand.
      std::vector<std::string> names;
      Relation r(p.size() * 2);
      for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < 2; ++b) names.push_back(p.element(a) + "/" + std::to_string(b));
      for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < 2; ++b)
          for (int c = 0; c < p.size(); ++c)
            for (int d = 0; d < 2; ++d)
              if (p.leq(a, c) && b <= d) r.set(a * 2 + b, c * 2 + d);
      const FinPoset expected(names, r);
      EXPECT_TRUE(isomorphic(*extend(prod, p).value, expected)) << describe(p);
    }
}

TEST(Extend, PointCountsComponents) {
  const auto point = FunctorPresentation::point(8);
  for (int n = 0; n <= 4; ++n)
    for (const FinPoset& p : posets_up_to_iso(n)) {
      const auto r = extend(point, p);
      EXPECT_EQ(r.value->size(), components(p)) << describe(p);
      EXPECT_EQ(r.value->comparabilities(), r.value->size());
    }
}

TEST(Extend, ValueOnOrdinalIsTheImage) {
  const std::vector<FunctorPresentation> functors{FunctorPresentation::inclusion(8),
                                                  FunctorPresentation::product_with(vposet(), 8),
                                                  FunctorPresentation::point(8)};
  for (const auto& f : functors)
    for (int n = 0; n <= 3; ++n) EXPECT_TRUE(isomorphic(*extend(f, ordinal_poset(n)).value, *f.object(n))) << f.name();
}

TEST(Extend, InjectiveChainsGiveTheSameValue) {
  const auto inc = FunctorPresentation::inclusion(8);
  const auto prod = FunctorPresentation::product_with(ordinal_poset(1), 8);
  for (int n = 0; n <= 4; ++n)
    for (const FinPoset& p : posets_up_to_iso(n)) {
      const int h = height(p);
      EXPECT_TRUE(isomorphic(*extend(inc, p, h, -1, true).value, *extend(inc, p).value)) << describe(p);
      EXPECT_TRUE(isomorphic(*extend(prod, p, h, -1, true).value, *extend(prod, p).value)) << describe(p);
    }
}

TEST(Extend, StabilizationPersists) {
  const auto inc = FunctorPresentation::inclusion(8);
  for (int n = 0; n <= 4; ++n)
    for (const FinPoset& p : posets_up_to_iso(n)) {
      const auto r = extend(inc, p);
      const auto later = extend_at(inc, p, r.stabilization + 2);
      EXPECT_TRUE(isomorphic(*r.value, *later.value));
    }
}

TEST(Extend, RespectsIsomorphism) {
  const auto prod = FunctorPresentation::product_with(ordinal_poset(1), 8);
  const FinPoset relabeled = make_poset({"z", "y", "x"}, {{"y", "z"}, {"x", "z"}});
  EXPECT_TRUE(isomorphic(*extend(prod, vposet()).value, *extend(prod, relabeled).value));
}

TEST(Extend, Errors) {
  const auto inc = FunctorPresentation::inclusion(4);
  try {
    extend(inc, ordinal_poset(2), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InsufficientBound);
  }
  EXPECT_THROW(extend(inc, ordinal_poset(2), 2, 4), Error);
}

TEST(ExtendMap, IsFunctorial) {
  const auto prod = FunctorPresentation::product_with(ordinal_poset(1), 8);
  auto p = share(vposet());
  auto q = share(ordinal_poset(1));
  const auto on_p = extend(prod, *p);
  const auto on_q = extend(prod, *q);
  const auto id = extend_map(prod, MonotoneMap::identity(p), on_p, on_p);
  EXPECT_TRUE(id.is_isomorphism());
  for (const auto& values : monotone_maps(*p, *q)) {
    const MonotoneMap f(p, q, values);
    const MonotoneMap image = extend_map(prod, f, on_p, on_q);
    EXPECT_EQ(&image.target(), on_q.value.get());
  }
}

TEST(Cocontinuity, Examples) {
  const auto inc = FunctorPresentation::inclusion(8);
  const auto glued = check_extension_cocontinuity(inc, glue_arrows());
  EXPECT_TRUE(glued.passed()) << glued.witness;
  EXPECT_TRUE(isomorphic(*glued.extended_colimit, ordinal_poset(2)));
  EXPECT_TRUE(isomorphic(*glued.colimit_of_images, ordinal_poset(2)));

  const auto prod = FunctorPresentation::product_with(ordinal_poset(1), 8);
  PosetDiagram single;
  single.add_node("v", share(vposet()));
  EXPECT_TRUE(check_extension_cocontinuity(prod, single).passed());

  const auto cycle = check_extension_cocontinuity(prod, cycle_coequalizer());
  EXPECT_TRUE(cycle.passed()) << cycle.witness;
  EXPECT_TRUE(isomorphic(*cycle.extended_colimit, ordinal_poset(1)));
  EXPECT_TRUE(isomorphic(*cycle.colimit_of_images, ordinal_poset(1)));
}

TEST(Cocontinuity, PointFunctorOnCoproduct) {
  PosetDiagram d;
  d.add_node("a", share(ordinal_poset(1)));
  d.add_node("b", share(vposet()));
  const auto r = check_extension_cocontinuity(FunctorPresentation::point(8), d);
  EXPECT_TRUE(r.passed()) << r.witness;
  EXPECT_EQ(r.extended_colimit->size(), 2);
}
