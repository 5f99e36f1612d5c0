#include <gtest/gtest.h>

#include <filesystem>

#include "posetcat/corpus.hpp"
#include "posetcat/text_format.hpp"

using namespace posetcat;

namespace {

const std::filesystem::path data_dir = POSETCAT_TEST_DATA;

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidMap;
}

}  // namespace

TEST(PosetFormat, ParsesDeclaredPairsWithClosure) {
  const auto p = parse_poset(
      "# three in a row\n"
      "poset row\n"
      "elem a b\n"
      "elem c   # trailing comment\n"
      "le a b\n"
      "le b c\n");
  EXPECT_EQ(p.name, "row");
  EXPECT_EQ(p.poset.elements(), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_TRUE(p.poset.leq(0, 2));
  EXPECT_TRUE(p.poset.is_total());
}

TEST(PosetFormat, RoundTripsTheCorpus) {
  for (int n = 0; n <= 5; ++n)
    for (const FinPoset& p : posets_up_to_iso(n)) {
      const auto back = parse_poset(write_poset("p", p));
      EXPECT_EQ(back.poset, p);
    }
}

TEST(PosetFormat, Errors) {
  EXPECT_EQ(kind_of([] { parse_poset(""); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { parse_poset("poset p\nelem a\nle a b\n"); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { parse_poset("poset p\nelem a a\n"); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { parse_poset("poset p\nelem a b\nle a b\nle b a\n"); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { parse_poset("poset p\nelem a\nnode x y\n"); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { parse_poset("graph p\n"); }), ErrorKind::Parse);
  try {
    parse_poset("poset p\nelem a\n\nle a q\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos) << e.what();
  }
}

TEST(DiagramFormat, InlineOrdinalAndFileNodes) {
  const auto d = load_diagram(data_dir / "mixed.diag");
  EXPECT_EQ(d.name, "mixed");
  ASSERT_EQ(d.diagram.node_count(), 3);
  EXPECT_EQ(d.diagram.node(0).size(), 1);   // [0]
  EXPECT_EQ(d.diagram.node(1).size(), 3);   // file
  EXPECT_EQ(d.diagram.node(2).size(), 2);   // inline
  ASSERT_EQ(d.diagram.edges().size(), 2u);
  EXPECT_EQ(d.diagram.edges()[0].map(0), d.diagram.node(1).at("c"));
}

TEST(DiagramFormat, Errors) {
  EXPECT_EQ(kind_of([] { parse_diagram("diagram d\nnode a [0]\nedge e a b\n"); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { parse_diagram("diagram d\nnode a [1]\nnode b [0]\nedge e a b\nmap e 0 0\n"); }),
            ErrorKind::Parse);  // element 1 unmapped
  EXPECT_EQ(kind_of([] { parse_diagram("diagram d\nnode a [1]\nnode b [1]\nedge e a b\nmap e 0 1\nmap e 1 0\n"); }),
            ErrorKind::Parse);  // not monotone
  EXPECT_EQ(kind_of([] { parse_diagram("diagram d\nnode a missing.poset\n", data_dir); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { parse_diagram("diagram d\nmap e 0 0\n"); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { parse_diagram("diagram d\nnode a [x]\n"); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { parse_diagram("diagram d\nnode a [0]\nnode a [0]\n"); }), ErrorKind::Parse);
}

TEST(SsetFormat, RoundTripsNerves) {
  for (int n = 0; n <= 4; ++n)
    for (const FinPoset& p : posets_up_to_iso(n)) {
      const auto x = nerve(p, 2);
      const auto back = parse_sset(write_sset(x));
      EXPECT_EQ(back.data().simplices, x.data().simplices);
      EXPECT_EQ(back.data().faces, x.data().faces);
      EXPECT_EQ(back.data().degeneracies, x.data().degeneracies);
    }
}

TEST(SsetFormat, Errors) {
  EXPECT_EQ(kind_of([] { parse_sset_data("sset x\n"); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { parse_sset_data("sset x trunc -1\n"); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { parse_sset_data("sset x trunc 1\nsimplex 0 a\nsimplex 1 e\nd 1 0 e a\n"); }),
            ErrorKind::Parse);  // d_1 e and s_0 a missing
  EXPECT_EQ(kind_of([] { parse_sset_data("sset x trunc 0\nsimplex 0 a\nsimplex 0 a\n"); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { parse_sset_data("sset x trunc 0\nsimplex 1 a\n"); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { parse_sset_data("sset x trunc 1\nsimplex 0 a\ns 1 0 a a\n"); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { parse_sset_data("sset x trunc 1\nsimplex 0 a\nd 1 0 zz a\n"); }), ErrorKind::Parse);
}

TEST(SsetFormat, IdentityCheckIsSeparate) {
  // Well-formed tables with d_0 s_0 != id parse as data but fail validation.
  const std::string text =
      "sset bad trunc 1\n"
      "simplex 0 a\nsimplex 0 b\n"
      "simplex 1 aa\nsimplex 1 bb\n"
      "d 1 0 aa b\nd 1 1 aa a\nd 1 0 bb b\nd 1 1 bb b\n"
      "s 0 0 a aa\ns 0 0 b bb\n";
  EXPECT_NO_THROW(parse_sset_data(text));
  EXPECT_EQ(kind_of([&] { parse_sset(text); }), ErrorKind::IdentityViolation);
}

TEST(FunctorFormat, Families) {
  EXPECT_EQ(parse_functor("functor inclusion\n").name(), "inclusion");
  EXPECT_EQ(parse_functor("functor point\n").target(), TargetCategory::Set);
  const auto prod = parse_functor("functor product-with chain2.poset\n", data_dir);
  EXPECT_EQ(prod.object(1)->size(), 4);
  EXPECT_EQ(kind_of([] { parse_functor("functor exotic\n"); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { parse_functor("functor inclusion extra\n"); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { parse_functor(""); }), ErrorKind::Parse);
}
