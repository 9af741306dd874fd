#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "osg/osgfile.hpp"
#include "osg/transform.hpp"
#include "test_util.hpp"

using namespace osg;
using namespace osg::test;

TEST_CASE("the bundled five-element file parses and validates") {
  OsgDocument doc = load_doc("example26.osg");
  CHECK(doc.name == "example26");
  CHECK(doc.elements == std::vector<std::string>{"a", "b", "c", "d", "e"});
  CHECK(doc.order_pairs.size() == 11);  // as listed, reflexive pairs included
  OrderedSemigroup s = load(doc);
  CHECK(s.size() == 5);
  CHECK(s.left_compatible());
  CHECK(s.right_compatible());
}

TEST_CASE("round trip is stable after canonicalization") {
  OsgDocument doc = load_doc("example26.osg");
  OsgDocument canon = make_document(load(doc), doc.name, doc.source);
  CHECK(parse_osg(emit_osg(canon)) == canon);
  // canonical pairs are the sorted non-reflexive closure
  for (auto [i, j] : canon.order_pairs) CHECK(i != j);
  CHECK(std::is_sorted(canon.order_pairs.begin(), canon.order_pairs.end()));
}

TEST_CASE("emitted text is deterministic and hand-readable") {
  OsgDocument doc;
  doc.name = "tiny";
  doc.elements = {"x", "y"};
  doc.table = {0, 1, 1, 0};
  doc.order_pairs = {{0, 1}};
  CHECK(emit_osg(doc) ==
        "name: tiny\n"
        "elements: x y\n"
        "table:\n"
        "x y\n"
        "y x\n"
        "order:\n"
        "x<=y\n");
  CHECK(parse_osg(emit_osg(doc)) == doc);
}

TEST_CASE("the loader completes order pairs to their closure") {
  OsgDocument doc = load_doc("chain3.osg");
  // only x0<=x1 and x1<=x2 are listed
  CHECK(doc.order_pairs.size() == 2);
  OrderedSemigroup s = load(doc);
  CHECK(s.ord().le(0, 2));
}

TEST_CASE("a transformation instance survives emit and reload") {
  OrderedSemigroup t2 = ordered_semigroup(build_full_transformation(2));
  OsgDocument doc = make_document(t2, "T2");
  OsgDocument again = parse_osg(emit_osg(doc));
  CHECK(again == doc);
  OrderedSemigroup back = load(again);
  CHECK(back.sgp().table() == t2.sgp().table());
  CHECK(!back.left_compatible());
  CHECK(back.right_compatible());
}

TEST_CASE("parse errors carry the offending line") {
  auto expect_error = [](const std::string& text, int line) {
    try {
      parse_osg(text);
      FAIL("expected ParseError for: ", text);
    } catch (const ParseError& e) {
      CHECK(e.line == line);
    }
  };
  expect_error("", 1);                                       // no elements
  expect_error("elements: a b\ntable:\na a\n", 4);           // missing row
  expect_error("elements: a b\ntable:\na a a\nb b\n", 3);    // row too wide
  expect_error("elements: a b\ntable:\na a\nb b\na b\n", 5); // too many rows
  expect_error("elements: a a\n", 1);                        // duplicate name
  expect_error("elements: a\ntable:\nz\n", 3);               // unknown element
  expect_error("elements: a\ntable:\na\norder:\nbogus\n", 5);
  expect_error("elements: a\ntable:\na\norder:\na<=\n", 5);
  expect_error("stray\n", 1);
  expect_error("table:\n", 1);                               // table first
  expect_error("elements: a\nelements: a\n", 2);
}

TEST_CASE("a corrupted table is rejected by validation") {
  // swap one entry of the five-element table so that (e.e).d != e.(e.d)
  std::string text =
      "elements: a b c d e\n"
      "table:\n"
      "a b c d e\n"
      "a b c d e\n"
      "c c c c c\n"
      "d d d d d\n"
      "c c c c d\n"
      "order:\n";
  CHECK_THROWS_AS(load(parse_osg(text)), NotAssociative);
}

TEST_CASE("comments and blank lines are ignored") {
  OsgDocument doc = parse_osg(
      "# header comment\n"
      "\n"
      "elements: u\n"
      "# mid comment\n"
      "table:\n"
      "u\n"
      "\n"
      "order:\n"
      "u<=u\n");
  CHECK(doc.elements == std::vector<std::string>{"u"});
  CHECK(doc.order_pairs == std::vector<std::pair<uint32_t, uint32_t>>{{0, 0}});
}
