#include "rnc/parser.hpp"

#include "doctest.h"

using namespace rnc;

TEST_CASE("parse/print round-trips in canonical form")
{
    CHECK(print(parse("{& P>=0.8 Q<=0.4}")) == "{& P>=0.8 Q<=0.4}");
    CHECK(print(parse("(| P<=0.4 {& Q>=0.6 R<=0.1})")) ==
          "(| P<=0.4 {& Q>=0.6 R<=0.1})");
    // spellings are normalized
    CHECK(print(parse("P>=1/2")) == "P>=0.5");
    CHECK(print(parse("P>=.7")) == "P>=0.7");
    CHECK(print(parse("  {&   P>=1   }  ")) == "{& P>=1}");
}

TEST_CASE("empty connectives and named constants")
{
    CHECK(print(parse("(|)")) == "(|)");
    CHECK(print(parse("{&}")) == "{&}");
    CHECK(print(parse("T")) == "T");
    CHECK(print(parse("F")) == "F");
    CHECK(parse("T").node(parse("T").root()).cst().is_top());
    CHECK_FALSE(parse("F").node(parse("F").root()).cst().is_top());
    // explicit ground comparisons
    Formula top = parse("0.9>=0.4");
    Formula bot = parse("0.4>=0.9");
    CHECK(top.node(top.root()).cst().is_top());
    CHECK_FALSE(bot.node(bot.root()).cst().is_top());
}

TEST_CASE("comments and whitespace are skipped")
{
    Formula f = parse("# leading comment\n{& P>=0.8 # tail\n Q<=0.4}\n");
    CHECK(print(f) == "{& P>=0.8 Q<=0.4}");
}

TEST_CASE("parse errors carry a source span")
{
    CHECK_THROWS_AS((void)parse(""), ParseError);
    CHECK_THROWS_AS((void)parse("{& P>=0.8"), ParseError);
    CHECK_THROWS_AS((void)parse("{& P>=0.8} extra"), ParseError);
    CHECK_THROWS_AS((void)parse("(& P>=0.8)"), ParseError);
    CHECK_THROWS_AS((void)parse("P >< 0.5"), ParseError);
    CHECK_THROWS_AS((void)parse("P>=1.5"), ParseError);
    try {
        (void)parse("{& P>=0.8 Q=<0.4}");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.span.end >= e.span.start);
    }
}

TEST_CASE("programmatic build matches parsed text")
{
    // (| {& Q<=0.6 S<=0.7} {& R>=0.7 P>=0.3})
    FormulaBuilder b;
    NodeId left = b.conj({b.leq("Q", TruthValue::ratio(6, 10)),
                          b.leq("S", TruthValue::ratio(7, 10))});
    NodeId right = b.conj({b.geq("R", TruthValue::ratio(7, 10)),
                           b.geq("P", TruthValue::ratio(3, 10))});
    Formula f = b.finish(b.disj({left, right}));
    CHECK(print(f) == "(| {& Q<=0.6 S<=0.7} {& R>=0.7 P>=0.3})");
    CHECK(structurally_equal(f, parse(print(f))));
}

TEST_CASE("structural equality is order-sensitive")
{
    CHECK(structurally_equal(parse("{& P>=0.8 Q<=0.4}"), parse("{& P>=0.8 Q<=0.4}")));
    CHECK_FALSE(structurally_equal(parse("{& P>=0.8 Q<=0.4}"),
                                   parse("{& Q<=0.4 P>=0.8}")));
    CHECK_FALSE(structurally_equal(parse("{& P>=0.8}"), parse("(| P>=0.8)")));
}

TEST_CASE("occurrence paths resolve and print")
{
    Formula f = parse("{& P>=0.8 (| Q<=0.4 P<=0.5)}");
    OccRef root{};
    CHECK(resolve(f, root) == f.root());
    OccRef inner{{1, 1}};
    CHECK(f.node(resolve(f, inner)).lit() ==
          Literal{Sign::Leq, "P", TruthValue::ratio(5, 10)});
    CHECK(inner.str() == "/1/1");
    CHECK(root.str() == "/");
    CHECK_THROWS_AS((void)resolve(f, OccRef{{7}}), InvalidOcc);
}

TEST_CASE("subformula enumeration is preorder, self first")
{
    Formula f = parse("{& P>=0.8 (| Q<=0.4 P<=0.5)}");
    auto subs = subformulas(f);
    REQUIRE(subs.size() == 5);
    CHECK(subs[0].first == OccRef{});
    CHECK(subs[1].first == OccRef{{0}});
    CHECK(subs[2].first == OccRef{{1}});
    CHECK(subs[3].first == OccRef{{1, 0}});
    CHECK(subs[4].first == OccRef{{1, 1}});
}

TEST_CASE("literal_count expands shared nodes per occurrence")
{
    FormulaBuilder b;
    NodeId shared = b.conj({b.geq("P", TruthValue::one()),
                            b.leq("Q", TruthValue::zero())});
    Formula f = b.finish(b.disj({shared, shared}));
    CHECK(literal_count(f) == 4);
}
