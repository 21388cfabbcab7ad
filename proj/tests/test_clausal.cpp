#include "rnc/clausal.hpp"

#include "rnc/gen.hpp"
#include "rnc/hornnc.hpp"
#include "rnc/parser.hpp"

#include "doctest.h"

using namespace rnc;

static TruthValue tv(const char* s)
{
    auto r = TruthValue::parse(s);
    REQUIRE(r.status == TruthValue::ParseStatus::Ok);
    return r.value;
}

TEST_CASE("distribution of a two-by-two disjunction of conjunctions")
{
    ClausalFormula cl = to_clausal(parse("(| {& Q<=0.6 S<=0.7} {& R>=0.7 P>=0.3})"));
    CHECK(cl.str() ==
          "{& (| Q<=0.6 R>=0.7) (| Q<=0.6 P>=0.3) (| S<=0.7 R>=0.7) (| S<=0.7 P>=0.3)}");
    CHECK(is_horn(cl));

    ClausalFormula cl2 = to_clausal(parse("(| {& Q<=0.6 S>=0.7} {& R>=0.7 P<=0.3})"));
    CHECK(cl2.str() ==
          "{& (| Q<=0.6 R>=0.7) (| Q<=0.6 P<=0.3) (| S>=0.7 R>=0.7) (| S>=0.7 P<=0.3)}");
    CHECK_FALSE(is_horn(cl2));
}

TEST_CASE("clausal inputs pass through unchanged")
{
    const char* text = "{& (| P>=0.7 Q<=0.8 R<=0.9) (| P>=0.7 R<=0.1)}";
    CHECK(to_clausal(parse(text)).str() == text);
    CHECK(to_clausal(parse("P>=0.7")).str() == "{& (| P>=0.7)}");
    CHECK(to_clausal(parse("{&}")).str() == "{&}");
    CHECK(to_clausal(parse("(|)")).str() == "{& (|)}");
}

TEST_CASE("clausal conversion preserves truth on the candidate grid")
{
    GenConfig cfg;
    cfg.props = 5;
    cfg.depth = 3;
    cfg.mode = GenMode::GeneralNc;
    SplitMix64 rng(7);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        cfg.seed = seed;
        Formula f = gen_random(cfg);
        if (literal_count(f) > 14)
            continue;
        Formula cf = to_clausal(f).to_formula();
        auto grid = candidate_grid(f);
        for (int trial = 0; trial < 50; ++trial) {
            Interpretation m;
            for (const auto& [prop, vals] : grid)
                m.values.emplace(prop, vals[rng.below(vals.size())]);
            CHECK(evaluate(f, m) == evaluate(cf, m));
        }
    }
}

TEST_CASE("Horn-NC coincides with Horn clausal form")
{
    GenConfig cfg;
    cfg.props = 5;
    cfg.depth = 3;
    cfg.mode = GenMode::GeneralNc;
    int checked = 0;
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
        cfg.seed = seed;
        Formula f = gen_random(cfg);
        if (literal_count(f) > 12)
            continue;
        ++checked;
        bool hnc = is_horn_nc_pattern(f).is_hnc;
        CHECK(hnc == is_horn(to_clausal(f)));
    }
    CHECK(checked > 100);
}

TEST_CASE("conversion guards")
{
    CHECK_THROWS_AS((void)to_clausal(parse("{& T P>=0.5}")), NotConstantFree);
    // 2^12 clauses from 12 binary conjunctions under a disjunction... kept small:
    std::string text = "(|";
    for (int i = 0; i < 12; ++i)
        text += " {& A" + std::to_string(i) + ">=0.5 B" + std::to_string(i) + "<=0.5}";
    text += ")";
    CHECK_THROWS_AS((void)to_clausal(parse(text), 1000), Blowup);
}

TEST_CASE("clausal unit resolution on Horn inputs")
{
    // unit P>=0.8 deletes P<=0.5; unit Q>=0.9 then empties the first clause
    ClausalFormula cl = to_clausal(parse("{& P>=0.8 (| Q<=0.4 P<=0.5) Q>=0.9}"));
    CHECK(clausal_unit_resolution_sat(cl).status == ClausalSolveResult::Status::Unsat);

    ClausalFormula sat = to_clausal(parse("{& (| P>=0.7 Q<=0.8 R<=0.9) (| P>=0.7 R<=0.1)}"));
    ClausalSolveResult r = clausal_unit_resolution_sat(sat);
    REQUIRE(r.status == ClausalSolveResult::Status::Sat);
    // no units: the all-zero model satisfies every clause through a negative literal
    CHECK(r.model.values.empty());
    CHECK(evaluate(sat.to_formula(), r.model));

    ClausalFormula units = to_clausal(parse("{& P>=0.8 (| P<=0.5 Q>=0.9) P>=0.6}"));
    ClausalSolveResult u = clausal_unit_resolution_sat(units);
    REQUIRE(u.status == ClausalSolveResult::Status::Sat);
    CHECK(u.model("P") == tv("0.8")); // max-merged
    CHECK(u.model("Q") == tv("0.9"));

    CHECK_THROWS_AS((void)clausal_unit_resolution_sat(
                        to_clausal(parse("{& (| P>=0.7 R>=1)}"))),
                    NotHorn);
}

TEST_CASE("non-strict boundary keeps the pair satisfiable")
{
    ClausalFormula cl = to_clausal(parse("{& P>=0.5 (| Q<=0.4 P<=0.5)}"));
    CHECK(clausal_unit_resolution_sat(cl).status == ClausalSolveResult::Status::Sat);
}
