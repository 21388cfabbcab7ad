// End-to-end acceptance checks. Each numbered check prints a single
// PASS/FAIL line; the exit code is the number of failing checks.
// argv[1] (optional): path to the CLI binary, exercised in check 1.

#include "rnc/clausal.hpp"
#include "rnc/gen.hpp"
#include "rnc/hornnc.hpp"
#include "rnc/lp.hpp"
#include "rnc/parser.hpp"
#include "rnc/solver.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace rnc;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int n, const char* what, bool ok, double secs, const std::string& detail = "")
{
    std::printf("%s  %d. %s  (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", n, what, secs,
                detail.empty() ? "" : "  -- ", detail.c_str());
    if (!ok)
        ++failures;
}

TruthValue tv(const char* s)
{
    auto r = TruthValue::parse(s);
    if (r.status != TruthValue::ParseStatus::Ok)
        throw Error(std::string("bad literal in test: ") + s);
    return r.value;
}

Interpretation random_grid_interp(const std::map<std::string, std::vector<TruthValue>>& grid,
                                  SplitMix64& rng)
{
    Interpretation m;
    for (const auto& [prop, vals] : grid)
        m.values.emplace(prop, vals[rng.below(vals.size())]);
    return m;
}

int run_cli(const std::string& cli, const std::string& args, std::string& out)
{
    std::string cmd = cli + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p)
        return -1;
    char buf[4096];
    out.clear();
    while (std::size_t k = std::fread(buf, 1, sizeof buf, p))
        out.append(buf, k);
    return pclose(p);
}

// ---- 1. worked-example regression --------------------------------------

bool check_examples(const char* cli, std::string& detail)
{
    // clausal Horn verdicts of the two flat formulas
    if (!is_horn_clausal(parse("{& (| P>=0.7 Q<=0.8 R<=0.9) (| P>=0.7 R<=0.1)}")))
        return detail = "flat Horn formula rejected", false;
    if (is_horn_clausal(parse("{& (| P>=0.7 R>=1) (| P>=0.2 R<=0)}")))
        return detail = "two-positive clause accepted", false;

    // constant elimination on the nested disjunction
    Formula withc = parse(
        "(| {& P<=0.4 1>=0} {& (| P<=0.3 R>=0.8) {& Q>=0.6 (| P>=0.7 S<=0.1)}})");
    if (print(simplify_constants(withc)) !=
        "(| P<=0.4 {& (| P<=0.3 R>=0.8) {& Q>=0.6 (| P>=0.7 S<=0.1)}})")
        return detail = "constant elimination", false;

    // recognizer verdicts: two-disjunct pair and the one-literal switch
    if (!is_horn_nc_pattern(parse("(| {& Q<=0.6 S<=0.7} {& R>=0.7 P>=0.3})")).is_hnc)
        return detail = "positive-conjunct disjunction rejected", false;
    if (is_horn_nc_pattern(parse("(| {& Q<=0.6 S>=0.7} {& R>=0.7 P<=0.3})")).is_hnc)
        return detail = "two non-negative disjuncts accepted", false;
    const char* nested = "(| P<=0.4 {& (| P<=0.3 R>=0.8) {& Q>=0.6 (| P>=0.7 S<=0.1)}})";
    if (!is_horn_nc_pattern(parse(nested)).is_hnc ||
        !is_horn_nc_inductive(parse(nested)))
        return detail = "nested Horn-NC rejected", false;
    const char* flipped = "(| P>=0.4 {& (| P<=0.3 R>=0.8) {& Q>=0.6 (| P>=0.7 S<=0.1)}})";
    if (is_horn_nc_pattern(parse(flipped)).is_hnc || is_horn_nc_inductive(parse(flipped)))
        return detail = "flipped literal still accepted", false;

    // clausal forms, bit-exact
    if (to_clausal(parse("(| {& Q<=0.6 S<=0.7} {& R>=0.7 P>=0.3})")).str() !=
        "{& (| Q<=0.6 R>=0.7) (| Q<=0.6 P>=0.3) (| S<=0.7 R>=0.7) (| S<=0.7 P>=0.3)}")
        return detail = "clausal form 1", false;
    if (to_clausal(parse("(| {& Q<=0.6 S>=0.7} {& R>=0.7 P<=0.3})")).str() !=
        "{& (| Q<=0.6 R>=0.7) (| Q<=0.6 P<=0.3) (| S>=0.7 R>=0.7) (| S>=0.7 P<=0.3)}")
        return detail = "clausal form 2", false;

    // one unit-resolution step
    Formula f19 = parse("{& P>=0.8 (| Q<=0.4 P<=0.5) (| R>=0.9 {& Q<=0.2 P<=0.3})}");
    if (print(rur_step(f19, {Sign::Geq, "P", tv("0.8")}, OccRef{{1, 1}})) !=
        "{& P>=0.8 (| Q<=0.4) (| R>=0.9 {& Q<=0.2 P<=0.3})}")
        return detail = "unit-resolution step", false;

    // region extraction on the nested variant
    Formula f20 = parse(
        "{& P>=0.8 (| Q<=0.4 {& P<=0.5 (| R>=0.7 Q<=0.1)}) (| R>=0.9 {& Q<=0.2 P<=0.3})}");
    CdExtraction cd = extract_cd(f20, OccRef{{1, 1, 0}});
    if (cd.top_level || print(f20.at(resolve(f20, cd.c))) != "{& P<=0.5 (| R>=0.7 Q<=0.1)}" ||
        cd.d.size() != 1 || print(f20.at(resolve(f20, cd.d[0]))) != "Q<=0.4")
        return detail = "region extraction", false;

    // nested step plus one splice reaches the flat conjunct form
    Formula g20 = rur_step(f20, {Sign::Geq, "P", tv("0.8")}, OccRef{{1, 1, 0}});
    auto g21 = simplify_step(g20);
    if (!g21 || print(*g21) != "{& P>=0.8 Q<=0.4 (| R>=0.9 {& Q<=0.2 P<=0.3})}")
        return detail = "flattened result", false;

    // the deep instantiated formula refutes, with a replayable trace
    Formula deep = parse(
        "{& P<=0.8"
        " (| P<=0.2 {& (| P<=0.3 Q<=0.4 P>=1) (| R<=0.5 {& S<=0.2 P<=0.6}) Q>=0.7})"
        " P>=0.7}");
    SolveResult r = solve(deep);
    if (r.status != SolveResult::Status::Unsat || print(r.final_formula) != "(|)")
        return detail = "deep refutation", false;
    if (!structurally_equal(replay_trace(deep, r.trace), r.final_formula))
        return detail = "trace replay", false;
    if (oracle_sat(deep).status != OracleResult::Status::Unsat)
        return detail = "oracle disagrees on the deep formula", false;

    // solve the satisfiable variant and check the model
    SolveResult s = solve(f19);
    if (s.status != SolveResult::Status::Sat || (*s.model)("P") != tv("0.8") ||
        (*s.model)("Q") != tv("0") || (*s.model)("R") != tv("0.9"))
        return detail = "satisfiable model", false;

    if (cli) {
        std::string tmp = "/tmp/rnc_acceptance_example.rnc";
        FILE* fp = std::fopen(tmp.c_str(), "w");
        if (!fp)
            return detail = "cannot write temp file", false;
        std::fputs("{& P>=0.8 (| Q<=0.4 P<=0.5) (| R>=0.9 {& Q<=0.2 P<=0.3})}\n", fp);
        std::fclose(fp);
        std::string out;
        int rc = run_cli(cli, std::string("solve ") + tmp, out);
        if (rc != 0 || out.find("SAT") == std::string::npos ||
            out.find("P=0.8") == std::string::npos)
            return detail = "cli solve: " + out, false;
        rc = run_cli(cli, std::string("recognize ") + tmp, out);
        if (rc != 0 || out.find("HORN-NC") == std::string::npos)
            return detail = "cli recognize: " + out, false;
    }
    return true;
}

// ---- 2. recognizer agreement -------------------------------------------

bool check_recognizers(std::string& detail)
{
    GenConfig cfg;
    cfg.props = 8;
    cfg.depth = 6;
    cfg.mode = GenMode::GeneralNc;
    for (std::uint64_t seed = 0; seed < 10000; ++seed) {
        cfg.seed = seed;
        Formula f = gen_random(cfg);
        if (is_horn_nc_pattern(f).is_hnc != is_horn_nc_inductive(f)) {
            detail = "disagreement at seed " + std::to_string(seed);
            return false;
        }
    }
    return true;
}

// ---- 3. Horn-NC iff Horn clausal form ----------------------------------

bool check_clausal_horn(std::string& detail)
{
    GenConfig cfg;
    cfg.props = 6;
    cfg.depth = 3;
    cfg.mode = GenMode::GeneralNc;
    std::size_t checked = 0;
    for (std::uint64_t seed = 0; checked < 10000; ++seed) {
        cfg.seed = seed;
        Formula f = gen_random(cfg);
        if (literal_count(f) > 12)
            continue;
        ++checked;
        if (is_horn_nc_pattern(f).is_hnc != is_horn(to_clausal(f))) {
            detail = "mismatch at seed " + std::to_string(seed);
            return false;
        }
    }
    return true;
}

// ---- 4. clausal conversion preserves evaluation ------------------------

bool check_equivalence(std::string& detail)
{
    GenConfig cfg;
    cfg.props = 6;
    cfg.depth = 3;
    cfg.mode = GenMode::GeneralNc;
    SplitMix64 rng(0x9d2c5680);
    std::size_t checked = 0;
    for (std::uint64_t seed = 0; checked < 1000; ++seed) {
        cfg.seed = seed;
        Formula f = gen_random(cfg);
        if (literal_count(f) > 14)
            continue;
        ++checked;
        Formula cf = to_clausal(f).to_formula();
        auto grid = candidate_grid(f);
        for (int i = 0; i < 1000; ++i) {
            Interpretation m = random_grid_interp(grid, rng);
            if (evaluate(f, m) != evaluate(cf, m)) {
                detail = "mismatch at seed " + std::to_string(seed);
                return false;
            }
        }
    }
    return true;
}

// ---- 5 & 7. solver vs oracle, with per-step soundness auditing ----------

bool audit_trace_soundness(const Formula& input, const SolveTrace& trace,
                           SplitMix64& rng, std::string& detail)
{
    auto grid = candidate_grid(input);
    Formula cur = input;
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        SolveTrace one;
        one.steps.push_back(trace.steps[i]);
        Formula next = replay_trace(cur, one);
        for (int t = 0; t < 100; ++t) {
            Interpretation m = random_grid_interp(grid, rng);
            if (evaluate(cur, m) != evaluate(next, m)) {
                detail = std::string("rule ") + rule_name_str(trace.steps[i].rule) +
                         " changed the evaluation";
                return false;
            }
        }
        cur = next;
    }
    return true;
}

bool check_solver_vs_oracle(std::string& detail, std::vector<Formula>& corpus)
{
    GenConfig cfg;
    cfg.props = 8;
    cfg.depth = 3;
    cfg.mode = GenMode::ConjunctiveHnc;
    std::size_t checked = 0;
    for (std::uint64_t seed = 0; checked < 5000; ++seed) {
        cfg.seed = seed;
        Formula f = gen_random(cfg);
        if (literal_count(f) > 24)
            continue;
        ++checked;
        corpus.push_back(f);
        SolveResult r = solve(f);
        OracleResult o = oracle_sat(f, 100000000ull);
        bool sat = r.status == SolveResult::Status::Sat;
        if (sat != (o.status == OracleResult::Status::Sat)) {
            detail = "status mismatch at seed " + std::to_string(seed);
            return false;
        }
        if (sat && !evaluate(f, *r.model)) {
            detail = "model fails at seed " + std::to_string(seed);
            return false;
        }
    }
    return true;
}

bool check_rule_soundness(const std::vector<Formula>& corpus, std::string& detail)
{
    SplitMix64 rng(0xb5297a4d);
    std::size_t audited = 0;
    for (std::size_t i = 0; i < corpus.size() && audited < 400; ++i) {
        const Formula& f = corpus[i];
        SolveResult r = solve(f);
        if (r.trace.steps.empty())
            continue;
        ++audited;
        if (!audit_trace_soundness(f, r.trace, rng, detail)) {
            detail += " (instance " + std::to_string(i) + ")";
            return false;
        }
    }
    // scoped and hyper variants on hand-picked shapes
    auto grid_check = [&](const Formula& before, const Formula& after) {
        auto grid = candidate_grid(before);
        for (int t = 0; t < 100; ++t) {
            Interpretation m = random_grid_interp(grid, rng);
            if (evaluate(before, m) != evaluate(after, m))
                return false;
        }
        return true;
    };
    Formula h = parse("{& P>=0.8 (| Q<=0.4 P<=0.5) (| R>=0.9 {& Q<=0.2 P<=0.3})}");
    if (!grid_check(h, rhur_step(h, {Sign::Geq, "P", tv("0.8")},
                                 {OccRef{{1, 1}}, OccRef{{2, 1, 1}}})))
        return detail = "hyper step unsound", false;
    Formula g = parse("(| P<=0.1 {& P>=0.8 (| Q<=0.4 P<=0.5)})");
    if (!grid_check(g, rgur_step(g, OccRef{{1}}, {Sign::Geq, "P", tv("0.8")},
                                 OccRef{{1, 1, 1}})))
        return detail = "scoped step unsound", false;
    if (audited < 100)
        return detail = "too few traced instances (" + std::to_string(audited) + ")", false;
    return true;
}

// ---- 6. scaling ---------------------------------------------------------

bool check_scaling(std::string& detail)
{
    GenConfig cfg;
    BenchReport r = bench({1000, 10000, 100000}, cfg);
    if (r.rows.size() != 3 || !r.exponent) {
        detail = "incomplete report";
        return false;
    }
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(3);
    os << "exponent=" << *r.exponent << " t(1e5)=" << r.rows[2].seconds << "s";
    detail = os.str();
    if (*r.exponent > 2.5)
        return false;
    if (r.rows[2].seconds >= 10.0)
        return false;
    Formula big = gen_bench_formula(100000, cfg);
    auto t0 = Clock::now();
    bool hnc = is_horn_nc_pattern(big).is_hnc;
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (!hnc || secs >= 1.0) {
        detail += " recognizer=" + std::to_string(secs) + "s";
        return false;
    }
    return true;
}

// ---- 8. program queries vs enumerated consequence ----------------------

void all_chain_interps(const std::vector<std::string>& props, const Chain& chain,
                       std::vector<Interpretation>& out)
{
    out.assign(1, Interpretation{});
    for (const std::string& p : props) {
        std::vector<Interpretation> next;
        for (const Interpretation& m : out)
            for (const TruthValue& v : chain.values()) {
                Interpretation m2 = m;
                m2.values.emplace(p, v);
                next.push_back(std::move(m2));
            }
        out = std::move(next);
    }
}

bool check_programs(std::string& detail)
{
    const std::vector<std::string> props{"A", "B", "C", "D"};
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        SplitMix64 rng(seed * 2654435761ull + 1);
        Chain chain{1 + static_cast<unsigned>(rng.below(5))};
        auto rand_prop = [&] { return props[rng.below(props.size())]; };
        auto rand_t = [&](bool nonzero) {
            std::uint64_t lo = nonzero ? 1 : 0;
            return TruthValue::ratio(
                static_cast<std::int64_t>(lo + rng.below(chain.k + 1 - lo)), chain.k);
        };
        Program p;
        p.chain = chain;
        std::vector<Literal> facts;
        for (std::uint64_t i = rng.below(3); i > 0; --i)
            facts.push_back({Sign::Geq, rand_prop(), rand_t(false)});
        for (std::uint64_t i = 1 + rng.below(3); i > 0; --i) {
            FormulaBuilder bb;
            NodeId body = rng.below(2)
                              ? bb.geq(rand_prop(), rand_t(true))
                              : bb.conj({bb.geq(rand_prop(), rand_t(true)),
                                         bb.geq(rand_prop(), rand_t(true))});
            FormulaBuilder hb;
            NodeId head = rng.below(2)
                              ? hb.geq(rand_prop(), rand_t(false))
                              : hb.conj({hb.geq(rand_prop(), rand_t(false)),
                                         hb.geq(rand_prop(), rand_t(false))});
            p.rules.push_back(make_rule(bb.finish(body), hb.finish(head)));
        }
        FormulaBuilder qb;
        NodeId q = rng.below(2) ? qb.geq(rand_prop(), rand_t(true))
                                : qb.conj({qb.geq(rand_prop(), rand_t(true)),
                                           qb.geq(rand_prop(), rand_t(true))});
        Formula query = qb.finish(q);

        Formula pf = to_formula(facts, p);
        std::vector<Interpretation> interps;
        all_chain_interps(props, chain, interps);
        bool any_model = false, all_entail = true;
        for (const Interpretation& m : interps) {
            if (!evaluate(pf, m))
                continue;
            any_model = true;
            if (!evaluate(query, m))
                all_entail = false;
        }
        Entailment got = entails(facts, p, query);
        Entailment want = !any_model ? Entailment::UnsatProgram
                          : all_entail ? Entailment::True
                                       : Entailment::False;
        if (got != want) {
            detail = "entailment mismatch at seed " + std::to_string(seed);
            return false;
        }
        auto mm = minimal_model(facts, p);
        if (any_model != mm.has_value()) {
            detail = "model existence mismatch at seed " + std::to_string(seed);
            return false;
        }
        if (mm) {
            if (!evaluate(pf, *mm)) {
                detail = "minimal model not a model at seed " + std::to_string(seed);
                return false;
            }
            for (const Interpretation& m : interps) {
                if (!evaluate(pf, m))
                    continue;
                for (const std::string& prop : props)
                    if ((*mm)(prop) > m(prop)) {
                        detail = "not pointwise minimal at seed " + std::to_string(seed);
                        return false;
                    }
            }
        }
    }
    return true;
}

template <class Fn>
void timed(int n, const char* what, double limit, Fn fn)
{
    std::string detail;
    auto t0 = Clock::now();
    bool ok = false;
    try {
        ok = fn(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (ok && secs >= limit) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over the time limit");
    }
    report(n, what, ok, secs, detail);
}

} // namespace

int main(int argc, char** argv)
{
    const char* cli = argc > 1 ? argv[1] : nullptr;
    std::vector<Formula> corpus;

    timed(1, "worked-example regression", 1.0,
          [&](std::string& d) { return check_examples(cli, d); });
    timed(2, "pattern and inductive recognizers agree on 10^4 formulas", 30.0,
          [&](std::string& d) { return check_recognizers(d); });
    timed(3, "Horn-NC iff Horn clausal form on 10^4 formulas", 60.0,
          [&](std::string& d) { return check_clausal_horn(d); });
    timed(4, "clausal conversion preserves evaluation (10^3 x 10^3)", 60.0,
          [&](std::string& d) { return check_equivalence(d); });
    timed(5, "solver agrees with the brute-force oracle on 5*10^3 instances", 120.0,
          [&](std::string& d) { return check_solver_vs_oracle(d, corpus); });
    timed(6, "near-linear scaling to 10^5 literals", 60.0,
          [&](std::string& d) { return check_scaling(d); });
    timed(7, "every calculus step preserves evaluation", 120.0,
          [&](std::string& d) { return check_rule_soundness(corpus, d); });
    timed(8, "program queries match enumerated consequence on 500 programs", 60.0,
          [&](std::string& d) { return check_programs(d); });

    return failures;
}
