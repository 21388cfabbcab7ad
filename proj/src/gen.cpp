#include "rnc/gen.hpp"

#include "rnc/solver.hpp"

#include <chrono>
#include <cmath>
#include <string>

namespace rnc {

namespace {

TruthValue rand_tv(SplitMix64& rng, unsigned chain)
{
    return TruthValue::ratio(static_cast<std::int64_t>(rng.below(chain + 1)), chain);
}

std::string rand_prop(SplitMix64& rng, unsigned props)
{
    return "P" + std::to_string(rng.below(props ? props : 1));
}

NodeId gen_negative(FormulaBuilder& b, SplitMix64& rng, const GenConfig& cfg,
                    unsigned depth)
{
    if (depth == 0 || rng.below(3) == 0)
        return b.leq(rand_prop(rng, cfg.props), rand_tv(rng, cfg.chain));
    unsigned m = 1 + static_cast<unsigned>(rng.below(cfg.arity ? cfg.arity : 1));
    std::vector<NodeId> kids;
    for (unsigned i = 0; i < m; ++i)
        kids.push_back(gen_negative(b, rng, cfg, depth - 1));
    return rng.below(2) ? b.conj(std::move(kids)) : b.disj(std::move(kids));
}

NodeId gen_hnc(FormulaBuilder& b, SplitMix64& rng, const GenConfig& cfg,
               unsigned depth)
{
    if (depth == 0)
        return rng.below(2)
                   ? b.geq(rand_prop(rng, cfg.props), rand_tv(rng, cfg.chain))
                   : b.leq(rand_prop(rng, cfg.props), rand_tv(rng, cfg.chain));
    unsigned m = 1 + static_cast<unsigned>(rng.below(cfg.arity ? cfg.arity : 1));
    switch (rng.below(4)) {
    case 0:
        return gen_hnc(b, rng, cfg, 0);
    case 1:
        return gen_negative(b, rng, cfg, depth - 1);
    case 2: {
        std::vector<NodeId> kids;
        for (unsigned i = 0; i < m; ++i)
            kids.push_back(gen_hnc(b, rng, cfg, depth - 1));
        return b.conj(std::move(kids));
    }
    default: {
        // one Horn-NC disjunct, the rest negative
        std::vector<NodeId> kids;
        std::uint64_t slot = rng.below(m);
        for (unsigned i = 0; i < m; ++i)
            kids.push_back(i == slot ? gen_hnc(b, rng, cfg, depth - 1)
                                     : gen_negative(b, rng, cfg, depth - 1));
        return b.disj(std::move(kids));
    }
    }
}

NodeId gen_general(FormulaBuilder& b, SplitMix64& rng, const GenConfig& cfg,
                   unsigned depth)
{
    if (depth == 0 || rng.below(3) == 0)
        return rng.below(2)
                   ? b.geq(rand_prop(rng, cfg.props), rand_tv(rng, cfg.chain))
                   : b.leq(rand_prop(rng, cfg.props), rand_tv(rng, cfg.chain));
    unsigned m = 1 + static_cast<unsigned>(rng.below(cfg.arity ? cfg.arity : 1));
    std::vector<NodeId> kids;
    for (unsigned i = 0; i < m; ++i)
        kids.push_back(gen_general(b, rng, cfg, depth - 1));
    return rng.below(2) ? b.conj(std::move(kids)) : b.disj(std::move(kids));
}

} // namespace

Formula gen_random(const GenConfig& cfg)
{
    SplitMix64 rng(cfg.seed);
    FormulaBuilder b;
    switch (cfg.mode) {
    case GenMode::Hnc:
        return b.finish(gen_hnc(b, rng, cfg, cfg.depth));
    case GenMode::GeneralNc:
        return b.finish(gen_general(b, rng, cfg, cfg.depth));
    case GenMode::ConjunctiveHnc: {
        unsigned m = cfg.arity ? cfg.arity : 1;
        std::vector<NodeId> kids;
        for (unsigned i = 0; i < m; ++i)
            kids.push_back(gen_hnc(b, rng, cfg, cfg.depth ? cfg.depth - 1 : 0));
        return b.finish(b.conj(std::move(kids)));
    }
    }
    throw Error("unknown generator mode");
}

// A flat conjunctive HNC with a long unit-propagation chain: a seed unit
// C0>=1 and links (| Ci<=t {& C(i+1)>=1 <padding>}) so solving performs one
// RUR per link, plus inert negative padding.
Formula gen_bench_formula(std::size_t n, const GenConfig& cfg)
{
    SplitMix64 rng(cfg.seed ^ (0x6e ^ n) * 0x100000001b3ull);
    FormulaBuilder b;
    unsigned pad_pool = static_cast<unsigned>(n / 20 + 8);
    std::vector<NodeId> top;
    top.push_back(b.geq("C0", TruthValue::one()));
    std::size_t lits = 1, link = 0;
    while (lits < n) {
        std::vector<NodeId> ck;
        ck.push_back(b.geq("C" + std::to_string(link + 1), TruthValue::one()));
        std::uint64_t pad = rng.below(3);
        for (std::uint64_t j = 0; j < pad; ++j)
            ck.push_back(b.leq("Q" + std::to_string(rng.below(pad_pool)),
                               rand_tv(rng, cfg.chain)));
        lits += 1 + static_cast<std::size_t>(pad);
        if (rng.below(4) == 0) {
            // a disjunction of two negatives; stays in the final formula
            ck.push_back(b.disj({b.leq("Q" + std::to_string(rng.below(pad_pool)),
                                       rand_tv(rng, cfg.chain)),
                                 b.leq("Q" + std::to_string(rng.below(pad_pool)),
                                       rand_tv(rng, cfg.chain))}));
            lits += 2;
        }
        TruthValue t = TruthValue::ratio(
            static_cast<std::int64_t>(rng.below(cfg.chain)), cfg.chain); // < 1
        top.push_back(b.disj({b.leq("C" + std::to_string(link), t),
                              b.conj(std::move(ck))}));
        lits += 1;
        ++link;
    }
    return b.finish(b.conj(std::move(top)));
}

BenchReport bench(const std::vector<std::size_t>& sizes, const GenConfig& cfg)
{
    BenchReport report;
    for (std::size_t n : sizes) {
        Formula f = gen_bench_formula(n, cfg);
        SolveOptions opts;
        opts.record_trace = false;
        auto t0 = std::chrono::steady_clock::now();
        SolveResult r = solve(f, opts);
        auto t1 = std::chrono::steady_clock::now();
        double secs = std::chrono::duration<double>(t1 - t0).count();
        report.rows.push_back({n, literal_count(f), secs, r.steps});
    }
    if (report.rows.size() >= 2) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (const BenchRow& row : report.rows) {
            double x = std::log(static_cast<double>(row.n));
            double y = std::log(row.seconds > 1e-9 ? row.seconds : 1e-9);
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        double m = static_cast<double>(report.rows.size());
        double denom = m * sxx - sx * sx;
        if (denom > 0)
            report.exponent = (m * sxy - sx * sy) / denom;
    }
    return report;
}

} // namespace rnc
