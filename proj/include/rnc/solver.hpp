#pragma once

#include "rnc/formula.hpp"
#include "rnc/semantics.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rnc {

enum class RuleName {
    Rur,
    Rgur,
    Rhur,
    OrBot,    // delete an empty disjunction from a disjunction
    AndBot,   // collapse a conjunction containing an empty disjunction
    Splice1,  // remove a single-child connective
    SpliceN,  // inline a same-connective child into its parent
    BotAB,    // conjunction with X>=a and X<=b, a > b, becomes (|)
    Max,      // merge two positive units on one proposition
    Const,    // constant simplification
    TautDisj, // extra rule: disjunction with X>=a, X<=b, a <= b is satisfied
    LeqMerge, // extra rule: merge two negative disjuncts into X<=max(a,b)
};

const char* rule_name_str(RuleName r);

struct TraceStep {
    RuleName rule;
    std::vector<Literal> lits; // principal literals, if any
    OccRef occ;                // path of the rewritten node, pre-rewrite
    std::string snapshot;      // printed form of the resulting subformula region
};

struct SolveTrace {
    std::vector<TraceStep> steps;
};

/// Per-proposition record of derived top-level positive units, max-merged.
struct UnitStore {
    std::map<std::string, TruthValue> units;
};

struct SolveResult {
    enum class Status { Sat, Unsat } status;
    std::optional<Interpretation> model; // present iff Sat
    SolveTrace trace;
    Formula final_formula;
    std::size_t steps = 0; // counted even when trace recording is off
};

struct SolveOptions {
    bool record_trace = true;
    bool record_snapshots = false;
    bool extra_rules = false;
    std::size_t node_budget = default_node_budget();
};

// Removes constant atoms by absorption/elimination; the result is either
// constant-free or a single T / F atom.
Formula simplify_constants(const Formula& f);

struct CdExtraction {
    bool top_level;          // the literal is conjunctively exposed
    OccRef c;                // greatest conjunctive region seeded by the literal
    std::vector<OccRef> d;   // the sibling disjuncts, when not top-level
};

// occ must resolve to a negative literal in a normalized formula (no
// single-child connectives, no same-connective nesting).
CdExtraction extract_cd(const Formula& f, const OccRef& occ);

// One RUR inference: unit must be a top-level conjunct X>=a, occ an
// occurrence of X<=b with a > b inside an enclosing disjunction; the
// region C(X<=b) is removed.
Formula rur_step(const Formula& f, const Literal& unit, const OccRef& occ);

// Scoped variant: conj_occ is any conjunction with direct child `unit`;
// the climb from occ must stop at a disjunction inside conj_occ.
Formula rgur_step(const Formula& f, const OccRef& conj_occ, const Literal& unit,
                  const OccRef& occ);

// Simultaneous RUR on pairwise distinct occurrences with non-overlapping
// C regions; equals the left-to-right composition of the single steps.
Formula rhur_step(const Formula& f, const Literal& unit,
                  const std::vector<OccRef>& occs);

// Applies the single highest-priority applicable simplification
// (AndBot > OrBot > BotAB > Max > Splice1 > SpliceN) at its
// leftmost-innermost occurrence; nullopt when none applies.
std::optional<Formula> simplify_step(const Formula& f);

// Decides satisfiability of a constant-free HNC formula via RUR_NC.
// Throws NotConstantFree / NotHnc on bad input.
SolveResult solve(const Formula& f, const SolveOptions& opts = {});

// Reapplies a trace to `input` step by step; used to audit traces.
Formula replay_trace(const Formula& input, const SolveTrace& trace);

} // namespace rnc
