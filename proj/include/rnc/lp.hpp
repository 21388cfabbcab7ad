#pragma once

#include "rnc/formula.hpp"
#include "rnc/semantics.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace rnc {

/// The finite truth-value chain {0, 1/k, ..., 1} a program is interpreted
/// over. Body negation is exact only over a finite chain.
struct Chain {
    unsigned k = 1;

    bool contains(const TruthValue& t) const;
    TruthValue step() const { return TruthValue::ratio(1, k); }
    std::vector<TruthValue> values() const;
};

/// body: positive-literal NC formula; head: HNC formula. Use make_rule to
/// get the invariants checked.
struct HncRule {
    Formula body;
    Formula head;
};

HncRule make_rule(Formula body, Formula head); // throws Error on bad shapes

struct Program {
    std::vector<HncRule> rules;
    Chain chain;
};

// De Morgan dualization of a positive formula: Conj<->Disj and
// X>=a -> X<=(a - 1/k); X>=0 (a tautology) becomes "(|)". Over chain-valued
// interpretations the result evaluates to 1 - evaluate(f, I).
// Throws ThresholdNotInChain for off-chain thresholds.
Formula negate_positive(const Formula& f, const Chain& chain);

// The program formula: a conjunction of all facts and, per rule, one
// disjunction combining the dualized body with the head (disjunction
// children are inlined, so each rule contributes a single flat disjunction).
Formula to_formula(const std::vector<Literal>& facts, const Program& p);

// Minimal chain-valued model of facts + program via the NC solver;
// nullopt when the program formula is unsatisfiable.
std::optional<Interpretation> minimal_model(const std::vector<Literal>& facts,
                                            const Program& p);

enum class Entailment { True, False, UnsatProgram };

// Minimal-model entailment: evaluates the query in the minimal model.
// For queries with only positive literals this coincides with classical
// consequence; for mixed queries it is minimal-model entailment only.
Entailment entails(const std::vector<Literal>& facts, const Program& p,
                   const Formula& query);

/// A parsed program file: `chain k` header, `fact LITERAL` lines and
/// `rule BODY -> HEAD` lines.
struct ProgramFile {
    Program program;
    std::vector<Literal> facts;
};

ProgramFile parse_program(std::string_view text); // throws ParseError

} // namespace rnc
