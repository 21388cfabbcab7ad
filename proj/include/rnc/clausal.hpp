#pragma once

#include "rnc/formula.hpp"
#include "rnc/semantics.hpp"

#include <vector>

namespace rnc {

/// Flat two-level clausal structure; inputs are expected constant-free.
struct ClausalFormula {
    using Clause = std::vector<Literal>;
    std::vector<Clause> clauses;

    Formula to_formula() const;
    std::string str() const;
};

// Exhaustive distributive conversion (innermost-first, leftmost-first;
// conjunction flattening first). Duplicate literals and clauses are kept.
// Throws Blowup when the clause count exceeds max_clauses and
// NotConstantFree on constant atoms.
ClausalFormula to_clausal(const Formula& f, std::size_t max_clauses = 100000);

struct ClausalSolveResult {
    enum class Status { Sat, Unsat } status;
    Interpretation model; // meaningful when Sat: positive units, 0 elsewhere
};

// Reference regular clausal unit-resolution for Horn inputs (throws
// NotHorn otherwise): positive units are max-merged per proposition, a
// unit X>=a deletes X<=b occurrences with a > b; an emptied clause means
// UNSAT, fixpoint means SAT.
ClausalSolveResult clausal_unit_resolution_sat(const ClausalFormula& f);

bool is_horn(const ClausalFormula& f);

} // namespace rnc
