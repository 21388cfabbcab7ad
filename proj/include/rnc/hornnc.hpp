#pragma once

#include "rnc/formula.hpp"

#include <optional>

namespace rnc {

struct HncVerdict {
    bool is_hnc;
    // When not HNC: the first disjunction in depth-first order with two or
    // more non-negative disjuncts.
    std::optional<OccRef> witness;
};

// True iff every literal in f is negative (LEQ). Constants are ignored.
bool is_negative(const Formula& f);

// Pattern check: every disjunction has at most one disjunct whose subtree
// contains a positive literal. Expects constant-free input; constants are
// treated as contributing no positive literal.
HncVerdict is_horn_nc_pattern(const Formula& f);

// Inductive check, single bottom-up pass: literals are HNC; a conjunction
// is HNC iff all children are; a disjunction is HNC iff at most one child
// is non-negative and that child is itself HNC.
bool is_horn_nc_inductive(const Formula& f);

// f must be a flat conjunction of disjunctions of atoms (throws NotClausal
// otherwise); true iff every clause has at most one positive literal.
bool is_horn_clausal(const Formula& f);

} // namespace rnc
