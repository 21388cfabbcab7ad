#pragma once

#include "rnc/formula.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rnc {

/// Finite map from propositions to truth values; unmapped propositions
/// read as 0.
struct Interpretation {
    std::map<std::string, TruthValue> values;

    TruthValue operator()(const std::string& prop) const
    {
        auto it = values.find(prop);
        return it == values.end() ? TruthValue::zero() : it->second;
    }

    // One 'NAME=VALUE' line per proposition.
    std::string str() const;
};

// Min/max semantics into {0,1}: X>=a holds iff I(X) >= a, X<=b iff I(X) <= b;
// empty Conj is 1, empty Disj is 0.
bool evaluate(const Formula& f, const Interpretation& interp);

// For each proposition: its literal thresholds plus {0,1} plus the midpoint
// of every adjacent pair. Restricting interpretations to this grid preserves
// satisfiability.
std::map<std::string, std::vector<TruthValue>> candidate_grid(const Formula& f);

struct OracleResult {
    enum class Status { Sat, Unsat } status;
    std::optional<Interpretation> witness; // present iff Sat
    std::uint64_t candidates_checked = 0;
};

// Exhaustive grid enumeration; the witness is the lexicographically first
// satisfying assignment (propositions in name order, values ascending).
// Throws BudgetExceeded when the grid product exceeds `budget`.
OracleResult oracle_sat(const Formula& f, std::uint64_t budget = 1000000);

} // namespace rnc
