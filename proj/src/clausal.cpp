#include "rnc/clausal.hpp"

#include "rnc/parser.hpp"

namespace rnc {

Formula ClausalFormula::to_formula() const
{
    FormulaBuilder b;
    std::vector<NodeId> cl;
    cl.reserve(clauses.size());
    for (const Clause& c : clauses) {
        std::vector<NodeId> lits;
        lits.reserve(c.size());
        for (const Literal& l : c)
            lits.push_back(b.lit(l.sign, l.prop, l.threshold));
        cl.push_back(b.disj(std::move(lits)));
    }
    return b.finish(b.conj(std::move(cl)));
}

std::string ClausalFormula::str() const
{
    return print(to_formula());
}

namespace {

using Clauses = std::vector<ClausalFormula::Clause>;

Clauses cnf_rec(const Formula& f, NodeId id, std::size_t max_clauses)
{
    const Node& n = f.node(id);
    if (n.is_lit())
        return {{n.lit()}};
    if (n.is_const())
        throw NotConstantFree("to_clausal requires constant-free input");
    if (n.is_conj()) {
        Clauses out;
        for (NodeId k : n.conn().kids) {
            Clauses part = cnf_rec(f, k, max_clauses);
            if (out.size() + part.size() > max_clauses)
                throw Blowup("clausal conversion exceeds max clause count");
            for (auto& c : part)
                out.push_back(std::move(c));
        }
        return out;
    }
    // Disjunction: cross product of the children's clause sets, first
    // child's clauses in the outer loop.
    Clauses acc{{}};
    for (NodeId k : n.conn().kids) {
        Clauses part = cnf_rec(f, k, max_clauses);
        Clauses next;
        if (!part.empty() && acc.size() > max_clauses / part.size())
            throw Blowup("clausal conversion exceeds max clause count");
        next.reserve(acc.size() * part.size());
        for (const auto& left : acc)
            for (const auto& right : part) {
                ClausalFormula::Clause merged = left;
                merged.insert(merged.end(), right.begin(), right.end());
                next.push_back(std::move(merged));
            }
        acc = std::move(next);
    }
    return acc;
}

} // namespace

ClausalFormula to_clausal(const Formula& f, std::size_t max_clauses)
{
    ClausalFormula out;
    out.clauses = cnf_rec(f, f.root(), max_clauses);
    if (out.clauses.size() > max_clauses)
        throw Blowup("clausal conversion exceeds max clause count");
    return out;
}

bool is_horn(const ClausalFormula& f)
{
    for (const auto& clause : f.clauses) {
        std::size_t positive = 0;
        for (const Literal& l : clause)
            if (l.positive())
                ++positive;
        if (positive > 1)
            return false;
    }
    return true;
}

ClausalSolveResult clausal_unit_resolution_sat(const ClausalFormula& f)
{
    if (!is_horn(f))
        throw NotHorn("clausal unit resolution requires a Horn input");

    std::map<std::string, TruthValue> units;
    auto merge_unit = [&](const Literal& l) {
        auto [it, inserted] = units.emplace(l.prop, l.threshold);
        if (!inserted && l.threshold > it->second) {
            it->second = l.threshold;
            return true;
        }
        return inserted;
    };

    std::vector<ClausalFormula::Clause> clauses = f.clauses;
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto& clause : clauses) {
            // Remove negative literals refuted by the current units.
            for (std::size_t i = 0; i < clause.size();) {
                const Literal& l = clause[i];
                if (!l.positive()) {
                    auto it = units.find(l.prop);
                    if (it != units.end() && it->second > l.threshold) {
                        clause.erase(clause.begin() + i);
                        changed = true;
                        continue;
                    }
                }
                ++i;
            }
            if (clause.empty())
                return {ClausalSolveResult::Status::Unsat, {}};
            if (clause.size() == 1 && clause[0].positive())
                changed = merge_unit(clause[0]) || changed;
        }
    }

    Interpretation model;
    model.values = units;
    return {ClausalSolveResult::Status::Sat, std::move(model)};
}

} // namespace rnc
