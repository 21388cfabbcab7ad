#include "rnc/semantics.hpp"

#include <algorithm>

namespace rnc {

std::string Interpretation::str() const
{
    std::string out;
    for (const auto& [name, v] : values) {
        out += name;
        out += '=';
        out += v.str();
        out += '\n';
    }
    return out;
}

namespace {

bool eval_rec(const Formula& f, NodeId id, const Interpretation& interp,
              std::map<NodeId, bool>& memo)
{
    auto it = memo.find(id);
    if (it != memo.end())
        return it->second;
    const Node& n = f.node(id);
    bool v;
    if (n.is_lit()) {
        TruthValue x = interp(n.lit().prop);
        v = n.lit().positive() ? x >= n.lit().threshold : x <= n.lit().threshold;
    } else if (n.is_const()) {
        v = n.cst().is_top();
    } else if (n.is_conj()) {
        v = true;
        for (NodeId k : n.conn().kids)
            if (!eval_rec(f, k, interp, memo)) {
                v = false;
                break;
            }
    } else {
        v = false;
        for (NodeId k : n.conn().kids)
            if (eval_rec(f, k, interp, memo)) {
                v = true;
                break;
            }
    }
    memo[id] = v;
    return v;
}

} // namespace

bool evaluate(const Formula& f, const Interpretation& interp)
{
    std::map<NodeId, bool> memo; // node value is occurrence-independent, DAG-safe
    return eval_rec(f, f.root(), interp, memo);
}

std::map<std::string, std::vector<TruthValue>> candidate_grid(const Formula& f)
{
    std::map<std::string, std::vector<TruthValue>> thresholds;
    for_each_subformula(f, [&](const OccRef&, NodeId id) {
        const Node& n = f.node(id);
        if (n.is_lit())
            thresholds[n.lit().prop].push_back(n.lit().threshold);
    });

    std::map<std::string, std::vector<TruthValue>> grid;
    for (auto& [prop, vals] : thresholds) {
        vals.push_back(TruthValue::zero());
        vals.push_back(TruthValue::one());
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
        std::vector<TruthValue> cells;
        for (std::size_t i = 0; i < vals.size(); ++i) {
            cells.push_back(vals[i]);
            if (i + 1 < vals.size())
                cells.push_back(TruthValue::midpoint(vals[i], vals[i + 1]));
        }
        grid[prop] = std::move(cells);
    }
    return grid;
}

OracleResult oracle_sat(const Formula& f, std::uint64_t budget)
{
    auto grid = candidate_grid(f);
    std::vector<std::string> props;
    std::uint64_t total = 1;
    for (const auto& [prop, vals] : grid) {
        props.push_back(prop);
        if (total > budget / vals.size())
            throw BudgetExceeded("oracle grid exceeds budget");
        total *= vals.size();
        if (total > budget)
            throw BudgetExceeded("oracle grid exceeds budget");
    }

    // Odometer over grid values; the first proposition is the most
    // significant digit, so assignments come out in lexicographic order.
    std::vector<std::size_t> idx(props.size(), 0);
    OracleResult res{OracleResult::Status::Unsat, std::nullopt, 0};
    while (true) {
        Interpretation interp;
        for (std::size_t i = 0; i < props.size(); ++i)
            interp.values[props[i]] = grid[props[i]][idx[i]];
        ++res.candidates_checked;
        if (evaluate(f, interp)) {
            res.status = OracleResult::Status::Sat;
            res.witness = std::move(interp);
            return res;
        }
        std::size_t i = props.size();
        while (i > 0) {
            --i;
            if (++idx[i] < grid[props[i]].size())
                break;
            idx[i] = 0;
            if (i == 0)
                return res;
        }
        if (props.empty())
            return res;
    }
}

} // namespace rnc
