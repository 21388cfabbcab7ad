#include "rnc/hornnc.hpp"

#include <map>

namespace rnc {

namespace {

bool contains_positive(const Formula& f, NodeId id, std::map<NodeId, bool>& memo)
{
    auto it = memo.find(id);
    if (it != memo.end())
        return it->second;
    const Node& n = f.node(id);
    bool v = false;
    if (n.is_lit())
        v = n.lit().positive();
    else if (n.is_conn())
        for (NodeId k : n.conn().kids)
            if (contains_positive(f, k, memo)) {
                v = true;
                break;
            }
    memo[id] = v;
    return v;
}

} // namespace

bool is_negative(const Formula& f)
{
    std::map<NodeId, bool> memo;
    return !contains_positive(f, f.root(), memo);
}

HncVerdict is_horn_nc_pattern(const Formula& f)
{
    std::map<NodeId, bool> memo;
    HncVerdict verdict{true, std::nullopt};
    // Depth-first preorder; keep the first offending disjunction.
    struct Frame {
        NodeId id;
        std::size_t next_kid;
    };
    std::vector<Frame> stack{{f.root(), 0}};
    OccRef occ;
    auto check = [&](NodeId id, const OccRef& where) {
        const Node& n = f.node(id);
        if (!n.is_disj())
            return;
        std::size_t non_negative = 0;
        for (NodeId k : n.conn().kids)
            if (contains_positive(f, k, memo))
                ++non_negative;
        if (non_negative >= 2 && verdict.is_hnc) {
            verdict.is_hnc = false;
            verdict.witness = where;
        }
    };
    check(f.root(), occ);
    while (!stack.empty() && verdict.is_hnc) {
        Frame& fr = stack.back();
        const Node& n = f.node(fr.id);
        if (!n.is_conn() || fr.next_kid >= n.conn().kids.size()) {
            stack.pop_back();
            if (!occ.path.empty())
                occ.path.pop_back();
            continue;
        }
        NodeId kid = n.conn().kids[fr.next_kid];
        occ.path.push_back(static_cast<std::uint32_t>(fr.next_kid));
        ++fr.next_kid;
        check(kid, occ);
        stack.push_back({kid, 0});
    }
    return verdict;
}

namespace {

struct HncInfo {
    bool negative;
    bool hnc;
};

HncInfo hnc_rec(const Formula& f, NodeId id, std::map<NodeId, HncInfo>& memo)
{
    auto it = memo.find(id);
    if (it != memo.end())
        return it->second;
    const Node& n = f.node(id);
    HncInfo info{true, true};
    if (n.is_lit()) {
        info.negative = !n.lit().positive();
    } else if (n.is_conj()) {
        for (NodeId k : n.conn().kids) {
            HncInfo ki = hnc_rec(f, k, memo);
            info.negative = info.negative && ki.negative;
            info.hnc = info.hnc && ki.hnc;
        }
    } else if (n.is_disj()) {
        std::size_t non_negative = 0;
        bool non_negative_hnc = true;
        for (NodeId k : n.conn().kids) {
            HncInfo ki = hnc_rec(f, k, memo);
            if (!ki.negative) {
                ++non_negative;
                non_negative_hnc = ki.hnc;
            }
        }
        info.negative = non_negative == 0;
        info.hnc = non_negative == 0 || (non_negative == 1 && non_negative_hnc);
    }
    memo[id] = info;
    return info;
}

} // namespace

bool is_horn_nc_inductive(const Formula& f)
{
    std::map<NodeId, HncInfo> memo;
    return hnc_rec(f, f.root(), memo).hnc;
}

bool is_horn_clausal(const Formula& f)
{
    const Node& root = f.node(f.root());
    if (!root.is_conj())
        throw NotClausal("clausal formula must be a conjunction of clauses");
    for (NodeId c : root.conn().kids) {
        const Node& clause = f.node(c);
        if (!clause.is_disj())
            throw NotClausal("clause must be a disjunction of atoms");
        std::size_t positive = 0;
        for (NodeId a : clause.conn().kids) {
            const Node& atom = f.node(a);
            if (atom.is_conn())
                throw NotClausal("clause atoms must be literals or constants");
            if (atom.is_lit() && atom.lit().positive())
                ++positive;
        }
        if (positive > 1)
            return false;
    }
    return true;
}

} // namespace rnc
