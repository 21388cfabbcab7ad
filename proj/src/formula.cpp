#include "rnc/formula.hpp"

#include <cstdlib>
#include <set>
#include <utility>

namespace rnc {

std::string OccRef::str() const
{
    std::string s = "/";
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (i)
            s += "/";
        s += std::to_string(path[i]);
    }
    return path.empty() ? "/" : s;
}

NodeId FormulaBuilder::add(Node n)
{
    arena_->nodes.push_back(std::move(n));
    return static_cast<NodeId>(arena_->nodes.size() - 1);
}

NodeId FormulaBuilder::lit(Sign sign, std::string prop, TruthValue threshold)
{
    if (prop.empty())
        throw Error("proposition name must be non-empty");
    return add(Node{Literal{sign, std::move(prop), threshold}});
}

NodeId FormulaBuilder::constant(TruthValue lhs, TruthValue rhs)
{
    return add(Node{RegConstant{lhs, rhs}});
}

NodeId FormulaBuilder::conj(std::vector<NodeId> kids)
{
    return add(Node{Connective{true, std::move(kids)}});
}

NodeId FormulaBuilder::disj(std::vector<NodeId> kids)
{
    return add(Node{Connective{false, std::move(kids)}});
}

NodeId FormulaBuilder::import(const Formula& f, NodeId id)
{
    const Node& n = f.node(id);
    if (n.is_conn()) {
        std::vector<NodeId> kids;
        kids.reserve(n.conn().kids.size());
        for (NodeId k : n.conn().kids)
            kids.push_back(import(f, k));
        return add(Node{Connective{n.conn().is_conj, std::move(kids)}});
    }
    return add(Node{n.v});
}

Formula FormulaBuilder::finish(NodeId root)
{
    return Formula(arena_, root);
}

std::size_t default_node_budget()
{
    static std::size_t budget = [] {
        if (const char* env = std::getenv("RNC_NODE_BUDGET")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end && *end == '\0' && v > 0)
                return static_cast<std::size_t>(v);
        }
        return static_cast<std::size_t>(1000000);
    }();
    return budget;
}

void for_each_subformula(const Formula& f,
                         const std::function<void(const OccRef&, NodeId)>& fn)
{
    struct Frame {
        NodeId id;
        std::size_t next_kid;
    };
    OccRef occ;
    std::vector<Frame> stack;
    stack.push_back({f.root(), 0});
    fn(occ, f.root());
    while (!stack.empty()) {
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
        fn(occ, kid);
        stack.push_back({kid, 0});
    }
}

std::vector<std::pair<OccRef, NodeId>> subformulas(const Formula& f)
{
    std::vector<std::pair<OccRef, NodeId>> out;
    for_each_subformula(f, [&](const OccRef& occ, NodeId id) { out.emplace_back(occ, id); });
    return out;
}

NodeId resolve(const Formula& f, const OccRef& occ)
{
    NodeId id = f.root();
    for (std::uint32_t step : occ.path) {
        const Node& n = f.node(id);
        if (!n.is_conn() || step >= n.conn().kids.size())
            throw InvalidOcc("occurrence path does not resolve: " + occ.str());
        id = n.conn().kids[step];
    }
    return id;
}

namespace {

NodeId copy_tree(const Formula& f, NodeId id, FormulaBuilder& b, std::size_t& count,
                 std::size_t budget)
{
    if (++count > budget)
        throw BudgetExceeded("tree expansion exceeds node budget");
    const Node& n = f.node(id);
    if (!n.is_conn())
        return n.is_lit() ? b.lit(n.lit().sign, n.lit().prop, n.lit().threshold)
                          : b.constant(n.cst().lhs, n.cst().rhs);
    std::vector<NodeId> kids;
    kids.reserve(n.conn().kids.size());
    for (NodeId k : n.conn().kids)
        kids.push_back(copy_tree(f, k, b, count, budget));
    return n.conn().is_conj ? b.conj(std::move(kids)) : b.disj(std::move(kids));
}

} // namespace

Formula expand_to_tree(const Formula& f, std::size_t budget)
{
    FormulaBuilder b;
    std::size_t count = 0;
    NodeId root = copy_tree(f, f.root(), b, count, budget);
    return b.finish(root);
}

namespace {

bool equal_rec(const Formula& a, NodeId ia, const Formula& b, NodeId ib,
               std::set<std::pair<NodeId, NodeId>>& memo)
{
    if (a.arena() == b.arena() && ia == ib)
        return true;
    // Any false result aborts the whole comparison, so a revisited pair must
    // have compared equal before; this keeps DAG x DAG compares polynomial.
    if (!memo.insert({ia, ib}).second)
        return true;
    const Node& na = a.node(ia);
    const Node& nb = b.node(ib);
    if (na.is_lit())
        return nb.is_lit() && na.lit() == nb.lit();
    if (na.is_const())
        return nb.is_const() && na.cst() == nb.cst();
    if (!nb.is_conn() || na.conn().is_conj != nb.conn().is_conj)
        return false;
    const auto& ka = na.conn().kids;
    const auto& kb = nb.conn().kids;
    if (ka.size() != kb.size())
        return false;
    for (std::size_t i = 0; i < ka.size(); ++i)
        if (!equal_rec(a, ka[i], b, kb[i], memo))
            return false;
    return true;
}

} // namespace

bool structurally_equal(const Formula& a, const Formula& b)
{
    std::set<std::pair<NodeId, NodeId>> memo;
    return equal_rec(a, a.root(), b, b.root(), memo);
}

bool contains_constant(const Formula& f)
{
    bool found = false;
    for_each_subformula(f, [&](const OccRef&, NodeId id) {
        if (f.node(id).is_const())
            found = true;
    });
    return found;
}

std::size_t literal_count(const Formula& f)
{
    std::size_t n = 0;
    for_each_subformula(f, [&](const OccRef&, NodeId id) {
        if (f.node(id).is_lit())
            ++n;
    });
    return n;
}

std::size_t tree_node_count(const Formula& f, std::size_t budget)
{
    std::size_t n = 0;
    for_each_subformula(f, [&](const OccRef&, NodeId) {
        if (++n > budget)
            throw BudgetExceeded("tree node count exceeds budget");
    });
    return n;
}

} // namespace rnc
