#include "rnc/solver.hpp"

#include "rnc/hornnc.hpp"
#include "rnc/parser.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace rnc {

namespace {

// Mutable working tree. Nodes are never allocated after the initial build;
// rewriting only rewires child lists, so indices stay stable and removal is
// O(arity) per step.
struct WNode {
    enum Kind { Lit, Conj, Disj } kind = Lit;
    Literal lit;
    int parent = -1;
    std::vector<int> kids;
};

class Engine {
public:
    Engine(const Formula& input, const SolveOptions& opts)
        : input_(input), opts_(opts)
    {
    }

    SolveResult run()
    {
        if (contains_constant(input_))
            throw NotConstantFree("solve requires a constant-free formula");
        if (!is_horn_nc_pattern(input_).is_hnc)
            throw NotHnc("solve requires a Horn-NC formula");

        // A disjunctive input with two or more disjuncts is satisfied by the
        // all-zero interpretation (at least one disjunct is negative).
        const Node& rn = input_.node(input_.root());
        if (rn.is_disj() && rn.conn().kids.size() >= 2) {
            Interpretation zero;
            if (evaluate(input_, zero))
                return {SolveResult::Status::Sat, std::move(zero), {},
                        expand_to_tree(input_, opts_.node_budget)};
            // degenerate disjuncts (empty disjunctions); fall through
        }

        std::size_t budget = opts_.node_budget;
        root_ = build(input_.root(), budget);
        dead_.assign(nodes_.size(), 0);
        normalize(root_);
        normalize_root();
        if (!done())
            initial_scan();
        if (!done())
            process_units();
        return finish_result();
    }

private:
    const Formula& input_;
    SolveOptions opts_;

    std::vector<WNode> nodes_;
    std::vector<char> dead_;
    int root_ = -1;

    SolveTrace trace_;
    std::size_t step_count_ = 0;
    bool unsat_ = false;
    bool taut_ = false;

    std::map<std::string, TruthValue> units_;
    std::map<std::string, int> unit_nodes_;           // top-level positive kid per prop
    std::map<std::string, std::vector<int>> leq_occs_; // preorder, all depths
    std::map<std::string, std::vector<int>> root_leq_; // direct negative root kids
    std::deque<std::string> queue_;
    std::set<std::string> queued_;

    bool done() const { return unsat_ || taut_; }

    int build(NodeId id, std::size_t& budget)
    {
        if (budget == 0)
            throw BudgetExceeded("node budget exceeded while building the working tree");
        --budget;
        const Node& n = input_.node(id);
        int me = static_cast<int>(nodes_.size());
        nodes_.emplace_back();
        if (n.is_lit()) {
            nodes_[me].lit = n.lit();
        } else {
            nodes_[me].kind = n.is_conj() ? WNode::Conj : WNode::Disj;
            for (NodeId k : n.conn().kids) {
                int c = build(k, budget);
                nodes_[me].kids.push_back(c);
                nodes_[c].parent = me;
            }
        }
        return me;
    }

    NodeId export_node(int id, FormulaBuilder& b) const
    {
        const WNode& n = nodes_[id];
        if (n.kind == WNode::Lit)
            return b.lit(n.lit.sign, n.lit.prop, n.lit.threshold);
        std::vector<NodeId> kids;
        kids.reserve(n.kids.size());
        for (int k : n.kids)
            kids.push_back(export_node(k, b));
        return n.kind == WNode::Conj ? b.conj(std::move(kids)) : b.disj(std::move(kids));
    }

    Formula to_formula() const
    {
        FormulaBuilder b;
        return b.finish(export_node(root_, b));
    }

    OccRef path_of(int id) const
    {
        std::vector<std::uint32_t> rev;
        int cur = id;
        while (nodes_[cur].parent != -1) {
            int p = nodes_[cur].parent;
            const auto& ks = nodes_[p].kids;
            rev.push_back(static_cast<std::uint32_t>(
                std::find(ks.begin(), ks.end(), cur) - ks.begin()));
            cur = p;
        }
        OccRef o;
        o.path.assign(rev.rbegin(), rev.rend());
        return o;
    }

    void record(RuleName r, std::vector<Literal> lits, int node)
    {
        ++step_count_;
        if (!opts_.record_trace)
            return;
        trace_.steps.push_back({r, std::move(lits), path_of(node), {}});
    }

    void snap()
    {
        if (opts_.record_trace && opts_.record_snapshots && !trace_.steps.empty())
            trace_.steps.back().snapshot = print(to_formula());
    }

    void mark_dead(int id)
    {
        std::vector<int> stack{id};
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            if (dead_[x])
                continue;
            dead_[x] = 1;
            for (int k : nodes_[x].kids)
                stack.push_back(k);
        }
    }

    void remove_kid(int p, int c)
    {
        auto& ks = nodes_[p].kids;
        ks.erase(std::find(ks.begin(), ks.end(), c));
        mark_dead(c);
    }

    void collapse_to(int p, WNode::Kind kind)
    {
        for (int k : nodes_[p].kids)
            mark_dead(k);
        nodes_[p].kids.clear();
        nodes_[p].kind = kind;
    }

    void merge_unit(const std::string& prop, const TruthValue& t)
    {
        auto [it, ins] = units_.emplace(prop, t);
        bool bumped = ins;
        if (!ins && t > it->second) {
            it->second = t;
            bumped = true;
        }
        if (bumped && queued_.insert(prop).second)
            queue_.push_back(prop);
    }

    // --- ⊙-normalization: no single-child connectives, no same-kind nesting ---

    void normalize(int id)
    {
        WNode& n = nodes_[id];
        if (n.kind == WNode::Lit)
            return;
        for (std::size_t i = 0; i < n.kids.size(); ++i)
            normalize(n.kids[i]);
        for (std::size_t i = 0; i < n.kids.size();) {
            int k = n.kids[i];
            WNode& kn = nodes_[k];
            if (kn.kind != WNode::Lit && kn.kids.size() == 1) {
                record(RuleName::Splice1, {}, k);
                int g = kn.kids[0];
                n.kids[i] = g;
                nodes_[g].parent = id;
                kn.kids.clear();
                dead_[k] = 1;
                snap();
                continue; // the child may now be a same-kind connective
            }
            if (kn.kind == n.kind) {
                record(RuleName::SpliceN, {}, k);
                std::vector<int> moved = std::move(kn.kids);
                kn.kids.clear();
                n.kids.erase(n.kids.begin() + i);
                n.kids.insert(n.kids.begin() + i, moved.begin(), moved.end());
                for (int m : moved)
                    nodes_[m].parent = id;
                dead_[k] = 1;
                snap();
                continue; // re-examine from the first inlined child
            }
            ++i;
        }
    }

    void normalize_root()
    {
        while (nodes_[root_].kind != WNode::Lit && nodes_[root_].kids.size() == 1) {
            record(RuleName::Splice1, {}, root_);
            int c = nodes_[root_].kids[0];
            nodes_[root_].kids.clear();
            dead_[root_] = 1;
            nodes_[c].parent = -1;
            root_ = c;
            snap();
        }
    }

    // --- cascading simplification ---

    // `id` is an empty disjunction; push ⊥ upward.
    void propagate_bot(int id)
    {
        for (;;) {
            if (done())
                return;
            int p = nodes_[id].parent;
            if (p == -1) {
                unsat_ = true;
                return;
            }
            if (nodes_[p].kind == WNode::Conj) {
                record(RuleName::AndBot, {}, p);
                collapse_to(p, WNode::Disj);
                snap();
                id = p;
            } else {
                record(RuleName::OrBot, {}, id);
                remove_kid(p, id);
                snap();
                after_disj_shrunk(p);
                return;
            }
        }
    }

    // `id` is an empty conjunction (⊤); absorb it upward.
    void handle_true(int id)
    {
        for (;;) {
            if (done())
                return;
            int p = nodes_[id].parent;
            if (p == -1) {
                taut_ = true;
                return;
            }
            if (nodes_[p].kind == WNode::Conj) {
                record(RuleName::Const, {}, id);
                remove_kid(p, id);
                snap();
                after_conj_shrunk(p);
                return;
            }
            // a disjunction containing ⊤ is ⊤
            record(RuleName::Const, {}, p);
            collapse_to(p, WNode::Conj);
            snap();
            id = p;
        }
    }

    void after_disj_shrunk(int p)
    {
        if (done())
            return;
        auto& ks = nodes_[p].kids;
        if (ks.empty())
            propagate_bot(p);
        else if (ks.size() == 1)
            splice_single_node(p);
    }

    void after_conj_shrunk(int p)
    {
        if (done())
            return;
        auto& ks = nodes_[p].kids;
        if (ks.empty())
            handle_true(p);
        else if (ks.size() == 1)
            splice_single_node(p);
    }

    void splice_single_node(int p)
    {
        record(RuleName::Splice1, {}, p);
        int c = nodes_[p].kids[0];
        int q = nodes_[p].parent;
        nodes_[p].kids.clear();
        dead_[p] = 1;
        if (q == -1) {
            nodes_[c].parent = -1;
            root_ = c;
            snap();
            on_new_root();
            return;
        }
        auto& ks = nodes_[q].kids;
        *std::find(ks.begin(), ks.end(), p) = c;
        nodes_[c].parent = q;
        snap();
        after_kid_arrived(q, c);
    }

    void splice_n(int c, int q)
    {
        record(RuleName::SpliceN, {}, c);
        auto& qk = nodes_[q].kids;
        std::size_t pos = std::find(qk.begin(), qk.end(), c) - qk.begin();
        std::vector<int> moved = std::move(nodes_[c].kids);
        nodes_[c].kids.clear();
        qk.erase(qk.begin() + pos);
        qk.insert(qk.begin() + pos, moved.begin(), moved.end());
        for (int m : moved)
            nodes_[m].parent = q;
        dead_[c] = 1;
        snap();
        if (nodes_[q].kind == WNode::Conj) {
            if (q == root_) {
                for (int m : moved) {
                    if (done())
                        return;
                    root_kid_added(m);
                }
                maybe_collapse_root();
            } else {
                check_conj_full(q);
            }
        } else {
            check_disj(q);
        }
    }

    void after_kid_arrived(int q, int c)
    {
        if (done())
            return;
        WNode& cn = nodes_[c];
        WNode& qn = nodes_[q];
        if (cn.kind != WNode::Lit && cn.kind == qn.kind) {
            splice_n(c, q);
            return;
        }
        if (cn.kind == WNode::Disj && cn.kids.empty()) {
            propagate_bot(c);
            return;
        }
        if (cn.kind == WNode::Conj && cn.kids.empty()) {
            handle_true(c);
            return;
        }
        if (qn.kind == WNode::Conj) {
            if (q == root_) {
                root_kid_added(c);
                maybe_collapse_root();
            } else {
                check_conj_full(q);
            }
        } else {
            check_disj(q);
        }
    }

    void maybe_collapse_root()
    {
        if (done())
            return;
        WNode& r = nodes_[root_];
        if (r.kind == WNode::Lit)
            return;
        if (r.kids.size() == 1)
            splice_single_node(root_);
        else if (r.kids.empty() && r.kind == WNode::Conj)
            taut_ = true;
        else if (r.kids.empty() && r.kind == WNode::Disj)
            unsat_ = true;
    }

    void on_new_root()
    {
        if (done())
            return;
        WNode& r = nodes_[root_];
        if (r.kind == WNode::Lit) {
            if (r.lit.positive())
                merge_unit(r.lit.prop, r.lit.threshold);
            return;
        }
        if (r.kind == WNode::Conj)
            check_conj_full(root_);
        else
            check_disj(root_);
        maybe_collapse_root();
    }

    // Incremental bookkeeping for a literal that became a direct root kid.
    void root_kid_added(int k)
    {
        if (done() || dead_[k])
            return;
        WNode& n = nodes_[k];
        if (n.kind != WNode::Lit)
            return;
        const std::string prop = n.lit.prop;
        if (n.lit.positive()) {
            auto it = unit_nodes_.find(prop);
            if (it != unit_nodes_.end() && !dead_[it->second]) {
                int keep = it->second;
                record(RuleName::Max, {nodes_[keep].lit, n.lit}, root_);
                nodes_[keep].lit.threshold =
                    TruthValue::max(nodes_[keep].lit.threshold, n.lit.threshold);
                remove_kid(root_, k);
                snap();
                merge_unit(prop, nodes_[keep].lit.threshold);
            } else {
                unit_nodes_[prop] = k;
                merge_unit(prop, n.lit.threshold);
            }
        } else {
            root_leq_[prop].push_back(k);
        }
        check_root_bot(prop);
    }

    void check_root_bot(const std::string& prop)
    {
        if (done())
            return;
        auto u = unit_nodes_.find(prop);
        if (u == unit_nodes_.end() || dead_[u->second])
            return;
        auto it = root_leq_.find(prop);
        if (it == root_leq_.end())
            return;
        const Literal& pos = nodes_[u->second].lit;
        for (int id : it->second) {
            if (dead_[id])
                continue;
            if (pos.threshold > nodes_[id].lit.threshold) {
                record(RuleName::BotAB, {pos, nodes_[id].lit}, root_);
                collapse_to(root_, WNode::Disj);
                snap();
                unsat_ = true;
                return;
            }
        }
    }

    void check_conj_full(int q)
    {
        if (done() || dead_[q] || nodes_[q].kind != WNode::Conj)
            return;
        bool at_root = q == root_;
        if (at_root) {
            unit_nodes_.clear();
            root_leq_.clear();
        }
        auto& ks = nodes_[q].kids;
        std::map<std::string, int> first_geq;
        for (std::size_t i = 0; i < ks.size();) {
            int k = ks[i];
            WNode& kn = nodes_[k];
            if (kn.kind == WNode::Lit && kn.lit.positive()) {
                auto [it, ins] = first_geq.emplace(kn.lit.prop, k);
                if (!ins) {
                    int keep = it->second;
                    record(RuleName::Max, {nodes_[keep].lit, kn.lit}, q);
                    nodes_[keep].lit.threshold =
                        TruthValue::max(nodes_[keep].lit.threshold, kn.lit.threshold);
                    ks.erase(ks.begin() + i);
                    dead_[k] = 1;
                    snap();
                    continue;
                }
            }
            ++i;
        }
        for (std::size_t i = 0; i < ks.size(); ++i) {
            int k = ks[i];
            WNode& kn = nodes_[k];
            if (kn.kind != WNode::Lit)
                continue;
            if (!kn.lit.positive()) {
                auto it = first_geq.find(kn.lit.prop);
                if (it != first_geq.end() &&
                    nodes_[it->second].lit.threshold > kn.lit.threshold) {
                    record(RuleName::BotAB, {nodes_[it->second].lit, kn.lit}, q);
                    collapse_to(q, WNode::Disj);
                    snap();
                    if (at_root)
                        unsat_ = true;
                    else
                        propagate_bot(q);
                    return;
                }
                if (at_root)
                    root_leq_[kn.lit.prop].push_back(k);
            } else if (at_root) {
                unit_nodes_[kn.lit.prop] = k;
                merge_unit(kn.lit.prop, kn.lit.threshold);
            }
        }
        if (ks.size() == 1)
            splice_single_node(q);
        else if (ks.empty())
            handle_true(q);
    }

    // Extra rules on a disjunction: merge negative duplicates, detect
    // tautologous complementary pairs.
    void check_disj(int q)
    {
        if (!opts_.extra_rules || done() || dead_[q] || nodes_[q].kind != WNode::Disj)
            return;
        auto& ks = nodes_[q].kids;
        std::map<std::string, int> first_leq;
        for (std::size_t i = 0; i < ks.size();) {
            int k = ks[i];
            WNode& kn = nodes_[k];
            if (kn.kind == WNode::Lit && !kn.lit.positive()) {
                auto [it, ins] = first_leq.emplace(kn.lit.prop, k);
                if (!ins) {
                    int keep = it->second;
                    record(RuleName::LeqMerge, {nodes_[keep].lit, kn.lit}, q);
                    nodes_[keep].lit.threshold =
                        TruthValue::max(nodes_[keep].lit.threshold, kn.lit.threshold);
                    ks.erase(ks.begin() + i);
                    dead_[k] = 1;
                    snap();
                    continue;
                }
            }
            ++i;
        }
        for (int k : ks) {
            WNode& kn = nodes_[k];
            if (kn.kind != WNode::Lit || !kn.lit.positive())
                continue;
            auto it = first_leq.find(kn.lit.prop);
            if (it != first_leq.end() &&
                kn.lit.threshold <= nodes_[it->second].lit.threshold) {
                record(RuleName::TautDisj, {kn.lit, nodes_[it->second].lit}, q);
                collapse_to(q, WNode::Conj);
                snap();
                handle_true(q);
                return;
            }
        }
        if (ks.size() == 1)
            splice_single_node(q);
    }

    void initial_scan()
    {
        std::vector<int> empty_disjs, empty_conjs, conjs_post, disjs_post;
        std::map<std::string, std::vector<int>> occs;
        // iterative preorder for occurrence order, explicit postorder lists
        std::vector<std::pair<int, bool>> stack{{root_, false}};
        while (!stack.empty()) {
            auto [id, visited] = stack.back();
            stack.pop_back();
            WNode& n = nodes_[id];
            if (visited) {
                if (n.kind == WNode::Conj)
                    conjs_post.push_back(id);
                else
                    disjs_post.push_back(id);
                continue;
            }
            if (n.kind == WNode::Lit) {
                if (!n.lit.positive())
                    occs[n.lit.prop].push_back(id);
                continue;
            }
            if (n.kids.empty()) {
                (n.kind == WNode::Disj ? empty_disjs : empty_conjs).push_back(id);
                continue;
            }
            stack.emplace_back(id, true);
            for (auto it = n.kids.rbegin(); it != n.kids.rend(); ++it)
                stack.emplace_back(*it, false);
        }
        leq_occs_ = std::move(occs);

        for (int e : empty_disjs) {
            if (done())
                return;
            if (!dead_[e])
                propagate_bot(e);
        }
        for (int e : empty_conjs) {
            if (done())
                return;
            if (!dead_[e])
                handle_true(e);
        }
        for (int q : conjs_post) {
            if (done())
                return;
            check_conj_full(q);
        }
        if (opts_.extra_rules)
            for (int q : disjs_post) {
                if (done())
                    return;
                check_disj(q);
            }
        if (!done() && nodes_[root_].kind == WNode::Lit && nodes_[root_].lit.positive())
            merge_unit(nodes_[root_].lit.prop, nodes_[root_].lit.threshold);
    }

    // One RUR application (or the top-level complementary-pair collapse).
    void apply_rur(int id, const Literal& unit)
    {
        int c = id;
        while (nodes_[c].parent != -1 && nodes_[nodes_[c].parent].kind == WNode::Conj)
            c = nodes_[c].parent;
        int p = nodes_[c].parent;
        if (p == -1) {
            record(RuleName::BotAB, {unit, nodes_[id].lit}, root_);
            collapse_to(root_, WNode::Disj);
            snap();
            unsat_ = true;
            return;
        }
        record(RuleName::Rur, {unit, nodes_[id].lit}, c);
        remove_kid(p, c);
        snap();
        after_disj_shrunk(p);
    }

    void process_units()
    {
        while (!done() && !queue_.empty()) {
            std::string prop = queue_.front();
            queue_.pop_front();
            queued_.erase(prop);
            auto u = units_.find(prop);
            auto oit = leq_occs_.find(prop);
            if (u == units_.end() || oit == leq_occs_.end())
                continue;
            for (int id : oit->second) {
                if (done())
                    return;
                if (dead_[id])
                    continue;
                if (u->second > nodes_[id].lit.threshold)
                    apply_rur(id, Literal{Sign::Geq, prop, u->second});
            }
        }
    }

    SolveResult finish_result()
    {
        if (unsat_)
            return {SolveResult::Status::Unsat, std::nullopt, std::move(trace_),
                    to_formula(), step_count_};
        Interpretation m;
        m.values = units_;
        if (!evaluate(input_, m))
            throw Error("internal error: derived model fails verification");
        return {SolveResult::Status::Sat, std::move(m), std::move(trace_),
                to_formula(), step_count_};
    }
};

} // namespace

SolveResult solve(const Formula& f, const SolveOptions& opts)
{
    Engine e(f, opts);
    return e.run();
}

} // namespace rnc
