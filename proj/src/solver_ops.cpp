#include "rnc/solver.hpp"

#include "rnc/parser.hpp"
#include "formula_edit.hpp"

#include <algorithm>
#include <functional>

namespace rnc {

const char* rule_name_str(RuleName r)
{
    switch (r) {
    case RuleName::Rur: return "RUR";
    case RuleName::Rgur: return "RGUR";
    case RuleName::Rhur: return "RHUR";
    case RuleName::OrBot: return "∨⊥";
    case RuleName::AndBot: return "∧⊥";
    case RuleName::Splice1: return "⊙k+1";
    case RuleName::SpliceN: return "⊙k+n";
    case RuleName::BotAB: return "⊥αβ";
    case RuleName::Max: return "max";
    case RuleName::Const: return "const";
    case RuleName::TautDisj: return "taut";
    case RuleName::LeqMerge: return "leq-merge";
    }
    return "?";
}

namespace edit {

namespace {

// fn maps the node at the target path to zero or more replacement nodes,
// spliced into the parent's child list in place.
using ExpandFn =
    std::function<std::vector<NodeId>(const Formula&, NodeId, FormulaBuilder&)>;

NodeId rebuild(const Formula& f, NodeId id, FormulaBuilder& b,
               const std::vector<std::uint32_t>& path, std::size_t depth,
               const ExpandFn& fn)
{
    const Node& n = f.node(id);
    if (!n.is_conn() || path[depth] >= n.conn().kids.size())
        throw InvalidOcc("occurrence path does not resolve");
    std::vector<NodeId> kids;
    kids.reserve(n.conn().kids.size());
    for (std::size_t i = 0; i < n.conn().kids.size(); ++i) {
        NodeId k = n.conn().kids[i];
        if (i != path[depth]) {
            kids.push_back(b.import(f, k));
        } else if (depth + 1 == path.size()) {
            for (NodeId r : fn(f, k, b))
                kids.push_back(r);
        } else {
            kids.push_back(rebuild(f, k, b, path, depth + 1, fn));
        }
    }
    return n.is_conj() ? b.conj(std::move(kids)) : b.disj(std::move(kids));
}

Formula apply_at(const Formula& f, const OccRef& occ, const ExpandFn& fn)
{
    FormulaBuilder b;
    if (occ.path.empty()) {
        std::vector<NodeId> ids = fn(f, f.root(), b);
        if (ids.size() != 1)
            throw InvalidOcc("cannot remove or inline the root");
        return b.finish(ids[0]);
    }
    return b.finish(rebuild(f, f.root(), b, occ.path, 0, fn));
}

} // namespace

Formula remove_at(const Formula& f, const OccRef& path)
{
    return apply_at(f, path,
                    [](const Formula&, NodeId, FormulaBuilder&) {
                        return std::vector<NodeId>{};
                    });
}

Formula replace_with_empty_disj(const Formula& f, const OccRef& path)
{
    return apply_at(f, path,
                    [](const Formula&, NodeId, FormulaBuilder& b) {
                        return std::vector<NodeId>{b.disj({})};
                    });
}

Formula replace_with_empty_conj(const Formula& f, const OccRef& path)
{
    return apply_at(f, path,
                    [](const Formula&, NodeId, FormulaBuilder& b) {
                        return std::vector<NodeId>{b.conj({})};
                    });
}

Formula splice_single(const Formula& f, const OccRef& path)
{
    return apply_at(f, path,
                    [](const Formula& src, NodeId id, FormulaBuilder& b) {
                        const Node& n = src.node(id);
                        if (!n.is_conn() || n.conn().kids.size() != 1)
                            throw InvalidOcc("node is not a single-child connective");
                        return std::vector<NodeId>{b.import(src, n.conn().kids[0])};
                    });
}

Formula splice_into_parent(const Formula& f, const OccRef& path)
{
    if (path.path.empty())
        throw InvalidOcc("the root has no parent to inline into");
    return apply_at(f, path,
                    [](const Formula& src, NodeId id, FormulaBuilder& b) {
                        const Node& n = src.node(id);
                        if (!n.is_conn())
                            throw InvalidOcc("node is not a connective");
                        std::vector<NodeId> out;
                        out.reserve(n.conn().kids.size());
                        for (NodeId k : n.conn().kids)
                            out.push_back(b.import(src, k));
                        return out;
                    });
}

Formula merge_literals(const Formula& f, const OccRef& conj_path,
                       const Literal& keep, const Literal& drop)
{
    return apply_at(
        f, conj_path,
        [&](const Formula& src, NodeId id, FormulaBuilder& b) {
            const Node& n = src.node(id);
            if (!n.is_conn())
                throw InvalidOcc("merge target is not a connective");
            TruthValue merged = TruthValue::max(keep.threshold, drop.threshold);
            const auto& src_kids = n.conn().kids;
            // locate the two literals; they need not be in order
            std::size_t keep_at = src_kids.size(), drop_at = src_kids.size();
            for (std::size_t i = 0; i < src_kids.size(); ++i) {
                const Node& kn = src.node(src_kids[i]);
                if (!kn.is_lit())
                    continue;
                if (keep_at == src_kids.size() && kn.lit() == keep) {
                    keep_at = i;
                    continue;
                }
                if (drop_at == src_kids.size() && kn.lit() == drop)
                    drop_at = i;
            }
            if (keep_at == src_kids.size() || drop_at == src_kids.size())
                throw Error("merge literals not found in the target connective");
            std::vector<NodeId> kids;
            for (std::size_t i = 0; i < src_kids.size(); ++i) {
                if (i == drop_at)
                    continue;
                if (i == keep_at)
                    kids.push_back(b.lit(keep.sign, keep.prop, merged));
                else
                    kids.push_back(b.import(src, src_kids[i]));
            }
            return std::vector<NodeId>{n.is_conj() ? b.conj(std::move(kids))
                                                   : b.disj(std::move(kids))};
        });
}

} // namespace edit

namespace {

enum class CRes { Top, Bot, Keep };

struct SimpOut {
    CRes res;
    NodeId id = 0; // meaningful when Keep
};

SimpOut simp_const(const Formula& f, NodeId id, FormulaBuilder& b)
{
    const Node& n = f.node(id);
    if (n.is_lit())
        return {CRes::Keep, b.lit(n.lit().sign, n.lit().prop, n.lit().threshold)};
    if (n.is_const())
        return {n.cst().is_top() ? CRes::Top : CRes::Bot, 0};
    const auto& kids = n.conn().kids;
    if (kids.empty()) // an empty connective is already constant-free
        return {CRes::Keep, n.is_conj() ? b.conj({}) : b.disj({})};
    std::vector<NodeId> out;
    for (NodeId k : kids) {
        SimpOut r = simp_const(f, k, b);
        if (r.res == CRes::Keep) {
            out.push_back(r.id);
            continue;
        }
        bool absorbs = n.is_conj() ? r.res == CRes::Bot : r.res == CRes::Top;
        if (absorbs)
            return {r.res, 0};
        // neutral element: drop it
    }
    if (out.empty())
        return {n.is_conj() ? CRes::Top : CRes::Bot, 0};
    if (out.size() == 1)
        return {CRes::Keep, out[0]};
    return {CRes::Keep, n.is_conj() ? b.conj(std::move(out)) : b.disj(std::move(out))};
}

} // namespace

Formula simplify_constants(const Formula& f)
{
    FormulaBuilder b;
    SimpOut r = simp_const(f, f.root(), b);
    if (r.res == CRes::Top)
        return b.finish(b.top());
    if (r.res == CRes::Bot)
        return b.finish(b.bot());
    return b.finish(r.id);
}

CdExtraction extract_cd(const Formula& f, const OccRef& occ)
{
    std::vector<NodeId> chain{f.root()};
    for (std::uint32_t ix : occ.path) {
        const Node& n = f.node(chain.back());
        if (!n.is_conn() || ix >= n.conn().kids.size())
            throw InvalidOcc("occurrence path does not resolve");
        chain.push_back(n.conn().kids[ix]);
    }
    const Node& leaf = f.node(chain.back());
    if (!leaf.is_lit() || leaf.lit().positive())
        throw InvalidOcc("occurrence must be a negative literal");

    std::size_t i = occ.path.size();
    while (i > 0 && f.node(chain[i - 1]).is_conj())
        --i;

    CdExtraction out;
    out.top_level = i == 0;
    out.c.path.assign(occ.path.begin(), occ.path.begin() + i);
    if (!out.top_level) {
        const Node& parent = f.node(chain[i - 1]);
        std::uint32_t cidx = occ.path[i - 1];
        for (std::size_t j = 0; j < parent.conn().kids.size(); ++j) {
            if (j == cidx)
                continue;
            OccRef d;
            d.path.assign(occ.path.begin(), occ.path.begin() + i - 1);
            d.path.push_back(static_cast<std::uint32_t>(j));
            out.d.push_back(std::move(d));
        }
    }
    return out;
}

namespace {

void check_rur_literal(const Formula& f, const Literal& unit, const OccRef& occ)
{
    if (!unit.positive())
        throw Error("unit must be a positive literal");
    NodeId t = resolve(f, occ);
    const Node& n = f.node(t);
    if (!n.is_lit() || n.lit().positive() || n.lit().prop != unit.prop)
        throw InvalidOcc("occurrence must be a negative literal on the unit's proposition");
    if (!(unit.threshold > n.lit().threshold))
        throw SideConditionViolated("unit threshold must strictly exceed the occurrence threshold");
}

bool has_direct_literal(const Formula& f, NodeId conn, const Literal& l)
{
    const Node& n = f.node(conn);
    if (!n.is_conn())
        return false;
    for (NodeId k : n.conn().kids) {
        const Node& kn = f.node(k);
        if (kn.is_lit() && kn.lit() == l)
            return true;
    }
    return false;
}

bool is_prefix(const std::vector<std::uint32_t>& p, const std::vector<std::uint32_t>& q)
{
    return p.size() <= q.size() && std::equal(p.begin(), p.end(), q.begin());
}

} // namespace

Formula rur_step(const Formula& f, const Literal& unit, const OccRef& occ)
{
    check_rur_literal(f, unit, occ);
    if (!f.node(f.root()).is_conj() || !has_direct_literal(f, f.root(), unit))
        throw Error("unit is not a top-level conjunct");
    CdExtraction cd = extract_cd(f, occ);
    if (cd.top_level)
        throw TopLevelOcc("occurrence is conjunctively exposed; not an RUR target");
    return edit::remove_at(f, cd.c);
}

Formula rgur_step(const Formula& f, const OccRef& conj_occ, const Literal& unit,
                  const OccRef& occ)
{
    check_rur_literal(f, unit, occ);
    NodeId scope = resolve(f, conj_occ);
    if (!f.node(scope).is_conj())
        throw InvalidOcc("scope must be a conjunction");
    if (!has_direct_literal(f, scope, unit))
        throw Error("unit is not a direct conjunct of the scope");
    if (!is_prefix(conj_occ.path, occ.path) || conj_occ.path.size() == occ.path.size())
        throw OccOutsideScope("occurrence is not inside the scope conjunction");
    CdExtraction cd = extract_cd(f, occ);
    if (cd.c.path.size() <= conj_occ.path.size())
        throw TopLevelOcc("occurrence is conjunctively exposed within the scope");
    return edit::remove_at(f, cd.c);
}

Formula rhur_step(const Formula& f, const Literal& unit,
                  const std::vector<OccRef>& occs)
{
    if (!f.node(f.root()).is_conj() || !has_direct_literal(f, f.root(), unit))
        throw Error("unit is not a top-level conjunct");
    std::vector<OccRef> regions;
    for (const OccRef& occ : occs) {
        check_rur_literal(f, unit, occ);
        CdExtraction cd = extract_cd(f, occ);
        if (cd.top_level)
            throw TopLevelOcc("occurrence is conjunctively exposed; not an RUR target");
        regions.push_back(std::move(cd.c));
    }
    for (std::size_t i = 0; i < regions.size(); ++i)
        for (std::size_t j = 0; j < regions.size(); ++j)
            if (i != j && is_prefix(regions[i].path, regions[j].path))
                throw OverlappingOccurrences("the removed regions overlap");
    // Remove right-to-left so earlier removals keep later paths valid.
    std::sort(regions.begin(), regions.end(),
              [](const OccRef& a, const OccRef& b) { return b < a; });
    Formula out = f;
    for (const OccRef& r : regions)
        out = edit::remove_at(out, r);
    return out;
}

namespace {

void postorder_rec(const Formula& f, NodeId id, OccRef& cur,
                   const std::function<void(const OccRef&, NodeId)>& fn)
{
    const Node& n = f.node(id);
    if (n.is_conn())
        for (std::size_t i = 0; i < n.conn().kids.size(); ++i) {
            cur.path.push_back(static_cast<std::uint32_t>(i));
            postorder_rec(f, n.conn().kids[i], cur, fn);
            cur.path.pop_back();
        }
    fn(cur, id);
}

std::vector<std::pair<OccRef, NodeId>> postorder(const Formula& f)
{
    std::vector<std::pair<OccRef, NodeId>> out;
    OccRef cur;
    postorder_rec(f, f.root(), cur,
                  [&](const OccRef& o, NodeId id) { out.emplace_back(o, id); });
    return out;
}

bool is_empty_disj(const Formula& f, NodeId id)
{
    const Node& n = f.node(id);
    return n.is_disj() && n.conn().kids.empty();
}

} // namespace

std::optional<Formula> simplify_step(const Formula& f)
{
    auto order = postorder(f);

    // ∧⊥: a conjunction with an empty-disjunction child collapses to (|).
    for (const auto& [occ, id] : order) {
        const Node& n = f.node(id);
        if (!n.is_conj())
            continue;
        for (NodeId k : n.conn().kids)
            if (is_empty_disj(f, k))
                return edit::replace_with_empty_disj(f, occ);
    }

    // ∨⊥: a disjunction drops an empty-disjunction child.
    for (const auto& [occ, id] : order) {
        const Node& n = f.node(id);
        if (!n.is_disj())
            continue;
        for (std::size_t i = 0; i < n.conn().kids.size(); ++i)
            if (is_empty_disj(f, n.conn().kids[i])) {
                OccRef kid = occ;
                kid.path.push_back(static_cast<std::uint32_t>(i));
                return edit::remove_at(f, kid);
            }
    }

    // ⊥αβ: a conjunction with direct X>=a, X<=b, a > b collapses to (|).
    for (const auto& [occ, id] : order) {
        const Node& n = f.node(id);
        if (!n.is_conj())
            continue;
        std::map<std::string, TruthValue> best_geq; // greatest threshold seen
        std::map<std::string, TruthValue> least_leq;
        for (NodeId k : n.conn().kids) {
            const Node& kn = f.node(k);
            if (!kn.is_lit())
                continue;
            const Literal& l = kn.lit();
            if (l.positive()) {
                auto it = least_leq.find(l.prop);
                if (it != least_leq.end() && l.threshold > it->second)
                    return edit::replace_with_empty_disj(f, occ);
                auto [g, ins] = best_geq.emplace(l.prop, l.threshold);
                if (!ins)
                    g->second = TruthValue::max(g->second, l.threshold);
            } else {
                auto it = best_geq.find(l.prop);
                if (it != best_geq.end() && it->second > l.threshold)
                    return edit::replace_with_empty_disj(f, occ);
                auto [g, ins] = least_leq.emplace(l.prop, l.threshold);
                if (!ins)
                    g->second = TruthValue::min(g->second, l.threshold);
            }
        }
    }

    // max: two positive literals on one proposition in a conjunction merge.
    for (const auto& [occ, id] : order) {
        const Node& n = f.node(id);
        if (!n.is_conj())
            continue;
        std::map<std::string, Literal> first;
        for (NodeId k : n.conn().kids) {
            const Node& kn = f.node(k);
            if (!kn.is_lit() || !kn.lit().positive())
                continue;
            auto [it, ins] = first.emplace(kn.lit().prop, kn.lit());
            if (!ins)
                return edit::merge_literals(f, occ, it->second, kn.lit());
        }
    }

    // ⊙k+1: a single-child connective is its child.
    for (const auto& [occ, id] : order) {
        const Node& n = f.node(id);
        if (n.is_conn() && n.conn().kids.size() == 1)
            return edit::splice_single(f, occ);
    }

    // ⊙k+n: a connective inlines a same-kind child.
    for (const auto& [occ, id] : order) {
        const Node& n = f.node(id);
        if (!n.is_conn())
            continue;
        for (std::size_t i = 0; i < n.conn().kids.size(); ++i) {
            const Node& kn = f.node(n.conn().kids[i]);
            if (kn.is_conn() && kn.conn().is_conj == n.conn().is_conj) {
                OccRef kid = occ;
                kid.path.push_back(static_cast<std::uint32_t>(i));
                return edit::splice_into_parent(f, kid);
            }
        }
    }

    return std::nullopt;
}

Formula replay_trace(const Formula& input, const SolveTrace& trace)
{
    Formula f = expand_to_tree(input);
    for (const TraceStep& s : trace.steps) {
        switch (s.rule) {
        case RuleName::Rur:
        case RuleName::Rgur:
        case RuleName::Rhur:
        case RuleName::OrBot:
            f = edit::remove_at(f, s.occ);
            break;
        case RuleName::AndBot:
        case RuleName::BotAB:
            f = edit::replace_with_empty_disj(f, s.occ);
            break;
        case RuleName::Splice1:
            f = edit::splice_single(f, s.occ);
            break;
        case RuleName::SpliceN:
            f = edit::splice_into_parent(f, s.occ);
            break;
        case RuleName::Max:
        case RuleName::LeqMerge:
            if (s.lits.size() != 2)
                throw Error("malformed merge step in trace");
            f = edit::merge_literals(f, s.occ, s.lits[0], s.lits[1]);
            break;
        case RuleName::TautDisj:
            f = edit::replace_with_empty_conj(f, s.occ);
            break;
        case RuleName::Const: {
            // Either a satisfied child removed from its conjunction, or a
            // disjunction absorbed by a satisfied child.
            NodeId id = resolve(f, s.occ);
            const Node& n = f.node(id);
            if (n.is_conj() && n.conn().kids.empty())
                f = edit::remove_at(f, s.occ);
            else
                f = edit::replace_with_empty_conj(f, s.occ);
            break;
        }
        }
    }
    return f;
}

} // namespace rnc
