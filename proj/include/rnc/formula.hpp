#pragma once

#include "rnc/errors.hpp"
#include "rnc/truth_value.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace rnc {

enum class Sign { Geq, Leq };

struct Literal {
    Sign sign;
    std::string prop;
    TruthValue threshold;

    bool positive() const { return sign == Sign::Geq; }
    bool operator==(const Literal& o) const
    {
        return sign == o.sign && prop == o.prop && threshold == o.threshold;
    }
};

struct RegConstant {
    TruthValue lhs;
    TruthValue rhs;

    // TOP iff lhs >= rhs (satisfiable), BOT otherwise.
    bool is_top() const { return lhs >= rhs; }
    bool operator==(const RegConstant& o) const { return lhs == o.lhs && rhs == o.rhs; }
};

enum class ConstKind { Top, Bot };

inline ConstKind classify_constant(const RegConstant& c)
{
    return c.is_top() ? ConstKind::Top : ConstKind::Bot;
}

using NodeId = std::uint32_t;

// N-ary connective; an empty Conj reads as TOP, an empty Disj as BOT.
struct Connective {
    bool is_conj;
    std::vector<NodeId> kids;
};

struct Node {
    std::variant<Literal, RegConstant, Connective> v;

    bool is_lit() const { return std::holds_alternative<Literal>(v); }
    bool is_const() const { return std::holds_alternative<RegConstant>(v); }
    bool is_conn() const { return std::holds_alternative<Connective>(v); }
    bool is_conj() const { return is_conn() && std::get<Connective>(v).is_conj; }
    bool is_disj() const { return is_conn() && !std::get<Connective>(v).is_conj; }
    const Literal& lit() const { return std::get<Literal>(v); }
    const RegConstant& cst() const { return std::get<RegConstant>(v); }
    const Connective& conn() const { return std::get<Connective>(v); }
};

struct Arena {
    std::vector<Node> nodes;
};

/// Identifies one occurrence of a subformula by the child-index path from
/// the root. Two occurrences of a shared DAG node have distinct paths.
struct OccRef {
    std::vector<std::uint32_t> path;

    bool operator==(const OccRef& o) const { return path == o.path; }
    bool operator<(const OccRef& o) const { return path < o.path; }
    std::string str() const;
};

/// An immutable NC formula: an append-frozen node arena plus a root.
/// Children may share nodes (DAG); all accessors treat the structure as
/// the tree obtained by expanding the sharing.
class Formula {
public:
    Formula() = default;
    Formula(std::shared_ptr<const Arena> arena, NodeId root)
        : arena_(std::move(arena)), root_(root)
    {
    }

    NodeId root() const { return root_; }
    const Node& node(NodeId id) const { return arena_->nodes[id]; }
    const std::shared_ptr<const Arena>& arena() const { return arena_; }
    bool valid() const { return arena_ != nullptr; }

    // Re-rooted view sharing this formula's arena.
    Formula at(NodeId id) const { return Formula(arena_, id); }

private:
    std::shared_ptr<const Arena> arena_;
    NodeId root_ = 0;
};

class FormulaBuilder {
public:
    FormulaBuilder() : arena_(std::make_shared<Arena>()) {}

    NodeId lit(Sign sign, std::string prop, TruthValue threshold);
    NodeId geq(std::string prop, TruthValue t) { return lit(Sign::Geq, std::move(prop), t); }
    NodeId leq(std::string prop, TruthValue t) { return lit(Sign::Leq, std::move(prop), t); }
    NodeId constant(TruthValue lhs, TruthValue rhs);
    NodeId top() { return constant(TruthValue::one(), TruthValue::zero()); }
    NodeId bot() { return constant(TruthValue::zero(), TruthValue::one()); }
    NodeId conj(std::vector<NodeId> kids);
    NodeId disj(std::vector<NodeId> kids);

    // Copies a subtree of another formula into this arena.
    NodeId import(const Formula& f, NodeId id);

    Formula finish(NodeId root);

private:
    NodeId add(Node n);
    std::shared_ptr<Arena> arena_;
};

// Node budget for tree expansion; overridable via RNC_NODE_BUDGET.
std::size_t default_node_budget();

// Depth-first enumeration of subformula occurrences: the formula itself
// first, then every occurrence of every subformula. DAG-shared nodes are
// reported once per occurrence.
void for_each_subformula(const Formula& f,
                         const std::function<void(const OccRef&, NodeId)>& fn);
std::vector<std::pair<OccRef, NodeId>> subformulas(const Formula& f);

NodeId resolve(const Formula& f, const OccRef& occ); // throws InvalidOcc

// Fully expands DAG sharing; throws BudgetExceeded past `budget` nodes.
Formula expand_to_tree(const Formula& f, std::size_t budget = default_node_budget());

// Order-sensitive structural equality on the expanded trees.
bool structurally_equal(const Formula& a, const Formula& b);

bool contains_constant(const Formula& f);
std::size_t literal_count(const Formula& f); // tree-expanded literal occurrences
std::size_t tree_node_count(const Formula& f,
                            std::size_t budget = default_node_budget());

} // namespace rnc
