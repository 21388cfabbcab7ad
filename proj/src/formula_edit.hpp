#pragma once

// Internal tree-edit helpers shared by the calculus ops and trace replay.
// Every edit rebuilds the formula as a tree with one local change.

#include "rnc/formula.hpp"

namespace rnc::edit {

// Removes the node at `path` from its parent's child list.
Formula remove_at(const Formula& f, const OccRef& path);

// Replaces the node at `path` with an empty disjunction / conjunction.
Formula replace_with_empty_disj(const Formula& f, const OccRef& path);
Formula replace_with_empty_conj(const Formula& f, const OccRef& path);

// Replaces the single-child connective at `path` with its child.
Formula splice_single(const Formula& f, const OccRef& path);

// Inlines the children of the connective at `path` into its parent at the
// same position.
Formula splice_into_parent(const Formula& f, const OccRef& path);

// In the connective at `conj_path`: the first child equal to `keep` gets
// threshold max(keep, drop); the first subsequent child equal to `drop` is
// removed.
Formula merge_literals(const Formula& f, const OccRef& conj_path,
                       const Literal& keep, const Literal& drop);

} // namespace rnc::edit
