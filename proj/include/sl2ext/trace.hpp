#pragma once

// The recursion for dim Ext^m(Delta(n), nabla(2)^(s)) materialized as a DAG.
//
// Each node is one query; shared subqueries are stored once.  Edges go from
// twist s to twist s-1 and are labelled by the summand index i.  Occurrence
// counts in the fully expanded tree are recovered by counting paths.
//
// Recursion "step" t of a top-level query at twist r-1 corresponds to twist
// level r-t in the DAG.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sl2ext/ext_engine.hpp"

namespace sl2ext {

using NodeIndex = std::size_t;

struct TraceEdge {
    Index summand;
    NodeIndex child;
};

struct TraceNode {
    ExtQuery query;
    Rule rule;
    ExtDim dim;
    std::vector<TraceEdge> children;
};

/// Immutable once built.  Children always precede their parents in storage
/// order.  A DAG built from several top-level queries shares their subqueries
/// and counts paths from every root.
class TraceDag {
public:
    NodeIndex root() const noexcept { return roots_.front(); }
    const std::vector<NodeIndex>& roots() const noexcept { return roots_; }
    const std::vector<TraceNode>& nodes() const noexcept { return nodes_; }
    const TraceNode& node(NodeIndex k) const { return nodes_.at(k); }
    std::optional<NodeIndex> find(const ExtQuery& q) const;

    /// Copy with zero-dimension children (and anything only they reach) removed.
    TraceDag pruned() const;

private:
    friend TraceDag trace(std::span<const ExtQuery> roots);

    std::vector<NodeIndex> roots_;
    std::vector<TraceNode> nodes_;
    std::map<ExtQuery, NodeIndex> index_;
};

TraceDag trace(const ExtQuery& q);
TraceDag trace(std::span<const ExtQuery> roots);

/// One DAG over every summand of dim Ext^q(k, nabla(2)^(r)).
TraceDag trace_decomposition(Index q, Index r, Prime p);

/// Number of root-to-leaf expansion paths ending at the base-case query leaf.
Natural leaf_path_count(const TraceDag& dag, const ExtQuery& leaf);

/// Sum over base-case leaves of path count times leaf dimension.
ExtDim dim_from_leaves(const TraceDag& dag);

/// Parents at twist child.twist + 1 that produce child at some summand index,
/// restricted to weights passing the block test.
struct Precursor {
    ExtQuery parent;
    Index summand;
};
std::vector<Precursor> precursors(const ExtQuery& child);

struct DeficitReport {
    std::size_t nonzero_nodes_checked = 0;
    std::vector<ExtQuery> violations;

    bool ok() const noexcept { return violations.empty(); }
};

/// Checks degree + weight >= 2p^s at every nonzero node.  Every root must sit
/// on the diagonal degree + weight = 2p^s.
DeficitReport verify_deficit(const TraceDag& dag);

/// Arithmetic core of the deficit argument: a + b < 2p^s implies
/// (a+i) + p(b-i) + (p-2) < 2p^(s+1) for 0 <= i <= b.
bool deficit_step_holds(Index a, Index b, Index i, Index s, Prime p);

/// Nodes with nonzero dimension, in storage order.
std::vector<ExtQuery> nonzero_queries(const TraceDag& dag);

std::string to_dot(const TraceDag& dag);

} // namespace sl2ext
