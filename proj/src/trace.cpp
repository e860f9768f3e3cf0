#include "sl2ext/trace.hpp"

#include <sstream>
#include <stdexcept>

namespace sl2ext {

namespace {

class Builder {
public:
    NodeIndex build(const ExtQuery& q)
    {
        if (const auto it = index_.find(q); it != index_.end())
            return it->second;

        TraceNode node{q, rule_for(q), 0, {}};
        switch (node.rule) {
        case Rule::base_case:
            node.dim = (q.degree == 0 && q.weight == 2) ? 1 : 0;
            break;
        case Rule::block_vanish:
            break;
        case Rule::recursion: {
            const auto children = recursion_children(q);
            node.children.reserve(children.size());
            for (Index i = 0; i < children.size(); ++i) {
                const NodeIndex child = build(children[i]);
                node.children.push_back({i, child});
                node.dim += nodes_[child].dim;
            }
            break;
        }
        }
        const NodeIndex k = nodes_.size();
        nodes_.push_back(std::move(node));
        index_.emplace(q, k);
        return k;
    }

    std::vector<TraceNode> nodes_;
    std::map<ExtQuery, NodeIndex> index_;
};

} // namespace

std::optional<NodeIndex> TraceDag::find(const ExtQuery& q) const
{
    const auto it = index_.find(q);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

TraceDag trace(const ExtQuery& q)
{
    return trace(std::span<const ExtQuery>(&q, 1));
}

TraceDag trace(std::span<const ExtQuery> roots)
{
    if (roots.empty())
        throw std::invalid_argument("trace requires at least one root");
    Builder builder;
    TraceDag dag;
    for (const auto& q : roots)
        dag.roots_.push_back(builder.build(q));
    dag.nodes_ = std::move(builder.nodes_);
    dag.index_ = std::move(builder.index_);
    return dag;
}

TraceDag trace_decomposition(Index q, Index r, Prime p)
{
    if (r < 1)
        throw std::invalid_argument("trace_decomposition requires r >= 1");
    std::vector<ExtQuery> roots;
    roots.reserve(q + 1);
    for (Weight n = 0; n <= q; ++n)
        roots.push_back({q - n, n, r - 1, p});
    return trace(roots);
}

TraceDag TraceDag::pruned() const
{
    std::vector<bool> keep(nodes_.size(), false);
    for (const NodeIndex r : roots_)
        keep[r] = true;
    // parents are stored after their children, so walk backwards
    for (NodeIndex k = nodes_.size(); k-- > 0;) {
        if (!keep[k])
            continue;
        for (const auto& edge : nodes_[k].children)
            if (nodes_[edge.child].dim != 0)
                keep[edge.child] = true;
    }

    std::vector<NodeIndex> remap(nodes_.size(), 0);
    TraceDag out;
    for (NodeIndex k = 0; k < nodes_.size(); ++k) {
        if (!keep[k])
            continue;
        TraceNode node = nodes_[k];
        std::erase_if(node.children, [this](const TraceEdge& e) { return nodes_[e.child].dim == 0; });
        for (auto& edge : node.children)
            edge.child = remap[edge.child];
        remap[k] = out.nodes_.size();
        out.index_.emplace(node.query, remap[k]);
        out.nodes_.push_back(std::move(node));
    }
    for (const NodeIndex r : roots_)
        out.roots_.push_back(remap[r]);
    return out;
}

namespace {

std::vector<Natural> path_counts(const TraceDag& dag)
{
    const auto& nodes = dag.nodes();
    std::vector<Natural> paths(nodes.size(), 0);
    for (const NodeIndex r : dag.roots())
        paths[r] += 1;
    for (NodeIndex k = nodes.size(); k-- > 0;) {
        if (paths[k] == 0)
            continue;
        for (const auto& edge : nodes[k].children)
            paths[edge.child] += paths[k];
    }
    return paths;
}

} // namespace

Natural leaf_path_count(const TraceDag& dag, const ExtQuery& leaf)
{
    if (leaf.twist != 0)
        throw std::invalid_argument("leaf_path_count: leaf " + node_id(leaf) + " is not a base-case query");
    const auto k = dag.find(leaf);
    if (!k)
        return 0;
    return path_counts(dag)[*k];
}

ExtDim dim_from_leaves(const TraceDag& dag)
{
    const auto paths = path_counts(dag);
    ExtDim total = 0;
    for (NodeIndex k = 0; k < dag.nodes().size(); ++k) {
        const auto& node = dag.node(k);
        if (node.rule == Rule::base_case)
            total += paths[k] * node.dim;
    }
    return total;
}

std::vector<Precursor> precursors(const ExtQuery& child)
{
    std::vector<Precursor> out;
    const Index p = child.p.value();
    const Index parent_twist = checked_add(child.twist, 1);
    for (Index i = 0; i <= child.weight; ++i) {
        const Index quotient = child.weight - i;
        Weight w = checked_mul(p, quotient);
        if (quotient % 2 == 1)
            w = checked_add(w, p - 2);
        if (!in_block_of_two_p_s(w, parent_twist, child.p))
            continue;
        out.push_back({{checked_add(child.degree, i), w, parent_twist, child.p}, i});
    }
    return out;
}

DeficitReport verify_deficit(const TraceDag& dag)
{
    for (const NodeIndex r : dag.roots()) {
        const auto& root = dag.node(r).query;
        if (Natural(root.degree) + root.weight != Natural(two_p_pow(root.twist, root.p)))
            throw std::invalid_argument("verify_deficit: root " + node_id(root) +
                                        " is not on the diagonal m + n = 2p^s");
    }

    DeficitReport report;
    for (const auto& node : dag.nodes()) {
        if (node.dim == 0)
            continue;
        ++report.nonzero_nodes_checked;
        const auto& q = node.query;
        if (Natural(q.degree) + q.weight < Natural(two_p_pow(q.twist, q.p)))
            report.violations.push_back(q);
    }
    return report;
}

bool deficit_step_holds(Index a, Index b, Index i, Index s, Prime p)
{
    if (i > b)
        throw std::invalid_argument("deficit_step_holds requires i <= b");
    const Natural bound = Natural(two_p_pow(s, p));
    if (Natural(a) + b >= bound)
        return true;
    const Natural pp = p.value();
    const Natural precursor_sum = Natural(a) + i + pp * (b - i) + (pp - 2);
    return precursor_sum < bound * pp;
}

std::vector<ExtQuery> nonzero_queries(const TraceDag& dag)
{
    std::vector<ExtQuery> out;
    for (const auto& node : dag.nodes())
        if (node.dim != 0)
            out.push_back(node.query);
    return out;
}

std::string to_dot(const TraceDag& dag)
{
    std::ostringstream os;
    os << "digraph trace {\n";
    for (const auto& node : dag.nodes()) {
        const auto& q = node.query;
        os << "  \"" << node_id(q) << "\" [label=\"Ext^" << q.degree << "(Δ(" << q.weight << "),∇(2)^("
           << q.twist << ")) = " << node.dim << "\"];\n";
    }
    for (const auto& node : dag.nodes())
        for (const auto& edge : node.children)
            os << "  \"" << node_id(node.query) << "\" -> \"" << node_id(dag.node(edge.child).query)
               << "\" [label=\"" << edge.summand << "\"];\n";
    os << "}\n";
    return os.str();
}

} // namespace sl2ext
