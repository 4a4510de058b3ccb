#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "workspan/error.hpp"
#include "workspan/rational.hpp"

namespace workspan {

using NodeId = std::string;

enum class Comparability { precedes, succeeds, incomparable, same };

inline bool valid_node_id(const NodeId& id) {
    if (id.empty())
        return false;
    for (char c : id) {
        const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                        (c >= '0' && c <= '9') || c == '_';
        if (!ok)
            return false;
    }
    return true;
}

/// Weighted task DAG, immutable once built. Nodes are indexed by their rank
/// in lexicographic id order, so every index-based walk is deterministic and
/// independent of insertion order. Reachability is closed at build time;
/// compare() is a bit lookup.
class TaskGraph {
public:
    static TaskGraph build(const std::vector<std::pair<NodeId, Rational>>& nodes,
                           const std::vector<std::pair<NodeId, NodeId>>& edges) {
        if (nodes.empty())
            throw Error(Errc::empty_graph, "graph has no nodes");

        for (const auto& [id, weight] : nodes) {
            if (!valid_node_id(id))
                throw Error(Errc::invalid_node_id,
                            "node id '" + id + "' is not a [A-Za-z0-9_]+ token");
            if (!weight.is_positive())
                throw Error(Errc::nonpositive_weight,
                            "node '" + id + "' has nonpositive weight " + weight.to_string());
        }

        std::map<NodeId, Rational> by_id;
        for (const auto& [id, weight] : nodes) {
            if (!by_id.emplace(id, weight).second)
                throw Error(Errc::duplicate_node, "duplicate node '" + id + "'");
        }

        TaskGraph g;
        g.ids_.reserve(by_id.size());
        g.weights_.reserve(by_id.size());
        for (const auto& [id, weight] : by_id) {
            g.index_.emplace(id, g.ids_.size());
            g.ids_.push_back(id);
            g.weights_.push_back(weight);
        }

        const std::size_t n = g.ids_.size();
        g.succ_.assign(n, {});
        g.pred_.assign(n, {});
        std::set<std::pair<std::size_t, std::size_t>> seen;
        for (const auto& [from, to] : edges) {
            const auto fi = g.index_.find(from);
            const auto ti = g.index_.find(to);
            if (fi == g.index_.end())
                throw Error(Errc::unknown_endpoint, "edge endpoint '" + from + "' is not a node");
            if (ti == g.index_.end())
                throw Error(Errc::unknown_endpoint, "edge endpoint '" + to + "' is not a node");
            if (fi->second == ti->second)
                throw Error(Errc::self_edge, "self edge on '" + from + "'");
            if (!seen.emplace(fi->second, ti->second).second)
                throw Error(Errc::duplicate_edge, "duplicate edge '" + from + " -> " + to + "'");
        }
        g.edges_.assign(seen.begin(), seen.end());
        for (const auto& [u, v] : g.edges_) {
            g.succ_[u].push_back(v);
            g.pred_[v].push_back(u);
        }

        g.check_acyclic();
        g.topo_ = g.kahn_order();
        g.close_reachability();
        return g;
    }

    std::size_t node_count() const { return ids_.size(); }
    const std::vector<NodeId>& ids() const { return ids_; }
    const std::vector<Rational>& weights() const { return weights_; }
    const Rational& weight(std::size_t v) const { return weights_[v]; }
    const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
    const std::vector<std::size_t>& successors(std::size_t v) const { return succ_[v]; }
    const std::vector<std::size_t>& predecessors(std::size_t v) const { return pred_[v]; }

    /// Topological order of node indices; among simultaneously available
    /// nodes the smallest id comes first.
    const std::vector<std::size_t>& topo_indices() const { return topo_; }

    bool has_node(const NodeId& id) const { return index_.count(id) != 0; }

    std::size_t index_of(const NodeId& id) const {
        const auto it = index_.find(id);
        if (it == index_.end())
            throw Error(Errc::unknown_node, "unknown node '" + id + "'");
        return it->second;
    }

    const NodeId& id_of(std::size_t v) const { return ids_[v]; }

    /// True iff a directed path u -> ... -> v with at least one edge exists.
    bool reaches(std::size_t u, std::size_t v) const {
        return (reach_[u * words_ + v / 64] >> (v % 64)) & 1u;
    }

    friend bool operator==(const TaskGraph& a, const TaskGraph& b) {
        return a.ids_ == b.ids_ && a.weights_ == b.weights_ && a.edges_ == b.edges_;
    }

private:
    TaskGraph() = default;

    void check_acyclic() const {
        const std::size_t n = ids_.size();
        std::vector<int> color(n, 0);
        std::vector<std::size_t> parent(n, n);
        for (std::size_t root = 0; root < n; ++root) {
            if (color[root] != 0)
                continue;
            std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
            color[root] = 1;
            while (!stack.empty()) {
                auto& [v, next] = stack.back();
                if (next == succ_[v].size()) {
                    color[v] = 2;
                    stack.pop_back();
                    continue;
                }
                const std::size_t s = succ_[v][next++];
                if (color[s] == 0) {
                    color[s] = 1;
                    parent[s] = v;
                    stack.emplace_back(s, 0);
                } else if (color[s] == 1) {
                    std::vector<NodeId> cycle{ids_[s]};
                    for (std::size_t w = v; w != s; w = parent[w])
                        cycle.push_back(ids_[w]);
                    std::reverse(cycle.begin() + 1, cycle.end());
                    const auto smallest = std::min_element(cycle.begin(), cycle.end());
                    std::rotate(cycle.begin(), smallest, cycle.end());
                    std::string text = cycle.front();
                    for (std::size_t k = 1; k < cycle.size(); ++k)
                        text += " -> " + cycle[k];
                    text += " -> " + cycle.front();
                    throw Error(Errc::cycle_detected, "cycle detected: " + text, 0, cycle);
                }
            }
        }
    }

    std::vector<std::size_t> kahn_order() const {
        const std::size_t n = ids_.size();
        std::vector<std::size_t> indeg(n, 0);
        for (const auto& [u, v] : edges_) {
            (void)u;
            ++indeg[v];
        }
        std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
        for (std::size_t v = 0; v < n; ++v)
            if (indeg[v] == 0)
                ready.push(v);
        std::vector<std::size_t> order;
        order.reserve(n);
        while (!ready.empty()) {
            const std::size_t v = ready.top();
            ready.pop();
            order.push_back(v);
            for (std::size_t s : succ_[v])
                if (--indeg[s] == 0)
                    ready.push(s);
        }
        return order;
    }

    void close_reachability() {
        const std::size_t n = ids_.size();
        words_ = (n + 63) / 64;
        reach_.assign(n * words_, 0);
        for (auto it = topo_.rbegin(); it != topo_.rend(); ++it) {
            const std::size_t v = *it;
            for (std::size_t s : succ_[v]) {
                reach_[v * words_ + s / 64] |= std::uint64_t(1) << (s % 64);
                for (std::size_t w = 0; w < words_; ++w)
                    reach_[v * words_ + w] |= reach_[s * words_ + w];
            }
        }
    }

    std::vector<NodeId> ids_;
    std::vector<Rational> weights_;
    std::map<NodeId, std::size_t> index_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
    std::vector<std::vector<std::size_t>> succ_;
    std::vector<std::vector<std::size_t>> pred_;
    std::vector<std::size_t> topo_;
    std::vector<std::uint64_t> reach_;
    std::size_t words_ = 0;
};

inline TaskGraph build_graph(const std::vector<std::pair<NodeId, Rational>>& nodes,
                             const std::vector<std::pair<NodeId, NodeId>>& edges) {
    return TaskGraph::build(nodes, edges);
}

inline std::vector<NodeId> topological_order(const TaskGraph& g) {
    std::vector<NodeId> order;
    order.reserve(g.node_count());
    for (std::size_t v : g.topo_indices())
        order.push_back(g.id_of(v));
    return order;
}

inline Comparability compare(const TaskGraph& g, const NodeId& u, const NodeId& v) {
    const std::size_t ui = g.index_of(u);
    const std::size_t vi = g.index_of(v);
    if (ui == vi)
        return Comparability::same;
    if (g.reaches(ui, vi))
        return Comparability::precedes;
    if (g.reaches(vi, ui))
        return Comparability::succeeds;
    return Comparability::incomparable;
}

/// A node is serial when it is ordered against every other node, i.e. no
/// schedule can ever run anything beside it.
inline bool is_serial_node(const TaskGraph& g, const NodeId& id) {
    const std::size_t v = g.index_of(id);
    for (std::size_t u = 0; u < g.node_count(); ++u) {
        if (u == v)
            continue;
        if (!g.reaches(u, v) && !g.reaches(v, u))
            return false;
    }
    return true;
}

/// All serial nodes in id order.
inline std::vector<NodeId> serial_nodes(const TaskGraph& g) {
    std::vector<NodeId> out;
    for (const NodeId& id : g.ids())
        if (is_serial_node(g, id))
            out.push_back(id);
    return out;
}

/// Same nodes and weights, no edges: the depth-one compression of g.
inline TaskGraph strip_edges(const TaskGraph& g) {
    std::vector<std::pair<NodeId, Rational>> nodes;
    nodes.reserve(g.node_count());
    for (std::size_t v = 0; v < g.node_count(); ++v)
        nodes.emplace_back(g.id_of(v), g.weight(v));
    return TaskGraph::build(nodes, {});
}

} // namespace workspan
