#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace nodal {

using EdgeId = std::size_t;

/// A node of the curve: an edge of the dual graph. `u == v` is a self-node.
struct Edge {
    EdgeId id;
    std::size_t u;
    std::size_t v;

    [[nodiscard]] bool is_loop() const noexcept { return u == v; }
    [[nodiscard]] std::size_t other(std::size_t w) const noexcept { return w == u ? v : u; }
    friend bool operator==(const Edge &, const Edge &) = default;
};

/// Subset of the irreducible components. Empty and full subsets are allowed;
/// operations that need a proper subcurve check for it themselves.
class Subcurve {
  public:
    Subcurve() = default;
    explicit Subcurve(std::size_t component_count) : members_(component_count, false) {}

    static Subcurve all(std::size_t component_count) {
        Subcurve z(component_count);
        std::fill(z.members_.begin(), z.members_.end(), true);
        return z;
    }

    static Subcurve from_indices(std::size_t component_count, std::initializer_list<std::size_t> indices) {
        return from_range(component_count, indices);
    }

    template <class Range>
    static Subcurve from_range(std::size_t component_count, const Range &indices) {
        Subcurve z(component_count);
        for (std::size_t i : indices)
            z.insert(i);
        return z;
    }

    /// Bit i of `mask` selects component i.
    static Subcurve from_mask(std::size_t component_count, std::uint64_t mask) {
        if (component_count > 64)
            throw Error(ErrorCode::invalid_argument, "mask construction limited to 64 components");
        Subcurve z(component_count);
        for (std::size_t i = 0; i < component_count; ++i)
            z.members_[i] = ((mask >> i) & 1U) != 0;
        return z;
    }

    [[nodiscard]] std::size_t universe() const noexcept { return members_.size(); }

    [[nodiscard]] bool contains(std::size_t i) const {
        check_index(i);
        return members_[i];
    }

    void insert(std::size_t i) {
        check_index(i);
        members_[i] = true;
    }

    void erase(std::size_t i) {
        check_index(i);
        members_[i] = false;
    }

    [[nodiscard]] std::size_t count() const noexcept {
        return static_cast<std::size_t>(std::count(members_.begin(), members_.end(), true));
    }
    [[nodiscard]] bool empty() const noexcept { return count() == 0; }
    [[nodiscard]] bool is_all() const noexcept { return count() == members_.size(); }
    [[nodiscard]] bool is_proper_nonempty() const noexcept { return !empty() && !is_all(); }

    [[nodiscard]] Subcurve complement() const {
        Subcurve z = *this;
        z.members_.flip();
        return z;
    }

    [[nodiscard]] std::vector<std::size_t> components() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < members_.size(); ++i)
            if (members_[i])
                out.push_back(i);
        return out;
    }

    [[nodiscard]] bool subset_of(const Subcurve &other) const {
        for (std::size_t i = 0; i < members_.size(); ++i)
            if (members_[i] && !other.contains(i))
                return false;
        return true;
    }

    friend bool operator==(const Subcurve &, const Subcurve &) = default;

  private:
    void check_index(std::size_t i) const {
        if (i >= members_.size())
            throw Error(ErrorCode::invalid_argument,
                        "component index " + std::to_string(i) + " out of range");
    }

    std::vector<bool> members_;
};

/// Sorted set of edge-ids.
class NodeSet {
  public:
    NodeSet() = default;
    explicit NodeSet(std::vector<EdgeId> ids) : ids_(std::move(ids)) {
        std::sort(ids_.begin(), ids_.end());
        ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
    }

    [[nodiscard]] const std::vector<EdgeId> &ids() const noexcept { return ids_; }
    [[nodiscard]] std::size_t size() const noexcept { return ids_.size(); }
    [[nodiscard]] bool empty() const noexcept { return ids_.empty(); }
    [[nodiscard]] bool contains(EdgeId id) const { return std::binary_search(ids_.begin(), ids_.end(), id); }

    [[nodiscard]] bool subset_of(const NodeSet &other) const {
        return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
    }

    [[nodiscard]] NodeSet united(const NodeSet &other) const {
        std::vector<EdgeId> out;
        std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                       std::back_inserter(out));
        return NodeSet(std::move(out));
    }

    friend bool operator==(const NodeSet &, const NodeSet &) = default;

  private:
    std::vector<EdgeId> ids_;
};

namespace detail {

/// Minimal union-find over component indices.
class DisjointSets {
  public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        parent_[std::max(a, b)] = std::min(a, b);
        return true;
    }

  private:
    std::vector<std::size_t> parent_;
};

} // namespace detail

/// Dual graph of a connected nodal curve. Immutable once built; edge-ids are
/// insertion indices.
class CurveGraph {
  public:
    /// Components get the default labels C1..Cn.
    CurveGraph(std::size_t component_count, const std::vector<std::pair<std::size_t, std::size_t>> &nodes)
        : CurveGraph(default_labels(component_count), nodes) {}

    CurveGraph(std::vector<std::string> labels, const std::vector<std::pair<std::size_t, std::size_t>> &nodes)
        : labels_(std::move(labels)) {
        if (labels_.empty())
            throw Error(ErrorCode::empty_graph, "a curve needs at least one component");
        edges_.reserve(nodes.size());
        for (const auto &[u, v] : nodes) {
            if (u >= labels_.size() || v >= labels_.size())
                throw Error(ErrorCode::invalid_argument, "node endpoint out of range");
            edges_.push_back(Edge{edges_.size(), u, v});
        }
        detail::DisjointSets sets(labels_.size());
        std::size_t pieces = labels_.size();
        for (const Edge &e : edges_)
            if (sets.unite(e.u, e.v))
                --pieces;
        if (pieces != 1)
            throw Error(ErrorCode::disconnected,
                        "dual graph is disconnected (" + std::to_string(pieces) + " connected components)");
        incidence_.resize(labels_.size());
        for (const Edge &e : edges_) {
            incidence_[e.u].push_back(e.id);
            if (!e.is_loop())
                incidence_[e.v].push_back(e.id);
        }
    }

    [[nodiscard]] std::size_t component_count() const noexcept { return labels_.size(); }
    [[nodiscard]] std::size_t edge_count() const noexcept { return edges_.size(); }
    [[nodiscard]] const std::vector<std::string> &labels() const noexcept { return labels_; }
    [[nodiscard]] const std::vector<Edge> &edges() const noexcept { return edges_; }

    [[nodiscard]] const Edge &edge(EdgeId id) const {
        if (id >= edges_.size())
            throw Error(ErrorCode::invalid_argument, "edge-id " + std::to_string(id) + " out of range");
        return edges_[id];
    }

    /// Edge-ids incident to component i; a loop is listed once.
    [[nodiscard]] const std::vector<EdgeId> &incident(std::size_t i) const { return incidence_.at(i); }

    [[nodiscard]] std::size_t loop_count() const noexcept {
        return static_cast<std::size_t>(
            std::count_if(edges_.begin(), edges_.end(), [](const Edge &e) { return e.is_loop(); }));
    }

    [[nodiscard]] std::optional<std::size_t> index_of(const std::string &label) const {
        auto it = std::find(labels_.begin(), labels_.end(), label);
        if (it == labels_.end())
            return std::nullopt;
        return static_cast<std::size_t>(it - labels_.begin());
    }

    [[nodiscard]] Subcurve whole() const { return Subcurve::all(component_count()); }

    [[nodiscard]] Subcurve component(std::size_t i) const {
        Subcurve z(component_count());
        z.insert(i);
        return z;
    }

    friend bool operator==(const CurveGraph &a, const CurveGraph &b) {
        return a.labels_ == b.labels_ && a.edges_ == b.edges_;
    }

  private:
    static std::vector<std::string> default_labels(std::size_t n) {
        std::vector<std::string> out;
        out.reserve(n);
        for (std::size_t i = 0; i < n; ++i)
            out.push_back("C" + std::to_string(i + 1));
        return out;
    }

    std::vector<std::string> labels_;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> incidence_;
};

namespace detail {

inline void check_subcurve(const CurveGraph &g, const Subcurve &z) {
    if (z.universe() != g.component_count())
        throw Error(ErrorCode::invalid_argument, "subcurve does not match the number of components");
}

inline void check_proper(const CurveGraph &g, const Subcurve &z) {
    check_subcurve(g, z);
    if (!z.is_proper_nonempty())
        throw Error(ErrorCode::invalid_argument, "expected a proper nonempty subcurve");
}

inline void check_node_set(const CurveGraph &g, const NodeSet &s) {
    if (!s.empty() && s.ids().back() >= g.edge_count())
        throw Error(ErrorCode::invalid_argument, "node set references an unknown edge-id");
}

} // namespace detail

/// Intersection product (Z . W), extended bilinearly from the components.
/// Each non-loop edge uv contributes -([u in Z]-[v in Z])([u in W]-[v in W]);
/// loops contribute nothing.
inline std::int64_t pairing(const CurveGraph &g, const Subcurve &z, const Subcurve &w) {
    detail::check_subcurve(g, z);
    detail::check_subcurve(g, w);
    std::int64_t total = 0;
    for (const Edge &e : g.edges()) {
        if (e.is_loop())
            continue;
        const int dz = int(z.contains(e.u)) - int(z.contains(e.v));
        const int dw = int(w.contains(e.u)) - int(w.contains(e.v));
        total -= dz * dw;
    }
    return total;
}

/// Matrix of (C_i . C_j): the negated graph Laplacian.
inline std::vector<std::vector<std::int64_t>> pairing_matrix(const CurveGraph &g) {
    const std::size_t n = g.component_count();
    std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n, 0));
    for (const Edge &e : g.edges()) {
        if (e.is_loop())
            continue;
        m[e.u][e.v] += 1;
        m[e.v][e.u] += 1;
        m[e.u][e.u] -= 1;
        m[e.v][e.v] -= 1;
    }
    return m;
}

/// Edges with exactly one endpoint in z.
inline NodeSet cut_edges(const CurveGraph &g, const Subcurve &z) {
    detail::check_subcurve(g, z);
    std::vector<EdgeId> out;
    for (const Edge &e : g.edges())
        if (!e.is_loop() && z.contains(e.u) != z.contains(e.v))
            out.push_back(e.id);
    return NodeSet(std::move(out));
}

/// k_Z = (Z . Z'), the number of nodes joining Z to its complement.
inline std::size_t k_of(const CurveGraph &g, const Subcurve &z) {
    detail::check_proper(g, z);
    return cut_edges(g, z).size();
}

/// Whether the components of z span a connected subgraph (non-loop edges
/// inside z only). The empty subcurve is not connected.
inline bool is_connected_subcurve(const CurveGraph &g, const Subcurve &z) {
    detail::check_subcurve(g, z);
    const auto members = z.components();
    if (members.empty())
        return false;
    std::vector<bool> seen(g.component_count(), false);
    std::vector<std::size_t> stack{members.front()};
    seen[members.front()] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const std::size_t c = stack.back();
        stack.pop_back();
        for (EdgeId id : g.incident(c)) {
            const std::size_t n = g.edge(id).other(c);
            if (z.contains(n) && !seen[n]) {
                seen[n] = true;
                ++reached;
                stack.push_back(n);
            }
        }
    }
    return reached == members.size();
}

/// Bridges of the dual graph (separating nodes). Iterative low-link DFS that
/// skips the tree edge by id, so parallel edges are never reported.
inline NodeSet separating_nodes(const CurveGraph &g) {
    const std::size_t n = g.component_count();
    constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> order(n, unvisited);
    std::vector<std::size_t> low(n, 0);
    std::vector<EdgeId> bridges;

    struct Frame {
        std::size_t vertex;
        EdgeId via;
        bool has_via;
        std::size_t next;
    };
    std::size_t counter = 0;
    for (std::size_t root = 0; root < n; ++root) {
        if (order[root] != unvisited)
            continue;
        std::vector<Frame> stack{{root, 0, false, 0}};
        order[root] = low[root] = counter++;
        while (!stack.empty()) {
            Frame &top = stack.back();
            const auto &adj = g.incident(top.vertex);
            if (top.next < adj.size()) {
                const Edge &e = g.edge(adj[top.next++]);
                if (e.is_loop() || (top.has_via && e.id == top.via))
                    continue;
                const std::size_t w = e.other(top.vertex);
                if (order[w] == unvisited) {
                    order[w] = low[w] = counter++;
                    stack.push_back({w, e.id, true, 0});
                } else {
                    low[top.vertex] = std::min(low[top.vertex], order[w]);
                }
                continue;
            }
            const Frame done = top;
            stack.pop_back();
            if (!stack.empty()) {
                const std::size_t parent = stack.back().vertex;
                low[parent] = std::min(low[parent], low[done.vertex]);
                if (low[done.vertex] > order[parent])
                    bridges.push_back(done.via);
            }
        }
    }
    return NodeSet(std::move(bridges));
}

/// The graph obtained by contracting every edge outside S; its vertices are
/// the connected components of the partial normalization at S.
struct Contraction {
    std::size_t vertex_count = 0;
    /// Contracted vertex of each original component, numbered by first appearance.
    std::vector<std::size_t> vertex_of;
    /// The edges of S, endpoints re-expressed in contracted vertices.
    std::vector<Edge> edges;
    /// First Betti number: #S + 1 - vertex_count.
    std::size_t betti = 0;
};

inline Contraction contract_complement(const CurveGraph &g, const NodeSet &s) {
    detail::check_node_set(g, s);
    detail::DisjointSets sets(g.component_count());
    for (const Edge &e : g.edges())
        if (!s.contains(e.id))
            sets.unite(e.u, e.v);

    Contraction out;
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> label(g.component_count(), none);
    out.vertex_of.resize(g.component_count());
    for (std::size_t i = 0; i < g.component_count(); ++i) {
        const std::size_t root = sets.find(i);
        if (label[root] == none)
            label[root] = out.vertex_count++;
        out.vertex_of[i] = label[root];
    }
    for (EdgeId id : s.ids()) {
        const Edge &e = g.edge(id);
        out.edges.push_back(Edge{id, out.vertex_of[e.u], out.vertex_of[e.v]});
    }
    // Gamma(S) is connected because the dual graph is, so this never underflows.
    out.betti = s.size() + 1 - out.vertex_count;
    return out;
}

inline std::size_t betti(const CurveGraph &g, const NodeSet &s) { return contract_complement(g, s).betti; }

/// A tail is a connected proper subcurve meeting its complement in a single
/// (necessarily separating) node.
inline bool is_tail(const CurveGraph &g, const Subcurve &q) {
    detail::check_proper(g, q);
    if (!is_connected_subcurve(g, q))
        throw Error(ErrorCode::invalid_argument, "tails are connected; the given subcurve is not");
    return k_of(g, q) == 1;
}

} // namespace nodal
