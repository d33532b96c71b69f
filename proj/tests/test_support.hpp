#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <utility>
#include <vector>

#include "nodal/nodal.hpp"

namespace nodal::testing {

inline CurveGraph two_components(std::size_t delta) {
    return CurveGraph(2, std::vector<std::pair<std::size_t, std::size_t>>(delta, {0, 1}));
}

inline CurveGraph path(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return CurveGraph(n, edges);
}

inline CurveGraph cycle(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < n; ++i)
        edges.emplace_back(i, (i + 1) % n);
    return CurveGraph(n, edges);
}

inline CurveGraph irreducible(std::size_t loops) {
    return CurveGraph(1, std::vector<std::pair<std::size_t, std::size_t>>(loops, {0, 0}));
}

/// Triangle with a pendant component hanging off C1 and a loop on C3.
inline CurveGraph triangle_with_tail() {
    return CurveGraph(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {2, 2}});
}

inline Multidegree md(std::initializer_list<long long> v) { return Multidegree(v); }
inline Divisor dv(std::initializer_list<long long> v) { return Divisor(v); }

/// Calls f on every integer vector of length n with entries in [lo, hi].
inline void for_each_box(std::size_t n, long long lo, long long hi, const std::function<void(const std::vector<BigInt> &)> &f) {
    std::vector<BigInt> current(n, lo);
    while (true) {
        f(current);
        std::size_t k = n;
        while (k > 0) {
            --k;
            if (current[k] < hi) {
                current[k] += 1;
                break;
            }
            current[k] = lo;
            if (k == 0)
                return;
        }
        if (n == 0)
            return;
    }
}

// ---------------------------------------------------------------------------
// Independent oracles. None of these call into the code paths they check.

inline bool connected_without(const CurveGraph &g, std::size_t skipped_edge) {
    std::vector<std::vector<std::size_t>> adj(g.component_count());
    for (const Edge &e : g.edges())
        if (e.id != skipped_edge) {
            adj[e.u].push_back(e.v);
            adj[e.v].push_back(e.u);
        }
    std::vector<bool> seen(g.component_count(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        auto c = stack.back();
        stack.pop_back();
        for (auto n : adj[c])
            if (!seen[n]) {
                seen[n] = true;
                ++count;
                stack.push_back(n);
            }
    }
    return count == g.component_count();
}

/// Bridges by deleting each edge in turn.
inline std::vector<EdgeId> brute_force_bridges(const CurveGraph &g) {
    std::vector<EdgeId> out;
    for (const Edge &e : g.edges())
        if (!connected_without(g, e.id))
            out.push_back(e.id);
    return out;
}

/// Spanning trees counted by checking every (n-1)-subset of non-loop edges.
inline std::uint64_t brute_force_spanning_trees(const CurveGraph &g) {
    std::vector<Edge> edges;
    for (const Edge &e : g.edges())
        if (!e.is_loop())
            edges.push_back(e);
    const std::size_t n = g.component_count();
    const std::size_t m = edges.size();
    if (n == 1)
        return 1;
    std::uint64_t count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountll(mask)) != n - 1)
            continue;
        std::vector<std::size_t> parent(n);
        for (std::size_t i = 0; i < n; ++i)
            parent[i] = i;
        std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
            return parent[x] == x ? x : parent[x] = find(parent[x]);
        };
        bool acyclic = true;
        for (std::size_t k = 0; k < m && acyclic; ++k)
            if ((mask >> k) & 1U) {
                auto a = find(edges[k].u), b = find(edges[k].v);
                if (a == b)
                    acyclic = false;
                else
                    parent[a] = b;
            }
        if (acyclic)
            ++count;
    }
    return count;
}

/// Multidegree by direct node counting: degree of D on C_i is the number of
/// nodes from C_i to each neighbour weighted by the coefficient difference.
inline std::vector<BigInt> oracle_multidegree(const CurveGraph &g, const std::vector<BigInt> &d) {
    std::vector<BigInt> out(g.component_count(), 0);
    for (const Edge &e : g.edges()) {
        if (e.u == e.v)
            continue;
        out[e.u] += d[e.v] - d[e.u];
        out[e.v] += d[e.u] - d[e.v];
    }
    return out;
}

/// Tails found by scanning all connected subsets with exactly one crossing
/// non-loop edge.
inline std::vector<std::vector<bool>> brute_force_tails(const CurveGraph &g) {
    const std::size_t n = g.component_count();
    std::vector<std::vector<bool>> tails;
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
        std::vector<bool> in(n);
        for (std::size_t i = 0; i < n; ++i)
            in[i] = (mask >> i) & 1U;
        std::size_t crossing = 0;
        for (const Edge &e : g.edges())
            if (in[e.u] != in[e.v])
                ++crossing;
        if (crossing != 1)
            continue;
        // connectivity of the induced subgraph
        std::size_t first = 0;
        while (!in[first])
            ++first;
        std::vector<bool> seen(n, false);
        std::vector<std::size_t> stack{first};
        seen[first] = true;
        while (!stack.empty()) {
            auto c = stack.back();
            stack.pop_back();
            for (const Edge &e : g.edges()) {
                std::size_t other = n;
                if (e.u == c)
                    other = e.v;
                else if (e.v == c)
                    other = e.u;
                if (other < n && in[other] && !seen[other]) {
                    seen[other] = true;
                    stack.push_back(other);
                }
            }
        }
        bool connected = true;
        for (std::size_t i = 0; i < n; ++i)
            if (in[i] && !seen[i])
                connected = false;
        if (connected)
            tails.push_back(in);
    }
    return tails;
}

inline std::vector<BigInt> shifted_to_min_zero(std::vector<BigInt> v) {
    if (v.empty())
        return v;
    BigInt lo = v[0];
    for (const auto &x : v)
        lo = x < lo ? x : lo;
    for (auto &x : v)
        x -= lo;
    return v;
}

/// All divisors sum m_i Q_i (Q_i tails, |m_i| <= bound), modulo Z*X.
inline std::set<std::vector<BigInt>> sums_of_tails(const CurveGraph &g, long long bound) {
    const auto tails = brute_force_tails(g);
    const std::size_t n = g.component_count();
    std::set<std::vector<BigInt>> out;
    for_each_box(tails.size(), -bound, bound, [&](const std::vector<BigInt> &coeffs) {
        std::vector<BigInt> d(n, 0);
        for (std::size_t t = 0; t < tails.size(); ++t)
            for (std::size_t i = 0; i < n; ++i)
                if (tails[t][i])
                    d[i] += coeffs[t];
        out.insert(shifted_to_min_zero(d));
    });
    return out;
}

/// Small corpus used across test suites: every connected multigraph up to
/// four components and five nodes, plus a few with loops.
inline std::vector<CurveGraph> small_corpus() {
    auto graphs = connected_multigraphs(EnumerationBounds{4, 5, 0});
    for (auto &g : connected_multigraphs(3, 4, 2))
        if (g.loop_count() > 0)
            graphs.push_back(std::move(g));
    return graphs;
}

} // namespace nodal::testing
