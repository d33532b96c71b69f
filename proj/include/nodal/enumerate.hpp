#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "abel.hpp"
#include "graph.hpp"
#include "lattice.hpp"

namespace nodal {

struct EnumerationBounds {
    std::size_t max_components = 4;
    /// Bound on all nodes, loops included.
    std::size_t max_edges = 6;
    std::size_t max_loops = 0;
};

namespace detail {

/// Isomorphism dedup is exact up to this many components (7! permutations);
/// beyond it duplicates are kept.
inline constexpr std::size_t max_canonical_components = 7;

struct MultigraphShape {
    std::size_t n;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<std::size_t> pair_mult;
    std::vector<std::size_t> loop_mult;
};

inline bool shape_connected(const MultigraphShape &s) {
    DisjointSets sets(s.n);
    std::size_t pieces = s.n;
    for (std::size_t p = 0; p < s.pairs.size(); ++p)
        if (s.pair_mult[p] > 0 && sets.unite(s.pairs[p].first, s.pairs[p].second))
            --pieces;
    return pieces == 1;
}

/// Lexicographically smallest relabelled multiplicity table.
inline std::vector<std::size_t> canonical_key(const MultigraphShape &s) {
    std::vector<std::vector<std::size_t>> adj(s.n, std::vector<std::size_t>(s.n, 0));
    for (std::size_t p = 0; p < s.pairs.size(); ++p) {
        adj[s.pairs[p].first][s.pairs[p].second] = s.pair_mult[p];
        adj[s.pairs[p].second][s.pairs[p].first] = s.pair_mult[p];
    }
    std::vector<std::size_t> perm(s.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::size_t> best;
    std::vector<std::size_t> key;
    do {
        key.clear();
        for (std::size_t i = 0; i < s.n; ++i)
            key.push_back(s.loop_mult[perm[i]]);
        for (const auto &[a, b] : s.pairs)
            key.push_back(adj[perm[a]][perm[b]]);
        if (best.empty() || key < best)
            best = key;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline CurveGraph shape_to_graph(const MultigraphShape &s) {
    std::vector<std::pair<std::size_t, std::size_t>> nodes;
    for (std::size_t p = 0; p < s.pairs.size(); ++p)
        for (std::size_t k = 0; k < s.pair_mult[p]; ++k)
            nodes.push_back(s.pairs[p]);
    for (std::size_t i = 0; i < s.n; ++i)
        for (std::size_t k = 0; k < s.loop_mult[i]; ++k)
            nodes.emplace_back(i, i);
    return CurveGraph(s.n, nodes);
}

/// Calls `visit` with every multiplicity vector of the given length whose sum
/// is at most `budget`.
template <class Visit>
void for_each_multiplicity(std::vector<std::size_t> &mult, std::size_t pos, std::size_t budget, Visit &&visit) {
    if (pos == mult.size()) {
        visit(budget);
        return;
    }
    for (std::size_t k = 0; k <= budget; ++k) {
        mult[pos] = k;
        for_each_multiplicity(mult, pos + 1, budget - k, visit);
    }
    mult[pos] = 0;
}

} // namespace detail

/// Connected multigraphs on exactly `components` vertices, one per
/// isomorphism class (for up to seven components), in a deterministic order.
inline std::vector<CurveGraph> connected_multigraphs(std::size_t components, std::size_t max_edges,
                                                     std::size_t max_loops = 0) {
    detail::MultigraphShape shape;
    shape.n = components;
    for (std::size_t i = 0; i < components; ++i)
        for (std::size_t j = i + 1; j < components; ++j)
            shape.pairs.emplace_back(i, j);
    shape.pair_mult.assign(shape.pairs.size(), 0);
    shape.loop_mult.assign(components, 0);

    std::vector<std::pair<std::vector<std::size_t>, CurveGraph>> found;
    const bool dedup = components <= detail::max_canonical_components;
    detail::for_each_multiplicity(shape.pair_mult, 0, max_edges, [&](std::size_t left) {
        if (!detail::shape_connected(shape))
            return;
        detail::for_each_multiplicity(shape.loop_mult, 0, std::min(left, max_loops), [&](std::size_t) {
            std::vector<std::size_t> key;
            if (dedup)
                key = detail::canonical_key(shape);
            else
                key = shape.pair_mult;
            found.emplace_back(std::move(key), detail::shape_to_graph(shape));
        });
    });
    if (dedup) {
        std::stable_sort(found.begin(), found.end(),
                         [](const auto &a, const auto &b) { return a.first < b.first; });
        found.erase(std::unique(found.begin(), found.end(),
                                [](const auto &a, const auto &b) { return a.first == b.first; }),
                    found.end());
    }
    std::vector<CurveGraph> out;
    out.reserve(found.size());
    for (auto &entry : found)
        out.push_back(std::move(entry.second));
    return out;
}

inline std::vector<CurveGraph> connected_multigraphs(const EnumerationBounds &bounds) {
    std::vector<CurveGraph> out;
    for (std::size_t n = 1; n <= bounds.max_components; ++n)
        for (CurveGraph &g : connected_multigraphs(n, bounds.max_edges, bounds.max_loops))
            out.push_back(std::move(g));
    return out;
}

struct HarnessFailure {
    std::size_t graph_index;
    CurveGraph graph;
    std::int64_t degree;
    TheoremCheck check;
    /// Set when the check itself raised instead of returning.
    std::string error;
};

struct HarnessReport {
    std::size_t graphs = 0;
    std::size_t instances = 0;
    std::vector<HarnessFailure> failures;
};

/// Runs verify_theorem on every enumerated curve for every d in
/// [1, max_degree]. Curves are distributed over worker threads; failures are
/// reported sorted by (graph, degree).
inline HarnessReport run_harness(const EnumerationBounds &bounds, std::int64_t max_degree, unsigned threads = 0) {
    const std::vector<CurveGraph> graphs = connected_multigraphs(bounds);
    HarnessReport report;
    report.graphs = graphs.size();
    report.instances = graphs.size() * static_cast<std::size_t>(std::max<std::int64_t>(max_degree, 0));

    if (threads == 0)
        threads = std::max(1U, std::thread::hardware_concurrency());
    std::atomic<std::size_t> next{0};
    std::mutex guard;
    auto worker = [&] {
        for (std::size_t i = next++; i < graphs.size(); i = next++) {
            std::optional<Lattice> lattice;
            for (std::int64_t d = 1; d <= max_degree; ++d) {
                try {
                    if (!lattice)
                        lattice.emplace(graphs[i]);
                    const TheoremCheck check = verify_theorem(*lattice, d);
                    if (!check.ok()) {
                        std::lock_guard lock(guard);
                        report.failures.push_back({i, graphs[i], d, check, {}});
                    }
                } catch (const std::exception &e) {
                    std::lock_guard lock(guard);
                    report.failures.push_back({i, graphs[i], d, TheoremCheck{}, e.what()});
                }
            }
        }
    };
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back(worker);
    pool.clear();

    std::sort(report.failures.begin(), report.failures.end(), [](const auto &a, const auto &b) {
        return std::pair(a.graph_index, a.degree) < std::pair(b.graph_index, b.degree);
    });
    return report;
}

} // namespace nodal
