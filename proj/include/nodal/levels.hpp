#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "divisor.hpp"
#include "graph.hpp"
#include "lattice.hpp"

namespace nodal {

struct Level {
    BigInt value;
    Subcurve curve;

    friend bool operator==(const Level &, const Level &) = default;
};

/// D = sum_m m * D_m with D_m the union of the components of coefficient m.
/// Levels are sorted ascending and every D_m is nonempty.
struct LevelExpression {
    std::vector<Level> levels;

    friend bool operator==(const LevelExpression &, const LevelExpression &) = default;
};

inline LevelExpression level_expression(const CurveGraph &g, const Divisor &d) {
    if (d.size() != g.component_count())
        throw Error(ErrorCode::invalid_argument, "divisor length does not match the number of components");
    std::map<BigInt, Subcurve> grouped;
    for (std::size_t i = 0; i < d.size(); ++i) {
        auto [it, inserted] = grouped.try_emplace(d[i], g.component_count());
        it->second.insert(i);
    }
    LevelExpression out;
    for (auto &[value, curve] : grouped)
        out.levels.push_back(Level{value, std::move(curve)});
    return out;
}

/// The unique divisor D(t) with deg D(t) = t, minimum level 0:
/// D(t) = sum_h m_h Z_h with 0 < m_1 < ... < m_l and Z_0 the level-0 curve.
/// For t = 0 the expression is degenerate: Z_0 = X and no positive levels.
struct CanonicalRep {
    Divisor divisor;
    Subcurve zero_curve;
    std::vector<Level> positive_levels;
    bool degenerate = false;

    [[nodiscard]] std::size_t length() const noexcept { return positive_levels.size(); }

    [[nodiscard]] Divisor reassemble() const {
        Divisor d(zero_curve.universe());
        for (const Level &level : positive_levels)
            for (std::size_t i : level.curve.components())
                d[i] += level.value;
        return d;
    }

    [[nodiscard]] LevelExpression as_level_expression() const {
        LevelExpression out;
        out.levels.push_back(Level{0, zero_curve});
        out.levels.insert(out.levels.end(), positive_levels.begin(), positive_levels.end());
        return out;
    }
};

namespace detail {

inline Divisor require_lambda(const Lattice &lattice, const Multidegree &t) {
    auto d = lattice.lambda_membership(t);
    if (!d)
        throw Error(ErrorCode::not_in_lattice, "multidegree " + t.str() + " is not a twister multidegree");
    return *d;
}

} // namespace detail

inline CanonicalRep canonical_rep(const Lattice &lattice, const Multidegree &t) {
    const Divisor d = detail::require_lambda(lattice, t);
    const LevelExpression expr = level_expression(lattice.graph(), d);
    CanonicalRep out;
    out.divisor = d;
    out.zero_curve = expr.levels.front().curve;
    out.positive_levels.assign(expr.levels.begin() + 1, expr.levels.end());
    out.degenerate = t.is_zero();
    return out;
}

/// Self-test of the level inequalities: for every subcurve Y of Z_0,
/// |t_Y| >= -m_1 (Y.Z_0) >= 0, and |t_{Z_0}| >= m_1 k_{Z_0} > 0.
inline bool check_degZ_inequality(const Lattice &lattice, const Multidegree &t) {
    if (t.is_zero())
        throw Error(ErrorCode::invalid_argument, "the level inequalities need a nonzero multidegree");
    const CanonicalRep rep = canonical_rep(lattice, t);
    const CurveGraph &g = lattice.graph();
    const auto zero = rep.zero_curve.components();
    if (zero.size() >= 63)
        throw Error(ErrorCode::invalid_argument, "Z_0 too large for subset enumeration");
    const BigInt &m1 = rep.positive_levels.front().value;

    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << zero.size()); ++mask) {
        Subcurve y(g.component_count());
        BigInt degree = 0;
        for (std::size_t b = 0; b < zero.size(); ++b)
            if ((mask >> b) & 1U) {
                y.insert(zero[b]);
                degree += t[zero[b]];
            }
        const BigInt bound = -m1 * pairing(g, y, rep.zero_curve);
        if (degree < bound || bound < 0)
            return false;
    }
    BigInt zero_degree = 0;
    for (std::size_t i : zero)
        zero_degree += t[i];
    const BigInt strict = m1 * BigInt(k_of(g, rep.zero_curve));
    return zero_degree >= strict && strict > 0;
}

/// Non-loop nodes joining components on distinct levels of D.
inline NodeSet s_of_divisor(const CurveGraph &g, const Divisor &d) {
    if (d.size() != g.component_count())
        throw Error(ErrorCode::invalid_argument, "divisor length does not match the number of components");
    std::vector<EdgeId> out;
    for (const Edge &e : g.edges())
        if (d[e.u] != d[e.v])
            out.push_back(e.id);
    return NodeSet(std::move(out));
}

inline NodeSet s_of_multidegree(const Lattice &lattice, const Multidegree &t) {
    return s_of_divisor(lattice.graph(), detail::require_lambda(lattice, t));
}

inline bool is_sum_of_tails(const CurveGraph &g, const Divisor &d) {
    return s_of_divisor(g, d).subset_of(separating_nodes(g));
}

/// t is the multidegree of a sum of tails.
inline bool lambda0_membership(const Lattice &lattice, const Multidegree &t) {
    const auto d = lattice.lambda_membership(t);
    if (!d)
        return false;
    return s_of_divisor(lattice.graph(), *d).subset_of(separating_nodes(lattice.graph()));
}

/// Exponent b(S(t)) of the torus parametrising twisters of multidegree t.
inline std::size_t twister_space_dim(const Lattice &lattice, const Multidegree &t) {
    return betti(lattice.graph(), s_of_multidegree(lattice, t));
}

} // namespace nodal
