#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "bigint.hpp"

namespace nodal {

using IntMatrix = std::vector<std::vector<BigInt>>;

template <class T>
IntMatrix to_int_matrix(const std::vector<std::vector<T>> &m) {
    IntMatrix out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (const T &v : m[i])
            out[i].emplace_back(v);
    return out;
}

namespace detail {

inline void axpy_row(std::vector<BigInt> &target, const BigInt &k, const std::vector<BigInt> &source) {
    for (std::size_t j = 0; j < target.size(); ++j)
        target[j] -= k * source[j];
}

} // namespace detail

/// Row-style Hermite normal form of the lattice spanned by the rows of `m`.
/// Returns only the nonzero rows: echelon form with positive pivots and every
/// entry above a pivot reduced into [0, pivot).
inline IntMatrix hermite_rows(IntMatrix m) {
    if (m.empty())
        return m;
    const std::size_t rows = m.size();
    const std::size_t cols = m.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        while (true) {
            std::optional<std::size_t> best;
            for (std::size_t i = r; i < rows; ++i)
                if (m[i][c] != 0 && (!best || abs(m[i][c]) < abs(m[*best][c])))
                    best = i;
            if (!best)
                break;
            std::swap(m[r], m[*best]);
            bool cleared = true;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (m[i][c] == 0)
                    continue;
                detail::axpy_row(m[i], m[i][c] / m[r][c], m[r]);
                if (m[i][c] != 0)
                    cleared = false;
            }
            if (cleared)
                break;
        }
        if (m[r][c] == 0)
            continue;
        if (m[r][c] < 0)
            for (auto &v : m[r])
                v = -v;
        for (std::size_t i = 0; i < r; ++i)
            detail::axpy_row(m[i], floor_div(m[i][c], m[r][c]), m[r]);
        ++r;
    }
    m.resize(r);
    return m;
}

/// Column of the leading nonzero entry of each HNF row.
inline std::vector<std::size_t> pivot_columns(const IntMatrix &hnf) {
    std::vector<std::size_t> out;
    for (const auto &row : hnf) {
        std::size_t c = 0;
        while (c < row.size() && row[c] == 0)
            ++c;
        out.push_back(c);
    }
    return out;
}

/// Nonzero invariant factors d_1 | d_2 | ... of the Smith normal form.
inline std::vector<BigInt> smith_invariants(IntMatrix m) {
    std::vector<BigInt> factors;
    if (m.empty())
        return factors;
    const std::size_t rows = m.size();
    const std::size_t cols = m.front().size();
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        while (true) {
            std::optional<std::pair<std::size_t, std::size_t>> best;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (m[i][j] != 0 && (!best || abs(m[i][j]) < abs(m[best->first][best->second])))
                        best = {i, j};
            if (!best)
                return factors;
            std::swap(m[t], m[best->first]);
            for (auto &row : m)
                std::swap(row[t], row[best->second]);

            bool dirty = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (m[i][t] == 0)
                    continue;
                detail::axpy_row(m[i], m[i][t] / m[t][t], m[t]);
                dirty = dirty || m[i][t] != 0;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m[t][j] == 0)
                    continue;
                const BigInt q = m[t][j] / m[t][t];
                for (std::size_t i = t; i < rows; ++i)
                    m[i][j] -= q * m[i][t];
                dirty = dirty || m[t][j] != 0;
            }
            if (dirty)
                continue;
            // Pivot isolated; enforce divisibility of the remaining block.
            std::optional<std::size_t> offender;
            for (std::size_t i = t + 1; i < rows && !offender; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (m[i][j] % m[t][t] != 0) {
                        offender = i;
                        break;
                    }
            if (!offender)
                break;
            for (std::size_t j = t; j < cols; ++j)
                m[t][j] += m[*offender][j];
        }
        factors.push_back(abs(m[t][t]));
    }
    return factors;
}

/// Fraction-free (Bareiss) determinant of a square matrix.
inline BigInt bareiss_determinant(IntMatrix m) {
    const std::size_t n = m.size();
    if (n == 0)
        return 1;
    BigInt previous = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0)
                ++swap_row;
            if (swap_row == n)
                return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / previous;
        previous = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

/// Exact solution of a nonsingular square system over the rationals;
/// nullopt when the matrix is singular.
inline std::optional<std::vector<Rational>> solve_rational(const IntMatrix &a, const std::vector<BigInt> &rhs) {
    const std::size_t n = a.size();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = a[i][j];
        m[i][n] = rhs[i];
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0)
            ++p;
        if (p == n)
            return std::nullopt;
        std::swap(m[c], m[p]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || m[i][c] == 0)
                continue;
            const Rational f = m[i][c] / m[c][c];
            for (std::size_t j = c; j <= n; ++j)
                m[i][j] -= f * m[c][j];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = m[i][n] / m[i][i];
    return x;
}

} // namespace nodal
