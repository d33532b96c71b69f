#pragma once

#include <optional>
#include <string>
#include <vector>

#include "divisor.hpp"
#include "graph.hpp"
#include "matrix.hpp"

namespace nodal {

/// A class in Delta_X^d, identified by its canonical coset representative.
struct DegreeClass {
    Multidegree representative;

    [[nodiscard]] BigInt total_degree() const { return representative.total(); }

    friend bool operator==(const DegreeClass &, const DegreeClass &) = default;
    friend bool operator<(const DegreeClass &a, const DegreeClass &b) {
        return a.representative < b.representative;
    }
};

/// The twister lattice Lambda_X (image of the pairing matrix) of a curve,
/// together with its Hermite basis and Smith invariants. Everything is
/// computed once in the constructor; afterwards the object is read-only and
/// may be shared between threads.
class Lattice {
  public:
    explicit Lattice(CurveGraph graph)
        : graph_(std::move(graph)), pairing_(to_int_matrix(nodal::pairing_matrix(graph_))),
          hnf_(hermite_rows(pairing_)), pivots_(pivot_columns(hnf_)),
          invariants_(smith_invariants(pairing_)) {
        const std::size_t n = graph_.component_count();
        IntMatrix reduced(n - 1, std::vector<BigInt>(n - 1));
        for (std::size_t i = 0; i + 1 < n; ++i)
            for (std::size_t j = 0; j + 1 < n; ++j)
                reduced[i][j] = -pairing_[i][j];
        spanning_trees_ = bareiss_determinant(reduced);
    }

    [[nodiscard]] const CurveGraph &graph() const noexcept { return graph_; }
    [[nodiscard]] std::size_t dimension() const noexcept { return graph_.component_count(); }
    [[nodiscard]] const IntMatrix &pairing_matrix() const noexcept { return pairing_; }

    /// Rows of the Hermite normal form of Lambda_X.
    [[nodiscard]] const IntMatrix &hnf_basis() const noexcept { return hnf_; }
    [[nodiscard]] const std::vector<BigInt> &invariant_factors() const noexcept { return invariants_; }
    [[nodiscard]] std::size_t pairing_rank() const noexcept { return invariants_.size(); }

    /// Matrix-tree count: determinant of the Laplacian with the last row and
    /// column removed.
    [[nodiscard]] const BigInt &spanning_tree_count() const noexcept { return spanning_trees_; }

    /// #Delta_X^d. The Smith invariant product, the Hermite pivot product and
    /// the spanning-tree count must agree; a mismatch is an internal error.
    [[nodiscard]] BigInt class_group_order() const {
        BigInt smith = 1;
        for (const auto &f : invariants_)
            smith *= f;
        if (smith != spanning_trees_ || hermite_index() != spanning_trees_ ||
            pairing_rank() + 1 != dimension())
            throw Error(ErrorCode::internal, "class group order mismatch: smith=" + smith.str() +
                                                 " hermite=" + hermite_index().str() +
                                                 " trees=" + spanning_trees_.str());
        return smith;
    }

    /// deg D = ((D.C_1), ..., (D.C_n)).
    [[nodiscard]] Multidegree multidegree_of(const Divisor &d) const {
        check_length(d.size());
        Multidegree out(dimension());
        for (std::size_t i = 0; i < dimension(); ++i)
            for (std::size_t j = 0; j < dimension(); ++j)
                out[i] += pairing_[i][j] * d[j];
        return out;
    }

    /// The normalized divisor with multidegree t, if t lies in Lambda_X.
    /// Solves the reduced system (last coefficient pinned to 0) exactly over
    /// the rationals and accepts only integral solutions.
    [[nodiscard]] std::optional<Divisor> lambda_membership(const Multidegree &t) const {
        check_length(t.size());
        if (t.total() != 0)
            return std::nullopt;
        const std::size_t n = dimension();
        if (n == 1)
            return Divisor(1);
        IntMatrix reduced(n - 1, std::vector<BigInt>(n - 1));
        std::vector<BigInt> rhs(n - 1);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            for (std::size_t j = 0; j + 1 < n; ++j)
                reduced[i][j] = pairing_[i][j];
            rhs[i] = t[i];
        }
        const auto solution = solve_rational(reduced, rhs);
        if (!solution)
            throw Error(ErrorCode::internal, "reduced pairing matrix is singular");
        Divisor d(n);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (denominator((*solution)[i]) != 1)
                return std::nullopt;
            d[i] = numerator((*solution)[i]);
        }
        return normalize_divisor(std::move(d));
    }

    /// Membership decided by reduction against the Hermite basis.
    [[nodiscard]] bool contains(const Multidegree &t) const { return reduce(t).is_zero(); }

    [[nodiscard]] bool equivalent(const Multidegree &a, const Multidegree &b) const {
        check_length(a.size());
        check_length(b.size());
        if (a.total() != b.total())
            return false;
        return lambda_membership(a - b).has_value();
    }

    [[nodiscard]] DegreeClass class_of(const Multidegree &d) const { return DegreeClass{reduce(d)}; }

    /// All classes of total degree d, each by its canonical representative,
    /// in lexicographic order.
    [[nodiscard]] std::vector<DegreeClass> enumerate_classes(const BigInt &degree) const {
        const std::size_t n = dimension();
        for (std::size_t k = 0; k < pivots_.size(); ++k)
            if (pivots_[k] != k)
                throw Error(ErrorCode::internal, "unexpected Hermite pivot layout");
        std::vector<DegreeClass> out;
        Multidegree current(n);
        current[n - 1] = degree;
        // Odometer over the first n-1 coordinates, each in [0, pivot).
        while (true) {
            out.push_back(DegreeClass{current});
            std::size_t k = n - 1;
            while (k > 0) {
                --k;
                current[k] += 1;
                current[n - 1] -= 1;
                if (current[k] < hnf_[k][k])
                    break;
                current[n - 1] += current[k];
                current[k] = 0;
                if (k == 0)
                    return out;
            }
            if (n == 1)
                return out;
        }
    }

    /// The canonical coset representative of t + Lambda_X.
    [[nodiscard]] Multidegree reduce(Multidegree t) const {
        check_length(t.size());
        for (std::size_t k = 0; k < hnf_.size(); ++k) {
            const std::size_t c = pivots_[k];
            const BigInt q = floor_div(t[c], hnf_[k][c]);
            if (q == 0)
                continue;
            for (std::size_t j = 0; j < t.size(); ++j)
                t[j] -= q * hnf_[k][j];
        }
        return t;
    }

  private:
    [[nodiscard]] BigInt hermite_index() const {
        BigInt product = 1;
        for (std::size_t k = 0; k < hnf_.size(); ++k)
            product *= hnf_[k][pivots_[k]];
        return product;
    }

    void check_length(std::size_t n) const {
        if (n != dimension())
            throw Error(ErrorCode::invalid_argument, "vector has length " + std::to_string(n) + ", expected " +
                                                         std::to_string(dimension()));
    }

    CurveGraph graph_;
    IntMatrix pairing_;
    IntMatrix hnf_;
    std::vector<std::size_t> pivots_;
    std::vector<BigInt> invariants_;
    BigInt spanning_trees_;
};

} // namespace nodal
