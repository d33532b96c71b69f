#pragma once

#include <algorithm>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "bigint.hpp"

namespace nodal {

namespace detail {

/// Shared storage for the two integer-vector value types. `Tag` keeps
/// divisors and multidegrees from mixing.
template <class Tag>
class IntVector {
  public:
    IntVector() = default;
    explicit IntVector(std::size_t n) : values_(n) {}
    explicit IntVector(std::vector<BigInt> values) : values_(std::move(values)) {}
    IntVector(std::initializer_list<long long> values) {
        values_.reserve(values.size());
        for (long long v : values)
            values_.emplace_back(v);
    }

    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] const std::vector<BigInt> &values() const noexcept { return values_; }
    const BigInt &operator[](std::size_t i) const { return values_.at(i); }
    BigInt &operator[](std::size_t i) { return values_.at(i); }

    [[nodiscard]] BigInt total() const {
        BigInt sum = 0;
        for (const auto &v : values_)
            sum += v;
        return sum;
    }

    [[nodiscard]] bool is_zero() const {
        return std::all_of(values_.begin(), values_.end(), [](const BigInt &v) { return v == 0; });
    }

    IntVector &operator+=(const IntVector &o) {
        check_same(o);
        for (std::size_t i = 0; i < values_.size(); ++i)
            values_[i] += o.values_[i];
        return *this;
    }
    IntVector &operator-=(const IntVector &o) {
        check_same(o);
        for (std::size_t i = 0; i < values_.size(); ++i)
            values_[i] -= o.values_[i];
        return *this;
    }
    friend IntVector operator+(IntVector a, const IntVector &b) { return a += b; }
    friend IntVector operator-(IntVector a, const IntVector &b) { return a -= b; }
    friend IntVector operator-(IntVector a) {
        for (auto &v : a.values_)
            v = -v;
        return a;
    }
    friend IntVector operator*(const BigInt &k, IntVector a) {
        for (auto &v : a.values_)
            v *= k;
        return a;
    }

    friend bool operator==(const IntVector &a, const IntVector &b) { return a.values_ == b.values_; }

    /// Lexicographic order.
    friend bool operator<(const IntVector &a, const IntVector &b) {
        return std::lexicographical_compare(a.values_.begin(), a.values_.end(), b.values_.begin(),
                                            b.values_.end());
    }

    [[nodiscard]] std::string str() const {
        std::ostringstream os;
        os << '(';
        for (std::size_t i = 0; i < values_.size(); ++i)
            os << (i ? ", " : "") << values_[i];
        os << ')';
        return os.str();
    }

    friend std::ostream &operator<<(std::ostream &os, const IntVector &v) { return os << v.str(); }

  private:
    void check_same(const IntVector &o) const {
        if (o.values_.size() != values_.size())
            throw Error(ErrorCode::invalid_argument, "vector length mismatch");
    }

    std::vector<BigInt> values_;
};

struct DivisorTag {};
struct MultidegreeTag {};

} // namespace detail

/// Integer combination of components, coefficient i on C_i.
using Divisor = detail::IntVector<detail::DivisorTag>;

/// Degree on each component; `total()` is |d|.
using Multidegree = detail::IntVector<detail::MultidegreeTag>;

/// Shift so the minimum coefficient is 0: canonical representative of D
/// modulo Z*X.
inline Divisor normalize_divisor(Divisor d) {
    if (d.size() == 0)
        return d;
    const BigInt lo = *std::min_element(d.values().begin(), d.values().end());
    for (std::size_t i = 0; i < d.size(); ++i)
        d[i] -= lo;
    return d;
}

} // namespace nodal
