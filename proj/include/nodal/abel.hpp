#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"
#include "lattice.hpp"
#include "levels.hpp"

namespace nodal {

/// Essential connectivity: a nonnegative integer or +infinity.
class Connectivity {
  public:
    static Connectivity infinity() { return Connectivity(); }
    explicit Connectivity(std::size_t value) : value_(value) {}

    [[nodiscard]] bool is_infinite() const noexcept { return !value_.has_value(); }
    [[nodiscard]] std::optional<std::size_t> value() const noexcept { return value_; }

    /// epsilon > d; infinity exceeds every integer.
    [[nodiscard]] bool exceeds(std::int64_t d) const noexcept {
        return is_infinite() || d < 0 || *value_ > static_cast<std::size_t>(d);
    }

    [[nodiscard]] std::string str() const { return value_ ? std::to_string(*value_) : "infinity"; }

    friend bool operator==(const Connectivity &, const Connectivity &) = default;

  private:
    Connectivity() = default;
    std::optional<std::size_t> value_;
};

/// Which defining set the infimum runs over.
enum class EpsilonForm {
    /// Proper subcurves whose cut contains a non-separating node.
    all_subcurves,
    /// As above, restricted to connected subcurves.
    connected_subcurves,
    /// Proper subcurves whose cut contains no separating node at all.
    no_separating_in_cut,
};

inline Connectivity essential_connectivity(const CurveGraph &g, EpsilonForm form = EpsilonForm::all_subcurves) {
    const std::size_t n = g.component_count();
    if (n > 30)
        throw Error(ErrorCode::invalid_argument, "subcurve enumeration limited to 30 components");
    const NodeSet separating = separating_nodes(g);
    std::optional<std::size_t> best;
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t mask = 1; mask < full; ++mask) {
        const Subcurve z = Subcurve::from_mask(n, mask);
        if (form == EpsilonForm::connected_subcurves && !is_connected_subcurve(g, z))
            continue;
        const NodeSet cut = cut_edges(g, z);
        bool admissible = false;
        if (form == EpsilonForm::no_separating_in_cut) {
            admissible = std::none_of(cut.ids().begin(), cut.ids().end(),
                                      [&](EdgeId id) { return separating.contains(id); });
        } else {
            admissible = !cut.subset_of(separating);
        }
        if (admissible && (!best || cut.size() < *best))
            best = cut.size();
    }
    return best ? Connectivity(*best) : Connectivity::infinity();
}

/// Natural d-th Abel maps exist exactly when epsilon(X) > d.
inline bool has_natural_abel_map(const CurveGraph &g, std::int64_t d) {
    if (d < 1)
        throw Error(ErrorCode::invalid_argument, "the degree must be a positive integer");
    return essential_connectivity(g).exceeds(d);
}

/// Nonnegative vectors of length `components` summing to d, in lexicographic
/// order. Empty when d < 0.
inline std::vector<Multidegree> partitional_multidegrees(std::size_t components, std::int64_t d) {
    if (components == 0)
        throw Error(ErrorCode::invalid_argument, "need at least one component");
    std::vector<Multidegree> out;
    if (d < 0)
        return out;
    std::vector<std::int64_t> current(components, 0);
    // Fill positions left to right; the last position takes the remainder.
    auto fill = [&](auto &&self, std::size_t pos, std::int64_t remaining) -> void {
        if (pos + 1 == components) {
            current[pos] = remaining;
            std::vector<BigInt> values(current.begin(), current.end());
            out.emplace_back(std::move(values));
            return;
        }
        for (std::int64_t v = 0; v <= remaining; ++v) {
            current[pos] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    fill(fill, 0, d);
    return out;
}

inline std::int64_t to_degree(const BigInt &value) {
    if (value > BigInt(std::numeric_limits<std::int32_t>::max()) ||
        value < BigInt(std::numeric_limits<std::int32_t>::min()))
        throw Error(ErrorCode::invalid_argument, "degree out of supported range");
    return static_cast<std::int64_t>(value);
}

/// Lexicographically smallest partitional multidegree in the class, if any.
inline std::optional<Multidegree> class_has_partitional_rep(const Lattice &lattice, const DegreeClass &cls) {
    const std::int64_t d = to_degree(cls.total_degree());
    for (Multidegree &candidate : partitional_multidegrees(lattice.dimension(), d))
        if (lattice.class_of(candidate) == cls)
            return std::move(candidate);
    return std::nullopt;
}

/// A choice r of one representative per class of Delta_X^d, keyed by the
/// canonical representative of the class.
struct RepChooser {
    std::int64_t degree = 0;
    std::map<Multidegree, Multidegree> table;

    [[nodiscard]] const Multidegree &operator()(const DegreeClass &cls) const {
        auto it = table.find(cls.representative);
        if (it == table.end())
            throw Error(ErrorCode::invalid_chooser, "chooser has no entry for class " + cls.representative.str());
        return it->second;
    }
};

/// Fails unless every value has total degree d and lies in its key's class,
/// and every class of degree d has an entry.
inline void validate_chooser(const Lattice &lattice, const RepChooser &r) {
    for (const auto &[key, value] : r.table) {
        if (value.total() != r.degree)
            throw Error(ErrorCode::invalid_chooser, "representative " + value.str() + " has the wrong total degree");
        if (lattice.class_of(value).representative != key)
            throw Error(ErrorCode::invalid_chooser, "representative " + value.str() + " is not in its class");
    }
    if (BigInt(r.table.size()) != lattice.class_group_order())
        throw Error(ErrorCode::invalid_chooser, "chooser does not cover every class");
}

/// Partitional classes get their lexicographically smallest partitional
/// member; the others keep the canonical representative.
inline RepChooser choose_representatives(const Lattice &lattice, std::int64_t d) {
    if (d < 1)
        throw Error(ErrorCode::invalid_argument, "the degree must be a positive integer");
    RepChooser r;
    r.degree = d;
    for (Multidegree &candidate : partitional_multidegrees(lattice.dimension(), d))
        r.table.try_emplace(lattice.class_of(candidate).representative, std::move(candidate));
    for (DegreeClass &cls : lattice.enumerate_classes(d))
        r.table.try_emplace(cls.representative, cls.representative);
    return r;
}

/// Builds a chooser from explicit representatives; classes not mentioned
/// fall back to their canonical representative.
inline RepChooser chooser_from_representatives(const Lattice &lattice, std::int64_t d,
                                               const std::vector<Multidegree> &representatives) {
    RepChooser r;
    r.degree = d;
    for (const Multidegree &rep : representatives) {
        if (rep.size() != lattice.dimension())
            throw Error(ErrorCode::invalid_chooser, "representative " + rep.str() + " has the wrong length");
        if (rep.total() != d)
            throw Error(ErrorCode::invalid_chooser, "representative " + rep.str() + " has the wrong total degree");
        if (!r.table.try_emplace(lattice.class_of(rep).representative, rep).second)
            throw Error(ErrorCode::invalid_chooser, "two representatives given for the class of " + rep.str());
    }
    for (DegreeClass &cls : lattice.enumerate_classes(d))
        r.table.try_emplace(cls.representative, cls.representative);
    return r;
}

/// The Abel map attached to r is natural iff d - r([d]) is the multidegree
/// of a sum of tails for every partitional d.
inline bool is_natural(const Lattice &lattice, std::int64_t d, const RepChooser &r) {
    if (r.degree != d)
        throw Error(ErrorCode::invalid_chooser, "chooser was built for another degree");
    validate_chooser(lattice, r);
    for (const Multidegree &p : partitional_multidegrees(lattice.dimension(), d))
        if (!lambda0_membership(lattice, p - r(lattice.class_of(p))))
            return false;
    return true;
}

struct NaturalStructure {
    bool exists = false;
    std::size_t partitional_count = 0;
    /// No separating nodes, so Lambda_X^0 = {0}.
    bool lambda0_trivial = false;
    /// Rank of Lambda_X^0: one free generator per separating node.
    std::size_t lambda0_rank = 0;
    bool unique = false;
};

inline NaturalStructure count_natural_structure(const Lattice &lattice, std::int64_t d) {
    NaturalStructure out;
    out.exists = has_natural_abel_map(lattice.graph(), d);
    out.partitional_count = partitional_multidegrees(lattice.dimension(), d).size();
    out.lambda0_rank = separating_nodes(lattice.graph()).size();
    out.lambda0_trivial = out.lambda0_rank == 0;
    out.unique = out.exists && out.lambda0_trivial;
    return out;
}

/// Outcome of the brute-force check of the theorem on one (curve, degree).
struct TheoremCheck {
    /// Every difference of two equivalent partitional multidegrees lies in
    /// Lambda_X^0 (computed by enumerating pairs).
    bool pairs_in_lambda0 = false;
    /// epsilon(X) > d.
    bool criterion = false;
    /// The chooser built from partitional representatives is natural.
    bool chooser_natural = false;

    [[nodiscard]] bool ok() const noexcept {
        return pairs_in_lambda0 == criterion && chooser_natural == criterion;
    }
};

inline TheoremCheck verify_theorem(const Lattice &lattice, std::int64_t d) {
    TheoremCheck out;
    out.criterion = has_natural_abel_map(lattice.graph(), d);
    const auto part = partitional_multidegrees(lattice.dimension(), d);
    out.pairs_in_lambda0 = true;
    for (std::size_t i = 0; i < part.size() && out.pairs_in_lambda0; ++i)
        for (std::size_t j = i + 1; j < part.size(); ++j) {
            if (!lattice.equivalent(part[i], part[j]))
                continue;
            if (!lambda0_membership(lattice, part[i] - part[j])) {
                out.pairs_in_lambda0 = false;
                break;
            }
        }
    out.chooser_natural = is_natural(lattice, d, choose_representatives(lattice, d));
    return out;
}

} // namespace nodal
