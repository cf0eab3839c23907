#pragma once

// Transit functions R : V x V -> 2^V, the canonical transit function of a
// set system, and the correspondence between monotone transit functions and
// T-systems.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clusterax/setcore.hpp"

namespace clusterax {

/// Dense triangular index of the unordered pair {u, v} (u may equal v).
inline std::size_t pair_index(Vertex u, Vertex v) noexcept {
    if (u > v) {
        std::swap(u, v);
    }
    return v * (v + 1) / 2 + u;
}

inline std::size_t pair_count(std::size_t n) noexcept { return n * (n + 1) / 2; }

class TransitFunction {
public:
    /// `table[pair_index(u, v)]` holds R(u, v). Validates (t1) and (t3) and
    /// throws TransitError listing every violation.
    TransitFunction(GroundSet ground, std::vector<Mask> table);

    const GroundSet& ground() const noexcept { return ground_; }
    std::size_t n() const noexcept { return ground_.size(); }

    Mask mask(Vertex u, Vertex v) const noexcept { return table_[pair_index(u, v)]; }
    Subset operator()(Vertex u, Vertex v) const { return Subset(mask(u, v), n()); }
    const std::vector<Mask>& table() const noexcept { return table_; }

    friend bool operator==(const TransitFunction& a, const TransitFunction& b) {
        return a.ground_ == b.ground_ && a.table_ == b.table_;
    }

private:
    GroundSet ground_;
    std::vector<Mask> table_;
};

enum class TransitViolationKind { missing_pair, conflicting_entries, t1, t3, out_of_range };

struct TransitViolation {
    TransitViolationKind kind;
    Vertex u;
    Vertex v;
};

std::string describe(const GroundSet& ground, const TransitViolation& violation);

class TransitError : public UsageError {
public:
    TransitError(std::string message, std::vector<TransitViolation> violations)
        : UsageError(std::move(message)), violations_(std::move(violations)) {}

    const std::vector<TransitViolation>& violations() const noexcept { return violations_; }

private:
    std::vector<TransitViolation> violations_;
};

/// Raised by canonical_transit when some pair lies in no member.
class UncoveredPairError : public UsageError {
public:
    UncoveredPairError(std::string message, Vertex x, Vertex y)
        : UsageError(std::move(message)), x_(x), y_(y) {}
    Vertex x() const noexcept { return x_; }
    Vertex y() const noexcept { return y_; }

private:
    Vertex x_;
    Vertex y_;
};

/// Sparse table keyed by (u, v); either orientation may be used.
using TransitTable = std::map<std::pair<Vertex, Vertex>, Subset>;

/// Requires an entry for every unordered pair, diagonal included.
TransitFunction validate_transit(const GroundSet& ground, const TransitTable& table);

/// How pairs absent from a sparse listing are filled in.
enum class DefaultPair { error, universe, pair };

/// Builds a transit function from the listed pairs. Diagonal entries are
/// always {u}; unlisted off-diagonal pairs follow `fill`.
TransitFunction make_transit(const GroundSet& ground, const TransitTable& listed, DefaultPair fill);

/// Axiom (m). Witness: vertices = (u, v, p, q) with p, q in R(u,v) and
/// R(p,q) not inside R(u,v).
Verdict check_monotone(const TransitFunction& r);

/// R_C(x, y) = intersection of all members containing x and y, as a raw
/// table; the diagonal is {x} only when C holds every singleton.
std::vector<Mask> canonical_table(const SetSystem& c);

/// Throws UncoveredPairError for an uncovered pair and TransitError when a
/// singleton is missing (the result would violate (t3)).
TransitFunction canonical_transit(const SetSystem& c);

/// All distinct transit sets R(x, y).
SetSystem transit_sets(const TransitFunction& r);

struct TSystemReport {
    Verdict ks;
    Verdict kr;
    Verdict kc;
    /// When KR passes: a generating pair per member of C, aligned with C.sets().
    std::vector<std::pair<Vertex, Vertex>> generators;
    bool is_t_system = false;
};

TSystemReport check_t_system(const SetSystem& c);

struct RoundtripReport {
    bool equal = false;
    /// Pairs where canonical_transit(transit_sets(R)) differs from R.
    std::vector<std::pair<Vertex, Vertex>> changed_pairs;
    /// Members of C missing from / added to transit_sets(canonical_transit(C)).
    std::vector<Subset> lost;
    std::vector<Subset> gained;
    /// Set when the round trip could not be formed at all.
    std::optional<std::string> error;

    explicit operator bool() const noexcept { return equal; }
};

RoundtripReport bijection_roundtrip(const TransitFunction& r);
RoundtripReport bijection_roundtrip(const SetSystem& c);

}  // namespace clusterax
