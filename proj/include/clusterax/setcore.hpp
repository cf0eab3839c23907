#pragma once

// Ground sets, bitset-encoded subsets and deduplicated set systems.
//
// A Subset is a single 64-bit word plus the size of the ground set it lives
// in; all binary operations check that both operands share that size. The
// hot loops in the axiom checkers work on the raw masks (Subset::bits()).

#include <bit>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace clusterax {

inline constexpr std::size_t kMaxVertices = 64;

using Vertex = std::size_t;
using Mask = std::uint64_t;

/// Thrown on contract violations by callers (mismatched ground sets,
/// out-of-range vertices, malformed input).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr Mask full_mask(std::size_t n) noexcept {
    return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

inline constexpr Mask bit(Vertex v) noexcept { return Mask{1} << v; }

inline constexpr bool subset_of(Mask a, Mask b) noexcept { return (a & ~b) == 0; }

inline constexpr bool masks_overlap(Mask a, Mask b) noexcept {
    return (a & b) != 0 && (a & ~b) != 0 && (b & ~a) != 0;
}

/// Index of the lowest member; undefined for the empty mask.
inline int lowest(Mask m) noexcept { return std::countr_zero(m); }

class Subset {
public:
    Subset() = default;
    Subset(Mask bits, std::size_t universe);

    static Subset of(std::size_t universe, std::initializer_list<Vertex> members);

    Mask bits() const noexcept { return bits_; }
    std::size_t universe() const noexcept { return universe_; }

    bool contains(Vertex v) const noexcept { return v < universe_ && ((bits_ >> v) & 1U); }
    std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
    bool empty() const noexcept { return bits_ == 0; }
    std::vector<Vertex> members() const;

    bool is_subset_of(const Subset& other) const;

    Subset operator|(const Subset& o) const;
    Subset operator&(const Subset& o) const;
    Subset operator-(const Subset& o) const;

    friend bool operator==(const Subset&, const Subset&) = default;

private:
    void require_same(const Subset& o) const;

    Mask bits_ = 0;
    std::size_t universe_ = 0;
};

/// Deterministic member order: by cardinality, then lexicographically by the
/// sorted member list ({a,b} < {a,c} < {b,c}).
bool canonical_less(Mask a, Mask b) noexcept;

class GroundSet {
public:
    explicit GroundSet(std::vector<std::string> labels);

    /// Labels "a", "b", ... (then "v26", "v27", ... past 'z').
    static GroundSet letters(std::size_t n);

    std::size_t size() const noexcept { return labels_->size(); }
    const std::string& label(Vertex v) const { return labels_->at(v); }
    const std::vector<std::string>& labels() const noexcept { return *labels_; }
    std::optional<Vertex> find(std::string_view label) const;
    Vertex index_of(std::string_view label) const;

    Subset universe() const { return Subset(full_mask(size()), size()); }
    Subset singleton(Vertex v) const;
    Subset subset(std::initializer_list<std::string_view> labels) const;
    Subset subset(std::span<const std::string> labels) const;

    std::string format(const Subset& s) const;
    std::string format(Mask m) const { return format(Subset(m, size())); }

    friend bool operator==(const GroundSet& a, const GroundSet& b) {
        return a.labels_ == b.labels_ || *a.labels_ == *b.labels_;
    }

private:
    std::shared_ptr<const std::vector<std::string>> labels_;
};

/// True iff a∩b, a∖b and b∖a are all non-empty.
bool overlaps(const Subset& a, const Subset& b);

class SetSystem {
public:
    /// Deduplicates and sorts; throws UsageError on an empty member or a
    /// member from a different ground set.
    SetSystem(GroundSet ground, std::vector<Subset> sets);
    SetSystem(GroundSet ground, std::span<const Mask> masks);

    const GroundSet& ground() const noexcept { return ground_; }
    std::size_t n() const noexcept { return ground_.size(); }
    std::span<const Subset> sets() const noexcept { return sets_; }
    std::span<const Mask> masks() const noexcept { return masks_; }
    std::size_t size() const noexcept { return sets_.size(); }

    bool contains(const Subset& s) const;
    bool contains(Mask m) const;

    /// Copy with all singletons added.
    SetSystem with_singletons() const;

    friend bool operator==(const SetSystem& a, const SetSystem& b) {
        return a.ground_ == b.ground_ && a.masks_ == b.masks_;
    }

private:
    GroundSet ground_;
    std::vector<Subset> sets_;
    std::vector<Mask> masks_;
};

/// Witness payload attached to a failing check. Layout is check-specific and
/// documented next to each checker: `vertices` holds the violating vertex
/// tuple in the order the axiom quantifies them, `sets` the violating sets.
struct Witness {
    std::vector<Vertex> vertices;
    std::vector<Subset> sets;
    std::string note;

    bool empty() const noexcept { return vertices.empty() && sets.empty() && note.empty(); }
};

struct Verdict {
    std::string check;
    bool passed = true;
    std::optional<Witness> witness;

    static Verdict pass(std::string check) { return {std::move(check), true, std::nullopt}; }
    static Verdict fail(std::string check, Witness w) { return {std::move(check), false, std::move(w)}; }
    explicit operator bool() const noexcept { return passed; }
};

/// Adjacency of the two-section: edges[v] is the mask of vertices sharing a
/// member with v (v itself excluded).
struct PrimalGraph {
    std::vector<Mask> adjacency;

    bool has_edge(Vertex x, Vertex y) const { return (adjacency.at(x) >> y) & 1U; }
    std::vector<std::pair<Vertex, Vertex>> edges() const;
};

PrimalGraph primal_graph(const SetSystem& c);

/// Maximal cliques of the two-section (Bron-Kerbosch with pivoting).
std::vector<Mask> maximal_cliques(const PrimalGraph& g);

/// Every maximal clique of the two-section lies in some member.
/// Witness: sets = {uncovered clique}.
Verdict is_conformal(const SetSystem& c);

/// Axiom (K2). Witness: sets = {A, B}.
Verdict intersection_closure_check(const SetSystem& c);

}  // namespace clusterax
