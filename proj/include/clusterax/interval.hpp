#pragma once

// Interval hypergraph (pre-pyramidal) recognition, Tucker's forbidden
// configurations, Duchet betweenness and the pyramidal verdicts.

#include <optional>
#include <vector>

#include "clusterax/setcore.hpp"
#include "clusterax/structure.hpp"
#include "clusterax/transit.hpp"

namespace clusterax {

/// perm[i] is the vertex at position i.
struct PyramidalOrder {
    std::vector<Vertex> perm;

    friend bool operator==(const PyramidalOrder&, const PyramidalOrder&) = default;
};

/// Every member is contiguous under `perm` (which must be a permutation).
bool is_compatible_order(const SetSystem& c, const std::vector<Vertex>& perm);

/// Picks whichever of perm / reversed perm has the lexicographically
/// smaller label sequence.
PyramidalOrder normalize(PyramidalOrder order, const GroundSet& ground);

/// Consecutive-ones decision procedure. Result is normalized.
std::optional<PyramidalOrder> find_pyramidal_order(const SetSystem& c);

/// Exhaustive permutation search, n <= kMaxBruteForceVertices.
inline constexpr std::size_t kMaxBruteForceVertices = 10;
std::optional<PyramidalOrder> find_pyramidal_order_bruteforce(const SetSystem& c);

/// Pre-pyramidal and (K2). Witness: a forbidden configuration or the
/// (K2) pair.
Verdict is_pyramidal(const SetSystem& c);
Verdict is_pyramidal(const TransitFunction& r);

/// A forbidden configuration as an induced sub-hypergraph: restricting the
/// listed members to the listed vertices gives the family's pattern.
///   1: sets C_1..C_m,            vertices pivots x_1..x_m
///   2: sets (A, B, C, D),        vertices (a1, a2, b1, b2, c1, c2)
///   3: sets (A, B, C, D),        vertices (v1, v2, v3, v4, v5)
///   4: sets (L, P_1..P_{m-1}),   vertices (x_1..x_m, y)
///   5: sets (L1, L2, P_1..P_{m-1}), vertices (x_1..x_m, y)
/// For families 4 and 5, k = m - 3 is the number of path sets lying
/// entirely inside the large set(s).
struct ConfigWitness {
    int family = 0;
    std::vector<Subset> sets;
    std::vector<Vertex> vertices;
    std::size_t k = 0;
};

/// Rebuilds the family's incidence pattern from the witness and compares it
/// with the actual restriction; also requires every set to be a member.
bool verify_config(const SetSystem& c, const ConfigWitness& w);

/// family in 1..5; smaller configurations first.
std::optional<ConfigWitness> detect_config(const SetSystem& c, int family);

/// First family (ascending) that is present.
std::optional<ConfigWitness> detect_any_config(const SetSystem& c);

/// Members of {x, y, z} lying between the other two: every hyperpath joining
/// the other two uses an edge containing it. x, y, z must be distinct.
std::vector<Vertex> duchet_between(const SetSystem& c, Vertex x, Vertex y, Vertex z);

/// Every triple of distinct vertices has a between vertex.
/// Witness: vertices = the first triple without one.
Verdict duchet_condition(const SetSystem& c);

/// (m), (tb), (p2), (p3), (p4) together. Witness: the first failing
/// axiom's witness, with its name in the note.
Verdict pyramidal_via_axioms(const TransitFunction& r, P4IndexMode mode = P4IndexMode::open);

/// R(u, v) equals the order interval [u, v] for every pair, under the order
/// found for the transit sets. Witness: vertices = (u, v).
Verdict interval_transit_check(const TransitFunction& r);

}  // namespace clusterax
