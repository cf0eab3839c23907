#pragma once

// Cycle structure of set systems (weak beta-cycles, pure cycles, gamma
// triangles), hierarchy-type recognition, and the second-order transit
// axioms (tb), (tb'), (hc), (tb2), (p4).

#include <optional>
#include <vector>

#include "clusterax/axiom_id.hpp"
#include "clusterax/setcore.hpp"
#include "clusterax/transit.hpp"

namespace clusterax {

/// Sets C_1..C_n (n >= 3) with pivots x_i in C_i ∩ C_{i+1} that lie in no
/// other C_k (indices mod n).
struct CycleWitness {
    std::vector<Subset> sets;
    std::vector<Vertex> pivots;
};

/// Re-checks the defining conditions directly.
bool is_valid_cycle(const CycleWitness& cycle);

/// Additionally requires C_i ∩ C_j = ∅ for non-consecutive i, j.
bool is_pure_cycle(const CycleWitness& cycle);

/// Shortest weak beta-cycle first; `max_length` = 0 means unbounded.
std::optional<CycleWitness> find_weak_beta_cycle(const SetSystem& c, std::size_t max_length = 0);
std::optional<CycleWitness> find_pure_cycle(const SetSystem& c, std::size_t max_length = 0);

/// No weak beta-cycle. Witness: sets = cycle, vertices = pivots.
Verdict is_totally_balanced(const SetSystem& c);

/// A∩B∩C ∈ {A∩B, A∩C, B∩C} for all members. Witness: sets = (A, B, C).
Verdict is_weak_hierarchy(const SetSystem& c);

/// V and all singletons present, members pairwise nested or disjoint.
/// Witness: sets = (A, B) for an overlapping pair, or a note naming the
/// missing member.
Verdict is_hierarchy(const SetSystem& c);

/// Each member overlaps at most one other. Witness: sets = (C, C', C'').
Verdict is_paired_hierarchy(const SetSystem& c);

enum class GammaObstruction { pure_cycle, gamma_triangle };

struct GammaReport {
    Verdict verdict;
    std::optional<GammaObstruction> kind;
};

/// Pure cycles are reported before gamma triangles. For a triangle the
/// witness is sets = (C1, C2, C3), vertices = (u, v).
GammaReport gamma_acyclicity(const SetSystem& c);

/// Whether condition (i) of (p4) also ranges over the closing pair
/// (x_n, x_1).
enum class P4IndexMode { open, cyclic };

/// Largest ground set accepted by the subset/sequence enumerations.
inline constexpr std::size_t kMaxSecondOrderVertices = 20;

/// id ∈ {tb, tb', hc, tb2, p4}. Witness layouts:
///   tb, hc, tb2 : sets = {W}, vertices = members of W
///   tb'         : vertices = (v_1, ..., v_n)
///   p4          : vertices = (u, v, y, x_1, ..., x_n)
Verdict check_second_order(const TransitFunction& r, AxiomId id, P4IndexMode mode = P4IndexMode::open);

}  // namespace clusterax
