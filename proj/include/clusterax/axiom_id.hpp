#pragma once

#include <optional>
#include <span>
#include <string_view>

namespace clusterax {

/// Every named axiom. Lower-case ids quantify over vertices of a transit
/// function; upper-case ids quantify over members of a set system.
enum class AxiomId {
    // transit side, first order
    m,
    a_prime,
    k,
    w,
    b3,
    b4,
    u,
    uc,
    u3,
    o_prime,
    wp,
    i,
    l1,
    l2,
    n3o,
    p2,
    p3,
    // transit side, second order
    tb,
    tb_prime,
    hc,
    tb2,
    p4,
    // set side
    K1,
    K2,
    UC,
    WP,
    I,
    L1,
    N3O,
    L2_prime,
    L2_dprime,
    P2,
    P3,
    P3_prime,
};

enum class AxiomSide { transit_first_order, transit_second_order, set_system };

std::string_view name(AxiomId id) noexcept;
std::optional<AxiomId> parse_axiom(std::string_view text) noexcept;
AxiomSide side(AxiomId id) noexcept;

std::span<const AxiomId> all_axioms() noexcept;
std::span<const AxiomId> first_order_transit_axioms() noexcept;
std::span<const AxiomId> second_order_axioms() noexcept;
std::span<const AxiomId> set_axioms() noexcept;

}  // namespace clusterax
