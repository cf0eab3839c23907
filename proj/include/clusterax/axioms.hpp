#pragma once

// Axiom checkers. Transit-side checks quantify over vertices (through the
// distinct transit sets and their first generating pair); set-side checks
// quantify over members.
//
// Witness layouts (vertices, in quantifier order):
//   m            (u, v, p, q)
//   a'           none; note only
//   k            (u, v, x, y)
//   w            (x, y, z)
//   b3           (u, v, x, y)
//   b4, u, o'    (u, v, x) / (u, v, z)
//   uc           (x, y, u, v)
//   u3           (x, y)
//   wp           (u, v, x, y, p, q)
//   i            (x, y, u, v, p, q)
//   l1, n3o, l2  (x, y, p, q, u, v)
//   p2, p3       (x, y, u, v, p, q, s, t)
// Transit-side witnesses also list the sets R(., .) in the same order.
// Set-side witnesses list members in the letter order of the axiom.

#include <map>
#include <string>

#include "clusterax/axiom_id.hpp"
#include "clusterax/setcore.hpp"
#include "clusterax/structure.hpp"
#include "clusterax/transit.hpp"

namespace clusterax {

/// Any transit-side id (first or second order).
Verdict check(const TransitFunction& r, AxiomId id, P4IndexMode mode = P4IndexMode::open);

/// Any set-side id.
Verdict check_set(const SetSystem& c, AxiomId id);

/// Every transit-side verdict on R plus every set-side verdict on its
/// transit sets, keyed in enumeration order. Second-order axioms are
/// skipped above kMaxSecondOrderVertices.
std::map<AxiomId, Verdict> check_all(const TransitFunction& r, P4IndexMode mode = P4IndexMode::open);

/// "AXIOM pass" or "AXIOM fail [witness: ...]".
std::string format_verdict(const GroundSet& ground, const Verdict& v);

}  // namespace clusterax
