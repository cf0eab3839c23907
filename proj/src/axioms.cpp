#include "clusterax/axioms.hpp"

#include <algorithm>
#include <optional>
#include <span>
#include <vector>

#include "detail.hpp"

namespace clusterax {

using detail::TransitView;

namespace {

using Family = std::span<const Mask>;
using Indices = std::vector<std::size_t>;

bool member(Family f, Mask m) { return std::find(f.begin(), f.end(), m) != f.end(); }

bool meets(Mask a, Mask b) { return (a & b) != 0; }

// Set-level patterns shared by the transit-side and set-side checkers. Each
// returns the indices of a violating tuple in the axiom's letter order.

std::optional<Indices> find_intersection_gap(Family f) {
    for (std::size_t a = 0; a < f.size(); ++a) {
        for (std::size_t b = a; b < f.size(); ++b) {
            const Mask ab = f[a] & f[b];
            if (ab != 0 && !member(f, ab)) {
                return Indices{a, b};
            }
        }
    }
    return std::nullopt;
}

std::optional<Indices> find_union_gap(Family f) {
    for (std::size_t a = 0; a < f.size(); ++a) {
        for (std::size_t b = a + 1; b < f.size(); ++b) {
            if (meets(f[a], f[b]) && !member(f, f[a] | f[b])) {
                return Indices{a, b};
            }
        }
    }
    return std::nullopt;
}

std::optional<Indices> find_wp(Family f) {
    for (std::size_t a = 0; a < f.size(); ++a) {
        for (std::size_t b = a + 1; b < f.size(); ++b) {
            if (!meets(f[a], f[b])) {
                continue;
            }
            for (std::size_t c = b + 1; c < f.size(); ++c) {
                const Mask x = f[a], y = f[b], z = f[c];
                if (!meets(x, z) || !meets(y, z)) {
                    continue;
                }
                if (!subset_of(x, y | z) && !subset_of(y, x | z) && !subset_of(z, x | y)) {
                    return Indices{a, b, c};
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<Indices> find_i(Family f) {
    for (std::size_t a = 0; a < f.size(); ++a) {
        for (std::size_t b = a + 1; b < f.size(); ++b) {
            const Mask ab = f[a] & f[b];
            if (ab == 0) {
                continue;
            }
            for (std::size_t c = 0; c < f.size(); ++c) {
                const Mask z = f[c];
                if (subset_of(ab, z) && (z & ~(f[a] | f[b])) != 0 && !subset_of(f[a], z) && !subset_of(f[b], z)) {
                    return Indices{a, b, c};
                }
            }
        }
    }
    return std::nullopt;
}

// Calls visit(a, b, c) for A ≬ B ≬ C with A ≠ C until it returns true.
template <class Visit>
std::optional<Indices> overlap_chains(Family f, Visit&& visit) {
    for (std::size_t a = 0; a < f.size(); ++a) {
        for (std::size_t b = 0; b < f.size(); ++b) {
            if (!masks_overlap(f[a], f[b])) {
                continue;
            }
            for (std::size_t c = 0; c < f.size(); ++c) {
                if (c != a && masks_overlap(f[b], f[c]) && visit(a, b, c)) {
                    return Indices{a, b, c};
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<Indices> find_l1(Family f) {
    return overlap_chains(f, [f](std::size_t a, std::size_t b, std::size_t c) {
        const Mask x = f[a], y = f[b], z = f[c];
        return !subset_of(x, z) && !subset_of(z, x) && !(subset_of(x & z, y) && subset_of(y, x | z));
    });
}

std::optional<Indices> find_n3o(Family f) {
    return overlap_chains(f, [f](std::size_t a, std::size_t, std::size_t c) { return masks_overlap(f[a], f[c]); });
}

std::optional<Indices> find_l2_prime(Family f) {
    return overlap_chains(f, [f](std::size_t a, std::size_t b, std::size_t c) {
        return !meets(f[a], f[c]) && !member(f, f[a] | f[b] | f[c]);
    });
}

std::optional<Indices> find_l2_dprime(Family f) {
    std::size_t found = 0;
    auto hit = overlap_chains(f, [f, &found](std::size_t a, std::size_t b, std::size_t c) {
        if (meets(f[a], f[c])) {
            return false;
        }
        const Mask ends = (f[a] | f[c]) & ~f[b];
        const Mask all = f[a] | f[b] | f[c];
        for (std::size_t d = 0; d < f.size(); ++d) {
            if (subset_of(ends, f[d]) && !subset_of(all, f[d])) {
                found = d;
                return true;
            }
        }
        return false;
    });
    if (hit) {
        hit->push_back(found);
    }
    return hit;
}

// Result in letter order (A, B, C, D).
std::optional<Indices> find_p2(Family f) {
    for (std::size_t d = 0; d < f.size(); ++d) {
        std::vector<std::size_t> around;
        for (std::size_t s = 0; s < f.size(); ++s) {
            if (masks_overlap(f[s], f[d])) {
                around.push_back(s);
            }
        }
        const Mask dm = f[d];
        for (std::size_t i = 0; i < around.size(); ++i) {
            for (std::size_t j = i + 1; j < around.size(); ++j) {
                for (std::size_t k = j + 1; k < around.size(); ++k) {
                    const Mask a = f[around[i]], b = f[around[j]], c = f[around[k]];
                    if (!subset_of(a, dm | b | c) && !subset_of(b, dm | a | c) && !subset_of(c, dm | a | b)) {
                        return Indices{around[i], around[j], around[k], d};
                    }
                }
            }
        }
    }
    return std::nullopt;
}

// Result in letter order (A, B, C, D): A ≬ B ≬ C, B ≬ D, A ∪ C ⊆ D,
// A ∩ C = ∅. Loops run B, D, A, C.
std::optional<Indices> find_p3(Family f) {
    for (std::size_t b = 0; b < f.size(); ++b) {
        for (std::size_t d = 0; d < f.size(); ++d) {
            if (!masks_overlap(f[b], f[d])) {
                continue;
            }
            for (std::size_t a = 0; a < f.size(); ++a) {
                if (!subset_of(f[a], f[d]) || !masks_overlap(f[a], f[b])) {
                    continue;
                }
                for (std::size_t c = 0; c < f.size(); ++c) {
                    if (subset_of(f[c], f[d]) && masks_overlap(f[c], f[b]) && !meets(f[a], f[c])) {
                        return Indices{a, b, c, d};
                    }
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<Indices> find_p3_prime(Family f) {
    std::size_t found = 0;
    auto hit = overlap_chains(f, [f, &found](std::size_t a, std::size_t b, std::size_t c) {
        if (meets(f[a], f[c])) {
            return false;
        }
        for (std::size_t d = 0; d < f.size(); ++d) {
            if (subset_of(f[a] | f[c], f[d]) && !subset_of(f[b], f[d])) {
                found = d;
                return true;
            }
        }
        return false;
    });
    if (hit) {
        hit->push_back(found);
    }
    return hit;
}

// ---------------------------------------------------------------- transit

Witness pair_witness(const TransitFunction& r, const TransitView& view, const Indices& idx) {
    Witness w;
    for (std::size_t i : idx) {
        detail::append_pair(w.vertices, view.gen[i]);
        w.sets.emplace_back(view.sets[i], r.n());
    }
    return w;
}

Verdict from_sets(const TransitFunction& r, AxiomId id, std::optional<Indices> (*finder)(Family),
                  std::initializer_list<std::size_t> order = {}) {
    const TransitView view(r);
    auto hit = finder(view.sets);
    const std::string label(name(id));
    if (!hit) {
        return Verdict::pass(label);
    }
    Indices idx = *hit;
    if (order.size() != 0) {
        Indices permuted;
        for (std::size_t pos : order) {
            permuted.push_back(idx[pos]);
        }
        idx = permuted;
    }
    return Verdict::fail(label, pair_witness(r, view, idx));
}

Verdict check_a_prime(const TransitFunction& r) {
    const Mask all = full_mask(r.n());
    for (Vertex u = 0; u < r.n(); ++u) {
        for (Vertex v = u; v < r.n(); ++v) {
            if (r.mask(u, v) == all) {
                return Verdict::pass("a'");
            }
        }
    }
    return Verdict::fail("a'", Witness{{}, {}, "no pair spans V"});
}

Verdict check_w(const TransitFunction& r) {
    const std::size_t n = r.n();
    for (Vertex x = 0; x < n; ++x) {
        for (Vertex y = x + 1; y < n; ++y) {
            for (Vertex z = y + 1; z < n; ++z) {
                if ((r.mask(x, y) & bit(z)) == 0 && (r.mask(x, z) & bit(y)) == 0 && (r.mask(y, z) & bit(x)) == 0) {
                    return Verdict::fail("w", Witness{{x, y, z}, {}, {}});
                }
            }
        }
    }
    return Verdict::pass("w");
}

Verdict check_b3(const TransitFunction& r) {
    const std::size_t n = r.n();
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) {
            for (Mask xs = r.mask(u, v); xs != 0; xs &= xs - 1) {
                const Vertex x = static_cast<Vertex>(lowest(xs));
                for (Mask ys = r.mask(u, x); ys != 0; ys &= ys - 1) {
                    const Vertex y = static_cast<Vertex>(lowest(ys));
                    if ((r.mask(y, v) & bit(x)) == 0) {
                        return Verdict::fail("b3", Witness{{u, v, x, y}, {}, {}});
                    }
                }
            }
        }
    }
    return Verdict::pass("b3");
}

Verdict check_b4(const TransitFunction& r) {
    const std::size_t n = r.n();
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u; v < n; ++v) {
            for (Mask xs = r.mask(u, v); xs != 0; xs &= xs - 1) {
                const Vertex x = static_cast<Vertex>(lowest(xs));
                if ((r.mask(u, x) & r.mask(x, v)) != bit(x)) {
                    return Verdict::fail("b4", Witness{{u, v, x}, {}, {}});
                }
            }
        }
    }
    return Verdict::pass("b4");
}

Verdict check_u(const TransitFunction& r) {
    const std::size_t n = r.n();
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u; v < n; ++v) {
            const Mask s = r.mask(u, v);
            for (Mask zs = s; zs != 0; zs &= zs - 1) {
                const Vertex z = static_cast<Vertex>(lowest(zs));
                if ((r.mask(u, z) | r.mask(z, v)) != s) {
                    return Verdict::fail("u", Witness{{u, v, z}, {}, {}});
                }
            }
        }
    }
    return Verdict::pass("u");
}

Verdict check_u3(const TransitFunction& r) {
    const std::size_t n = r.n();
    for (Vertex x = 0; x < n; ++x) {
        for (Vertex y = x + 1; y < n; ++y) {
            const Mask s = r.mask(x, y);
            const Mask inner = s & ~(bit(x) | bit(y));
            if (inner == 0) {
                continue;
            }
            bool found = false;
            for (Mask zs = inner; zs != 0 && !found; zs &= zs - 1) {
                const Vertex z = static_cast<Vertex>(lowest(zs));
                found = (r.mask(x, z) | r.mask(z, y)) == s;
            }
            if (!found) {
                return Verdict::fail("u3", Witness{{x, y}, {}, {}});
            }
        }
    }
    return Verdict::pass("u3");
}

Verdict check_o_prime(const TransitFunction& r) {
    const TransitView view(r);
    for (std::size_t i = 0; i < view.sets.size(); ++i) {
        const Mask s = view.sets[i];
        for (Mask zs = s; zs != 0; zs &= zs - 1) {
            const Vertex z = static_cast<Vertex>(lowest(zs));
            bool found = false;
            for (Mask ps = s; ps != 0 && !found; ps &= ps - 1) {
                const Mask left = r.mask(static_cast<Vertex>(lowest(ps)), z);
                for (Mask qs = s; qs != 0; qs &= qs - 1) {
                    if ((left | r.mask(z, static_cast<Vertex>(lowest(qs)))) == s) {
                        found = true;
                        break;
                    }
                }
            }
            if (!found) {
                return Verdict::fail("o'", Witness{{view.gen[i].first, view.gen[i].second, z}, {Subset(s, r.n())}, {}});
            }
        }
    }
    return Verdict::pass("o'");
}

Verdict check_l2(const TransitFunction& r) {
    const TransitView view(r);
    const Family f = view.sets;
    auto hit = overlap_chains(f, [&r, f](std::size_t a, std::size_t b, std::size_t c) {
        if (meets(f[a], f[c])) {
            return false;
        }
        const Mask all = f[a] | f[b] | f[c];
        for (Mask ss = f[a] & ~f[b]; ss != 0; ss &= ss - 1) {
            for (Mask ts = f[c] & ~f[b]; ts != 0; ts &= ts - 1) {
                if (r.mask(static_cast<Vertex>(lowest(ss)), static_cast<Vertex>(lowest(ts))) == all) {
                    return false;
                }
            }
        }
        return true;
    });
    if (!hit) {
        return Verdict::pass("l2");
    }
    return Verdict::fail("l2", pair_witness(r, view, *hit));
}

// -------------------------------------------------------------- set side

Verdict set_verdict(const SetSystem& c, AxiomId id, std::optional<Indices> (*finder)(Family)) {
    const std::string label(name(id));
    auto hit = finder(c.masks());
    if (!hit) {
        return Verdict::pass(label);
    }
    Witness w;
    for (std::size_t i : *hit) {
        w.sets.push_back(c.sets()[i]);
    }
    return Verdict::fail(label, std::move(w));
}

}  // namespace

Verdict check(const TransitFunction& r, AxiomId id, P4IndexMode mode) {
    switch (id) {
        case AxiomId::m:
            return check_monotone(r);
        case AxiomId::a_prime:
            return check_a_prime(r);
        case AxiomId::k:
            return from_sets(r, id, find_intersection_gap);
        case AxiomId::w:
            return check_w(r);
        case AxiomId::b3:
            return check_b3(r);
        case AxiomId::b4:
            return check_b4(r);
        case AxiomId::u:
            return check_u(r);
        case AxiomId::uc:
            return from_sets(r, id, find_union_gap);
        case AxiomId::u3:
            return check_u3(r);
        case AxiomId::o_prime:
            return check_o_prime(r);
        case AxiomId::wp:
            return from_sets(r, id, find_wp);
        case AxiomId::i:
            return from_sets(r, id, find_i);
        case AxiomId::l1:
            return from_sets(r, id, find_l1);
        case AxiomId::l2:
            return check_l2(r);
        case AxiomId::n3o:
            return from_sets(r, id, find_n3o);
        case AxiomId::p2:
            // (x,y),(u,v),(p,q) overlap (s,t).
            return from_sets(r, id, find_p2);
        case AxiomId::p3:
            // R(x,y) = B, R(u,v) = D, R(p,q) = A, R(s,t) = C.
            return from_sets(r, id, find_p3, {1, 3, 0, 2});
        case AxiomId::tb:
        case AxiomId::tb_prime:
        case AxiomId::hc:
        case AxiomId::tb2:
        case AxiomId::p4:
            return check_second_order(r, id, mode);
        default:
            throw UsageError("not a transit axiom: " + std::string(name(id)));
    }
}

Verdict check_set(const SetSystem& c, AxiomId id) {
    switch (id) {
        case AxiomId::K1:
            if (c.contains(full_mask(c.n()))) {
                return Verdict::pass("K1");
            }
            return Verdict::fail("K1", Witness{{}, {}, "V is not a member"});
        case AxiomId::K2:
            return intersection_closure_check(c);
        case AxiomId::UC:
            return set_verdict(c, id, find_union_gap);
        case AxiomId::WP:
            return set_verdict(c, id, find_wp);
        case AxiomId::I:
            return set_verdict(c, id, find_i);
        case AxiomId::L1:
            return set_verdict(c, id, find_l1);
        case AxiomId::N3O:
            return set_verdict(c, id, find_n3o);
        case AxiomId::L2_prime:
            return set_verdict(c, id, find_l2_prime);
        case AxiomId::L2_dprime:
            return set_verdict(c, id, find_l2_dprime);
        case AxiomId::P2:
            return set_verdict(c, id, find_p2);
        case AxiomId::P3:
            return set_verdict(c, id, find_p3);
        case AxiomId::P3_prime:
            return set_verdict(c, id, find_p3_prime);
        default:
            throw UsageError("not a set-system axiom: " + std::string(name(id)));
    }
}

std::map<AxiomId, Verdict> check_all(const TransitFunction& r, P4IndexMode mode) {
    std::map<AxiomId, Verdict> out;
    const SetSystem sets = transit_sets(r);
    for (AxiomId id : all_axioms()) {
        switch (side(id)) {
            case AxiomSide::transit_first_order:
                out.emplace(id, check(r, id, mode));
                break;
            case AxiomSide::transit_second_order:
                if (r.n() <= kMaxSecondOrderVertices) {
                    out.emplace(id, check(r, id, mode));
                }
                break;
            case AxiomSide::set_system:
                out.emplace(id, check_set(sets, id));
                break;
        }
    }
    return out;
}

std::string format_verdict(const GroundSet& ground, const Verdict& v) {
    std::string out = v.check + (v.passed ? " pass" : " fail");
    if (v.passed || !v.witness) {
        return out;
    }
    const Witness& w = *v.witness;
    std::vector<std::string> parts;
    if (!w.vertices.empty()) {
        std::string t = "(";
        for (std::size_t i = 0; i < w.vertices.size(); ++i) {
            t += (i ? ", " : "") + ground.label(w.vertices[i]);
        }
        parts.push_back(t + ")");
    }
    if (!w.sets.empty()) {
        std::string t;
        for (std::size_t i = 0; i < w.sets.size(); ++i) {
            t += (i ? " " : "") + ground.format(w.sets[i]);
        }
        parts.push_back(t);
    }
    if (!w.note.empty()) {
        parts.push_back(w.note);
    }
    out += " [witness: ";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        out += (i ? "; " : "") + parts[i];
    }
    return out + "]";
}

}  // namespace clusterax
