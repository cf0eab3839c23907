#include "clusterax/transit.hpp"

#include <algorithm>

namespace clusterax {

namespace {

std::vector<TransitViolation> structural_violations(std::size_t n, const std::vector<Mask>& table) {
    std::vector<TransitViolation> out;
    const Mask universe = full_mask(n);
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex u = 0; u <= v; ++u) {
            const Mask m = table[pair_index(u, v)];
            if (!subset_of(m, universe)) {
                out.push_back({TransitViolationKind::out_of_range, u, v});
            } else if (u == v && m != bit(u)) {
                out.push_back({TransitViolationKind::t3, u, v});
            } else if ((m & bit(u)) == 0 || (m & bit(v)) == 0) {
                out.push_back({TransitViolationKind::t1, u, v});
            }
        }
    }
    return out;
}

std::string summarize(const GroundSet& g, const std::vector<TransitViolation>& vs) {
    std::string msg = "invalid transit function:";
    for (const auto& v : vs) {
        msg += "\n  " + describe(g, v);
    }
    return msg;
}

}  // namespace

std::string describe(const GroundSet& g, const TransitViolation& x) {
    const std::string pair = "(" + g.label(x.u) + "," + g.label(x.v) + ")";
    switch (x.kind) {
        case TransitViolationKind::missing_pair:
            return "missing pair " + pair;
        case TransitViolationKind::conflicting_entries:
            return "conflicting entries for " + pair;
        case TransitViolationKind::t1:
            return "(t1) violated: endpoints not in R" + pair;
        case TransitViolationKind::t3:
            return "(t3) violated: R" + pair + " is not a singleton";
        case TransitViolationKind::out_of_range:
            return "R" + pair + " has members outside the ground set";
    }
    return "unknown violation";
}

TransitFunction::TransitFunction(GroundSet ground, std::vector<Mask> table)
    : ground_(std::move(ground)), table_(std::move(table)) {
    if (table_.size() != pair_count(n())) {
        throw UsageError("transit table has " + std::to_string(table_.size()) + " entries, expected " +
                         std::to_string(pair_count(n())));
    }
    auto violations = structural_violations(n(), table_);
    if (!violations.empty()) {
        auto msg = summarize(ground_, violations);
        throw TransitError(std::move(msg), std::move(violations));
    }
}

TransitFunction validate_transit(const GroundSet& ground, const TransitTable& table) {
    const std::size_t n = ground.size();
    std::vector<std::optional<Mask>> slots(pair_count(n));
    std::vector<TransitViolation> violations;
    for (const auto& [key, value] : table) {
        const auto [u, v] = key;
        if (u >= n || v >= n || value.universe() != n) {
            throw UsageError("transit table entry outside the ground set");
        }
        auto& slot = slots[pair_index(u, v)];
        if (slot && *slot != value.bits()) {
            violations.push_back({TransitViolationKind::conflicting_entries, std::min(u, v), std::max(u, v)});
        }
        slot = value.bits();
    }
    std::vector<Mask> dense(pair_count(n), 0);
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex u = 0; u <= v; ++u) {
            const auto& slot = slots[pair_index(u, v)];
            if (!slot) {
                violations.push_back({TransitViolationKind::missing_pair, u, v});
            } else {
                dense[pair_index(u, v)] = *slot;
            }
        }
    }
    if (violations.empty()) {
        violations = structural_violations(n, dense);
    }
    if (!violations.empty()) {
        auto msg = summarize(ground, violations);
        throw TransitError(std::move(msg), std::move(violations));
    }
    return TransitFunction(ground, std::move(dense));
}

TransitFunction make_transit(const GroundSet& ground, const TransitTable& listed, DefaultPair fill) {
    const std::size_t n = ground.size();
    TransitTable full = listed;
    std::vector<TransitViolation> missing;
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex u = 0; u <= v; ++u) {
            if (full.count({u, v}) != 0 || full.count({v, u}) != 0) {
                continue;
            }
            if (u == v) {
                full.emplace(std::pair{u, v}, ground.singleton(u));
                continue;
            }
            switch (fill) {
                case DefaultPair::error:
                    missing.push_back({TransitViolationKind::missing_pair, u, v});
                    full.emplace(std::pair{u, v}, Subset(bit(u) | bit(v), n));
                    break;
                case DefaultPair::universe:
                    full.emplace(std::pair{u, v}, ground.universe());
                    break;
                case DefaultPair::pair:
                    full.emplace(std::pair{u, v}, Subset(bit(u) | bit(v), n));
                    break;
            }
        }
    }
    if (missing.empty()) {
        return validate_transit(ground, full);
    }
    try {
        (void)validate_transit(ground, full);
    } catch (const TransitError& e) {
        missing.insert(missing.end(), e.violations().begin(), e.violations().end());
    }
    auto msg = summarize(ground, missing);
    throw TransitError(std::move(msg), std::move(missing));
}

Verdict check_monotone(const TransitFunction& r) {
    const std::size_t n = r.n();
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u; v < n; ++v) {
            const Mask ruv = r.mask(u, v);
            for (Mask mp = ruv; mp != 0; mp &= mp - 1) {
                const Vertex p = static_cast<Vertex>(lowest(mp));
                for (Mask mq = ruv & ~full_mask(p); mq != 0; mq &= mq - 1) {
                    const Vertex q = static_cast<Vertex>(lowest(mq));
                    if (!subset_of(r.mask(p, q), ruv)) {
                        return Verdict::fail("m", Witness{{u, v, p, q}, {}, {}});
                    }
                }
            }
        }
    }
    return Verdict::pass("m");
}

std::vector<Mask> canonical_table(const SetSystem& c) {
    const std::size_t n = c.n();
    std::vector<Mask> table(pair_count(n), 0);
    for (Vertex y = 0; y < n; ++y) {
        for (Vertex x = 0; x <= y; ++x) {
            const Mask need = bit(x) | bit(y);
            Mask meet = full_mask(n);
            bool covered = false;
            for (Mask s : c.masks()) {
                if (subset_of(need, s)) {
                    meet &= s;
                    covered = true;
                }
            }
            if (!covered) {
                const auto& g = c.ground();
                throw UncoveredPairError(
                    "uncovered pair (" + g.label(x) + "," + g.label(y) + "): no member contains both", x, y);
            }
            table[pair_index(x, y)] = meet;
        }
    }
    return table;
}

TransitFunction canonical_transit(const SetSystem& c) { return TransitFunction(c.ground(), canonical_table(c)); }

SetSystem transit_sets(const TransitFunction& r) { return SetSystem(r.ground(), r.table()); }

TSystemReport check_t_system(const SetSystem& c) {
    TSystemReport rep{Verdict::pass("KS"), Verdict::pass("KR"), Verdict::pass("KC"), {}, false};
    const std::size_t n = c.n();
    for (Vertex v = 0; v < n; ++v) {
        if (!c.contains(bit(v))) {
            rep.ks = Verdict::fail("KS", Witness{{v}, {}, "missing singleton"});
            break;
        }
    }

    // (KR): some p, q in C such that every member holding p and q contains C.
    for (std::size_t i = 0; i < c.size(); ++i) {
        const Mask s = c.masks()[i];
        std::optional<std::pair<Vertex, Vertex>> gen;
        for (Mask mp = s; mp != 0 && !gen; mp &= mp - 1) {
            const Vertex p = static_cast<Vertex>(lowest(mp));
            for (Mask mq = s & ~full_mask(p); mq != 0; mq &= mq - 1) {
                const Vertex q = static_cast<Vertex>(lowest(mq));
                const Mask need = bit(p) | bit(q);
                const bool spans = std::all_of(c.masks().begin(), c.masks().end(), [&](Mask other) {
                    return !subset_of(need, other) || subset_of(s, other);
                });
                if (spans) {
                    gen = std::pair{p, q};
                    break;
                }
            }
        }
        if (!gen) {
            rep.kr = Verdict::fail("KR", Witness{{}, {c.sets()[i]}, "no generating pair"});
            rep.generators.clear();
            break;
        }
        rep.generators.push_back(*gen);
    }

    // (KC): the intersection of all members containing p and q is a member.
    // An uncovered pair has no such member and fails.
    for (Vertex q = 0; q < n && rep.kc.passed; ++q) {
        for (Vertex p = 0; p <= q; ++p) {
            const Mask need = bit(p) | bit(q);
            Mask meet = full_mask(n);
            bool covered = false;
            for (Mask s : c.masks()) {
                if (subset_of(need, s)) {
                    meet &= s;
                    covered = true;
                }
            }
            if (!covered || !c.contains(meet)) {
                rep.kc = Verdict::fail("KC", Witness{{p, q}, {}, covered ? "intersection not a member" : "uncovered pair"});
                break;
            }
        }
    }
    rep.is_t_system = rep.ks.passed && rep.kr.passed && rep.kc.passed;
    return rep;
}

RoundtripReport bijection_roundtrip(const TransitFunction& r) {
    RoundtripReport rep;
    const auto back = canonical_table(transit_sets(r));
    for (Vertex v = 0; v < r.n(); ++v) {
        for (Vertex u = 0; u <= v; ++u) {
            if (back[pair_index(u, v)] != r.mask(u, v)) {
                rep.changed_pairs.emplace_back(u, v);
            }
        }
    }
    rep.equal = rep.changed_pairs.empty();
    return rep;
}

RoundtripReport bijection_roundtrip(const SetSystem& c) {
    RoundtripReport rep;
    std::vector<Mask> table;
    try {
        table = canonical_table(c);
    } catch (const UncoveredPairError& e) {
        rep.error = e.what();
        return rep;
    }
    const SetSystem back(c.ground(), table);
    for (const auto& s : c.sets()) {
        if (!back.contains(s)) {
            rep.lost.push_back(s);
        }
    }
    for (const auto& s : back.sets()) {
        if (!c.contains(s)) {
            rep.gained.push_back(s);
        }
    }
    rep.equal = rep.lost.empty() && rep.gained.empty();
    return rep;
}

}  // namespace clusterax
