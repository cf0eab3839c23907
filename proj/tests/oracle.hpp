#pragma once

// Naive reference evaluators written directly from the axiom statements.
// They share nothing with the library's checkers except the data types:
// a transit function is read into a full n x n table of bit masks and
// every quantifier is a plain loop over vertices (or members).

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "clusterax/setcore.hpp"
#include "clusterax/structure.hpp"
#include "clusterax/transit.hpp"

namespace oracle {

using clusterax::P4IndexMode;
using clusterax::Vertex;
using M = std::uint64_t;
using Tuple = std::vector<Vertex>;

struct Table {
    std::size_t n = 0;
    std::vector<M> cell;  // cell[u * n + v]

    M operator()(Vertex u, Vertex v) const { return cell[u * n + v]; }
};

inline Table table_of(const clusterax::TransitFunction& r) {
    Table t{r.n(), std::vector<M>(r.n() * r.n())};
    for (Vertex u = 0; u < r.n(); ++u) {
        for (Vertex v = 0; v < r.n(); ++v) {
            t.cell[u * t.n + v] = r.mask(u, v);
        }
    }
    return t;
}

inline M b(Vertex v) { return M{1} << v; }
inline bool in(Vertex v, M s) { return (s >> v) & 1U; }
inline bool sub(M a, M c) { return (a & ~c) == 0; }
inline bool ovl(M a, M c) { return (a & c) != 0 && (a & ~c) != 0 && (c & ~a) != 0; }
inline M all(std::size_t n) { return n == 64 ? ~M{0} : (M{1} << n) - 1; }

// Exists p, q in V with R(p, q) == s.
inline bool is_transit_set(const Table& r, M s) {
    for (Vertex p = 0; p < r.n; ++p) {
        for (Vertex q = 0; q < r.n; ++q) {
            if (r(p, q) == s) {
                return true;
            }
        }
    }
    return false;
}

/// Number of quantified vertices of a first-order transit axiom.
inline std::size_t arity(const std::string& ax) {
    if (ax == "u3") return 2;
    if (ax == "w" || ax == "b4" || ax == "u" || ax == "o'") return 3;
    if (ax == "m" || ax == "k" || ax == "b3" || ax == "uc") return 4;
    if (ax == "wp" || ax == "i" || ax == "l1" || ax == "l2" || ax == "n3o") return 6;
    if (ax == "p2" || ax == "p3") return 8;
    return 0;
}

/// True when the axiom's matrix is false at tuple t (first-order transit
/// axioms, vertices in the order the axiom quantifies them).
inline bool violated_at(const Table& r, const std::string& ax, const Tuple& t) {
    if (ax == "m") {
        const M uv = r(t[0], t[1]);
        return in(t[2], uv) && in(t[3], uv) && !sub(r(t[2], t[3]), uv);
    }
    if (ax == "k") {
        const M x = r(t[0], t[1]) & r(t[2], t[3]);
        return x != 0 && !is_transit_set(r, x);
    }
    if (ax == "w") {
        const Vertex x = t[0], y = t[1], z = t[2];
        return !in(z, r(x, y)) && !in(y, r(x, z)) && !in(x, r(y, z));
    }
    if (ax == "b3") {
        const Vertex u = t[0], v = t[1], x = t[2], y = t[3];
        return in(x, r(u, v)) && in(y, r(u, x)) && !in(x, r(y, v));
    }
    if (ax == "b4") {
        const Vertex u = t[0], v = t[1], x = t[2];
        return in(x, r(u, v)) && (r(u, x) & r(x, v)) != b(x);
    }
    if (ax == "u") {
        const Vertex u = t[0], v = t[1], z = t[2];
        return in(z, r(u, v)) && r(u, v) != (r(u, z) | r(z, v));
    }
    if (ax == "o'") {
        const Vertex u = t[0], v = t[1], z = t[2];
        if (!in(z, r(u, v))) {
            return false;
        }
        for (Vertex p = 0; p < r.n; ++p) {
            for (Vertex q = 0; q < r.n; ++q) {
                if (in(p, r(u, v)) && in(q, r(u, v)) && (r(p, z) | r(z, q)) == r(u, v)) {
                    return false;
                }
            }
        }
        return true;
    }
    if (ax == "uc") {
        const M a = r(t[0], t[1]), c = r(t[2], t[3]);
        if ((a & c) == 0) {
            return false;
        }
        for (Vertex p = 0; p < r.n; ++p) {
            for (Vertex q = 0; q < r.n; ++q) {
                if (in(p, a | c) && in(q, a | c) && r(p, q) == (a | c)) {
                    return false;
                }
            }
        }
        return true;
    }
    if (ax == "u3") {
        const Vertex x = t[0], y = t[1];
        if (sub(r(x, y), b(x) | b(y))) {
            return false;
        }
        for (Vertex z = 0; z < r.n; ++z) {
            if (in(z, r(x, y)) && z != x && z != y && (r(x, z) | r(z, y)) == r(x, y)) {
                return false;
            }
        }
        return true;
    }
    if (ax == "wp") {
        const M uv = r(t[0], t[1]), xy = r(t[2], t[3]), pq = r(t[4], t[5]);
        return (uv & xy) != 0 && (uv & pq) != 0 && (xy & pq) != 0 && !sub(pq, uv | xy) && !sub(uv, pq | xy) &&
               !sub(xy, pq | uv);
    }
    if (ax == "i") {
        const M xy = r(t[0], t[1]), uv = r(t[2], t[3]), pq = r(t[4], t[5]);
        const M cap = xy & uv;
        return cap != 0 && sub(cap, pq) && (pq & ~(xy | uv)) != 0 && !sub(xy, pq) && !sub(uv, pq);
    }
    if (ax == "l1" || ax == "n3o" || ax == "l2") {
        const M xy = r(t[0], t[1]), pq = r(t[2], t[3]), uv = r(t[4], t[5]);
        if (!ovl(xy, pq) || !ovl(pq, uv)) {
            return false;
        }
        if (ax == "l1") {
            return !sub(xy, uv) && !sub(uv, xy) && !(sub(xy & uv, pq) && sub(pq, xy | uv));
        }
        if (ax == "n3o") {
            return !sub(xy, uv) && !sub(uv, xy) && (xy & uv) != 0;
        }
        if ((xy & uv) != 0) {
            return false;
        }
        for (Vertex s = 0; s < r.n; ++s) {
            for (Vertex q = 0; q < r.n; ++q) {
                if (in(s, xy & ~pq) && in(q, uv & ~pq) && r(s, q) == (xy | pq | uv)) {
                    return false;
                }
            }
        }
        return true;
    }
    if (ax == "p2") {
        const M xy = r(t[0], t[1]), uv = r(t[2], t[3]), pq = r(t[4], t[5]), st = r(t[6], t[7]);
        return ovl(xy, st) && ovl(uv, st) && ovl(pq, st) && !sub(xy, uv | pq | st) && !sub(uv, xy | pq | st) &&
               !sub(pq, xy | uv | st);
    }
    if (ax == "p3") {
        const M xy = r(t[0], t[1]), uv = r(t[2], t[3]), pq = r(t[4], t[5]), st = r(t[6], t[7]);
        return ovl(xy, uv) && ovl(xy, pq) && ovl(xy, st) && sub(pq, uv) && sub(st, uv) && (pq & st) == 0;
    }
    throw std::invalid_argument("oracle: no tuple form for " + ax);
}

/// (a'): some R(u, v) equals V.
inline bool a_prime_holds(const Table& r) {
    for (Vertex u = 0; u < r.n; ++u) {
        for (Vertex v = 0; v < r.n; ++v) {
            if (r(u, v) == all(r.n)) {
                return true;
            }
        }
    }
    return false;
}

inline void for_each_tuple(std::size_t n, std::size_t k, const std::function<bool(const Tuple&)>& visit) {
    if (n == 0) {
        return;
    }
    Tuple t(k, 0);
    while (true) {
        if (!visit(t)) {
            return;
        }
        std::size_t i = 0;
        while (i < k && ++t[i] == n) {
            t[i++] = 0;
        }
        if (i == k) {
            return;
        }
    }
}

// ----------------------------------------------------------- second order

inline bool chain_at(const Table& r, Vertex x, M w) {
    for (Vertex u = 0; u < r.n; ++u) {
        for (Vertex v = 0; v < r.n; ++v) {
            if (in(u, w) && in(v, w) && !sub(r(x, u), r(x, v)) && !sub(r(x, v), r(x, u))) {
                return false;
            }
        }
    }
    return true;
}

inline M mask_of(const Tuple& t) {
    M m = 0;
    for (Vertex v : t) {
        m |= b(v);
    }
    return m;
}

/// (tb), (hc), (tb2) at W; (tb') at the cyclic sequence; (p4) at
/// (u, v, y, x_1..x_m).
inline bool violated_second_order(const Table& r, const std::string& ax, const Tuple& t,
                                  P4IndexMode mode = P4IndexMode::open) {
    if (ax == "tb" || ax == "hc") {
        const M w = mask_of(t);
        if (std::popcount(w) < 3) {
            return false;
        }
        int good = 0;
        for (Vertex x = 0; x < r.n; ++x) {
            if (in(x, w) && chain_at(r, x, w)) {
                ++good;
            }
        }
        return good < (ax == "tb" ? 1 : 2);
    }
    if (ax == "tb2") {
        const M w = mask_of(t);
        if (w == 0) {
            return false;
        }
        for (Vertex x = 0; x < r.n; ++x) {
            for (Vertex y = 0; y < r.n; ++y) {
                if (in(x, w) && in(y, w) && sub(w, r(x, y))) {
                    return false;
                }
            }
        }
        return true;
    }
    if (ax == "tb'") {
        const std::size_t n = t.size();
        if (n < 3) {
            return false;
        }
        auto at = [&](std::size_t i) { return t[i % n]; };
        for (std::size_t k = 0; k < n; ++k) {
            if (in(at(k + n - 1), r(at(k), at(k + 1))) || in(at(k + 1), r(at(k + n - 1), at(k)))) {
                return false;
            }
        }
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t i = 0; i < n; ++i) {
                if (i != j && i != (j + n - 1) % n && in(at(j), r(at(i), at(i + 1)))) {
                    return false;
                }
            }
        }
        return true;
    }
    if (ax == "p4") {
        if (t.size() < 6) {
            return false;
        }
        const Vertex u = t[0], v = t[1], y = t[2];
        const Tuple x(t.begin() + 3, t.end());
        const std::size_t m = x.size();
        const bool cyclic = mode == P4IndexMode::cyclic;
        const std::size_t pairs = cyclic ? m : m - 1;
        auto pair_set = [&](std::size_t j) { return r(x[j], x[(j + 1) % m]); };
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < pairs; ++j) {
                const bool adjacent = j == i || (j + 1) % m == i;
                if (!adjacent && in(x[i], pair_set(j))) {
                    return false;
                }
            }
        }
        const M uv = r(u, v);
        if ((uv & pair_set(0)) == 0 || (uv & r(x[m - 2], x[m - 1])) == 0) {
            return false;
        }
        if (!in(y, uv)) {
            return false;
        }
        for (std::size_t j = 0; j < pairs; ++j) {
            if (in(y, pair_set(j))) {
                return false;
            }
        }
        return !sub(pair_set(0), uv) && !sub(r(x[m - 2], x[m - 1]), uv);
    }
    throw std::invalid_argument("oracle: not second order: " + ax);
}

/// Calls visit on every sequence of distinct vertices of length lo..hi.
inline bool for_each_sequence(std::size_t n, std::size_t lo, std::size_t hi,
                              const std::function<bool(const Tuple&)>& visit) {
    Tuple seq;
    std::function<bool()> rec = [&]() -> bool {
        if (seq.size() >= lo && !visit(seq)) {
            return false;
        }
        if (seq.size() == hi) {
            return true;
        }
        for (Vertex v = 0; v < n; ++v) {
            if (std::find(seq.begin(), seq.end(), v) == seq.end()) {
                seq.push_back(v);
                if (!rec()) {
                    return false;
                }
                seq.pop_back();
            }
        }
        return true;
    };
    return rec();
}

/// Exhaustive naive evaluation of any transit-side axiom.
inline bool holds(const Table& r, const std::string& ax, P4IndexMode mode = P4IndexMode::open) {
    if (ax == "a'") {
        return a_prime_holds(r);
    }
    bool ok = true;
    auto probe = [&](const Tuple& t) {
        const bool bad = arity(ax) ? violated_at(r, ax, t) : violated_second_order(r, ax, t, mode);
        ok = !bad;
        return ok;
    };
    if (const std::size_t k = arity(ax)) {
        for_each_tuple(r.n, k, probe);
        return ok;
    }
    if (ax == "tb" || ax == "hc" || ax == "tb2") {
        for (M w = 1; w <= all(r.n) && ok; ++w) {
            Tuple t;
            for (Vertex v = 0; v < r.n; ++v) {
                if (in(v, w)) {
                    t.push_back(v);
                }
            }
            probe(t);
        }
        return ok;
    }
    if (ax == "tb'") {
        for_each_sequence(r.n, 3, r.n, probe);
        return ok;
    }
    if (ax == "p4") {
        for_each_tuple(r.n, 3, [&](const Tuple& head) {
            return for_each_sequence(r.n, 3, r.n, [&](const Tuple& xs) {
                Tuple t = head;
                t.insert(t.end(), xs.begin(), xs.end());
                return probe(t);
            });
        });
        return ok;
    }
    throw std::invalid_argument("oracle: unknown axiom " + ax);
}

// -------------------------------------------------------------- set side

/// Set-side axiom matrix false at the given members (letter order).
inline bool set_violated_at(const std::vector<M>& family, std::size_t n, const std::string& ax,
                            const std::vector<M>& s) {
    auto member = [&](M x) { return std::find(family.begin(), family.end(), x) != family.end(); };
    (void)n;
    if (ax == "K2") {
        return (s[0] & s[1]) != 0 && !member(s[0] & s[1]);
    }
    if (ax == "UC") {
        return (s[0] & s[1]) != 0 && !member(s[0] | s[1]);
    }
    if (ax == "WP") {
        const M a = s[0], c = s[1], d = s[2];
        return (a & c) && (a & d) && (c & d) && !sub(a, c | d) && !sub(c, a | d) && !sub(d, a | c);
    }
    if (ax == "I") {
        const M a = s[0], c = s[1], d = s[2];
        return (a & c) != 0 && sub(a & c, d) && (d & ~(a | c)) != 0 && !sub(a, d) && !sub(c, d);
    }
    if (ax == "L1" || ax == "N3O" || ax == "L2'") {
        const M a = s[0], c = s[1], d = s[2];
        if (!ovl(a, c) || !ovl(c, d)) {
            return false;
        }
        if (ax == "L1") {
            return !sub(a, d) && !sub(d, a) && !(sub(a & d, c) && sub(c, a | d));
        }
        if (ax == "N3O") {
            return ovl(a, d);
        }
        return (a & d) == 0 && !member(a | c | d);
    }
    if (ax == "L2''") {
        const M a = s[0], c = s[1], d = s[2], e = s[3];
        return ovl(a, c) && ovl(c, d) && (a & d) == 0 && sub((a | d) & ~c, e) && !sub(a | c | d, e);
    }
    if (ax == "P2") {
        const M a = s[0], c = s[1], d = s[2], e = s[3];
        return ovl(a, e) && ovl(c, e) && ovl(d, e) && !sub(a, e | c | d) && !sub(c, e | a | d) && !sub(d, e | a | c);
    }
    if (ax == "P3") {
        const M a = s[0], c = s[1], d = s[2], e = s[3];
        return ovl(a, c) && ovl(c, d) && ovl(c, e) && sub(a | d, e) && (a & d) == 0;
    }
    if (ax == "P3'") {
        const M a = s[0], c = s[1], d = s[2], e = s[3];
        return ovl(a, c) && ovl(c, d) && (a & d) == 0 && sub(a | d, e) && !sub(c, e);
    }
    throw std::invalid_argument("oracle: unknown set axiom " + ax);
}

inline std::size_t set_arity(const std::string& ax) {
    if (ax == "K2" || ax == "UC") return 2;
    if (ax == "WP" || ax == "I" || ax == "L1" || ax == "N3O" || ax == "L2'") return 3;
    if (ax == "L2''" || ax == "P2" || ax == "P3" || ax == "P3'") return 4;
    return 0;
}

inline bool set_holds(const std::vector<M>& family, std::size_t n, const std::string& ax) {
    if (ax == "K1") {
        return std::find(family.begin(), family.end(), all(n)) != family.end();
    }
    bool ok = true;
    for_each_tuple(family.size(), set_arity(ax), [&](const Tuple& idx) {
        std::vector<M> s;
        for (Vertex i : idx) {
            s.push_back(family[i]);
        }
        ok = !set_violated_at(family, n, ax, s);
        return ok;
    });
    return ok;
}

// ------------------------------------------------------------ re-checking

inline std::vector<M> masks_of(const std::vector<clusterax::Subset>& sets) {
    std::vector<M> out;
    for (const auto& s : sets) {
        out.push_back(s.bits());
    }
    return out;
}

/// A failing verdict's witness, plugged back into the axiom, is a genuine
/// violation. Transit-side ids are checked on R, set-side ids on `family`.
inline bool witness_is_genuine(const Table& r, const std::vector<M>& family, const std::string& ax,
                               const clusterax::Verdict& v, P4IndexMode mode = P4IndexMode::open) {
    if (v.passed || !v.witness) {
        return false;
    }
    const auto& w = *v.witness;
    if (ax == "a'") {
        return !a_prime_holds(r);
    }
    if (ax == "K1") {
        return !set_holds(family, r.n, ax);
    }
    if (const std::size_t k = arity(ax)) {
        if (w.vertices.size() != k) {
            return false;
        }
        // Listed sets, when present, are R of consecutive vertex pairs.
        if (!w.sets.empty() && ax != "o'") {
            for (std::size_t i = 0; i < w.sets.size(); ++i) {
                if (2 * i + 1 >= k || w.sets[i].bits() != r(w.vertices[2 * i], w.vertices[2 * i + 1])) {
                    return false;
                }
            }
        }
        return violated_at(r, ax, w.vertices);
    }
    if (const std::size_t k = set_arity(ax)) {
        if (w.sets.size() != k) {
            return false;
        }
        const auto s = masks_of(w.sets);
        for (M x : s) {
            if (std::find(family.begin(), family.end(), x) == family.end()) {
                return false;
            }
        }
        return set_violated_at(family, r.n, ax, s);
    }
    return violated_second_order(r, ax, w.vertices, mode);
}

// -------------------------------------------------------------- generators

/// Arbitrary transit function: R(u, v) = {u, v} plus each other point with
/// probability `density`.
inline clusterax::TransitFunction random_transit(std::mt19937& rng, std::size_t n, double density) {
    const auto ground = clusterax::GroundSet::letters(n);
    std::bernoulli_distribution coin(density);
    clusterax::TransitTable table;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            M s = b(u) | b(v);
            for (Vertex z = 0; z < n; ++z) {
                if (coin(rng)) {
                    s |= b(z);
                }
            }
            table[{u, v}] = clusterax::Subset(s, n);
        }
    }
    return clusterax::make_transit(ground, table, clusterax::DefaultPair::error);
}

/// Random family of non-empty subsets (no singletons or V forced).
inline std::vector<M> random_family(std::mt19937& rng, std::size_t n, std::size_t count) {
    std::uniform_int_distribution<M> pick(1, all(n));
    std::vector<M> out;
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(pick(rng));
    }
    return out;
}

/// Canonical transit function of a random family plus singletons and V;
/// always monotone.
inline clusterax::TransitFunction random_monotone(std::mt19937& rng, std::size_t n, std::size_t count) {
    std::vector<M> fam = random_family(rng, n, count);
    fam.push_back(all(n));
    for (Vertex v = 0; v < n; ++v) {
        fam.push_back(b(v));
    }
    return clusterax::canonical_transit(clusterax::SetSystem(clusterax::GroundSet::letters(n), fam));
}

}  // namespace oracle
