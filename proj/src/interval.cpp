#include "clusterax/interval.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "clusterax/axioms.hpp"

namespace clusterax {

bool is_compatible_order(const SetSystem& c, const std::vector<Vertex>& perm) {
    if (perm.size() != c.n()) {
        return false;
    }
    std::vector<std::size_t> pos(c.n(), c.n());
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (perm[i] >= c.n() || pos[perm[i]] != c.n()) {
            return false;
        }
        pos[perm[i]] = i;
    }
    for (Mask m : c.masks()) {
        Mask placed = 0;
        for (Mask rest = m; rest != 0; rest &= rest - 1) {
            placed |= bit(pos[static_cast<Vertex>(lowest(rest))]);
        }
        const Mask run = placed >> lowest(placed);
        if ((run & (run + 1)) != 0) {
            return false;
        }
    }
    return true;
}

PyramidalOrder normalize(PyramidalOrder order, const GroundSet& ground) {
    std::vector<Vertex> rev(order.perm.rbegin(), order.perm.rend());
    const bool reverse_smaller = std::lexicographical_compare(
        rev.begin(), rev.end(), order.perm.begin(), order.perm.end(),
        [&ground](Vertex a, Vertex b) { return ground.label(a) < ground.label(b); });
    if (reverse_smaller) {
        order.perm = std::move(rev);
    }
    return order;
}

namespace {

// One overlap component: its members are forced into `blocks`, a sequence
// of vertex classes fixed up to reversal.
struct Component {
    std::vector<std::size_t> members;
    Mask uni = 0;
    std::vector<Mask> blocks;
    std::vector<std::size_t> children;
};

void split_into(std::vector<Mask>& out, Mask first, Mask second) {
    if (first != 0) {
        out.push_back(first);
    }
    if (second != 0) {
        out.push_back(second);
    }
}

bool insert_set(std::vector<Mask>& blocks, Mask s) {
    if (blocks.empty()) {
        blocks.push_back(s);
        return true;
    }
    Mask uni = 0;
    std::size_t l = blocks.size(), r = 0;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        uni |= blocks[i];
        if ((blocks[i] & s) != 0) {
            l = std::min(l, i);
            r = i;
        }
    }
    if (l == blocks.size()) {
        return false;
    }
    for (std::size_t i = l + 1; i < r; ++i) {
        if (!subset_of(blocks[i], s)) {
            return false;
        }
    }
    const Mask fresh = s & ~uni;
    const std::size_t last = blocks.size() - 1;
    std::vector<Mask> out;
    if (fresh != 0) {
        const bool right = r == last && (l == r || subset_of(blocks[r], s));
        const bool left = l == 0 && (l == r || subset_of(blocks[l], s));
        if (right) {
            out.assign(blocks.begin(), blocks.begin() + static_cast<std::ptrdiff_t>(l));
            split_into(out, blocks[l] & ~s, blocks[l] & s);
            out.insert(out.end(), blocks.begin() + static_cast<std::ptrdiff_t>(l) + 1, blocks.end());
            out.push_back(fresh);
        } else if (left) {
            out.push_back(fresh);
            out.insert(out.end(), blocks.begin(), blocks.begin() + static_cast<std::ptrdiff_t>(r));
            split_into(out, blocks[r] & s, blocks[r] & ~s);
            out.insert(out.end(), blocks.begin() + static_cast<std::ptrdiff_t>(r) + 1, blocks.end());
        } else {
            return false;
        }
    } else {
        if (l == r) {
            return false;
        }
        out.assign(blocks.begin(), blocks.begin() + static_cast<std::ptrdiff_t>(l));
        split_into(out, blocks[l] & ~s, blocks[l] & s);
        out.insert(out.end(), blocks.begin() + static_cast<std::ptrdiff_t>(l) + 1,
                   blocks.begin() + static_cast<std::ptrdiff_t>(r));
        split_into(out, blocks[r] & s, blocks[r] & ~s);
        out.insert(out.end(), blocks.begin() + static_cast<std::ptrdiff_t>(r) + 1, blocks.end());
    }
    blocks = std::move(out);
    return true;
}

void append_members(std::vector<Vertex>& out, Mask m) {
    for (; m != 0; m &= m - 1) {
        out.push_back(static_cast<Vertex>(lowest(m)));
    }
}

void lay_out(const std::vector<Component>& comps, std::size_t at, std::vector<Vertex>& out) {
    const Component& comp = comps[at];
    for (Mask block : comp.blocks) {
        Mask free = block;
        for (std::size_t child : comp.children) {
            if (subset_of(comps[child].uni, block)) {
                lay_out(comps, child, out);
                free &= ~comps[child].uni;
            }
        }
        append_members(out, free);
    }
}

}  // namespace

std::optional<PyramidalOrder> find_pyramidal_order(const SetSystem& c) {
    std::vector<Mask> sets;
    for (Mask m : c.masks()) {
        if (std::popcount(m) >= 2) {
            sets.push_back(m);
        }
    }

    // Overlap components, members in BFS order.
    std::vector<Component> comps;
    std::vector<bool> seen(sets.size(), false);
    for (std::size_t seed = 0; seed < sets.size(); ++seed) {
        if (seen[seed]) {
            continue;
        }
        Component comp;
        comp.members.push_back(seed);
        seen[seed] = true;
        for (std::size_t head = 0; head < comp.members.size(); ++head) {
            const Mask cur = sets[comp.members[head]];
            for (std::size_t j = 0; j < sets.size(); ++j) {
                if (!seen[j] && masks_overlap(cur, sets[j])) {
                    seen[j] = true;
                    comp.members.push_back(j);
                }
            }
        }
        for (std::size_t idx : comp.members) {
            comp.uni |= sets[idx];
            if (!insert_set(comp.blocks, sets[idx])) {
                return std::nullopt;
            }
        }
        comps.push_back(std::move(comp));
    }

    // Component unions are laminar. The parent is the smallest strictly
    // larger union; for equal unions the single-set component is the parent.
    std::vector<bool> has_parent(comps.size(), false);
    for (std::size_t a = 0; a < comps.size(); ++a) {
        std::optional<std::size_t> best;
        for (std::size_t b = 0; b < comps.size(); ++b) {
            if (a == b || !subset_of(comps[a].uni, comps[b].uni)) {
                continue;
            }
            if (comps[a].uni == comps[b].uni &&
                !(comps[b].members.size() == 1 && comps[a].members.size() > 1)) {
                continue;
            }
            if (!best || std::popcount(comps[b].uni) < std::popcount(comps[*best].uni) ||
                (comps[b].uni == comps[*best].uni && comps[b].members.size() > 1)) {
                best = b;
            }
        }
        if (best) {
            const auto& blocks = comps[*best].blocks;
            const bool inside = std::any_of(blocks.begin(), blocks.end(),
                                            [&](Mask blk) { return subset_of(comps[a].uni, blk); });
            if (!inside) {
                return std::nullopt;
            }
            comps[*best].children.push_back(a);
            has_parent[a] = true;
        }
    }

    std::vector<Vertex> perm;
    Mask placed = 0;
    for (std::size_t a = 0; a < comps.size(); ++a) {
        if (!has_parent[a]) {
            lay_out(comps, a, perm);
            placed |= comps[a].uni;
        }
    }
    append_members(perm, full_mask(c.n()) & ~placed);
    if (!is_compatible_order(c, perm)) {
        return std::nullopt;
    }
    return normalize(PyramidalOrder{std::move(perm)}, c.ground());
}

std::optional<PyramidalOrder> find_pyramidal_order_bruteforce(const SetSystem& c) {
    if (c.n() > kMaxBruteForceVertices) {
        throw UsageError("brute-force order search is limited to " + std::to_string(kMaxBruteForceVertices) +
                         " vertices");
    }
    std::vector<Vertex> perm(c.n());
    std::iota(perm.begin(), perm.end(), Vertex{0});
    do {
        if (is_compatible_order(c, perm)) {
            return normalize(PyramidalOrder{perm}, c.ground());
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

// ------------------------------------------------------------ configurations

namespace {

Witness config_to_witness(const ConfigWitness& w) {
    return Witness{w.vertices, w.sets, "forbidden configuration family " + std::to_string(w.family)};
}

std::optional<ConfigWitness> detect_family2(const SetSystem& c) {
    const auto f = c.masks();
    for (std::size_t d = 0; d < f.size(); ++d) {
        std::vector<std::size_t> around;
        for (std::size_t s = 0; s < f.size(); ++s) {
            if (masks_overlap(f[s], f[d])) {
                around.push_back(s);
            }
        }
        for (std::size_t i = 0; i < around.size(); ++i) {
            for (std::size_t j = i + 1; j < around.size(); ++j) {
                for (std::size_t k = j + 1; k < around.size(); ++k) {
                    const Mask a = f[around[i]], b = f[around[j]], cc = f[around[k]], dd = f[d];
                    const Mask priv[6] = {a & ~(b | cc | dd), a & dd & ~(b | cc), b & ~(a | cc | dd),
                                          b & dd & ~(a | cc), cc & ~(a | b | dd), cc & dd & ~(a | b)};
                    if (std::all_of(std::begin(priv), std::end(priv), [](Mask m) { return m != 0; })) {
                        ConfigWitness w;
                        w.family = 2;
                        w.sets = {c.sets()[around[i]], c.sets()[around[j]], c.sets()[around[k]], c.sets()[d]};
                        for (Mask m : priv) {
                            w.vertices.push_back(static_cast<Vertex>(lowest(m)));
                        }
                        return w;
                    }
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<ConfigWitness> detect_family3(const SetSystem& c) {
    const auto f = c.masks();
    for (std::size_t b = 0; b < f.size(); ++b) {
        for (std::size_t d = 0; d < f.size(); ++d) {
            if (!masks_overlap(f[b], f[d])) {
                continue;
            }
            for (std::size_t a = 0; a < f.size(); ++a) {
                if ((f[a] & f[d] & f[b]) == 0 || (f[a] & f[d] & ~f[b]) == 0) {
                    continue;
                }
                for (std::size_t cc = 0; cc < f.size(); ++cc) {
                    const Mask A = f[a], B = f[b], C = f[cc], D = f[d];
                    const Mask v[5] = {A & D & B & ~C, A & D & ~B & ~C, C & D & ~A & ~B, C & D & B & ~A,
                                       B & ~(A | C | D)};
                    if (std::all_of(std::begin(v), std::end(v), [](Mask m) { return m != 0; })) {
                        ConfigWitness w;
                        w.family = 3;
                        w.sets = {c.sets()[a], c.sets()[b], c.sets()[cc], c.sets()[d]};
                        for (Mask m : v) {
                            w.vertices.push_back(static_cast<Vertex>(lowest(m)));
                        }
                        return w;
                    }
                }
            }
        }
    }
    return std::nullopt;
}

// Path search shared by families 4 and 5: x_1 in `start`, interior points in
// `inner`, x_m in `end`, and a point y in `yzone` outside every path set.
class PathSearch {
public:
    PathSearch(std::span<const Mask> sets, std::vector<std::size_t> excluded)
        : f_(sets), excluded_(std::move(excluded)) {}

    bool run(std::size_t m, Mask start, Mask inner, Mask end, Mask yzone) {
        m_ = m;
        inner_ = inner;
        end_ = end;
        yzone_ = yzone;
        for (Mask xs = start; xs != 0; xs &= xs - 1) {
            xs_.assign(1, static_cast<Vertex>(lowest(xs)));
            ps_.clear();
            if (extend(0)) {
                return true;
            }
        }
        return false;
    }

    std::vector<Vertex> xs_;
    std::vector<std::size_t> ps_;
    Vertex y_ = 0;

private:
    bool extend(Mask path_union) {
        const Vertex cur = xs_.back();
        Mask earlier = 0;
        for (std::size_t i = 0; i + 1 < xs_.size(); ++i) {
            earlier |= bit(xs_[i]);
        }
        const bool closing = xs_.size() + 1 == m_;
        for (std::size_t s = 0; s < f_.size(); ++s) {
            const Mask p = f_[s];
            if ((p & bit(cur)) == 0 || (p & earlier) != 0) {
                continue;
            }
            if (std::find(excluded_.begin(), excluded_.end(), s) != excluded_.end() ||
                std::find(ps_.begin(), ps_.end(), s) != ps_.end()) {
                continue;
            }
            const Mask zone = closing ? end_ : inner_;
            for (Mask next = p & zone & ~path_union & ~earlier & ~bit(cur); next != 0; next &= next - 1) {
                const Vertex x = static_cast<Vertex>(lowest(next));
                xs_.push_back(x);
                ps_.push_back(s);
                if (closing) {
                    const Mask ys = yzone_ & ~(path_union | p);
                    if (ys != 0) {
                        y_ = static_cast<Vertex>(lowest(ys));
                        return true;
                    }
                } else if (extend(path_union | p)) {
                    return true;
                }
                xs_.pop_back();
                ps_.pop_back();
            }
        }
        return false;
    }

    std::span<const Mask> f_;
    std::vector<std::size_t> excluded_;
    std::size_t m_ = 0;
    Mask inner_ = 0, end_ = 0, yzone_ = 0;
};

ConfigWitness path_witness(const SetSystem& c, int family, std::initializer_list<std::size_t> big,
                           const PathSearch& search) {
    ConfigWitness w;
    w.family = family;
    for (std::size_t b : big) {
        w.sets.push_back(c.sets()[b]);
    }
    for (std::size_t p : search.ps_) {
        w.sets.push_back(c.sets()[p]);
    }
    w.vertices = search.xs_;
    w.vertices.push_back(search.y_);
    w.k = search.xs_.size() - 3;
    return w;
}

std::optional<ConfigWitness> detect_family4(const SetSystem& c) {
    const auto f = c.masks();
    const Mask all = full_mask(c.n());
    for (std::size_t m = 3; m <= c.n(); ++m) {
        for (std::size_t l = 0; l < f.size(); ++l) {
            PathSearch search(f, {l});
            if (search.run(m, all & ~f[l], f[l], all & ~f[l], f[l])) {
                return path_witness(c, 4, {l}, search);
            }
        }
    }
    return std::nullopt;
}

std::optional<ConfigWitness> detect_family5(const SetSystem& c) {
    const auto f = c.masks();
    for (std::size_t m = 3; m <= c.n(); ++m) {
        for (std::size_t l1 = 0; l1 < f.size(); ++l1) {
            for (std::size_t l2 = 0; l2 < f.size(); ++l2) {
                if (l1 == l2 || !masks_overlap(f[l1], f[l2])) {
                    continue;
                }
                PathSearch search(f, {l1, l2});
                const Mask both = f[l1] & f[l2];
                if (search.run(m, f[l1] & ~f[l2], both, f[l2] & ~f[l1], both)) {
                    return path_witness(c, 5, {l1, l2}, search);
                }
            }
        }
    }
    return std::nullopt;
}

// Expected incidence rows (one mask over witness-vertex positions per set).
std::optional<std::vector<Mask>> expected_rows(const ConfigWitness& w) {
    const std::size_t ns = w.sets.size(), nv = w.vertices.size();
    auto pos = [](std::initializer_list<std::size_t> at) {
        Mask m = 0;
        for (std::size_t i : at) {
            m |= bit(i);
        }
        return m;
    };
    switch (w.family) {
        case 1: {
            if (ns < 3 || nv != ns) {
                return std::nullopt;
            }
            std::vector<Mask> rows(ns, 0);
            for (std::size_t i = 0; i < ns; ++i) {
                rows[i] |= bit(i);                 // x_i ∈ C_i
                rows[(i + 1) % ns] |= bit(i);      // x_i ∈ C_{i+1}
            }
            return rows;
        }
        case 2:
            if (ns != 4 || nv != 6) {
                return std::nullopt;
            }
            return std::vector<Mask>{pos({0, 1}), pos({2, 3}), pos({4, 5}), pos({1, 3, 5})};
        case 3:
            if (ns != 4 || nv != 5) {
                return std::nullopt;
            }
            return std::vector<Mask>{pos({0, 1}), pos({0, 3, 4}), pos({2, 3}), pos({0, 1, 2, 3})};
        case 4:
        case 5: {
            const std::size_t big = w.family == 4 ? 1 : 2;
            if (ns < big + 2 || nv != ns - big + 2) {
                return std::nullopt;
            }
            const std::size_t m = nv - 1;  // path vertices; y sits at index m
            std::vector<Mask> rows;
            if (w.family == 4) {
                rows.push_back((full_mask(m - 1) & ~Mask{1}) | bit(m));
            } else {
                rows.push_back(full_mask(m - 1) | bit(m));
                rows.push_back((full_mask(m) & ~Mask{1}) | bit(m));
            }
            for (std::size_t i = 0; i + 1 < m; ++i) {
                rows.push_back(bit(i) | bit(i + 1));
            }
            return rows;
        }
        default:
            return std::nullopt;
    }
}

}  // namespace

bool verify_config(const SetSystem& c, const ConfigWitness& w) {
    const auto rows = expected_rows(w);
    if (!rows) {
        return false;
    }
    Mask seen = 0;
    for (Vertex v : w.vertices) {
        if (v >= c.n() || (seen & bit(v)) != 0) {
            return false;
        }
        seen |= bit(v);
    }
    for (std::size_t s = 0; s < w.sets.size(); ++s) {
        if (!c.contains(w.sets[s])) {
            return false;
        }
        for (std::size_t s2 = s + 1; s2 < w.sets.size(); ++s2) {
            if (w.sets[s] == w.sets[s2]) {
                return false;
            }
        }
        Mask actual = 0;
        for (std::size_t i = 0; i < w.vertices.size(); ++i) {
            if (w.sets[s].contains(w.vertices[i])) {
                actual |= bit(i);
            }
        }
        if (actual != (*rows)[s]) {
            return false;
        }
    }
    return true;
}

std::optional<ConfigWitness> detect_config(const SetSystem& c, int family) {
    switch (family) {
        case 1: {
            auto cyc = find_weak_beta_cycle(c);
            if (!cyc) {
                return std::nullopt;
            }
            ConfigWitness w;
            w.family = 1;
            w.sets = cyc->sets;
            w.vertices = cyc->pivots;
            w.k = cyc->sets.size() - 3;
            return w;
        }
        case 2:
            return detect_family2(c);
        case 3:
            return detect_family3(c);
        case 4:
            return detect_family4(c);
        case 5:
            return detect_family5(c);
        default:
            throw UsageError("configuration family must be 1..5, got " + std::to_string(family));
    }
}

std::optional<ConfigWitness> detect_any_config(const SetSystem& c) {
    for (int family = 1; family <= 5; ++family) {
        if (auto w = detect_config(c, family)) {
            return w;
        }
    }
    return std::nullopt;
}

Verdict is_pyramidal(const SetSystem& c) {
    if (!find_pyramidal_order(c)) {
        if (auto w = detect_any_config(c)) {
            return Verdict::fail("pyramidal", config_to_witness(*w));
        }
        return Verdict::fail("pyramidal", Witness{{}, {}, "no compatible order"});
    }
    Verdict closed = intersection_closure_check(c);
    if (!closed.passed) {
        Witness w = *closed.witness;
        w.note = "not closed under intersection";
        return Verdict::fail("pyramidal", std::move(w));
    }
    return Verdict::pass("pyramidal");
}

Verdict is_pyramidal(const TransitFunction& r) { return is_pyramidal(transit_sets(r)); }

// ------------------------------------------------------------- betweenness

namespace {

bool joined_avoiding(const SetSystem& c, Vertex from, Vertex to, Vertex avoid) {
    Mask reach = bit(from);
    bool grew = true;
    while (grew) {
        grew = false;
        for (Mask e : c.masks()) {
            if ((e & bit(avoid)) == 0 && (e & reach) != 0 && !subset_of(e, reach)) {
                reach |= e;
                grew = true;
            }
        }
    }
    return (reach & bit(to)) != 0;
}

}  // namespace

std::vector<Vertex> duchet_between(const SetSystem& c, Vertex x, Vertex y, Vertex z) {
    if (x >= c.n() || y >= c.n() || z >= c.n()) {
        throw UsageError("duchet_between: vertex out of range");
    }
    if (x == y || y == z || x == z) {
        throw UsageError("duchet_between: vertices must be distinct");
    }
    std::vector<Vertex> out;
    const Vertex t[3] = {x, y, z};
    for (int i = 0; i < 3; ++i) {
        const Vertex mid = t[i], a = t[(i + 1) % 3], b = t[(i + 2) % 3];
        if (!joined_avoiding(c, a, b, mid)) {
            out.push_back(mid);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Verdict duchet_condition(const SetSystem& c) {
    const std::size_t n = c.n();
    for (Vertex x = 0; x < n; ++x) {
        for (Vertex y = x + 1; y < n; ++y) {
            for (Vertex z = y + 1; z < n; ++z) {
                if (duchet_between(c, x, y, z).empty()) {
                    return Verdict::fail("duchet", Witness{{x, y, z}, {}, "no vertex between the other two"});
                }
            }
        }
    }
    return Verdict::pass("duchet");
}

Verdict pyramidal_via_axioms(const TransitFunction& r, P4IndexMode mode) {
    for (AxiomId id : {AxiomId::m, AxiomId::tb, AxiomId::p2, AxiomId::p3, AxiomId::p4}) {
        Verdict v = check(r, id, mode);
        if (!v.passed) {
            Witness w = v.witness.value_or(Witness{});
            w.note = w.note.empty() ? std::string(name(id)) : std::string(name(id)) + ": " + w.note;
            return Verdict::fail("pyramidal-axioms", std::move(w));
        }
    }
    return Verdict::pass("pyramidal-axioms");
}

Verdict interval_transit_check(const TransitFunction& r) {
    auto order = find_pyramidal_order(transit_sets(r));
    if (!order) {
        return Verdict::fail("interval-transit", Witness{{}, {}, "transit sets admit no compatible order"});
    }
    std::vector<std::size_t> pos(r.n());
    for (std::size_t i = 0; i < order->perm.size(); ++i) {
        pos[order->perm[i]] = i;
    }
    for (Vertex u = 0; u < r.n(); ++u) {
        for (Vertex v = u + 1; v < r.n(); ++v) {
            const auto [lo, hi] = std::minmax(pos[u], pos[v]);
            Mask interval = 0;
            for (std::size_t i = lo; i <= hi; ++i) {
                interval |= bit(order->perm[i]);
            }
            if (r.mask(u, v) != interval) {
                return Verdict::fail("interval-transit", Witness{{u, v}, {Subset(interval, r.n())}, "R(u,v) differs from [u,v]"});
            }
        }
    }
    return Verdict::pass("interval-transit");
}

}  // namespace clusterax
