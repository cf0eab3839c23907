#include "clusterax/structure.hpp"

#include <algorithm>
#include <string>

#include "detail.hpp"

namespace clusterax {

using detail::TransitView;

bool is_valid_cycle(const CycleWitness& cycle) {
    const std::size_t n = cycle.sets.size();
    if (n < 3 || cycle.pivots.size() != n) {
        return false;
    }
    for (std::size_t i = 0; i < n; ++i) {
        const Vertex x = cycle.pivots[i];
        for (std::size_t k = 0; k < n; ++k) {
            const bool should_hold = (k == i) || (k == (i + 1) % n);
            if (cycle.sets[k].contains(x) != should_hold) {
                return false;
            }
        }
    }
    return true;
}

bool is_pure_cycle(const CycleWitness& cycle) {
    if (!is_valid_cycle(cycle)) {
        return false;
    }
    const std::size_t n = cycle.sets.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (!adjacent && !(cycle.sets[i] & cycle.sets[j]).empty()) {
                return false;
            }
        }
    }
    return true;
}

namespace {

// Depth-first search for cycles of one exact length. C_1 is the member with
// the smallest index so rotations are not revisited.
class CycleSearch {
public:
    CycleSearch(std::span<const Mask> sets, bool pure) : sets_(sets), pure_(pure) {}

    bool run(std::size_t length) {
        length_ = length;
        for (std::size_t first = 0; first < sets_.size(); ++first) {
            if (std::popcount(sets_[first]) < 2) {
                continue;
            }
            chosen_.assign(1, first);
            pivots_.clear();
            if (extend()) {
                return true;
            }
        }
        return false;
    }

    const std::vector<std::size_t>& chosen() const { return chosen_; }
    const std::vector<Vertex>& pivots() const { return pivots_; }

private:
    Mask earlier_union(std::size_t upto) const {
        Mask m = 0;
        for (std::size_t j = 0; j < upto; ++j) {
            m |= sets_[chosen_[j]];
        }
        return m;
    }

    Mask pivot_mask() const {
        Mask m = 0;
        for (Vertex v : pivots_) {
            m |= bit(v);
        }
        return m;
    }

    bool extend() {
        const std::size_t k = chosen_.size();
        const Mask last = sets_[chosen_.back()];
        const Mask first = sets_[chosen_.front()];

        if (k == length_) {
            // Close with x_k ∈ C_k ∩ C_1 outside C_2..C_{k-1}.
            Mask middle = 0;
            for (std::size_t j = 1; j + 1 < k; ++j) {
                middle |= sets_[chosen_[j]];
            }
            if (pure_) {
                for (std::size_t j = 2; j + 1 < k; ++j) {
                    if ((first & sets_[chosen_[j]]) != 0) {
                        return false;
                    }
                }
            }
            const Mask candidates = last & first & ~middle;
            if (candidates == 0) {
                return false;
            }
            pivots_.push_back(static_cast<Vertex>(lowest(candidates)));
            return true;
        }

        const Mask used_pivots = pivot_mask();
        const Mask before = earlier_union(k - 1);
        Mask nonadjacent = 0;  // members the next set must avoid in a pure cycle
        if (pure_) {
            for (std::size_t j = 1; j + 1 < k; ++j) {
                nonadjacent |= sets_[chosen_[j]];
            }
            if (k + 1 < length_ && k >= 2) {
                nonadjacent |= first;
            }
        }
        for (Mask xs = last & ~before; xs != 0; xs &= xs - 1) {
            const Vertex x = static_cast<Vertex>(lowest(xs));
            for (std::size_t next = chosen_.front() + 1; next < sets_.size(); ++next) {
                const Mask s = sets_[next];
                if ((s & bit(x)) == 0 || (s & used_pivots) != 0 || (s & nonadjacent) != 0) {
                    continue;
                }
                if (std::find(chosen_.begin(), chosen_.end(), next) != chosen_.end()) {
                    continue;
                }
                chosen_.push_back(next);
                pivots_.push_back(x);
                if (extend()) {
                    return true;
                }
                chosen_.pop_back();
                pivots_.pop_back();
            }
        }
        return false;
    }

    std::span<const Mask> sets_;
    bool pure_;
    std::size_t length_ = 0;
    std::vector<std::size_t> chosen_;
    std::vector<Vertex> pivots_;
};

std::optional<CycleWitness> search_cycles(const SetSystem& c, std::size_t max_length, bool pure) {
    const std::size_t limit = max_length == 0 ? c.size() : std::min(max_length, c.size());
    CycleSearch search(c.masks(), pure);
    for (std::size_t len = 3; len <= limit; ++len) {
        if (search.run(len)) {
            CycleWitness w;
            for (std::size_t idx : search.chosen()) {
                w.sets.push_back(c.sets()[idx]);
            }
            w.pivots = search.pivots();
            return w;
        }
    }
    return std::nullopt;
}

Witness cycle_witness(const CycleWitness& cyc, std::string note) {
    return Witness{cyc.pivots, cyc.sets, std::move(note)};
}

}  // namespace

std::optional<CycleWitness> find_weak_beta_cycle(const SetSystem& c, std::size_t max_length) {
    return search_cycles(c, max_length, false);
}

std::optional<CycleWitness> find_pure_cycle(const SetSystem& c, std::size_t max_length) {
    return search_cycles(c, max_length, true);
}

Verdict is_totally_balanced(const SetSystem& c) {
    if (auto cyc = find_weak_beta_cycle(c)) {
        return Verdict::fail("totally-balanced", cycle_witness(*cyc, "weak beta-cycle"));
    }
    return Verdict::pass("totally-balanced");
}

Verdict is_weak_hierarchy(const SetSystem& c) {
    const auto m = c.masks();
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = i + 1; j < m.size(); ++j) {
            const Mask ab = m[i] & m[j];
            for (std::size_t k = j + 1; k < m.size(); ++k) {
                const Mask abc = ab & m[k];
                if (abc != ab && abc != (m[i] & m[k]) && abc != (m[j] & m[k])) {
                    return Verdict::fail("weak-hierarchy", Witness{{}, {c.sets()[i], c.sets()[j], c.sets()[k]}, {}});
                }
            }
        }
    }
    return Verdict::pass("weak-hierarchy");
}

Verdict is_hierarchy(const SetSystem& c) {
    if (!c.contains(full_mask(c.n()))) {
        return Verdict::fail("hierarchy", Witness{{}, {}, "V is not a member"});
    }
    for (Vertex v = 0; v < c.n(); ++v) {
        if (!c.contains(bit(v))) {
            return Verdict::fail("hierarchy", Witness{{v}, {}, "missing singleton"});
        }
    }
    const auto m = c.masks();
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = i + 1; j < m.size(); ++j) {
            if (masks_overlap(m[i], m[j])) {
                return Verdict::fail("hierarchy", Witness{{}, {c.sets()[i], c.sets()[j]}, "overlapping members"});
            }
        }
    }
    return Verdict::pass("hierarchy");
}

Verdict is_paired_hierarchy(const SetSystem& c) {
    const auto m = c.masks();
    for (std::size_t i = 0; i < m.size(); ++i) {
        std::vector<std::size_t> partners;
        for (std::size_t j = 0; j < m.size() && partners.size() < 2; ++j) {
            if (masks_overlap(m[i], m[j])) {
                partners.push_back(j);
            }
        }
        if (partners.size() >= 2) {
            return Verdict::fail("paired-hierarchy",
                                 Witness{{}, {c.sets()[i], c.sets()[partners[0]], c.sets()[partners[1]]}, {}});
        }
    }
    return Verdict::pass("paired-hierarchy");
}

GammaReport gamma_acyclicity(const SetSystem& c) {
    if (auto cyc = find_pure_cycle(c)) {
        return {Verdict::fail("gamma-acyclic", cycle_witness(*cyc, "pure cycle")), GammaObstruction::pure_cycle};
    }
    const auto m = c.masks();
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) {
            const Mask only1 = m[i] & ~m[j];
            const Mask only2 = m[j] & ~m[i];
            if ((m[i] & m[j]) == 0 || only1 == 0 || only2 == 0) {
                continue;
            }
            for (std::size_t k = 0; k < m.size(); ++k) {
                if ((m[k] & only1) != 0 && (m[k] & only2) != 0) {
                    const Vertex u = static_cast<Vertex>(lowest(m[k] & only1));
                    const Vertex v = static_cast<Vertex>(lowest(m[k] & only2));
                    return {Verdict::fail("gamma-acyclic",
                                          Witness{{u, v}, {c.sets()[i], c.sets()[j], c.sets()[k]}, "gamma triangle"}),
                            GammaObstruction::gamma_triangle};
                }
            }
        }
    }
    return {Verdict::pass("gamma-acyclic"), std::nullopt};
}

namespace {

void require_small(const TransitFunction& r) {
    if (r.n() > kMaxSecondOrderVertices) {
        throw UsageError("second-order checks are limited to " + std::to_string(kMaxSecondOrderVertices) +
                         " vertices");
    }
}

Witness subset_witness(Mask w, std::size_t n) {
    Subset s(w, n);
    return Witness{s.members(), {s}, {}};
}

// (tb) and (hc): W is good when at least `required` of its vertices x see
// the sets R(x, u), u ∈ W, as a chain.
Verdict check_chain_points(const TransitFunction& r, std::size_t required, std::string_view label) {
    const std::size_t n = r.n();
    // incomparable[x][u]: vertices v with R(x,u), R(x,v) not nested.
    std::vector<Mask> incomparable(n * n, 0);
    for (Vertex x = 0; x < n; ++x) {
        for (Vertex u = 0; u < n; ++u) {
            const Mask a = r.mask(x, u);
            for (Vertex v = 0; v < n; ++v) {
                const Mask b = r.mask(x, v);
                if (!subset_of(a, b) && !subset_of(b, a)) {
                    incomparable[x * n + u] |= bit(v);
                }
            }
        }
    }
    const Mask limit = full_mask(n);
    for (Mask w = 1; w != 0 && w <= limit; ++w) {
        if (std::popcount(w) < 3) {
            continue;
        }
        std::size_t good = 0;
        for (Mask xs = w; xs != 0 && good < required; xs &= xs - 1) {
            const Vertex x = static_cast<Vertex>(lowest(xs));
            bool chain = true;
            for (Mask us = w; us != 0; us &= us - 1) {
                if ((incomparable[x * n + static_cast<Vertex>(lowest(us))] & w) != 0) {
                    chain = false;
                    break;
                }
            }
            good += chain ? 1 : 0;
        }
        if (good < required) {
            return Verdict::fail(std::string(label), subset_witness(w, n));
        }
        if (w == limit) {
            break;
        }
    }
    return Verdict::pass(std::string(label));
}

Verdict check_tb2(const TransitFunction& r) {
    const std::size_t n = r.n();
    const Mask limit = full_mask(n);
    for (Mask w = 1; w != 0 && w <= limit; ++w) {
        bool spanned = false;
        for (Mask xs = w; xs != 0 && !spanned; xs &= xs - 1) {
            const Vertex x = static_cast<Vertex>(lowest(xs));
            for (Mask ys = w & ~full_mask(x); ys != 0; ys &= ys - 1) {
                if (subset_of(w, r.mask(x, static_cast<Vertex>(lowest(ys))))) {
                    spanned = true;
                    break;
                }
            }
        }
        if (!spanned) {
            return Verdict::fail("tb2", subset_witness(w, n));
        }
        if (w == limit) {
            break;
        }
    }
    return Verdict::pass("tb2");
}

// (tb'): a violation is a cyclic sequence of distinct vertices where no v_j
// lies in a non-incident R(v_i, v_{i+1}). Rotations are skipped by making
// v_1 the smallest vertex.
class TbPrimeSearch {
public:
    explicit TbPrimeSearch(const TransitFunction& r) : r_(r) {}

    std::optional<std::vector<Vertex>> run() {
        for (std::size_t len = 3; len <= r_.n(); ++len) {
            length_ = len;
            for (Vertex start = 0; start < r_.n(); ++start) {
                seq_.assign(1, start);
                if (extend(0)) {
                    return seq_;
                }
            }
        }
        return std::nullopt;
    }

private:
    // `avoid`: union of R(v_i, v_{i+1}) over the pairs chosen so far.
    bool extend(Mask avoid) {
        const std::size_t k = seq_.size();
        if (k == length_) {
            const Mask closing = r_.mask(seq_.back(), seq_.front());
            for (std::size_t j = 1; j + 1 < k; ++j) {
                if ((closing & bit(seq_[j])) != 0) {
                    return false;
                }
            }
            return true;
        }
        Mask prefix = 0;
        for (Vertex v : seq_) {
            prefix |= bit(v);
        }
        const Mask earlier = prefix & ~bit(seq_.back());
        for (Vertex x = seq_.front() + 1; x < r_.n(); ++x) {
            if ((prefix & bit(x)) != 0 || (avoid & bit(x)) != 0) {
                continue;
            }
            const Mask next_pair = r_.mask(seq_.back(), x);
            if ((next_pair & earlier) != 0) {
                continue;
            }
            seq_.push_back(x);
            if (extend(avoid | next_pair)) {
                return true;
            }
            seq_.pop_back();
        }
        return false;
    }

    const TransitFunction& r_;
    std::size_t length_ = 0;
    std::vector<Vertex> seq_;
};

// (p4): chains x_1..x_m satisfying condition (i), then a transit set R(u,v)
// meeting both end sets, holding a point y outside every chain set and
// containing neither end set.
class P4Search {
public:
    P4Search(const TransitFunction& r, P4IndexMode mode) : r_(r), view_(r), mode_(mode) {}

    std::optional<std::vector<Vertex>> run() {
        for (std::size_t len = 3; len <= r_.n(); ++len) {
            length_ = len;
            for (Vertex start = 0; start < r_.n(); ++start) {
                seq_.assign(1, start);
                if (extend(0)) {
                    return found_;
                }
            }
        }
        return std::nullopt;
    }

private:
    // `avoid`: union of the chain sets chosen so far.
    bool extend(Mask avoid) {
        const std::size_t k = seq_.size();
        if (k == length_) {
            return finish();
        }
        Mask prefix = 0;
        for (Vertex v : seq_) {
            prefix |= bit(v);
        }
        const Mask earlier = prefix & ~bit(seq_.back());
        for (Vertex x = 0; x < r_.n(); ++x) {
            if ((prefix & bit(x)) != 0 || (avoid & bit(x)) != 0) {
                continue;
            }
            const Mask next_pair = r_.mask(seq_.back(), x);
            if ((next_pair & earlier) != 0) {
                continue;
            }
            seq_.push_back(x);
            if (extend(avoid | next_pair)) {
                return true;
            }
            seq_.pop_back();
        }
        return false;
    }

    bool finish() {
        const std::size_t m = seq_.size();
        Mask chain_union = 0;
        for (std::size_t i = 0; i + 1 < m; ++i) {
            chain_union |= r_.mask(seq_[i], seq_[i + 1]);
        }
        if (mode_ == P4IndexMode::cyclic) {
            const Mask closing = r_.mask(seq_.back(), seq_.front());
            for (std::size_t i = 1; i + 1 < m; ++i) {
                if ((closing & bit(seq_[i])) != 0) {
                    return false;
                }
            }
            chain_union |= closing;
        }
        const Mask head = r_.mask(seq_[0], seq_[1]);
        const Mask tail = r_.mask(seq_[m - 2], seq_[m - 1]);
        for (std::size_t s = 0; s < view_.sets.size(); ++s) {
            const Mask big = view_.sets[s];
            if ((big & head) == 0 || (big & tail) == 0 || (big & ~chain_union) == 0) {
                continue;
            }
            if (subset_of(head, big) || subset_of(tail, big)) {
                continue;
            }
            found_ = {view_.gen[s].first, view_.gen[s].second, static_cast<Vertex>(lowest(big & ~chain_union))};
            found_.insert(found_.end(), seq_.begin(), seq_.end());
            return true;
        }
        return false;
    }

    const TransitFunction& r_;
    TransitView view_;
    P4IndexMode mode_;
    std::size_t length_ = 0;
    std::vector<Vertex> seq_;
    std::vector<Vertex> found_;
};

}  // namespace

Verdict check_second_order(const TransitFunction& r, AxiomId id, P4IndexMode mode) {
    require_small(r);
    switch (id) {
        case AxiomId::tb:
            return check_chain_points(r, 1, "tb");
        case AxiomId::hc:
            return check_chain_points(r, 2, "hc");
        case AxiomId::tb2:
            return check_tb2(r);
        case AxiomId::tb_prime: {
            if (auto seq = TbPrimeSearch(r).run()) {
                return Verdict::fail("tb'", Witness{*seq, {}, {}});
            }
            return Verdict::pass("tb'");
        }
        case AxiomId::p4: {
            if (auto seq = P4Search(r, mode).run()) {
                return Verdict::fail("p4", Witness{*seq, {}, {}});
            }
            return Verdict::pass("p4");
        }
        default:
            throw UsageError("not a second-order axiom: " + std::string(name(id)));
    }
}

}  // namespace clusterax
