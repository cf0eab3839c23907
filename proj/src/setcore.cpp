#include "clusterax/setcore.hpp"

#include <algorithm>
#include <unordered_set>

namespace clusterax {

Subset::Subset(Mask bits, std::size_t universe) : bits_(bits), universe_(universe) {
    if (universe == 0 || universe > kMaxVertices) {
        throw UsageError("subset universe must have 1.." + std::to_string(kMaxVertices) + " vertices");
    }
    if (!subset_of(bits, full_mask(universe))) {
        throw UsageError("subset has members outside its ground set");
    }
}

Subset Subset::of(std::size_t universe, std::initializer_list<Vertex> members) {
    Mask m = 0;
    for (Vertex v : members) {
        if (v >= universe) {
            throw UsageError("vertex index " + std::to_string(v) + " out of range");
        }
        m |= bit(v);
    }
    return Subset(m, universe);
}

std::vector<Vertex> Subset::members() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for (Mask m = bits_; m != 0; m &= m - 1) {
        out.push_back(static_cast<Vertex>(lowest(m)));
    }
    return out;
}

void Subset::require_same(const Subset& o) const {
    if (universe_ != o.universe_) {
        throw UsageError("subsets belong to different ground sets");
    }
}

bool Subset::is_subset_of(const Subset& other) const {
    require_same(other);
    return subset_of(bits_, other.bits_);
}

Subset Subset::operator|(const Subset& o) const {
    require_same(o);
    Subset r = *this;
    r.bits_ |= o.bits_;
    return r;
}

Subset Subset::operator&(const Subset& o) const {
    require_same(o);
    Subset r = *this;
    r.bits_ &= o.bits_;
    return r;
}

Subset Subset::operator-(const Subset& o) const {
    require_same(o);
    Subset r = *this;
    r.bits_ &= ~o.bits_;
    return r;
}

bool canonical_less(Mask a, Mask b) noexcept {
    const int ca = std::popcount(a);
    const int cb = std::popcount(b);
    if (ca != cb) {
        return ca < cb;
    }
    const Mask diff = a ^ b;
    if (diff == 0) {
        return false;
    }
    // The set holding the smallest differing element sorts first.
    return (a & (diff & -diff)) != 0;
}

GroundSet::GroundSet(std::vector<std::string> labels) {
    if (labels.empty()) {
        throw UsageError("ground set must be non-empty");
    }
    if (labels.size() > kMaxVertices) {
        throw UsageError("ground set exceeds " + std::to_string(kMaxVertices) + " vertices");
    }
    std::unordered_set<std::string> seen;
    for (const auto& l : labels) {
        if (l.empty()) {
            throw UsageError("empty vertex label");
        }
        if (!seen.insert(l).second) {
            throw UsageError("duplicate vertex label '" + l + "'");
        }
    }
    labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
}

GroundSet GroundSet::letters(std::size_t n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "v" + std::to_string(i));
    }
    return GroundSet(std::move(labels));
}

std::optional<Vertex> GroundSet::find(std::string_view label) const {
    const auto& ls = *labels_;
    for (std::size_t i = 0; i < ls.size(); ++i) {
        if (ls[i] == label) {
            return i;
        }
    }
    return std::nullopt;
}

Vertex GroundSet::index_of(std::string_view label) const {
    if (auto v = find(label)) {
        return *v;
    }
    throw UsageError("unknown vertex label '" + std::string(label) + "'");
}

Subset GroundSet::singleton(Vertex v) const {
    if (v >= size()) {
        throw UsageError("vertex index " + std::to_string(v) + " out of range");
    }
    return Subset(bit(v), size());
}

Subset GroundSet::subset(std::initializer_list<std::string_view> labels) const {
    Mask m = 0;
    for (auto l : labels) {
        m |= bit(index_of(l));
    }
    return Subset(m, size());
}

Subset GroundSet::subset(std::span<const std::string> labels) const {
    Mask m = 0;
    for (const auto& l : labels) {
        m |= bit(index_of(l));
    }
    return Subset(m, size());
}

std::string GroundSet::format(const Subset& s) const {
    std::string out = "{";
    bool first = true;
    for (Vertex v : s.members()) {
        if (!first) {
            out += ',';
        }
        out += label(v);
        first = false;
    }
    out += '}';
    return out;
}

bool overlaps(const Subset& a, const Subset& b) {
    if (a.universe() != b.universe()) {
        throw UsageError("overlaps: subsets belong to different ground sets");
    }
    return masks_overlap(a.bits(), b.bits());
}

namespace {

std::vector<Mask> normalize(std::vector<Mask> masks) {
    std::sort(masks.begin(), masks.end(), canonical_less);
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    return masks;
}

}  // namespace

SetSystem::SetSystem(GroundSet ground, std::vector<Subset> sets) : ground_(std::move(ground)) {
    std::vector<Mask> raw;
    raw.reserve(sets.size());
    for (const auto& s : sets) {
        if (s.universe() != ground_.size()) {
            throw UsageError("set system member belongs to a different ground set");
        }
        if (s.empty()) {
            throw UsageError("set systems may not contain the empty set");
        }
        raw.push_back(s.bits());
    }
    masks_ = normalize(std::move(raw));
    sets_.reserve(masks_.size());
    for (Mask m : masks_) {
        sets_.emplace_back(m, ground_.size());
    }
}

SetSystem::SetSystem(GroundSet ground, std::span<const Mask> masks) : ground_(std::move(ground)) {
    const Mask universe = full_mask(ground_.size());
    for (Mask m : masks) {
        if (m == 0) {
            throw UsageError("set systems may not contain the empty set");
        }
        if (!subset_of(m, universe)) {
            throw UsageError("set system member has vertices outside the ground set");
        }
    }
    masks_ = normalize(std::vector<Mask>(masks.begin(), masks.end()));
    sets_.reserve(masks_.size());
    for (Mask m : masks_) {
        sets_.emplace_back(m, ground_.size());
    }
}

bool SetSystem::contains(Mask m) const {
    return std::binary_search(masks_.begin(), masks_.end(), m, canonical_less);
}

bool SetSystem::contains(const Subset& s) const {
    return s.universe() == n() && contains(s.bits());
}

SetSystem SetSystem::with_singletons() const {
    std::vector<Mask> all = masks_;
    for (Vertex v = 0; v < n(); ++v) {
        all.push_back(bit(v));
    }
    return SetSystem(ground_, all);
}

std::vector<std::pair<Vertex, Vertex>> PrimalGraph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex x = 0; x < adjacency.size(); ++x) {
        for (Mask m = adjacency[x] & ~full_mask(x + 1); m != 0; m &= m - 1) {
            out.emplace_back(x, static_cast<Vertex>(lowest(m)));
        }
    }
    return out;
}

PrimalGraph primal_graph(const SetSystem& c) {
    PrimalGraph g;
    g.adjacency.assign(c.n(), 0);
    for (Mask s : c.masks()) {
        for (Mask m = s; m != 0; m &= m - 1) {
            const Vertex v = static_cast<Vertex>(lowest(m));
            g.adjacency[v] |= s & ~bit(v);
        }
    }
    return g;
}

namespace {

void bron_kerbosch(const PrimalGraph& g, Mask r, Mask p, Mask x, std::vector<Mask>& out) {
    if (p == 0 && x == 0) {
        out.push_back(r);
        return;
    }
    // Pivot on the vertex of P∪X with most neighbours in P.
    const Mask px = p | x;
    Vertex pivot = static_cast<Vertex>(lowest(px));
    int best = -1;
    for (Mask m = px; m != 0; m &= m - 1) {
        const Vertex u = static_cast<Vertex>(lowest(m));
        const int deg = std::popcount(p & g.adjacency[u]);
        if (deg > best) {
            best = deg;
            pivot = u;
        }
    }
    for (Mask m = p & ~g.adjacency[pivot]; m != 0; m &= m - 1) {
        const Vertex v = static_cast<Vertex>(lowest(m));
        bron_kerbosch(g, r | bit(v), p & g.adjacency[v], x & g.adjacency[v], out);
        p &= ~bit(v);
        x |= bit(v);
    }
}

}  // namespace

std::vector<Mask> maximal_cliques(const PrimalGraph& g) {
    std::vector<Mask> out;
    bron_kerbosch(g, 0, full_mask(g.adjacency.size()), 0, out);
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

Verdict is_conformal(const SetSystem& c) {
    for (Mask clique : maximal_cliques(primal_graph(c))) {
        const bool covered = std::any_of(c.masks().begin(), c.masks().end(),
                                         [clique](Mask s) { return subset_of(clique, s); });
        if (!covered) {
            return Verdict::fail("conformal", Witness{{}, {Subset(clique, c.n())}, "uncovered clique"});
        }
    }
    return Verdict::pass("conformal");
}

Verdict intersection_closure_check(const SetSystem& c) {
    const auto masks = c.masks();
    for (std::size_t i = 0; i < masks.size(); ++i) {
        for (std::size_t j = i + 1; j < masks.size(); ++j) {
            const Mask meet = masks[i] & masks[j];
            if (meet != 0 && !c.contains(meet)) {
                return Verdict::fail("K2", Witness{{}, {c.sets()[i], c.sets()[j]}, {}});
            }
        }
    }
    return Verdict::pass("K2");
}

}  // namespace clusterax
