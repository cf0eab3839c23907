#pragma once

// Internal helpers shared by the checkers.

#include <utility>
#include <vector>

#include "clusterax/setcore.hpp"
#include "clusterax/transit.hpp"

namespace clusterax::detail {

/// Distinct transit sets of R, each paired with the first pair (x <= y, in
/// lexicographic order) that generates it. Quantifying over vertex pairs is
/// the same as quantifying over these sets; witnesses are reported through
/// the generating pairs.
struct TransitView {
    std::vector<Mask> sets;
    std::vector<std::pair<Vertex, Vertex>> gen;

    explicit TransitView(const TransitFunction& r) {
        std::vector<Mask> seen;
        for (Vertex x = 0; x < r.n(); ++x) {
            for (Vertex y = x; y < r.n(); ++y) {
                const Mask m = r.mask(x, y);
                bool fresh = true;
                for (Mask s : sets) {
                    if (s == m) {
                        fresh = false;
                        break;
                    }
                }
                if (fresh) {
                    sets.push_back(m);
                    gen.emplace_back(x, y);
                }
            }
        }
    }

    bool contains(Mask m) const {
        for (Mask s : sets) {
            if (s == m) {
                return true;
            }
        }
        return false;
    }
};

inline void append_pair(std::vector<Vertex>& out, std::pair<Vertex, Vertex> p) {
    out.push_back(p.first);
    out.push_back(p.second);
}

inline std::vector<Vertex> pairs_to_vertices(const TransitView& view, std::initializer_list<std::size_t> idx) {
    std::vector<Vertex> out;
    for (std::size_t i : idx) {
        append_pair(out, view.gen[i]);
    }
    return out;
}

template <class F>
void for_each_member(Mask m, F&& f) {
    for (; m != 0; m &= m - 1) {
        f(static_cast<Vertex>(lowest(m)));
    }
}

}  // namespace clusterax::detail
