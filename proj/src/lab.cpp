#include "clusterax/lab.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <thread>

#include "clusterax/axioms.hpp"
#include "clusterax/interval.hpp"

namespace clusterax {

// ---------------------------------------------------------------- properties

namespace {

const std::vector<std::string>& structural_names() {
    static const std::vector<std::string> names{
        "pyramidal",        "pre-pyramidal", "pyramidal-axioms", "interval-transit", "weakly-pyramidal",
        "weak-hierarchy",   "hierarchy",     "paired-hierarchy", "totally-balanced", "gamma-acyclic",
        "conformal",        "duchet",        "no-config",        "config-1",         "config-2",
        "config-3",         "config-4",      "config-5",
    };
    return names;
}

Witness config_witness(const ConfigWitness& w) {
    return Witness{w.vertices, w.sets, "forbidden configuration family " + std::to_string(w.family)};
}

Verdict config_verdict(const std::string& check, const std::optional<ConfigWitness>& w, bool pass_if_found) {
    if (w.has_value() == pass_if_found) {
        return Verdict::pass(check);
    }
    return w ? Verdict::fail(check, config_witness(*w)) : Verdict::fail(check, Witness{});
}

Verdict set_verdict(const SetSystem& c, const std::string& p) {
    if (p == "pyramidal") {
        return is_pyramidal(c);
    }
    if (p == "pre-pyramidal") {
        if (find_pyramidal_order(c)) {
            return Verdict::pass(p);
        }
        return config_verdict(p, detect_any_config(c), false);
    }
    if (p == "weakly-pyramidal") {
        Verdict w = is_weak_hierarchy(c);
        if (!w.passed) {
            return Verdict{p, false, w.witness};
        }
        Verdict wp = check_set(c, AxiomId::WP);
        return Verdict{p, wp.passed, wp.witness};
    }
    if (p == "weak-hierarchy") {
        return is_weak_hierarchy(c);
    }
    if (p == "hierarchy") {
        return is_hierarchy(c);
    }
    if (p == "paired-hierarchy") {
        return is_paired_hierarchy(c);
    }
    if (p == "totally-balanced") {
        return is_totally_balanced(c);
    }
    if (p == "gamma-acyclic") {
        return gamma_acyclicity(c).verdict;
    }
    if (p == "conformal") {
        return is_conformal(c);
    }
    if (p == "duchet") {
        return duchet_condition(c);
    }
    if (p == "no-config") {
        return config_verdict(p, detect_any_config(c), false);
    }
    if (p.rfind("config-", 0) == 0 && p.size() == 8 && p[7] >= '1' && p[7] <= '5') {
        return config_verdict(p, detect_config(c, p[7] - '0'), true);
    }
    auto id = parse_axiom(p);
    if (id && side(*id) == AxiomSide::set_system) {
        return check_set(c, *id);
    }
    throw UsageError("unknown property '" + p + "'");
}

bool is_transit_side(const std::string& property) {
    auto id = parse_axiom(property);
    return (id && side(*id) != AxiomSide::set_system) || property == "pyramidal-axioms" ||
           property == "interval-transit" || property == "t1" || property == "t2" || property == "t3";
}

}  // namespace

std::vector<std::string> property_names() {
    std::vector<std::string> out;
    for (AxiomId id : all_axioms()) {
        out.emplace_back(name(id));
    }
    const auto& s = structural_names();
    out.insert(out.end(), s.begin(), s.end());
    return out;
}

Verdict transit_property_verdict(const TransitFunction& r, const std::string& property, P4IndexMode mode) {
    if (property == "t1" || property == "t2" || property == "t3") {
        // Enforced by construction; re-checked here for completeness.
        for (Vertex u = 0; u < r.n(); ++u) {
            for (Vertex v = 0; v < r.n(); ++v) {
                if ((r.mask(u, v) & bit(u)) == 0 || r.mask(u, v) != r.mask(v, u) || r.mask(u, u) != bit(u)) {
                    return Verdict::fail(property, Witness{{u, v}, {}, {}});
                }
            }
        }
        return Verdict::pass(property);
    }
    if (property == "pyramidal-axioms") {
        return pyramidal_via_axioms(r, mode);
    }
    if (property == "interval-transit") {
        return interval_transit_check(r);
    }
    if (auto id = parse_axiom(property); id && side(*id) != AxiomSide::set_system) {
        return check(r, *id, mode);
    }
    return set_verdict(transit_sets(r), property);
}

Verdict set_property_verdict(const SetSystem& c, const std::string& property) {
    if (is_transit_side(property)) {
        return transit_property_verdict(canonical_transit(c), property);
    }
    return set_verdict(c, property);
}

bool evaluate_transit_property(const TransitFunction& r, const std::string& property, P4IndexMode mode) {
    return transit_property_verdict(r, property, mode).passed;
}

bool evaluate_property(const CorpusEntry& entry, const std::string& property) {
    if (is_transit_side(property)) {
        return evaluate_transit_property(entry.transit(), property);
    }
    return set_verdict(entry.sets(), property).passed;
}

CorpusReport run_corpus(const std::vector<CorpusEntry>& corpus) {
    CorpusReport report;
    for (const CorpusEntry& entry : corpus) {
        ++report.entries;
        for (const Expectation& e : entry.expected) {
            ++report.checks;
            const bool actual = evaluate_property(entry, e.check);
            if (actual != e.expected) {
                report.mismatches.push_back({entry.name, e, actual});
            }
        }
    }
    return report;
}

// --------------------------------------------------------------- enumeration

namespace {

// Backtracking over the pairs x < y in lexicographic order. R(x,y) ranges
// over supersets of {x,y}; each choice is checked for monotonicity against
// every pair already fixed.
class MonotoneEnumerator {
public:
    MonotoneEnumerator(std::size_t n, std::size_t split_depth)
        : n_(n), ground_(GroundSet::letters(n)), table_(pair_count(n), 0), split_depth_(split_depth) {
        for (Vertex v = 0; v < n; ++v) {
            table_[pair_index(v, v)] = bit(v);
        }
        for (Vertex x = 0; x < n; ++x) {
            for (Vertex y = x + 1; y < n; ++y) {
                pairs_.emplace_back(x, y);
            }
        }
        split_depth_ = std::min(split_depth_, pairs_.size());
    }

    // visit(R, prefix id) returns false to stop.
    template <class Visit>
    bool run(Visit&& visit, std::size_t chunk, std::size_t chunks) {
        prefix_ = 0;
        return step(0, visit, chunk, chunks);
    }

private:
    bool consistent(std::size_t depth, Mask m) const {
        const auto [x, y] = pairs_[depth];
        for (std::size_t i = 0; i < depth; ++i) {
            const auto [p, q] = pairs_[i];
            const Mask other = table_[pair_index(p, q)];
            if ((m & bit(p)) != 0 && (m & bit(q)) != 0 && !subset_of(other, m)) {
                return false;
            }
            if ((other & bit(x)) != 0 && (other & bit(y)) != 0 && !subset_of(m, other)) {
                return false;
            }
        }
        return true;
    }

    template <class Visit>
    bool step(std::size_t depth, Visit& visit, std::size_t chunk, std::size_t chunks) {
        if (depth == split_depth_) {
            const std::uint64_t id = prefix_++;
            if (id % chunks != chunk) {
                return true;
            }
            current_prefix_ = id;
        }
        if (depth == pairs_.size()) {
            return visit(TransitFunction(ground_, table_), current_prefix_);
        }
        const auto [x, y] = pairs_[depth];
        const Mask base = bit(x) | bit(y);
        const Mask rest = full_mask(n_) & ~base;
        // Subsets of `rest` in increasing order.
        Mask extra = 0;
        while (true) {
            const Mask m = base | extra;
            if (consistent(depth, m)) {
                table_[pair_index(x, y)] = m;
                if (!step(depth + 1, visit, chunk, chunks)) {
                    return false;
                }
            }
            if (extra == rest) {
                break;
            }
            extra = (extra - rest) & rest;
        }
        table_[pair_index(x, y)] = 0;
        return true;
    }

    std::size_t n_;
    GroundSet ground_;
    std::vector<Mask> table_;
    std::vector<std::pair<Vertex, Vertex>> pairs_;
    std::size_t split_depth_;
    std::uint64_t prefix_ = 0;
    std::uint64_t current_prefix_ = 0;
};

constexpr std::size_t kSplitDepth = 3;

void require_enumerable(std::size_t n) {
    if (n == 0 || n > kMaxEnumerationVertices) {
        throw UsageError("enumeration supports 1 <= n <= " + std::to_string(kMaxEnumerationVertices));
    }
}

}  // namespace

std::uint64_t enumerate_monotone(std::size_t n, const std::function<bool(const TransitFunction&)>& visit,
                                 std::uint64_t budget) {
    require_enumerable(n);
    std::uint64_t count = 0;
    MonotoneEnumerator en(n, kSplitDepth);
    en.run(
        [&](const TransitFunction& r, std::uint64_t) {
            if (budget != 0 && count >= budget) {
                throw BudgetExceeded("enumeration budget of " + std::to_string(budget) + " exceeded");
            }
            ++count;
            return visit(r);
        },
        0, 1);
    return count;
}

std::uint64_t enumerate_t_systems(std::size_t n, const std::function<bool(const SetSystem&)>& visit,
                                  std::uint64_t budget) {
    return enumerate_monotone(
        n, [&](const TransitFunction& r) { return visit(transit_sets(r)); }, budget);
}

std::uint64_t enumerate_monotone_chunk(std::size_t n, std::size_t chunk, std::size_t chunks,
                                       const std::function<bool(const TransitFunction&)>& visit) {
    require_enumerable(n);
    if (chunks == 0 || chunk >= chunks) {
        throw UsageError("chunk index out of range");
    }
    std::uint64_t count = 0;
    MonotoneEnumerator en(n, kSplitDepth);
    en.run(
        [&](const TransitFunction& r, std::uint64_t) {
            ++count;
            return visit(r);
        },
        chunk, chunks);
    return count;
}

namespace {

std::size_t resolve_threads(std::size_t threads) {
    if (threads == 0) {
        threads = std::max(1U, std::thread::hardware_concurrency());
    }
    return threads;
}

// Runs body(chunk, chunks) over all chunks on `threads` workers.
void run_chunks(std::size_t threads, std::size_t chunks, const std::function<void(std::size_t)>& body) {
    threads = std::min(resolve_threads(threads), chunks);
    if (threads <= 1) {
        for (std::size_t c = 0; c < chunks; ++c) {
            body(c);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (std::size_t c = next++; c < chunks; c = next++) {
                body(c);
            }
        });
    }
    for (auto& th : pool) {
        th.join();
    }
}

constexpr std::size_t kChunks = 32;

}  // namespace

std::uint64_t enumerate_monotone_parallel(std::size_t n, std::size_t threads,
                                          const std::function<void(const TransitFunction&)>& visit) {
    require_enumerable(n);
    std::atomic<std::uint64_t> total{0};
    run_chunks(threads, kChunks, [&](std::size_t c) {
        total += enumerate_monotone_chunk(n, c, kChunks, [&](const TransitFunction& r) {
            visit(r);
            return true;
        });
    });
    return total;
}

std::uint64_t count_t_systems_bruteforce(std::size_t n) {
    if (n == 0 || n > 4) {
        throw UsageError("brute-force T-system count supports 1 <= n <= 4");
    }
    std::vector<Mask> candidates;
    for (Mask m = 1; m <= full_mask(n); ++m) {
        if (std::popcount(m) >= 2) {
            candidates.push_back(m);
        }
    }
    const GroundSet ground = GroundSet::letters(n);
    std::uint64_t count = 0;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << candidates.size()); ++pick) {
        std::vector<Mask> family;
        for (Vertex v = 0; v < n; ++v) {
            family.push_back(bit(v));
        }
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if ((pick >> i) & 1U) {
                family.push_back(candidates[i]);
            }
        }
        if (check_t_system(SetSystem(ground, std::span<const Mask>(family))).is_t_system) {
            ++count;
        }
    }
    return count;
}

// -------------------------------------------------------------- implications

std::vector<std::string> implication_properties() {
    std::vector<std::string> out;
    for (AxiomId id : all_axioms()) {
        if (id != AxiomId::m) {
            out.emplace_back(name(id));
        }
    }
    for (const std::string& s : structural_names()) {
        if (s.rfind("config-", 0) != 0) {
            out.push_back(s);
        }
    }
    return out;
}

std::map<std::string, bool> property_profile(const TransitFunction& r, P4IndexMode mode) {
    std::map<std::string, bool> out;
    const SetSystem c = transit_sets(r);
    for (const std::string& p : implication_properties()) {
        if (p == "pyramidal-axioms") {
            out[p] = pyramidal_via_axioms(r, mode).passed;
        } else if (p == "interval-transit") {
            out[p] = interval_transit_check(r).passed;
        } else if (auto id = parse_axiom(p); id && side(*id) != AxiomSide::set_system) {
            out[p] = check(r, *id, mode).passed;
        } else {
            out[p] = set_verdict(c, p).passed;
        }
    }
    return out;
}

std::vector<Implication> claimed_implications() {
    std::vector<Implication> out;
    auto add = [&out](std::vector<std::string> pre, std::string post, std::string src) {
        out.push_back({std::move(pre), std::move(post), std::move(src)});
    };
    auto equiv = [&add](const std::string& a, const std::string& b, const std::string& src) {
        add({a}, b, src);
        add({b}, a, src);
    };
    add({"uc"}, "u", "uc <=> u and w");
    add({"uc"}, "w", "uc <=> u and w");
    add({"u", "w"}, "uc", "uc <=> u and w");
    add({"uc"}, "pyramidal", "union-closed implies pyramidal");
    equiv("tb", "hc", "tb <=> hc <=> tb' <=> totally balanced");
    equiv("tb", "tb'", "tb <=> hc <=> tb' <=> totally balanced");
    equiv("tb", "totally-balanced", "tb <=> hc <=> tb' <=> totally balanced");
    equiv("pyramidal", "pyramidal-axioms", "(m),(tb),(p2),(p3),(p4) <=> pyramidal");
    add({"l1", "l2"}, "pyramidal", "l1 and l2 imply pyramidal");
    add({"l1", "l2"}, "totally-balanced", "l1 and l2 exclude hypercycles");
    for (const char* q : {"u3", "hc", "p2", "p3", "p4", "wp", "w"}) {
        add({"pyramidal"}, q, "pyramidal implies u3, hc, p2, p3, p4, wp, w");
    }
    for (const char* q : {"w", "u3", "tb2"}) {
        add({"tb"}, q, "tb implies w, u3, tb2");
    }
    add({"p4"}, "wp", "p4 implies wp");
    add({"tb", "p4"}, "weakly-pyramidal", "tb and p4 imply weakly pyramidal");
    add({"n3o"}, "w", "n3o implies w and wp");
    add({"n3o"}, "wp", "n3o implies w and wp");
    add({"wp"}, "i", "wp implies i");
    add({"i"}, "o'", "i implies o'");
    add({"l1"}, "n3o", "l1 implies n3o");
    add({"l1"}, "K2", "l1 implies closed transit sets");
    add({"uc"}, "l2", "uc implies l2");
    add({"u"}, "u3", "u implies u3");
    add({"WP"}, "I", "WP implies I");
    for (const char* q : {"WP", "N3O", "P2", "P3", "weak-hierarchy"}) {
        add({"L1"}, q, "L1 implies WP, N3O, P2, P3, weak hierarchy");
    }
    add({"weak-hierarchy", "I"}, "WP", "for weak hierarchies (I) and (WP) are equivalent");
    equiv("P3", "P3'", "P3 and P3' are equivalent");
    equiv("a'", "conformal", "conformal iff a'");
    equiv("a'", "K1", "V is a transit set iff a'");
    equiv("k", "K2", "k translates K2");
    equiv("uc", "UC", "uc translates UC");
    equiv("wp", "WP", "wp translates WP");
    equiv("i", "I", "i translates I");
    equiv("l1", "L1", "l1 translates L1");
    equiv("n3o", "N3O", "n3o translates N3O");
    equiv("p2", "P2", "p2 translates P2");
    equiv("p3", "P3", "p3 translates P3");
    equiv("w", "weak-hierarchy", "w characterizes weak hierarchies");
    equiv("hierarchy", "gamma-acyclic", "gamma-acyclic iff hierarchy");
    equiv("pre-pyramidal", "no-config", "no forbidden configuration iff interval hypergraph");
    equiv("pre-pyramidal", "duchet", "every triple has a between vertex iff interval hypergraph");
    add({"pre-pyramidal"}, "pyramidal", "pre-pyramidal transit sets are closed");
    add({"l2"}, "L2'", "l2 implies L2'");
    add({"w", "l2"}, "L2''", "w and l2 imply L2''");
    return out;
}

std::string ImplicationReport::to_tsv() const {
    std::ostringstream out;
    out << "# n=" << n << " total=" << total << "\n";
    out << "P\\Q";
    for (const auto& q : properties) {
        out << '\t' << q;
    }
    out << '\n';
    for (std::size_t i = 0; i < properties.size(); ++i) {
        out << properties[i];
        for (std::size_t j = 0; j < properties.size(); ++j) {
            out << '\t' << matrix[i][j];
        }
        out << '\n';
    }
    return out.str();
}

ImplicationReport verify_implications(std::size_t n, std::size_t threads) {
    require_enumerable(n);
    ImplicationReport report;
    report.n = n;
    report.properties = implication_properties();
    const std::size_t np = report.properties.size();
    report.matrix.assign(np, std::vector<std::uint64_t>(np, 0));

    struct Partial {
        std::uint64_t total = 0;
        std::vector<std::vector<std::uint64_t>> matrix;
        // first counterexample per cell, keyed by (prefix id, position)
        std::map<std::pair<std::size_t, std::size_t>, std::pair<std::pair<std::uint64_t, std::uint64_t>, TransitFunction>>
            first;
    };
    std::vector<Partial> parts(kChunks);

    run_chunks(threads, kChunks, [&](std::size_t chunk) {
        Partial& part = parts[chunk];
        part.matrix.assign(np, std::vector<std::uint64_t>(np, 0));
        MonotoneEnumerator en(n, kSplitDepth);
        std::uint64_t local = 0;
        en.run(
            [&](const TransitFunction& r, std::uint64_t prefix) {
                ++part.total;
                ++local;
                const auto profile = property_profile(r);
                std::vector<bool> val(np);
                for (std::size_t i = 0; i < np; ++i) {
                    val[i] = profile.at(report.properties[i]);
                }
                for (std::size_t i = 0; i < np; ++i) {
                    if (!val[i]) {
                        continue;
                    }
                    for (std::size_t j = 0; j < np; ++j) {
                        if (!val[j]) {
                            ++part.matrix[i][j];
                            part.first.try_emplace({i, j}, std::pair{std::pair{prefix, local}, r});
                        }
                    }
                }
                return true;
            },
            chunk, kChunks);
    });

    std::map<std::pair<std::size_t, std::size_t>, std::pair<std::pair<std::uint64_t, std::uint64_t>, TransitFunction>>
        first;
    for (Partial& part : parts) {
        report.total += part.total;
        for (std::size_t i = 0; i < np; ++i) {
            for (std::size_t j = 0; j < np; ++j) {
                report.matrix[i][j] += part.matrix[i][j];
            }
        }
        for (auto& [cell, entry] : part.first) {
            auto it = first.find(cell);
            if (it == first.end() || entry.first < it->second.first) {
                first.insert_or_assign(cell, entry);
            }
        }
    }
    for (auto& [cell, entry] : first) {
        report.counterexamples.emplace(std::pair{report.properties[cell.first], report.properties[cell.second]},
                                       entry.second);
    }

    // Single premises are read off the matrix; conjunctions need a second pass.
    auto index_of = [&](const std::string& p) {
        return static_cast<std::size_t>(std::find(report.properties.begin(), report.properties.end(), p) -
                                        report.properties.begin());
    };
    std::vector<Implication> multi;
    for (const Implication& imp : claimed_implications()) {
        if (imp.premises.size() == 1) {
            const std::uint64_t bad = report.matrix[index_of(imp.premises[0])][index_of(imp.conclusion)];
            if (bad != 0) {
                report.violated.emplace_back(imp, bad);
            }
        } else {
            multi.push_back(imp);
        }
    }
    if (!multi.empty()) {
        std::vector<std::atomic<std::uint64_t>> bad(multi.size());
        run_chunks(threads, kChunks, [&](std::size_t chunk) {
            MonotoneEnumerator en(n, kSplitDepth);
            en.run(
                [&](const TransitFunction& r, std::uint64_t) {
                    std::map<std::string, bool> cache;
                    auto value = [&](const std::string& p) {
                        auto it = cache.find(p);
                        if (it == cache.end()) {
                            it = cache.emplace(p, evaluate_transit_property(r, p)).first;
                        }
                        return it->second;
                    };
                    for (std::size_t k = 0; k < multi.size(); ++k) {
                        bool holds = true;
                        for (const auto& p : multi[k].premises) {
                            if (!value(p)) {
                                holds = false;
                                break;
                            }
                        }
                        if (holds && !value(multi[k].conclusion)) {
                            ++bad[k];
                        }
                    }
                    return true;
                },
                chunk, kChunks);
        });
        for (std::size_t k = 0; k < multi.size(); ++k) {
            if (bad[k] != 0) {
                report.violated.emplace_back(multi[k], bad[k].load());
            }
        }
    }
    return report;
}

namespace {

// Canonical transit functions of V, the singletons and k further sets, for
// k = 1, 2, ...; for each k, families ordered by their largest set size.
// Stops when `visit` returns false or after `budget` candidates.
void sparse_family_search(std::size_t n, std::uint64_t budget,
                          const std::function<bool(const TransitFunction&)>& visit) {
    const GroundSet ground = GroundSet::letters(n);
    std::vector<Mask> pool;  // proper subsets with >= 2 points, by size
    std::vector<std::size_t> level_start;
    for (std::size_t size = 2; size < n; ++size) {
        level_start.push_back(pool.size());
        for (Mask m = 1; m < full_mask(n); ++m) {
            if (static_cast<std::size_t>(std::popcount(m)) == size) {
                pool.push_back(m);
            }
        }
    }
    level_start.push_back(pool.size());
    std::vector<Mask> fam;
    for (Vertex v = 0; v < n; ++v) {
        fam.push_back(bit(v));
    }
    fam.push_back(full_mask(n));
    const std::size_t base = fam.size();
    std::uint64_t seen = 0;
    bool stop = false;
    // Adds `left` more sets with indices below `below`, in decreasing order.
    std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t below, std::size_t left) {
        if (left == 0) {
            if (++seen > budget || !visit(canonical_transit(SetSystem(ground, fam)))) {
                stop = true;
            }
            return;
        }
        for (std::size_t i = left - 1; i < below && !stop; ++i) {
            fam.push_back(pool[i]);
            choose(i, left - 1);
            fam.pop_back();
        }
    };
    for (std::size_t k = 1; k <= pool.size() && !stop; ++k) {
        for (std::size_t level = 0; level + 1 < level_start.size() && !stop; ++level) {
            for (std::size_t t = level_start[level]; t < level_start[level + 1] && !stop; ++t) {
                fam.resize(base);
                fam.push_back(pool[t]);
                choose(t, k - 1);
            }
        }
    }
}

}  // namespace

std::optional<TransitFunction> search_counterexample(const std::vector<std::string>& premises,
                                                     const std::string& conclusion, std::size_t max_n,
                                                     std::uint64_t budget) {
    std::optional<TransitFunction> found;
    auto test = [&](const TransitFunction& r) {
        for (const auto& p : premises) {
            if (!evaluate_transit_property(r, p)) {
                return true;
            }
        }
        if (!evaluate_transit_property(r, conclusion)) {
            found = r;
            return false;
        }
        return true;
    };
    for (std::size_t n = 1; n <= max_n && !found; ++n) {
        if (n <= kMaxEnumerationVertices) {
            enumerate_monotone(n, test);
        } else {
            sparse_family_search(n, budget, test);
            if (found) {
                break;
            }
            // Depth-first stream over the same backtracking, capped.
            std::uint64_t seen = 0;
            MonotoneEnumerator en(n, kSplitDepth);
            en.run(
                [&](const TransitFunction& r, std::uint64_t) {
                    if (++seen > budget) {
                        return false;
                    }
                    return test(r);
                },
                0, 1);
        }
    }
    return found;
}

}  // namespace clusterax
