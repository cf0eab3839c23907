#include <doctest.h>

#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>

#include "clusterax/axioms.hpp"
#include "clusterax/interval.hpp"
#include "clusterax/lab.hpp"
#include "oracle.hpp"

using namespace clusterax;

namespace {

// Every family of subsets with at least two points, plus all singletons,
// kept when (KS), (KR) and (KC) hold. Returned as sorted mask lists.
std::set<std::vector<Mask>> naive_t_systems(std::size_t n) {
    std::vector<Mask> big;
    for (Mask s = 1; s <= full_mask(n); ++s) {
        if (std::popcount(s) >= 2) {
            big.push_back(s);
        }
    }
    std::set<std::vector<Mask>> out;
    for (Mask pick = 0; pick < (Mask{1} << big.size()); ++pick) {
        std::vector<Mask> fam;
        for (std::size_t i = 0; i < big.size(); ++i) {
            if (oracle::in(i, pick)) {
                fam.push_back(big[i]);
            }
        }
        for (Vertex v = 0; v < n; ++v) {
            fam.push_back(bit(v));
        }
        auto member = [&](Mask m) { return std::find(fam.begin(), fam.end(), m) != fam.end(); };
        bool ok = true;
        for (Mask c : fam) {
            bool generated = false;
            for (Vertex p = 0; p < n && !generated; ++p) {
                for (Vertex q = 0; q < n && !generated; ++q) {
                    if (!oracle::in(p, c) || !oracle::in(q, c)) {
                        continue;
                    }
                    bool all_contain = true;
                    for (Mask d : fam) {
                        if (oracle::in(p, d) && oracle::in(q, d) && !subset_of(c, d)) {
                            all_contain = false;
                        }
                    }
                    generated = all_contain;
                }
            }
            ok = ok && generated;
        }
        for (Vertex p = 0; p < n && ok; ++p) {
            for (Vertex q = 0; q < n && ok; ++q) {
                Mask cap = full_mask(n);
                for (Mask d : fam) {
                    if (oracle::in(p, d) && oracle::in(q, d)) {
                        cap &= d;
                    }
                }
                ok = member(cap);
            }
        }
        if (ok) {
            std::sort(fam.begin(), fam.end());
            out.insert(fam);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("monotone transit functions are exactly the T-systems") {
    const std::uint64_t expected[] = {0, 1, 1, 8, 400};
    for (std::size_t n = 1; n <= 4; ++n) {
        CAPTURE(n);
        const auto oracle_sets = naive_t_systems(n);
        CHECK(oracle_sets.size() == expected[n]);
        std::set<std::vector<Mask>> seen;
        const std::uint64_t count = enumerate_monotone(n, [&](const TransitFunction& r) {
            CHECK(oracle::holds(oracle::table_of(r), "m"));
            const SetSystem c = transit_sets(r);
            std::vector<Mask> fam(c.masks().begin(), c.masks().end());
            std::sort(fam.begin(), fam.end());
            seen.insert(fam);
            return true;
        });
        CHECK(count == oracle_sets.size());
        CHECK(seen == oracle_sets);
        CHECK(count_t_systems_bruteforce(n) == count);
    }
}

TEST_CASE("set-system view of the enumeration") {
    std::uint64_t count = 0;
    enumerate_t_systems(3, [&](const SetSystem& c) {
        CHECK(check_t_system(c).is_t_system);
        ++count;
        return true;
    });
    CHECK(count == 8);
}

TEST_CASE("chunked and parallel enumeration cover the same functions") {
    const std::size_t n = 5;
    const std::uint64_t sequential = enumerate_monotone(n, [](const TransitFunction&) { return true; });
    CHECK(sequential == 163696);
    std::uint64_t chunked = 0;
    for (std::size_t i = 0; i < 7; ++i) {
        chunked += enumerate_monotone_chunk(n, i, 7, [](const TransitFunction&) { return true; });
    }
    CHECK(chunked == sequential);
    std::atomic<std::uint64_t> parallel{0};
    CHECK(enumerate_monotone_parallel(n, 2, [&](const TransitFunction&) { ++parallel; }) == sequential);
    CHECK(parallel.load() == sequential);
}

TEST_CASE("early stop and budget") {
    std::uint64_t seen = 0;
    enumerate_monotone(4, [&](const TransitFunction&) { return ++seen < 10; });
    CHECK(seen == 10);
    CHECK_THROWS_AS(enumerate_monotone(4, [](const TransitFunction&) { return true; }, 50), BudgetExceeded);
    CHECK_THROWS_AS(enumerate_monotone(kMaxEnumerationVertices + 1, [](const TransitFunction&) { return true; }),
                    UsageError);
}

TEST_CASE("corpus size and names") {
    const auto corpus = load_corpus();
    CHECK(corpus.size() >= 18);
    std::set<std::string> names;
    for (const auto& e : corpus) {
        CHECK(names.insert(e.name).second);
        CHECK_FALSE(e.expected.empty());
    }
    CHECK_FALSE(find_corpus_entry("no such entry").has_value());
}

TEST_CASE("corpus claims: all hold except six contradicted by explicit witnesses") {
    const CorpusReport report = run_corpus(load_corpus());
    std::set<std::pair<std::string, std::string>> got;
    for (const auto& m : report.mismatches) {
        got.insert({m.entry, m.expectation.check});
    }
    const std::set<std::pair<std::string, std::string>> documented{
        {"o-i*", "o'"},          {"uc+l2-l1", "m"},          {"wp-hc", "w"},
        {"ex:p2-p3", "p4"},      {"ex:p2p3-wpy", "p2"},      {"ex:wpy-tbp234", "p3"},
    };
    CHECK(got == documented);
}

TEST_CASE("corpus properties agree with the naive evaluator") {
    const std::set<std::string> transit_side{"m",  "k",  "w",  "b3",  "b4",  "u",  "o'", "uc", "u3", "wp", "i",
                                             "l1", "l2", "n3o", "p2", "p3", "a'", "tb", "hc", "tb2", "tb'", "p4"};
    const std::set<std::string> set_side{"K1", "K2", "UC", "WP", "I", "L1", "N3O", "L2'", "L2''", "P2", "P3", "P3'"};
    for (const auto& e : load_corpus()) {
        const TransitFunction r = e.transit();
        const auto t = oracle::table_of(r);
        const SetSystem c = e.is_set_system ? e.sets() : transit_sets(r);
        const std::vector<oracle::M> fam(c.masks().begin(), c.masks().end());
        for (const auto& x : e.expected) {
            if (transit_side.count(x.check)) {
                CHECK_MESSAGE(evaluate_property(e, x.check) == oracle::holds(t, x.check), (e.name + " " + x.check));
            } else if (set_side.count(x.check)) {
                CHECK_MESSAGE(evaluate_property(e, x.check) == oracle::set_holds(fam, c.n(), x.check),
                              (e.name + " " + x.check));
            }
        }
    }
}

TEST_CASE("structural properties by name") {
    auto e = find_corpus_entry("fig1A");
    REQUIRE(e.has_value());
    CHECK_FALSE(evaluate_property(*e, "pyramidal"));
    CHECK(evaluate_property(*e, "config-1"));
    CHECK_FALSE(evaluate_property(*e, "no-config"));
    CHECK(evaluate_transit_property(e->transit(), "t1"));
    CHECK_THROWS_AS(evaluate_property(*e, "no-such-property"), UsageError);
    const Verdict v = transit_property_verdict(e->transit(), "pre-pyramidal");
    REQUIRE_FALSE(v.passed);
    CHECK(v.witness->note == "forbidden configuration family 1");
}

TEST_CASE("claimed implications hold on every monotone R with four points") {
    const ImplicationReport report = verify_implications(4, 2);
    CHECK(report.total == 400);
    CHECK(report.violated.empty());
    const auto props = implication_properties();
    CHECK(report.matrix.size() == props.size());
    const std::string tsv = report.to_tsv();
    CHECK(tsv.rfind("# n=4 total=400\n", 0) == 0);
    // A cell with p true and q false has a stored example that really is one.
    for (const auto& [cell, r] : report.counterexamples) {
        CHECK(evaluate_transit_property(r, cell.first));
        CHECK_FALSE(evaluate_transit_property(r, cell.second));
    }
}

TEST_CASE("counterexample search") {
    auto found = search_counterexample({"wp"}, "hc", 5);
    REQUIRE(found.has_value());
    CHECK(check(*found, AxiomId::m).passed);
    CHECK(check(*found, AxiomId::wp).passed);
    CHECK_FALSE(check(*found, AxiomId::hc).passed);

    CHECK_FALSE(search_counterexample({"uc"}, "u", 4).has_value());
    CHECK_FALSE(search_counterexample({"pyramidal"}, "u3", 4).has_value());
}

TEST_CASE("counterexample search beyond exhaustive range") {
    // Three pairwise meeting triangles need six points.
    CHECK_FALSE(search_counterexample({"i"}, "wp", 5).has_value());
    auto found = search_counterexample({"i"}, "wp", 6);
    REQUIRE(found.has_value());
    CHECK(found->n() == 6);
    const auto t = oracle::table_of(*found);
    CHECK(oracle::holds(t, "m"));
    CHECK(oracle::holds(t, "i"));
    CHECK_FALSE(oracle::holds(t, "wp"));
}

TEST_CASE("(l2) and (w) imply neither (u3) nor (tb)") {
    for (const char* conclusion : {"u3", "tb"}) {
        CAPTURE(conclusion);
        CHECK_FALSE(search_counterexample({"l2", "w"}, conclusion, 4).has_value());
        auto found = search_counterexample({"l2", "w"}, conclusion, 5);
        REQUIRE(found.has_value());
        const auto t = oracle::table_of(*found);
        CHECK(oracle::holds(t, "m"));
        CHECK(oracle::holds(t, "l2"));
        CHECK(oracle::holds(t, "w"));
        CHECK_FALSE(oracle::holds(t, conclusion));
    }
    auto l2_only = search_counterexample({"l2"}, "u3", 5);
    REQUIRE(l2_only.has_value());
    CHECK_FALSE(oracle::holds(oracle::table_of(*l2_only), "u3"));
}
