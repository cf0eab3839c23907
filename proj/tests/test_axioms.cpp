#include <doctest.h>

#include <random>
#include <string>

#include "clusterax/axioms.hpp"
#include "clusterax/lab.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace clusterax;

namespace {

TransitFunction entry(const std::string& name) {
    auto e = find_corpus_entry(name);
    REQUIRE(e.has_value());
    return e->transit();
}

Verdict run(const TransitFunction& r, const char* ax) { return check(r, *parse_axiom(ax)); }

std::vector<oracle::M> family_of(const SetSystem& c) { return {c.masks().begin(), c.masks().end()}; }

}  // namespace

TEST_CASE("axiom names round trip") {
    for (AxiomId id : all_axioms()) {
        CHECK(parse_axiom(name(id)) == id);
    }
    CHECK_FALSE(parse_axiom("nope").has_value());
    CHECK(side(AxiomId::p4) == AxiomSide::transit_second_order);
    CHECK(side(AxiomId::P3_prime) == AxiomSide::set_system);
    CHECK(first_order_transit_axioms().size() + second_order_axioms().size() + set_axioms().size() ==
          all_axioms().size());
}

TEST_CASE("verdict text format") {
    auto r = entry("i*-wp");
    const Verdict v = run(r, "wp");
    const std::string line = format_verdict(r.ground(), v);
    CHECK(line.rfind("wp fail [witness: (", 0) == 0);
    CHECK(format_verdict(r.ground(), run(r, "i")) == "i pass");
}

TEST_CASE("(wp) witness on three pairwise meeting triangles") {
    auto r = entry("i*-wp");
    CHECK(run(r, "i").passed);
    const Verdict v = run(r, "wp");
    REQUIRE_FALSE(v.passed);
    const auto& g = r.ground();
    REQUIRE(v.witness->sets.size() == 3);
    CHECK(v.witness->sets[0] == g.subset({"a", "b", "c"}));
    CHECK(v.witness->sets[1] == g.subset({"a", "d", "e"}));
    CHECK(v.witness->sets[2] == g.subset({"c", "d", "f"}));
}

TEST_CASE("(i) fails, and (o') fails at the spanning pair") {
    auto r = entry("o-i*");
    CHECK(run(r, "m").passed);
    CHECK_FALSE(run(r, "i").passed);
    const Verdict o = run(r, "o'");
    REQUIRE_FALSE(o.passed);
    const auto& g = r.ground();
    CHECK(o.witness->vertices == std::vector<Vertex>{g.index_of("a"), g.index_of("c"), g.index_of("b")});
}

TEST_CASE("(l2) holds and (l1) fails with the printed triple") {
    auto r = entry("uc+l2-l1");
    CHECK(run(r, "l2").passed);
    const Verdict v = run(r, "l1");
    REQUIRE_FALSE(v.passed);
    CHECK(oracle::violated_at(oracle::table_of(r), "l1", v.witness->vertices));
}

TEST_CASE("(n3o) fails on a pyramidal system") {
    auto r = entry("py-n3o");
    CHECK_FALSE(run(r, "n3o").passed);
}

TEST_CASE("(p2) holds and (p3) fails") {
    auto r = entry("ex:p2-p3");
    CHECK(run(r, "p2").passed);
    const Verdict v = run(r, "p3");
    REQUIRE_FALSE(v.passed);
    const auto& g = r.ground();
    CHECK(v.witness->sets[0] == g.subset({"b", "c", "d"}));
    CHECK(v.witness->sets[1] == g.subset({"a", "b", "d", "e"}));
}

TEST_CASE("indiscrete transit function") {
    auto r = entry("indiscrete");
    for (const char* ax : {"w", "uc", "u", "k", "a'", "m"}) {
        CHECK_MESSAGE(run(r, ax).passed, ax);
    }
    CHECK_FALSE(run(r, "b4").passed);
}

TEST_CASE("one point: everything holds") {
    auto r = support::transit("a\n");
    for (const auto& [id, v] : check_all(r)) {
        CHECK_MESSAGE(v.passed, name(id));
    }
}

TEST_CASE("check_all covers every axiom") {
    auto r = entry("w+wp+u3+hc-py");
    auto all = check_all(r);
    CHECK(all.size() == all_axioms().size());
    for (const char* ax : {"m", "w", "wp", "u3", "hc", "tb", "p3", "p4"}) {
        CHECK_MESSAGE(all.at(*parse_axiom(ax)).passed, ax);
    }
    CHECK_FALSE(all.at(AxiomId::p2).passed);
}

TEST_CASE("canonical R of the four-cycle: (tb) and (u3) fail, (p2)-(p4) hold") {
    auto e = find_corpus_entry("fig1A");
    REQUIRE(e.has_value());
    auto all = check_all(e->transit());
    for (const char* ax : {"w", "wp", "p2", "p3", "p4", "i"}) {
        CHECK_MESSAGE(all.at(*parse_axiom(ax)).passed, ax);
    }
    CHECK_FALSE(all.at(AxiomId::tb).passed);
    CHECK_FALSE(all.at(AxiomId::u3).passed);
}

TEST_CASE("set-side (N3O) and (L1)") {
    auto e = find_corpus_entry("ex:N3O-L1");
    REQUIRE(e.has_value());
    const SetSystem c = e->sets();
    CHECK(check_set(c, AxiomId::N3O).passed);
    const Verdict v = check_set(c, AxiomId::L1);
    REQUIRE_FALSE(v.passed);
    const auto& g = c.ground();
    CHECK(v.witness->sets == std::vector<Subset>{g.subset({"a", "b"}), g.subset({"b", "c", "d"}), g.subset({"d", "e"})});
}

TEST_CASE("(L2') holds on the transit sets while (l2) fails") {
    auto r = entry("ex:w+wp+l1-l2");
    CHECK(check_set(transit_sets(r), AxiomId::L2_prime).passed);
    CHECK_FALSE(run(r, "l2").passed);
}

TEST_CASE("every failing witness is a genuine violation") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t n = 2 + trial % 5;
        const TransitFunction r = trial % 2 ? oracle::random_transit(rng, n, 0.3)
                                            : oracle::random_monotone(rng, n, 1 + trial % 5);
        const auto t = oracle::table_of(r);
        const auto fam = family_of(transit_sets(r));
        for (const auto& [id, v] : check_all(r)) {
            if (!v.passed) {
                CHECK_MESSAGE(oracle::witness_is_genuine(t, fam, std::string(name(id)), v), name(id));
            }
        }
    }
}

TEST_CASE("checkers agree with the naive evaluator on small ground sets") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t n = 1 + trial % 4;
        const TransitFunction r = trial % 3 == 0 ? oracle::random_transit(rng, n, 0.35)
                                                 : oracle::random_monotone(rng, n, trial % 4);
        const auto t = oracle::table_of(r);
        const auto fam = family_of(transit_sets(r));
        for (AxiomId id : all_axioms()) {
            const std::string ax(name(id));
            const bool expected = side(id) == AxiomSide::set_system ? oracle::set_holds(fam, n, ax) : oracle::holds(t, ax);
            const Verdict v = side(id) == AxiomSide::set_system ? check_set(transit_sets(r), id) : check(r, id);
            CHECK_MESSAGE(v.passed == expected, ax);
        }
    }
}

TEST_CASE("(P3) and (P3') agree") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = 3 + trial % 5;
        SetSystem c(GroundSet::letters(n), oracle::random_family(rng, n, 2 + trial % 6));
        CHECK(check_set(c, AxiomId::P3).passed == check_set(c, AxiomId::P3_prime).passed);
    }
}
