#include <doctest.h>

#include <random>

#include "clusterax/setcore.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace clusterax;

TEST_CASE("subset algebra") {
    const auto g = GroundSet::letters(5);
    const Subset ab = g.subset({"a", "b"});
    const Subset bc = g.subset({"b", "c"});
    CHECK((ab | bc) == g.subset({"a", "b", "c"}));
    CHECK((ab & bc) == g.subset({"b"}));
    CHECK((ab - bc) == g.subset({"a"}));
    CHECK(ab.size() == 2);
    CHECK(ab.contains(0));
    CHECK_FALSE(ab.contains(2));
    CHECK(g.subset({"b"}).is_subset_of(ab));
    CHECK(overlaps(ab, bc));
    CHECK_FALSE(overlaps(ab, g.subset({"a", "b", "c"})));
    CHECK_FALSE(overlaps(ab, g.subset({"d"})));
    CHECK(g.format(ab | bc) == "{a,b,c}");
}

TEST_CASE("subsets from different ground sets do not mix") {
    const Subset a(0b11, 3);
    const Subset b(0b11, 4);
    CHECK_THROWS_AS((void)(a | b), UsageError);
}

TEST_CASE("labels") {
    const auto g = GroundSet::letters(28);
    CHECK(g.label(0) == "a");
    CHECK(g.label(25) == "z");
    CHECK(g.label(26) == "v26");
    CHECK(g.index_of("c") == 2);
    CHECK_FALSE(g.find("zz").has_value());
    CHECK_THROWS_AS(g.index_of("zz"), UsageError);
}

TEST_CASE("set systems are deduplicated and canonically ordered") {
    const auto g = GroundSet::letters(3);
    SetSystem c(g, std::vector<Subset>{g.subset({"b", "c"}), g.subset({"a"}), g.subset({"a", "b"}),
                                       g.subset({"b", "c"})});
    REQUIRE(c.size() == 3);
    CHECK(c.sets()[0] == g.subset({"a"}));
    CHECK(c.sets()[1] == g.subset({"a", "b"}));
    CHECK(c.sets()[2] == g.subset({"b", "c"}));
    CHECK(c.with_singletons().size() == 5);
    CHECK_THROWS_AS(SetSystem(g, std::vector<Subset>{Subset(0, 3)}), UsageError);
}

TEST_CASE("canonical order is by size, then member list") {
    CHECK(canonical_less(0b001, 0b011));
    CHECK(canonical_less(0b011, 0b101));
    CHECK(canonical_less(0b101, 0b110));
    CHECK_FALSE(canonical_less(0b110, 0b110));
}

TEST_CASE("intersection closure") {
    auto c = support::sets("a b c\na b\nb c\na b c\n", true);
    CHECK(intersection_closure_check(c).passed);
    auto d = support::sets("a b c d\na b c\nb c d\n", false);
    Verdict v = intersection_closure_check(d);
    REQUIRE_FALSE(v.passed);
    REQUIRE(v.witness->sets.size() == 2);
    CHECK_FALSE(d.contains(v.witness->sets[0] & v.witness->sets[1]));
}

TEST_CASE("conformality") {
    // Triangle of pairs: the clique {a,b,c} is in no member.
    auto c = support::sets("a b c\na b\nb c\na c\n", true);
    Verdict v = is_conformal(c);
    REQUIRE_FALSE(v.passed);
    CHECK(v.witness->sets.front() == c.ground().subset({"a", "b", "c"}));
    CHECK(is_conformal(support::sets("a b c\na b\nb c\na c\na b c\n", true)).passed);
}

TEST_CASE("primal graph and maximal cliques against a naive count") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 3 + trial % 5;
        const auto fam = oracle::random_family(rng, n, 1 + trial % 6);
        SetSystem c(GroundSet::letters(n), fam);
        const PrimalGraph g = primal_graph(c);
        for (Vertex x = 0; x < n; ++x) {
            for (Vertex y = 0; y < n; ++y) {
                bool shared = false;
                for (oracle::M s : fam) {
                    shared = shared || (x != y && oracle::in(x, s) && oracle::in(y, s));
                }
                CHECK(g.has_edge(x, y) == shared);
            }
        }
        for (Mask clique : maximal_cliques(g)) {
            for (Vertex x = 0; x < n; ++x) {
                if (!oracle::in(x, clique)) {
                    bool extends = true;
                    for (Vertex y = 0; y < n; ++y) {
                        extends = extends && (!oracle::in(y, clique) || g.has_edge(x, y));
                    }
                    CHECK_FALSE(extends);
                }
            }
        }
    }
}
