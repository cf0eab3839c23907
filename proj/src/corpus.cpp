#include <string>
#include <vector>

#include "clusterax/io.hpp"
#include "clusterax/lab.hpp"

namespace clusterax {

namespace {

struct Builder {
    CorpusEntry entry;

    Builder& expect(std::string check, bool value, std::string claim) {
        entry.expected.push_back({std::move(check), value, std::move(claim)});
        return *this;
    }
    Builder& expect_all(std::initializer_list<const char*> checks, bool value, const std::string& claim) {
        for (const char* c : checks) {
            expect(c, value, claim);
        }
        return *this;
    }
};

Builder transit(std::string name, std::string text, DefaultPair fill = DefaultPair::universe) {
    Builder b;
    b.entry.name = std::move(name);
    b.entry.text = std::move(text);
    b.entry.fill = fill;
    return b;
}

Builder sets(std::string name, std::string text) {
    Builder b;
    b.entry.name = std::move(name);
    b.entry.is_set_system = true;
    b.entry.text = std::move(text);
    b.entry.add_singletons = true;
    return b;
}

}  // namespace

TransitFunction CorpusEntry::transit() const {
    if (is_set_system) {
        return canonical_transit(sets());
    }
    return parse_transit(text, fill);
}

SetSystem CorpusEntry::sets() const {
    if (is_set_system) {
        return parse_set_system(text, add_singletons);
    }
    return transit_sets(transit());
}

std::vector<CorpusEntry> load_corpus() {
    std::vector<Builder> all;

    all.push_back(transit("ex:ph-not-uc", R"(a b c d
a b : a b
b c : b c
)")
                      .expect("m", true, "Consider the monotone transit function R")
                      .expect("paired-hierarchy", true, "C_R is a paired hierarchy but not union-closed")
                      .expect("UC", false, "C_R is a paired hierarchy but not union-closed")
                      .expect("uc", false, "C_R is a paired hierarchy but not union-closed")
                      .expect("u3", true, "(u) implies (u3); the example shows the converse is not true")
                      .expect("u", false, "(u) implies (u3); the example shows the converse is not true"));

    all.push_back(transit("i*-wp", R"(a b c d e f
a b : a b c
a c : a b c
b c : a b c
a d : a d e
a e : a d e
d e : a d e
c d : c d f
c f : c d f
d f : c d f
)")
                      .expect("m", true, "Here R is monotone and satisfies (i)")
                      .expect("i", true, "Here R is monotone and satisfies (i)")
                      .expect("wp", false, "the sets {a,b,c}, {a,d,e}, {c,d,f} violate (wp)"));

    all.push_back(transit("o-i*", R"(a b c d
a b : a b
b c : b c
b d : b d
)")
                      .expect("m", true, "R is monotone, satisfies (o') but not (i)")
                      .expect("o'", true, "R is monotone, satisfies (o') but not (i)")
                      .expect("i", false, "R is monotone, satisfies (o') but not (i)"));

    all.push_back(sets("ex:N3O-L1", R"(a b c d e
a b
b c d
d e
a b c d e
)")
                      .expect("N3O", true, "C satisfies (N3O) but violates (L1)")
                      .expect("L1", false, "C satisfies (N3O) but violates (L1)"));

    all.push_back(transit("py-n3o", R"(a b c d e
a b : a b c
a c : a b c
a d : a b c d e
a e : a b c d e
b e : a b c d e
b c : b c
b d : b c d
c d : c d
c e : c d e
d e : c d e
)")
                      .expect("pyramidal", true, "The transit function R is pyramidal but does not satisfy (n3o)")
                      .expect("n3o", false, "The transit function R is pyramidal but does not satisfy (n3o)")
                      .expect("tb", true, "Example py-n3o shows that (tb) does not imply (n3o)"));

    all.push_back(transit("ex:w+wp+l1-l2", R"(a b c d e f
a b : a b
a c : a c
a d : a b c d e
a e : a b c d e
b e : a b c d e
c e : a b c d e
a f : a c f
c f : a c f
b c : b c d
b d : b c d
c d : b c d
b f : a b c d e f
d f : d e f
e f : d e f
d e : d e
)")
                      .expect("m", true, "R ... is monotone")
                      .expect("L2'", true, "C_R satisfies (L2'). But R violates (l2)")
                      .expect("l2", false, "C_R satisfies (L2'). But R violates (l2)"));

    all.push_back(transit("uc+l2-l1", R"(a b c d e f
a b : a b c
a c : a b c
a d : a b c d e
a e : a b c d e
b c : a b c
b d : b c d e
b e : b c d e
b f : b c d e f
c d : c d e
c e : c d e
c f : c d e f
d e : c d e
d f : c d e f
e f : e f
a f : a b c d e f
)")
                      .expect("m", true, "Let R be a monotone transit function")
                      .expect("l2", true, "Here R satisfies (l2), but violates (l1)")
                      .expect("l1", false, "Here R satisfies (l2), but violates (l1)")
                      .expect("UC", true, "The corresponding transit set C_R satisfies (UC)"));

    all.push_back(transit("l1+l2-uc", R"(a b c d e
a b : a b c d
a c : a c
a d : a b c d
b c : b c
b d : b d
b e : b c d e
c d : b c d
c e : b c d e
d e : b c d e
)")
                      .expect("m", true, "Let R be a monotone transit function")
                      .expect("l1", true, "R satisfies (l1) and (l2) and C_R is pyramidal")
                      .expect("l2", true, "R satisfies (l1) and (l2) and C_R is pyramidal")
                      .expect("pyramidal", true, "R satisfies (l1) and (l2) and C_R is pyramidal")
                      .expect("uc", false, "R does not satisfy (uc)"));

    all.push_back(transit("ex:l2-w-wp", R"(a b c d e
a b : a b
a c : a c
a d : a b c d e
b c : a b c
b d : a b c d e
c d : a b c d e
d e : a b c d e
a e : a e
b e : a b e
c e : a c e
)")
                      .expect("l2", true, "Here R satisfies (l2) but violates both (w) and (wp)")
                      .expect("w", false, "Here R satisfies (l2) but violates both (w) and (wp)")
                      .expect("wp", false, "Here R satisfies (l2) but violates both (w) and (wp)"));

    all.push_back(transit("ex:py+l1+u3-l2-ph", R"(a b c d e
a b : a b
b c : b c
c d : c d
)")
                      .expect("pyramidal", true, "R is pyramidal but violates (l2)")
                      .expect("l2", false, "R is pyramidal but violates (l2)")
                      .expect("l1", true, "Also, R satisfies (l1)")
                      .expect("paired-hierarchy", false, "C_R is not a paired hierarchy")
                      .expect("u3", true, "satisfies (u3) but violates (l2)")
                      .expect("tb", true, "is pyramidal and satisfies (tb) but violates (l2)"));

    all.push_back(transit("ex:py+l2-l1-ph", R"(a b c d e
a b : a b
b c : b c d
c d : b c d
b d : b c d
d e : d e
)")
                      .expect("pyramidal", true, "Here R is pyramidal and satisfies (l2) but violates (l1)")
                      .expect("l2", true, "Here R is pyramidal and satisfies (l2) but violates (l1)")
                      .expect("l1", false, "Here R is pyramidal and satisfies (l2) but violates (l1)")
                      .expect("paired-hierarchy", false, "Moreover, C_R is not a paired hierarchy"));

    all.push_back(transit("Ex:py-l1-l2", R"(a b c d e f
a b : a b
b c : b c d
c d : b c d
b d : b c d
d e : d e
)")
                      .expect("pyramidal", true, "Here R is pyramidal but violates both (l1) and (l2)")
                      .expect("l1", false, "Here R is pyramidal but violates both (l1) and (l2)")
                      .expect("l2", false, "Here R is pyramidal but violates both (l1) and (l2)")
                      .expect("pyramidal-axioms", true, "(m), (tb), (p2), (p3), (p4) hold exactly for pyramidal R"));

    all.push_back(transit("Ex:L2+wp-l1-w", R"(a b c d
a b : a b
b c : b c
a c : a c
)")
                      .expect("l2", true, "Here R satisfies (l2) and (wp), violates (l1) and (w)")
                      .expect("wp", true, "Here R satisfies (l2) and (wp), violates (l1) and (w)")
                      .expect("l1", false, "Here R satisfies (l2) and (wp), violates (l1) and (w)")
                      .expect("w", false, "Here R satisfies (l2) and (wp), violates (l1) and (w)")
                      .expect("u3", true, "The transit function R in Example Ex:L2+wp-l1-w satisfies (u3)"));

    all.push_back(transit("ex:u3-py", R"(a b c d
a b : a b c d
a c : a c
b c : b c d
a d : a d
b d : b c d
c d : c d
)")
                      .expect("m", true, "Then R is monotone and satisfies (u3)")
                      .expect("u3", true, "Then R is monotone and satisfies (u3)")
                      .expect("w", false, "but a,c,d violates (w)")
                      .expect("pyramidal", false, "Thus, in particular, R is not pyramidal")
                      .expect("tb", false, "(tb) implies (w), and a,c,d violates (w)"));

    all.push_back(transit("w+wp+u3+hc-py", R"(a b c d e f
a b : a b
b c : b c d
b d : b c d
c d : b c d
d e : d e
c f : c f
)")
                      .expect("m", true, "Here R is monotone and satisfies (w), (wp), and (u3) but is not pyramidal")
                      .expect("w", true, "Here R is monotone and satisfies (w), (wp), and (u3) but is not pyramidal")
                      .expect("wp", true, "Here R is monotone and satisfies (w), (wp), and (u3) but is not pyramidal")
                      .expect("u3", true, "Here R is monotone and satisfies (w), (wp), and (u3) but is not pyramidal")
                      .expect("pyramidal", false, "Here R is monotone and satisfies (w), (wp), and (u3) but is not pyramidal")
                      .expect_all({"tb", "p4", "p3"}, true, "satisfies (m), (tb), (p4), and (p3) but violates (p2)")
                      .expect("p2", false, "satisfies (m), (tb), (p4), and (p3) but violates (p2)")
                      .expect("i", true, "holds (i) and (p3) but violates (p2)")
                      .expect("config-2", true, "contains second forbidden configuration"));

    all.push_back(transit("wp-hc", R"(a b c d e f
a b : a b
a c : a b c f
a f : a b c f
b f : a b c f
c f : a b c f
b c : b c
b d : b c d
c d : b c d
b e : b c d e
c e : b c d e
d e : d e
e f : e f
a d : a b c d e f
a e : a b c d e f
d f : a b c d e f
)")
                      .expect("wp", true, "Here R satisfies (wp) but violates (hc)")
                      .expect("hc", false, "Here R satisfies (wp) but violates (hc)")
                      .expect("p2", true, "In Example wp-hc, R satisfies (p2), but the points c, e, and f violate (w)")
                      .expect("w", false, "In Example wp-hc, R satisfies (p2), but the points c, e, and f violate (w)")
                      .expect("tb", false, "R violates (tb) as C_R contains the pure-cycle (R(c,f),R(c,e),R(e,f))")
                      .expect("totally-balanced", false, "C_R contains the pure-cycle (R(c,f),R(c,e),R(e,f))")
                      .expect("p3", true, "Example wp-hc satisfies (w), (p2), (p3), (wp) but violates (tb)")
                      .expect("w", true, "Example wp-hc satisfies (w), (p2), (p3), (wp) but violates (tb)"));

    all.push_back(transit("ex:p2-p3", R"(a b c d e
a b : a b
b c : b c d
c d : b c d
b d : b d
d e : d e
a d : a b d e
a e : a b d e
b e : a b d e
)")
                      .expect_all({"m", "wp", "tb", "p2"}, true, "R satisfies (m), (wp), (tb), and (p2)")
                      .expect("p3", false, "holds (u3) and (p2) but violates (p3)")
                      .expect("u3", true, "holds (u3) and (p2) but violates (p3)")
                      .expect("i", true, "satisfies (i) and (p2) but violates (p3)")
                      .expect("p4", true, "satisfies (m), (tb), (p2), and (p4) but violates (p3)")
                      .expect("config-3", true, "C_R contains a third forbidden configuration")
                      .expect("pyramidal", false, "Therefore, C_R is not pyramidal")
                      .expect("totally-balanced", true, "R satisfies (m), (wp), (tb), and (p2)"));

    all.push_back(transit("ex:p3-p4", R"(a b c d e f
a b : a b
b c : b c
c d : c d
b d : b c d f
b f : b c d f
c f : b c d f
d f : b c d f
d e : d e
)")
                      .expect_all({"m", "tb", "wp", "p3"}, true, "R is monotone, R satisfies (tb), (wp), and (p3)")
                      .expect("p2", true, "satisfies (m), (tb), (p2), and (p3) but violates (p4)")
                      .expect("p4", false, "satisfies (m), (tb), (p2), and (p3) but violates (p4)")
                      .expect("config-4", true, "C_R contains the fourth forbidden configuration")
                      .expect("pyramidal", false, "thus R is not pyramidal")
                      .expect("pyramidal-axioms", false, "(m), (tb), (p2), (p3), (p4) hold exactly for pyramidal R"));

    all.push_back(transit("ex:p2p3-wpy", R"(a b c d e f g
a b : a b e
a e : a b e
b e : a b e
b c : b c f
b f : b c f
c f : b c f
b d : b d
d e : d e
a c : a c d
a d : a c d
c d : a c d
)")
                      .expect_all({"m", "p2", "p3"}, true, "R satisfies (m), (p2), and (p3) but violates (w) and (wp)")
                      .expect_all({"w", "wp"}, false, "R satisfies (m), (p2), and (p3) but violates (w) and (wp)"));

    all.push_back(transit("ex:wpy-tbp234", R"(a b c d e f
a b : a b
b c : b c
c d : c d
a d : a d
b e : b c e
c e : b c e
e f : e f
)")
                      .expect_all({"w", "wp", "weakly-pyramidal"}, true,
                                  "R is weakly pyramidal but violates (tb), (p2), (p3), and (p4)")
                      .expect_all({"tb", "p2", "p3", "p4"}, false,
                                  "R is weakly pyramidal but violates (tb), (p2), (p3), and (p4)"));

    all.push_back(sets("fig1A", R"(a b c d
a b
b c
c d
a d
a b c d
)")
                      .expect("weak-hierarchy", true, "is a weak hierarchy ... and satisfies axiom (WP)")
                      .expect("WP", true, "is a weak hierarchy ... and satisfies axiom (WP)")
                      .expect("pre-pyramidal", false, "there is no linear ordering on V compatible with C")
                      .expect("config-1", true, "the four edges form a 4-cycle (C_1,C_2,C_3,C_4)")
                      .expect("gamma-acyclic", false, "the four edges form a 4-cycle")
                      .expect("totally-balanced", false, "the four edges form a 4-cycle")
                      .expect("tb2", true, "satisfies (tb2) but violates (tb)")
                      .expect("tb", false, "satisfies (tb2) but violates (tb)")
                      .expect_all({"m", "p2", "p4", "p3"}, true,
                                  "satisfies (m), (p2), (p4), and (p3) but violates (tb)")
                      .expect("u3", false, "satisfies (p2) and (p3) but violates (u3)")
                      .expect_all({"w", "wp"}, true, "satisfy (w) and (wp) but violate (u3)")
                      .expect("i", true, "satisfies (i) but violates (tb)")
                      .expect("n3o", true, "(n3o) does not imply (tb)")
                      .expect("l1", true, "(l1) does not imply (u3)")
                      .expect("K2", true, "primal graph is complete and the system is closed")
                      .expect("conformal", true, "V is a member"));

    all.push_back(sets("fig1B", R"(a b c d
a b
a c
b c
a b c d
)")
                      .expect("weak-hierarchy", false, "thus, C is not a weak hierarchy")
                      .expect("K2", true, "{a,b} and {b,c} meet in the singleton {b}")
                      .expect("i", true, "satisfies (i) but violates (w)")
                      .expect("w", false, "satisfies (i) but violates (w)")
                      .expect("l2", true, "trivially satisfies (l2) but violates (tb)")
                      .expect("tb", false, "trivially satisfies (l2) but violates (tb)")
                      .expect("p3", true, "(p3) implies neither (w) by Fig. 1B")
                      .expect("u3", true, "(wp) and (u3) do not imply (w)")
                      .expect("wp", true, "(wp) and (u3) do not imply (w)"));

    all.push_back(sets("fig1C", R"(a b c d
a b
b c
b d
a b c d
)")
                      .expect("weak-hierarchy", true, "It is a weak hierarchy")
                      .expect("hierarchy", false, "{a,b} overlaps {b,c}")
                      .expect_all({"w", "u3"}, true, "axioms (w) and (u3) do not imply (wp)")
                      .expect("wp", false, "axioms (w) and (u3) do not imply (wp)")
                      .expect("i", false, "it satisfies (w) but violates (i)")
                      .expect_all({"p2", "p3", "tb"}, true, "satisfies (tb), (p2) and (p3) But violates (i)"));

    all.push_back(transit("b3-pyramidal", R"(u v x y
v y : v y
)")
                      .expect("m", true, "is monotone and violates (b3)")
                      .expect("b3", false, "is monotone and violates (b3)")
                      .expect("pyramidal", true, "However, it is pyramidal with order x<u<y<v"));

    all.push_back(transit("indiscrete", R"(a b c d
)")
                      .expect_all({"m", "pyramidal"}, true, "is monotone, pyramidal, and violates (b4)")
                      .expect("b4", false, "is monotone, pyramidal, and violates (b4)")
                      .expect_all({"w", "uc", "u", "k", "a'"}, true, "only singleton and V transit sets")
                      .expect("hierarchy", true, "whose transit sets are only the singletons and V")
                      .expect("gamma-acyclic", true, "gamma-acyclic if and only if C_R is a hierarchy"));

    all.push_back(transit("b4-chain", R"(a b c d e
a b : a b
a c : a b c
a d : a b c d
a e : a b c d e
b c : b c
b d : b c d
b e : b c d e
c d : c d
c e : c d e
d e : d e
)")
                      .expect_all({"m", "pyramidal", "b4", "b3"}, true,
                                  "the pyramidal transit function satisfying (b4) is uniquely defined")
                      .expect("interval-transit", true, "Then R(u,v)=[u,v] for all u,v in V"));

    std::vector<CorpusEntry> out;
    for (auto& b : all) {
        out.push_back(std::move(b.entry));
    }
    return out;
}

std::optional<CorpusEntry> find_corpus_entry(const std::string& name) {
    for (auto& e : load_corpus()) {
        if (e.name == name) {
            return e;
        }
    }
    return std::nullopt;
}

}  // namespace clusterax
