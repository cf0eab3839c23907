#pragma once

// Example corpus, exhaustive enumeration of T-systems on small ground sets,
// and machine checking of implications between axioms.

#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "clusterax/axiom_id.hpp"
#include "clusterax/setcore.hpp"
#include "clusterax/structure.hpp"
#include "clusterax/transit.hpp"

namespace clusterax {

// ------------------------------------------------------------------ corpus

struct Expectation {
    std::string check;  // a property name accepted by evaluate_property
    bool expected;
    std::string claim;  // the sentence the expectation comes from
};

struct CorpusEntry {
    std::string name;
    bool is_set_system = false;
    std::string text;  // transit or set-system file contents
    DefaultPair fill = DefaultPair::universe;
    bool add_singletons = false;
    std::vector<Expectation> expected;

    TransitFunction transit() const;  // canonical transit function for set systems
    SetSystem sets() const;           // transit sets for transit entries
};

std::vector<CorpusEntry> load_corpus();
std::optional<CorpusEntry> find_corpus_entry(const std::string& name);

/// Property names: every axiom name (transit-side ids on R, set-side ids on
/// the set system), plus pyramidal, pre-pyramidal, pyramidal-axioms,
/// interval-transit, weak-hierarchy, hierarchy, paired-hierarchy,
/// totally-balanced, gamma-acyclic, conformal, config-1 .. config-5.
bool evaluate_property(const CorpusEntry& entry, const std::string& property);
std::vector<std::string> property_names();

struct CorpusMismatch {
    std::string entry;
    Expectation expectation;
    bool actual;
};

struct CorpusReport {
    std::size_t entries = 0;
    std::size_t checks = 0;
    std::vector<CorpusMismatch> mismatches;

    bool ok() const noexcept { return mismatches.empty(); }
};

CorpusReport run_corpus(const std::vector<CorpusEntry>& corpus);

// ------------------------------------------------------------- enumeration

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Largest n for which exhaustive enumeration is supported.
inline constexpr std::size_t kMaxEnumerationVertices = 5;

/// Monotone transit functions on n labelled points (equivalently T-systems
/// via their transit sets). The callback returns false to stop early.
/// `budget` caps the number emitted (0 = unlimited); exceeding it throws
/// BudgetExceeded. Returns the number emitted.
std::uint64_t enumerate_monotone(std::size_t n, const std::function<bool(const TransitFunction&)>& visit,
                                 std::uint64_t budget = 0);

/// Same stream seen as set systems.
std::uint64_t enumerate_t_systems(std::size_t n, const std::function<bool(const SetSystem&)>& visit,
                                  std::uint64_t budget = 0);

/// Independent filter over every family of non-singleton subsets (n <= 4):
/// counts the families that, with all singletons added, satisfy KS, KR, KC.
std::uint64_t count_t_systems_bruteforce(std::size_t n);

/// Work split: the enumeration is partitioned by the choice made for the
/// first few pairs; chunk i of `chunks` covers a fixed subset of prefixes.
std::uint64_t enumerate_monotone_chunk(std::size_t n, std::size_t chunk, std::size_t chunks,
                                       const std::function<bool(const TransitFunction&)>& visit);

/// Runs `visit` over the full enumeration on `threads` workers (0 = hardware
/// concurrency). `visit` must be thread-safe.
std::uint64_t enumerate_monotone_parallel(std::size_t n, std::size_t threads,
                                          const std::function<void(const TransitFunction&)>& visit);

// ------------------------------------------------------------ implications

/// Properties evaluated during implication checks, in report order.
std::vector<std::string> implication_properties();

/// Evaluates every implication property on R.
std::map<std::string, bool> property_profile(const TransitFunction& r, P4IndexMode mode = P4IndexMode::open);

struct Implication {
    std::vector<std::string> premises;
    std::string conclusion;
    std::string source;  // where the claim comes from
};

/// Implications and equivalences claimed for monotone transit functions.
std::vector<Implication> claimed_implications();

struct ImplicationReport {
    std::size_t n = 0;
    std::uint64_t total = 0;
    std::vector<std::string> properties;
    /// matrix[p][q]: number of R with p true and q false.
    std::vector<std::vector<std::uint64_t>> matrix;
    /// First R (enumeration order) with p true and q false.
    std::map<std::pair<std::string, std::string>, TransitFunction> counterexamples;
    /// Claimed implications with at least one violation.
    std::vector<std::pair<Implication, std::uint64_t>> violated;

    std::string to_tsv() const;
};

ImplicationReport verify_implications(std::size_t n, std::size_t threads = 1);

/// First monotone R (enumeration order, n increasing up to max_n) satisfying
/// every premise and violating the conclusion. Up to n = 5 this is
/// exhaustive; larger n is searched depth-first up to `budget` candidates.
std::optional<TransitFunction> search_counterexample(const std::vector<std::string>& premises,
                                                     const std::string& conclusion, std::size_t max_n,
                                                     std::uint64_t budget = 2'000'000);

/// Property of R by name (see property_names); transit-side or structural.
bool evaluate_transit_property(const TransitFunction& r, const std::string& property,
                               P4IndexMode mode = P4IndexMode::open);

/// Same, with the witness. Structural properties are evaluated on the
/// transit sets.
Verdict transit_property_verdict(const TransitFunction& r, const std::string& property,
                                 P4IndexMode mode = P4IndexMode::open);

/// Property of a set system; transit-side names go through the canonical
/// transit function.
Verdict set_property_verdict(const SetSystem& c, const std::string& property);

}  // namespace clusterax
