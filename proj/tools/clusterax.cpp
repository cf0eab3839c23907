// clusterax: axiom checks, pyramidal orders and enumeration experiments for
// transit functions and set systems.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "clusterax/axioms.hpp"
#include "clusterax/interval.hpp"
#include "clusterax/io.hpp"
#include "clusterax/lab.hpp"

namespace {

using namespace clusterax;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kInputError = 2;

enum class Format { text, structured };

struct Options {
    Format format = Format::text;
    DefaultPair fill = DefaultPair::error;
    bool add_singletons = false;
    std::uint64_t budget = 0;
    P4IndexMode p4_mode = P4IndexMode::open;
    std::size_t threads = 1;
};

// Input: exactly one of a transit file or a set-system file.
struct Input {
    std::string transit_path;
    std::string sets_path;
};

struct Loaded {
    std::optional<TransitFunction> transit;
    std::optional<SetSystem> sets;

    const GroundSet& ground() const { return transit ? transit->ground() : sets->ground(); }
    SetSystem system() const { return sets ? *sets : transit_sets(*transit); }
    TransitFunction function() const { return transit ? *transit : canonical_transit(*sets); }
};

Loaded load(const Input& in, const Options& opt) {
    if (in.transit_path.empty() == in.sets_path.empty()) {
        throw UsageError("give exactly one of --transit or --sets");
    }
    Loaded out;
    if (!in.transit_path.empty()) {
        out.transit = parse_transit(read_file(in.transit_path), opt.fill);
    } else {
        out.sets = parse_set_system(read_file(in.sets_path), opt.add_singletons);
    }
    return out;
}

void add_input_options(CLI::App* cmd, Input& in) {
    cmd->add_option("--transit", in.transit_path, "transit function file")->check(CLI::ExistingFile);
    cmd->add_option("--sets", in.sets_path, "set system file")->check(CLI::ExistingFile);
}

json labels_json(const GroundSet& g, const std::vector<Vertex>& vs) {
    json out = json::array();
    for (Vertex v : vs) {
        out.push_back(g.label(v));
    }
    return out;
}

json subset_json(const GroundSet& g, const Subset& s) { return labels_json(g, s.members()); }

json witness_json(const GroundSet& g, const Witness& w) {
    json sets = json::array();
    for (const Subset& s : w.sets) {
        sets.push_back(subset_json(g, s));
    }
    return {{"vertices", labels_json(g, w.vertices)}, {"sets", sets}, {"note", w.note}};
}

json verdict_json(const GroundSet& g, const Verdict& v) {
    json out{{"check", v.check}, {"passed", v.passed}};
    if (v.witness) {
        out["witness"] = witness_json(g, *v.witness);
    }
    return out;
}

json transit_json(const TransitFunction& r) {
    const GroundSet& g = r.ground();
    json pairs = json::array();
    for (Vertex u = 0; u < r.n(); ++u) {
        for (Vertex v = u + 1; v < r.n(); ++v) {
            pairs.push_back({{"pair", {g.label(u), g.label(v)}}, {"set", labels_json(g, Subset(r.mask(u, v), r.n()).members())}});
        }
    }
    return {{"labels", g.labels()}, {"pairs", pairs}};
}

void emit(const Options& opt, const json& doc, const std::string& text) {
    if (opt.format == Format::structured) {
        std::cout << doc.dump(2) << '\n';
    } else {
        std::cout << text;
    }
}

int verdicts_exit(const std::vector<Verdict>& vs) {
    for (const Verdict& v : vs) {
        if (!v.passed) {
            return kFailed;
        }
    }
    return kOk;
}

int report_verdicts(const Options& opt, const std::string& verb, const GroundSet& g, const std::vector<Verdict>& vs) {
    json doc{{"command", verb}, {"verdicts", json::array()}};
    std::string text;
    for (const Verdict& v : vs) {
        doc["verdicts"].push_back(verdict_json(g, v));
        text += format_verdict(g, v) + '\n';
    }
    const int code = verdicts_exit(vs);
    doc["passed"] = code == kOk;
    emit(opt, doc, text);
    return code;
}

// ------------------------------------------------------------------- verbs

Verdict evaluate(const Loaded& in, const std::string& property, const Options& opt) {
    if (in.transit) {
        return transit_property_verdict(*in.transit, property, opt.p4_mode);
    }
    return set_property_verdict(*in.sets, property);
}

int run_check(const Input& input, const std::vector<std::string>& properties, const Options& opt) {
    const Loaded in = load(input, opt);
    std::vector<std::string> names = properties;
    if (names.empty()) {
        for (AxiomId id : all_axioms()) {
            names.emplace_back(name(id));
        }
    }
    std::vector<Verdict> vs;
    for (const std::string& p : names) {
        vs.push_back(evaluate(in, p, opt));
    }
    return report_verdicts(opt, "check", in.ground(), vs);
}

int run_axioms(const Input& input, const Options& opt) {
    const Loaded in = load(input, opt);
    const TransitFunction r = in.function();
    const SetSystem c = in.system();
    std::vector<Verdict> vs;
    for (const auto& [id, v] : check_all(r, opt.p4_mode)) {
        if (side(id) != AxiomSide::set_system) {
            vs.push_back(v);
        }
    }
    for (AxiomId id : set_axioms()) {
        vs.push_back(check_set(c, id));
    }
    return report_verdicts(opt, "axioms", in.ground(), vs);
}

int run_order(const Input& input, const Options& opt) {
    const Loaded in = load(input, opt);
    const SetSystem c = in.system();
    const GroundSet& g = c.ground();
    json doc{{"command", "order"}};
    std::string text;
    int code = kOk;
    if (auto order = find_pyramidal_order(c)) {
        doc["order"] = labels_json(g, order->perm);
        for (std::size_t i = 0; i < order->perm.size(); ++i) {
            text += (i ? " " : "") + g.label(order->perm[i]);
        }
        text += '\n';
    } else {
        code = kFailed;
        doc["order"] = nullptr;
        text = "no pyramidal order";
        if (auto w = detect_any_config(c)) {
            Witness wit{w->vertices, w->sets, "forbidden configuration family " + std::to_string(w->family)};
            doc["configuration"] = witness_json(g, wit);
            doc["configuration"]["family"] = w->family;
            text += "; forbidden configuration family " + std::to_string(w->family) + '\n';
            text += format_verdict(g, Verdict::fail("configuration", wit)) + '\n';
        } else {
            text += '\n';
        }
    }
    doc["passed"] = code == kOk;
    emit(opt, doc, text);
    return code;
}

int run_configs(const Input& input, const Options& opt) {
    const Loaded in = load(input, opt);
    const SetSystem c = in.system();
    const GroundSet& g = c.ground();
    json doc{{"command", "configs"}, {"families", json::array()}};
    std::string text;
    int code = kOk;
    for (int family = 1; family <= 5; ++family) {
        json entry{{"family", family}};
        if (auto w = detect_config(c, family)) {
            code = kFailed;
            Witness wit{w->vertices, w->sets, "k=" + std::to_string(w->k)};
            entry["witness"] = witness_json(g, wit);
            text += "family " + std::to_string(family) + " present ";
            text += format_verdict(g, Verdict::fail("configuration", wit)).substr(std::string("configuration fail ").size());
            text += '\n';
        } else {
            entry["witness"] = nullptr;
            text += "family " + std::to_string(family) + " absent\n";
        }
        doc["families"].push_back(entry);
    }
    doc["passed"] = code == kOk;
    emit(opt, doc, text);
    return code;
}

std::string safe_file_name(std::string name) {
    for (char& ch : name) {
        if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '-' && ch != '_') {
            ch = '_';
        }
    }
    return name;
}

int run_corpus_verb(const std::string& entry_name, const std::string& export_dir, const Options& opt) {
    std::vector<CorpusEntry> corpus = load_corpus();
    if (!entry_name.empty()) {
        auto e = find_corpus_entry(entry_name);
        if (!e) {
            throw UsageError("unknown corpus entry '" + entry_name + "'");
        }
        corpus = {*e};
    }
    if (!export_dir.empty()) {
        std::filesystem::create_directories(export_dir);
        for (const CorpusEntry& e : corpus) {
            const std::string file = safe_file_name(e.name) + (e.is_set_system ? ".ss" : ".tf");
            std::ofstream out(std::filesystem::path(export_dir) / file);
            out << "# " << e.name << '\n';
            out << (e.is_set_system ? write_set_system(e.sets()) : write_transit(e.transit()));
        }
    }
    const CorpusReport report = run_corpus(corpus);
    json doc{{"command", "corpus"}, {"entries", report.entries}, {"checks", report.checks}, {"mismatches", json::array()}};
    std::string text = std::to_string(report.entries) + " entries, " + std::to_string(report.checks) + " checks, " +
                       std::to_string(report.mismatches.size()) + " mismatches\n";
    for (const CorpusMismatch& m : report.mismatches) {
        doc["mismatches"].push_back({{"entry", m.entry},
                                     {"check", m.expectation.check},
                                     {"expected", m.expectation.expected},
                                     {"actual", m.actual},
                                     {"claim", m.expectation.claim}});
        text += "  " + m.entry + ": " + m.expectation.check + " expected " + (m.expectation.expected ? "pass" : "fail") +
                ", got " + (m.actual ? "pass" : "fail") + " (\"" + m.expectation.claim + "\")\n";
    }
    doc["passed"] = report.ok();
    emit(opt, doc, text);
    return report.ok() ? kOk : kFailed;
}

int run_enumerate(std::size_t n, bool as_sets, bool list, const Options& opt) {
    json items = json::array();
    std::string text;
    const std::uint64_t count = enumerate_monotone(
        n,
        [&](const TransitFunction& r) {
            if (!list) {
                return true;
            }
            if (as_sets) {
                const SetSystem c = transit_sets(r);
                json sets = json::array();
                for (const Subset& s : c.sets()) {
                    sets.push_back(subset_json(c.ground(), s));
                }
                items.push_back(sets);
                text += write_set_system(c) + '\n';
            } else {
                items.push_back(transit_json(r));
                text += write_transit(r) + '\n';
            }
            return true;
        },
        opt.budget);
    json doc{{"command", "enumerate"}, {"n", n}, {"count", count}};
    if (list) {
        doc["items"] = items;
    }
    text += "n=" + std::to_string(n) + " count=" + std::to_string(count) + '\n';
    emit(opt, doc, text);
    return kOk;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        out += (i ? sep : "") + parts[i];
    }
    return out;
}

int run_implications(std::size_t n, const std::string& tsv_path, const Options& opt) {
    const ImplicationReport report = verify_implications(n, opt.threads);
    if (!tsv_path.empty()) {
        std::ofstream(tsv_path) << report.to_tsv();
    }
    json doc{{"command", "implications"}, {"n", n}, {"total", report.total}, {"violated", json::array()}};
    std::string text = "n=" + std::to_string(n) + " monotone=" + std::to_string(report.total) + " claims=" +
                       std::to_string(claimed_implications().size()) + " violated=" +
                       std::to_string(report.violated.size()) + '\n';
    for (const auto& [imp, count] : report.violated) {
        json item{{"premises", imp.premises}, {"conclusion", imp.conclusion}, {"count", count}, {"source", imp.source}};
        if (imp.premises.size() == 1) {
            auto it = report.counterexamples.find({imp.premises.front(), imp.conclusion});
            if (it != report.counterexamples.end()) {
                item["example"] = transit_json(it->second);
            }
        }
        doc["violated"].push_back(item);
        text += "  " + join(imp.premises, " & ") + " => " + imp.conclusion + ": " + std::to_string(count) +
                " counterexamples (" + imp.source + ")\n";
    }
    doc["passed"] = report.violated.empty();
    emit(opt, doc, text);
    return report.violated.empty() ? kOk : kFailed;
}

int run_counterexample(const std::vector<std::string>& premises, const std::string& conclusion, std::size_t max_n,
                       const Options& opt) {
    const auto names = property_names();
    auto known = [&](const std::string& p) {
        return std::find(names.begin(), names.end(), p) != names.end() || p == "t1" || p == "t2" || p == "t3";
    };
    for (const std::string& p : premises) {
        if (!known(p)) {
            throw UsageError("unknown property '" + p + "'");
        }
    }
    if (!known(conclusion)) {
        throw UsageError("unknown property '" + conclusion + "'");
    }
    const auto found = search_counterexample(premises, conclusion, max_n, opt.budget ? opt.budget : 2'000'000);
    json doc{{"command", "counterexample"}, {"premises", premises}, {"conclusion", conclusion}, {"max_n", max_n}};
    std::string text;
    if (found) {
        doc["found"] = transit_json(*found);
        const Verdict v = transit_property_verdict(*found, conclusion, opt.p4_mode);
        doc["conclusion_verdict"] = verdict_json(found->ground(), v);
        text = write_transit(*found) + format_verdict(found->ground(), v) + '\n';
    } else {
        doc["found"] = nullptr;
        text = "no counterexample up to n=" + std::to_string(max_n) + '\n';
    }
    emit(opt, doc, text);
    return found ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Axioms for transit functions and pyramidal set systems"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    std::string format = "text";
    std::string default_pair = "error";
    std::string p4_mode = "open";
    app.add_option("--format", format, "output rendering")
        ->check(CLI::IsMember({"text", "structured"}))
        ->capture_default_str();
    app.add_option("--default-pair", default_pair, "fill for unlisted transit pairs")
        ->check(CLI::IsMember({"error", "universe", "pair"}))
        ->capture_default_str();
    app.add_flag("--add-singletons", opt.add_singletons, "add missing singletons to set systems");
    app.add_option("--budget", opt.budget, "cap on enumerated candidates (0 = none)");
    app.add_option("--p4-index-mode", p4_mode, "index range of the (p4) chain condition")
        ->check(CLI::IsMember({"open", "cyclic"}))
        ->capture_default_str();
    app.add_option("--threads", opt.threads, "worker threads for implications (0 = all cores)")->capture_default_str();

    Input input;
    std::vector<std::string> properties;
    auto* check = app.add_subcommand("check", "check axioms or structural properties");
    add_input_options(check, input);
    check->add_option("--axiom,--property", properties, "property name (repeatable; default: every axiom)");

    auto* axioms = app.add_subcommand("axioms", "full axiom profile");
    add_input_options(axioms, input);

    auto* order = app.add_subcommand("order", "pyramidal (interval) order of the sets");
    add_input_options(order, input);

    auto* configs = app.add_subcommand("configs", "forbidden configurations, families 1-5");
    add_input_options(configs, input);

    std::string entry_name;
    std::string export_dir;
    auto* corpus = app.add_subcommand("corpus", "run the built-in example corpus");
    corpus->add_option("--entry", entry_name, "only this entry");
    corpus->add_option("--export", export_dir, "write each entry as a file into this directory");

    std::size_t n = 4;
    bool as_sets = false;
    bool list = false;
    auto* enumerate = app.add_subcommand("enumerate", "count or list monotone transit functions");
    enumerate->add_option("--n", n, "number of points")->required()->check(CLI::Range(std::size_t{1}, kMaxEnumerationVertices));
    enumerate->add_flag("--list", list, "print every item");
    enumerate->add_flag("--as-sets", as_sets, "print transit sets instead of tables");

    std::string tsv_path;
    auto* implications = app.add_subcommand("implications", "check claimed implications over a full enumeration");
    implications->add_option("--n", n, "number of points")->required()->check(CLI::Range(std::size_t{1}, kMaxEnumerationVertices));
    implications->add_option("--tsv", tsv_path, "write the implication matrix here");

    std::vector<std::string> premises;
    std::string conclusion;
    std::size_t max_n = 5;
    auto* counterexample = app.add_subcommand("counterexample", "search for R with the premises but not the conclusion");
    counterexample->add_option("--premise", premises, "property (repeatable)");
    counterexample->add_option("--conclusion", conclusion, "property")->required();
    counterexample->add_option("--max-n", max_n, "largest ground set")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    opt.format = format == "structured" ? Format::structured : Format::text;
    opt.fill = default_pair == "universe" ? DefaultPair::universe
               : default_pair == "pair"   ? DefaultPair::pair
                                          : DefaultPair::error;
    opt.p4_mode = p4_mode == "cyclic" ? P4IndexMode::cyclic : P4IndexMode::open;

    try {
        if (check->parsed()) {
            return run_check(input, properties, opt);
        }
        if (axioms->parsed()) {
            return run_axioms(input, opt);
        }
        if (order->parsed()) {
            return run_order(input, opt);
        }
        if (configs->parsed()) {
            return run_configs(input, opt);
        }
        if (corpus->parsed()) {
            return run_corpus_verb(entry_name, export_dir, opt);
        }
        if (enumerate->parsed()) {
            return run_enumerate(n, as_sets, list, opt);
        }
        if (implications->parsed()) {
            return run_implications(n, tsv_path, opt);
        }
        if (counterexample->parsed()) {
            return run_counterexample(premises, conclusion, max_n, opt);
        }
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return kFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}
