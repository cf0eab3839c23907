#include "clusterax/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

namespace clusterax {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : UsageError("line " + std::to_string(line) + (column ? ", column " + std::to_string(column) : "") + ": " +
                 message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
    std::string text;
    std::size_t column;
};

struct Line {
    std::size_t number;
    std::vector<Token> tokens;
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') {
            break;
        }
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        if (line[i] == ':') {
            out.push_back({":", i + 1});
            ++i;
            continue;
        }
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '#' &&
               line[i] != ':') {
            ++i;
        }
        out.push_back({std::string(line.substr(start, i - start)), start + 1});
    }
    return out;
}

std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        ++number;
        auto tokens = tokenize(text.substr(pos, end - pos));
        if (!tokens.empty()) {
            out.push_back({number, std::move(tokens)});
        }
        if (end == text.size()) {
            break;
        }
        pos = end + 1;
    }
    return out;
}

GroundSet parse_header(const std::vector<Line>& lines) {
    if (lines.empty()) {
        throw ParseError("missing label line", 1, 0);
    }
    const Line& head = lines.front();
    std::vector<std::string> labels;
    for (const Token& t : head.tokens) {
        if (t.text == ":") {
            throw ParseError("unexpected ':' in label line", head.number, t.column);
        }
        for (const std::string& seen : labels) {
            if (seen == t.text) {
                throw ParseError("duplicate label '" + t.text + "'", head.number, t.column);
            }
        }
        labels.push_back(t.text);
    }
    if (labels.size() > kMaxVertices) {
        throw ParseError("more than " + std::to_string(kMaxVertices) + " labels", head.number, 0);
    }
    return GroundSet(std::move(labels));
}

Vertex lookup(const GroundSet& g, const Token& t, std::size_t line) {
    if (t.text == ":") {
        throw ParseError("unexpected ':'", line, t.column);
    }
    auto v = g.find(t.text);
    if (!v) {
        throw ParseError("unknown label '" + t.text + "'", line, t.column);
    }
    return *v;
}

}  // namespace

SetSystem parse_set_system(std::string_view text, bool add_singletons) {
    const auto lines = content_lines(text);
    GroundSet ground = parse_header(lines);
    std::vector<Subset> sets;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        Mask m = 0;
        for (const Token& t : lines[i].tokens) {
            m |= bit(lookup(ground, t, lines[i].number));
        }
        sets.emplace_back(m, ground.size());
    }
    SetSystem c(ground, std::move(sets));
    return add_singletons ? c.with_singletons() : c;
}

TransitFunction parse_transit(std::string_view text, DefaultPair fill) {
    const auto lines = content_lines(text);
    GroundSet ground = parse_header(lines);
    TransitTable table;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        if (line.tokens.size() < 3 || line.tokens[2].text != ":") {
            const std::size_t col = line.tokens.size() >= 3 ? line.tokens[2].column : 0;
            throw ParseError("expected 'u v : members'", line.number, col);
        }
        const Vertex u = lookup(ground, line.tokens[0], line.number);
        const Vertex v = lookup(ground, line.tokens[1], line.number);
        Mask m = 0;
        for (std::size_t j = 3; j < line.tokens.size(); ++j) {
            m |= bit(lookup(ground, line.tokens[j], line.number));
        }
        const auto key = std::pair{std::min(u, v), std::max(u, v)};
        const Subset value(m, ground.size());
        auto [it, inserted] = table.emplace(key, value);
        if (!inserted && it->second != value) {
            throw ParseError("conflicting entries for R(" + ground.label(u) + "," + ground.label(v) + ")",
                             line.number, line.tokens[0].column);
        }
    }
    return make_transit(ground, table, fill);
}

std::string write_set_system(const SetSystem& c) {
    std::ostringstream out;
    const auto& labels = c.ground().labels();
    for (std::size_t i = 0; i < labels.size(); ++i) {
        out << (i ? " " : "") << labels[i];
    }
    out << '\n';
    for (const Subset& s : c.sets()) {
        bool first = true;
        for (Vertex v : s.members()) {
            out << (first ? "" : " ") << c.ground().label(v);
            first = false;
        }
        out << '\n';
    }
    return out.str();
}

std::string write_transit(const TransitFunction& r) {
    std::ostringstream out;
    const GroundSet& g = r.ground();
    for (std::size_t i = 0; i < g.size(); ++i) {
        out << (i ? " " : "") << g.label(i);
    }
    out << '\n';
    for (Vertex u = 0; u < r.n(); ++u) {
        for (Vertex v = u + 1; v < r.n(); ++v) {
            out << g.label(u) << ' ' << g.label(v) << " :";
            for (Vertex x : r(u, v).members()) {
                out << ' ' << g.label(x);
            }
            out << '\n';
        }
    }
    return out.str();
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot read " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace clusterax
