#pragma once

// Text formats.
//
// Set system: first line lists the vertex labels; every further line is one
// member given as labels. Transit function: first line lists the labels;
// every further line reads "u v : x1 x2 ..." and gives R(u, v). In both,
// '#' starts a comment and blank lines are ignored.

#include <filesystem>
#include <string>
#include <string_view>

#include "clusterax/setcore.hpp"
#include "clusterax/transit.hpp"

namespace clusterax {

/// Malformed input. line and column are 1-based; column 0 means the whole
/// line.
class ParseError : public UsageError {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

SetSystem parse_set_system(std::string_view text, bool add_singletons = false);
TransitFunction parse_transit(std::string_view text, DefaultPair fill = DefaultPair::error);

std::string write_set_system(const SetSystem& c);
/// Lists every off-diagonal pair, so the output parses with any fill mode.
std::string write_transit(const TransitFunction& r);

std::string read_file(const std::filesystem::path& path);

}  // namespace clusterax
