#pragma once

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "evencycle/digraph.hpp"
#include "evencycle/errors.hpp"
#include "evencycle/matrix.hpp"
#include "evencycle/ring4.hpp"

namespace evencycle {

namespace detail {

struct NumberedLine {
    std::size_t number;
    std::string text;
};

// Non-blank lines that do not start with '#', with 1-based line numbers.
inline std::vector<NumberedLine> content_lines(std::string_view text)
{
    std::vector<NumberedLine> out;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        std::string line(text.substr(pos, end - pos));
        ++number;
        pos = end + 1;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        const std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#')
            continue;
        out.push_back({number, std::move(line)});
    }
    return out;
}

inline std::vector<std::string> tokens(const std::string& line)
{
    std::istringstream in(line);
    std::vector<std::string> out;
    for (std::string t; in >> t;)
        out.push_back(t);
    return out;
}

inline std::size_t parse_count(const std::string& tok, std::size_t line, const char* what)
{
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError(line, std::string("expected a non-negative integer for ") + what + ", got '" + tok + "'");
    try {
        return static_cast<std::size_t>(std::stoull(tok));
    } catch (const std::out_of_range&) {
        throw ParseError(line, std::string(what) + " '" + tok + "' is too large");
    }
}

}  // namespace detail

/// Graph text: header "n m", then m lines "u v" for arcs u -> v (1-indexed).
/// Lines starting with '#' are comments. Self-loops count toward m but are dropped.
inline Digraph parse_graph(std::string_view text)
{
    const auto lines = detail::content_lines(text);
    if (lines.empty())
        throw ParseError(1, "missing header line 'n m'");
    const auto header = detail::tokens(lines[0].text);
    if (header.size() != 2)
        throw ParseError(lines[0].number, "header must be 'n m'");
    const std::size_t n = detail::parse_count(header[0], lines[0].number, "vertex count");
    const std::size_t m = detail::parse_count(header[1], lines[0].number, "arc count");
    if (lines.size() - 1 != m)
        throw ParseError(lines.back().number,
                         "header declares " + std::to_string(m) + " arcs but " + std::to_string(lines.size() - 1) +
                             " arc lines follow");

    Digraph g(n);
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const auto& [number, body] = lines[k];
        const auto t = detail::tokens(body);
        if (t.size() != 2)
            throw ParseError(number, "arc line must be 'u v'");
        const std::size_t u = detail::parse_count(t[0], number, "arc tail");
        const std::size_t v = detail::parse_count(t[1], number, "arc head");
        try {
            g.add_arc(u, v);
        } catch (const UsageError& e) {
            throw ParseError(number, e.what());
        }
    }
    return g;
}

/// A matrix over E_{4^d} as read from text, before a modulus is chosen.
struct MatrixText {
    std::size_t n = 0;
    unsigned d = 0;
    std::vector<std::string> entries;  // row-major Z_4 digit strings, highest degree first
};

/// Matrix text: header "n d", then n rows of n entries, each a string of at
/// most d digits in 0..3 (coefficient of x^(d-1) first).
inline MatrixText parse_matrix(std::string_view text)
{
    const auto lines = detail::content_lines(text);
    if (lines.empty())
        throw ParseError(1, "missing header line 'n d'");
    const auto header = detail::tokens(lines[0].text);
    if (header.size() != 2)
        throw ParseError(lines[0].number, "header must be 'n d'");
    MatrixText out;
    out.n = detail::parse_count(header[0], lines[0].number, "dimension");
    const std::size_t d = detail::parse_count(header[1], lines[0].number, "extension degree");
    if (d < 1 || d > Field::max_degree)
        throw ParseError(lines[0].number, "extension degree must be in 1..64");
    out.d = static_cast<unsigned>(d);
    if (lines.size() - 1 != out.n)
        throw ParseError(lines.back().number, "expected " + std::to_string(out.n) + " matrix rows, got " +
                                                  std::to_string(lines.size() - 1));
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const auto t = detail::tokens(lines[k].text);
        if (t.size() != out.n)
            throw ParseError(lines[k].number, "expected " + std::to_string(out.n) + " entries, got " +
                                                  std::to_string(t.size()));
        for (const auto& e : t) {
            if (e.size() > out.d || e.find_first_not_of("0123") != std::string::npos)
                throw ParseError(lines[k].number, "entry '" + e + "' is not a string of at most " +
                                                      std::to_string(out.d) + " Z_4 digits");
            out.entries.push_back(e);
        }
    }
    return out;
}

inline MatrixE to_matrix(const Ring& ring, const MatrixText& text)
{
    if (ring.degree() != text.d)
        throw UsageError("matrix degree " + std::to_string(text.d) + " does not match ring degree " +
                         std::to_string(ring.degree()));
    std::vector<RingElem> entries;
    entries.reserve(text.entries.size());
    for (const auto& e : text.entries)
        entries.push_back(ring.parse(e));
    return MatrixE(text.n, std::move(entries));
}

}  // namespace evencycle
