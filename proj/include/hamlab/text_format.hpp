#pragma once

// Plain-text digraph files.
//
//   # comment to end of line
//   n          first non-blank, non-comment line, 1 <= n <= 64
//   u v        one arc u->v per line, 0-based, u != v, no repeats
//
// Canonical output: "n\n" then arcs sorted by (u, v), one "u v\n" per line.

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hamlab/digraph.hpp"

namespace hamlab {

namespace detail {

inline std::string_view strip_comment_and_space(std::string_view line) {
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    constexpr std::string_view space = " \t\r";
    auto first = line.find_first_not_of(space);
    if (first == std::string_view::npos) return {};
    auto last = line.find_last_not_of(space);
    return line.substr(first, last - first + 1);
}

inline std::vector<std::string_view> split_fields(std::string_view s) {
    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
        if (j > i) fields.push_back(s.substr(i, j - i));
        i = j;
    }
    return fields;
}

inline long parse_integer(std::string_view field, std::size_t line_no) {
    long value = 0;
    auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || end != field.data() + field.size()) {
        throw ParseError(line_no, "expected a base-10 integer, got '" + std::string(field) + "'");
    }
    return value;
}

}  // namespace detail

inline Digraph parse_digraph(std::istream& in) {
    std::string raw;
    std::size_t line_no = 0;
    std::optional<Digraph> d;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = detail::strip_comment_and_space(raw);
        if (line.empty()) continue;
        auto fields = detail::split_fields(line);
        if (!d) {
            if (fields.size() != 1) throw ParseError(line_no, "header must be a single vertex count");
            long n = detail::parse_integer(fields[0], line_no);
            if (n < 1 || n > max_order) throw ParseError(line_no, "vertex count " + std::to_string(n) + " outside [1, 64]");
            d.emplace(static_cast<int>(n));
            continue;
        }
        if (fields.size() != 2) throw ParseError(line_no, "arc line must hold exactly two vertex ids");
        long u = detail::parse_integer(fields[0], line_no);
        long v = detail::parse_integer(fields[1], line_no);
        if (u < 0 || v < 0 || u >= d->order() || v >= d->order()) {
            throw ParseError(line_no, "arc (" + std::to_string(u) + "," + std::to_string(v) + ") names a vertex outside [0, " +
                                          std::to_string(d->order()) + ")");
        }
        if (u == v) throw ParseError(line_no, "loop arc at vertex " + std::to_string(u));
        if (d->has_arc(static_cast<Vertex>(u), static_cast<Vertex>(v))) {
            throw ParseError(line_no, "repeated arc (" + std::to_string(u) + "," + std::to_string(v) + ")");
        }
        d = d->with_arc(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (!d) throw ParseError(line_no, "missing vertex count header");
    return *d;
}

inline Digraph parse_digraph(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_digraph(in);
}

inline Digraph load_digraph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open '" + path + "'");
    return parse_digraph(in);
}

inline std::string serialize(const Digraph& d) {
    std::string out = std::to_string(d.order()) + "\n";
    for (const Arc& a : d.arcs()) {
        out += std::to_string(a.from);
        out += ' ';
        out += std::to_string(a.to);
        out += '\n';
    }
    return out;
}

}  // namespace hamlab
