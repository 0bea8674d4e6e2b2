#pragma once

// Text formats: the plain edge list and a small DOT subset.
//
// Edge list:
//     # comment
//     <n>
//     <u> <v>
//     ...
// '#' lines are comments (generated files use "# key: value" headers).
// Both '\n' and "\r\n" line endings are accepted.

#include <cctype>
#include <algorithm>
#include <charconv>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gperiod/digraph.hpp"

namespace gperiod {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line)
        : std::runtime_error(what + ", line " + std::to_string(line)), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class UnsupportedSyntax : public ParseError {
public:
    using ParseError::ParseError;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

inline std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        if (end == text.size()) break;
        start = end + 1;
    }
    return lines;
}

inline std::optional<std::uint64_t> parse_uint(std::string_view token) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty()) {
        return std::nullopt;
    }
    return value;
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

}  // namespace detail

inline Digraph parse_edgelist(std::string_view text) {
    const auto lines = detail::split_lines(text);
    std::optional<std::size_t> n;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::size_t lineno = i + 1;
        std::string_view line = detail::trim(lines[i]);
        if (line.empty() || line.front() == '#') continue;
        const auto tokens = detail::split_ws(line);
        if (!n) {
            if (tokens.size() != 1) throw ParseError("expected vertex count", lineno);
            auto value = detail::parse_uint(tokens[0]);
            if (!value) throw ParseError("malformed vertex count", lineno);
            if (*value == 0) throw ParseError("vertex count must be positive", lineno);
            if (*value > std::numeric_limits<Vertex>::max()) {
                throw ParseError("vertex count too large", lineno);
            }
            n = static_cast<std::size_t>(*value);
            continue;
        }
        if (tokens.size() != 2) throw ParseError("malformed edge line", lineno);
        auto u = detail::parse_uint(tokens[0]);
        auto v = detail::parse_uint(tokens[1]);
        if (!u || !v) throw ParseError("malformed edge line", lineno);
        if (*u >= *n || *v >= *n) throw ParseError("endpoint out of range", lineno);
        edges.push_back({static_cast<Vertex>(*u), static_cast<Vertex>(*v)});
    }
    if (!n) throw ParseError("empty input", lines.size());
    return Digraph(*n, edges);
}

// Reads the "# key: value" header comments of an edge-list file.
// Later duplicates of a key overwrite earlier ones.
inline std::map<std::string, std::string> parse_header(std::string_view text) {
    std::map<std::string, std::string> out;
    for (std::string_view raw : detail::split_lines(text)) {
        std::string_view line = detail::trim(raw);
        if (line.empty()) continue;
        if (line.front() != '#') break;
        line = detail::trim(line.substr(1));
        const auto colon = line.find(':');
        if (colon == std::string_view::npos) continue;
        out[std::string(detail::trim(line.substr(0, colon)))] =
            std::string(detail::trim(line.substr(colon + 1)));
    }
    return out;
}

inline std::string to_edgelist(const Digraph& g,
                               const std::vector<std::pair<std::string, std::string>>& header = {}) {
    std::ostringstream out;
    for (const auto& [key, value] : header) {
        out << "# " << key << ": " << value << '\n';
    }
    out << g.size() << '\n';
    for (const Edge& e : g.edges()) {
        out << e.from << ' ' << e.to << '\n';
    }
    return out.str();
}

struct DotGraph {
    Digraph graph;
    std::vector<std::string> names;  // names[v] is the DOT identifier of vertex v
};

// Accepts `digraph [NAME] { a -> b -> c; d; ... }` with bare or quoted
// identifiers and // or /* */ comments. Attributes, subgraphs, undirected
// edges and graph-level assignments are rejected.
inline DotGraph parse_dot(std::string_view text) {
    struct Token {
        enum Kind { ident, arrow, lbrace, rbrace, semi, other, end } kind;
        std::string text;
        std::size_t line;
    };

    std::vector<Token> tokens;
    std::size_t line = 1;
    std::size_t i = 0;
    auto is_ident_char = [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' ||
               static_cast<unsigned char>(c) >= 0x80;
    };
    while (i < text.size()) {
        const char c = text[i];
        if (c == '\n') {
            ++line;
            ++i;
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (text.substr(i, 2) == "//") {
            while (i < text.size() && text[i] != '\n') ++i;
        } else if (text.substr(i, 2) == "/*") {
            const auto close = text.find("*/", i + 2);
            if (close == std::string_view::npos) throw ParseError("unterminated comment", line);
            for (std::size_t j = i; j < close; ++j) line += text[j] == '\n';
            i = close + 2;
        } else if (text.substr(i, 2) == "->") {
            tokens.push_back({Token::arrow, "->", line});
            i += 2;
        } else if (c == '{' || c == '}' || c == ';') {
            tokens.push_back({c == '{' ? Token::lbrace : c == '}' ? Token::rbrace : Token::semi,
                              std::string(1, c), line});
            ++i;
        } else if (c == '"') {
            std::string value;
            const std::size_t start_line = line;
            ++i;
            while (i < text.size() && text[i] != '"') {
                if (text[i] == '\\' && i + 1 < text.size()) ++i;
                if (text[i] == '\n') ++line;
                value.push_back(text[i++]);
            }
            if (i >= text.size()) throw ParseError("unterminated string", start_line);
            ++i;
            tokens.push_back({Token::ident, value, start_line});
        } else if (is_ident_char(c)) {
            std::size_t j = i;
            while (j < text.size() && is_ident_char(text[j])) ++j;
            tokens.push_back({Token::ident, std::string(text.substr(i, j - i)), line});
            i = j;
        } else {
            std::size_t j = i + 1;
            if (c == '-' && j < text.size() && text[j] == '-') ++j;
            tokens.push_back({Token::other, std::string(text.substr(i, j - i)), line});
            i = j;
        }
    }
    tokens.push_back({Token::end, "", line});

    std::size_t pos = 0;
    auto unsupported = [&](const Token& t) -> UnsupportedSyntax {
        return UnsupportedSyntax("unsupported syntax '" + t.text + "'", t.line);
    };

    if (tokens[pos].kind == Token::ident && tokens[pos].text == "strict") throw unsupported(tokens[pos]);
    if (tokens[pos].kind != Token::ident || tokens[pos].text != "digraph") {
        if (tokens[pos].kind == Token::ident && tokens[pos].text == "graph") throw unsupported(tokens[pos]);
        throw ParseError("expected 'digraph'", tokens[pos].line);
    }
    ++pos;
    if (tokens[pos].kind == Token::ident) ++pos;
    if (tokens[pos].kind != Token::lbrace) throw ParseError("expected '{'", tokens[pos].line);
    ++pos;

    std::unordered_map<std::string, Vertex> index;
    std::vector<std::string> names;
    std::vector<Edge> edges;
    auto vertex_of = [&](const std::string& name) {
        auto [it, inserted] = index.emplace(name, static_cast<Vertex>(names.size()));
        if (inserted) names.push_back(name);
        return it->second;
    };

    static const std::vector<std::string> keywords{"subgraph", "node", "edge", "graph", "digraph", "strict"};
    while (tokens[pos].kind != Token::rbrace) {
        const Token& t = tokens[pos];
        if (t.kind == Token::end) throw ParseError("expected '}'", t.line);
        if (t.kind == Token::semi) {
            ++pos;
            continue;
        }
        if (t.kind != Token::ident) throw unsupported(t);
        if (std::find(keywords.begin(), keywords.end(), t.text) != keywords.end()) throw unsupported(t);
        Vertex prev = vertex_of(t.text);
        ++pos;
        while (tokens[pos].kind == Token::arrow) {
            ++pos;
            const Token& head = tokens[pos];
            if (head.kind != Token::ident) {
                if (head.kind == Token::lbrace) throw unsupported(head);
                throw ParseError("expected identifier after '->'", head.line);
            }
            if (std::find(keywords.begin(), keywords.end(), head.text) != keywords.end()) {
                throw unsupported(head);
            }
            const Vertex next = vertex_of(head.text);
            edges.push_back({prev, next});
            prev = next;
            ++pos;
        }
        const Token& after = tokens[pos];
        if (after.kind == Token::semi || after.kind == Token::rbrace || after.kind == Token::ident) continue;
        throw unsupported(after);
    }
    ++pos;
    if (tokens[pos].kind != Token::end) throw ParseError("trailing input after '}'", tokens[pos].line);
    if (names.empty()) throw ParseError("digraph has no vertices", tokens[pos].line);
    return DotGraph{Digraph(names.size(), edges), std::move(names)};
}

}  // namespace gperiod
