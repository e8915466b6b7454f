#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "prunres/monomial.hpp"

namespace prunres {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                             ": " + what),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

namespace detail {

class LineScanner {
public:
    LineScanner(std::string_view text, std::size_t line) : text_(text), line_(line) {}

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool done() {
        skip_space();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    std::size_t column() const { return pos_ + 1; }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, column(), what); }

    std::string identifier() {
        skip_space();
        const std::size_t start = pos_;
        if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            ++pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
        }
        if (start == pos_) fail("expected a variable name");
        return std::string(text_.substr(start, pos_ - start));
    }

    std::uint64_t number() {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == '-') fail("negative exponent");
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected an exponent");
        std::uint64_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
            if (v > std::numeric_limits<Exponent>::max()) fail("exponent exceeds machine width");
            ++pos_;
        }
        return v;
    }

    void keyword(std::string_view word) {
        skip_space();
        if (text_.substr(pos_, word.size()) != word ||
            (pos_ + word.size() < text_.size() &&
             !std::isspace(static_cast<unsigned char>(text_[pos_ + word.size()])))) {
            fail("expected '" + std::string(word) + "'");
        }
        pos_ += word.size();
    }

private:
    std::string_view text_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Reads
///   ring <var> <var> ...
///   gens <mono>, <mono>, ...
/// with monomials such as `x1^2*x3`. Blank lines are ignored; the unit monomial,
/// unknown variables and malformed tokens are rejected with a position.
inline MonomialIdeal parse_ideal(std::string_view text) {
    std::vector<std::pair<std::size_t, std::string_view>> lines;
    std::size_t number = 0;
    while (!text.empty() || number == 0) {
        const auto nl = text.find('\n');
        const auto line = text.substr(0, nl);
        ++number;
        if (line.find_first_not_of(" \t\r") != std::string_view::npos) lines.emplace_back(number, line);
        if (nl == std::string_view::npos) break;
        text.remove_prefix(nl + 1);
    }
    if (lines.empty()) throw ParseError(1, 1, "expected 'ring'");
    if (lines.size() < 2) throw ParseError(lines[0].first + 1, 1, "expected 'gens'");
    if (lines.size() > 2) throw ParseError(lines[2].first, 1, "unexpected trailing input");

    detail::LineScanner ring(lines[0].second, lines[0].first);
    ring.keyword("ring");
    std::vector<std::string> names;
    std::unordered_map<std::string, std::size_t> index;
    while (!ring.done()) {
        const std::size_t col = ring.column();
        auto name = ring.identifier();
        if (!index.emplace(name, names.size()).second)
            throw ParseError(lines[0].first, col, "duplicate variable '" + name + "'");
        names.push_back(std::move(name));
    }

    detail::LineScanner gens(lines[1].second, lines[1].first);
    gens.keyword("gens");
    std::vector<Monomial> out;
    if (!gens.done()) {
        do {
            const std::size_t start = gens.column();
            std::vector<Exponent> e(names.size(), 0);
            if (std::isdigit(static_cast<unsigned char>(gens.peek()))) {
                gens.number();
                gens.fail("constant terms are not monomial generators");
            }
            do {
                const std::size_t col = gens.column();
                auto name = gens.identifier();
                auto it = index.find(name);
                if (it == index.end()) throw ParseError(lines[1].first, col, "unknown variable '" + name + "'");
                std::uint64_t power = 1;
                if (gens.accept('^')) power = gens.number();
                const std::uint64_t total = e[it->second] + power;
                if (total > std::numeric_limits<Exponent>::max()) gens.fail("exponent exceeds machine width");
                e[it->second] = static_cast<Exponent>(total);
            } while (gens.accept('*'));
            Monomial m(std::move(e));
            if (m.is_one()) throw ParseError(lines[1].first, start, "the unit monomial is not allowed");
            out.push_back(std::move(m));
            if (!gens.done() && gens.peek() != ',') gens.fail("expected ',' or '*'");
        } while (gens.accept(','));
    }
    return MonomialIdeal(std::move(names), std::move(out));
}

inline std::string format_ideal(const MonomialIdeal& ideal) {
    std::string out = "ring";
    for (const auto& v : ideal.variables()) out += " " + v;
    out += "\ngens";
    for (std::size_t i = 0; i < ideal.size(); ++i) out += (i ? ", " : " ") + to_string(ideal[i], ideal.variables());
    return out + "\n";
}

inline std::vector<std::string> numbered_variables(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 1; i <= n; ++i) out.push_back("x" + std::to_string(i));
    return out;
}

/// Edge ideal of a graph on n vertices from 0-based vertex pairs, in edge order.
inline MonomialIdeal edge_ideal(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    std::vector<Monomial> gens;
    for (auto [u, v] : edges) {
        if (u >= n || v >= n || u == v) throw std::invalid_argument("bad edge");
        std::vector<Exponent> e(n, 0);
        e[u] = e[v] = 1;
        gens.emplace_back(std::move(e));
    }
    return MonomialIdeal(numbered_variables(n), std::move(gens));
}

/// <x1x2, x2x3, ..., x_{n-1}x_n>
inline MonomialIdeal path_ideal(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return edge_ideal(n, edges);
}

/// <x1x2, ..., x_{n-1}x_n, x_nx1>
inline MonomialIdeal cycle_ideal(std::size_t n) {
    if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(n - 1, 0);
    return edge_ideal(n, edges);
}

/// Stanley-Reisner ideal of the six-vertex triangulation of the real projective plane.
inline MonomialIdeal rp2_ideal() {
    return parse_ideal(
        "ring x1 x2 x3 x4 x5 x6\n"
        "gens x1*x2*x3, x1*x2*x4, x1*x3*x5, x2*x4*x5, x3*x4*x5, x2*x3*x6, x1*x4*x6, x3*x4*x6, "
        "x1*x5*x6, x2*x5*x6");
}

/// Eleven generators in seven variables whose pruned resolution is minimal while
/// the Lyubeznik resolution is not.
inline MonomialIdeal example_4_1_ideal() {
    return parse_ideal(
        "ring x1 x2 x3 x4 x5 x6 x7\n"
        "gens x1^4, x2^4, x2^2*x3^2, x3^4, x4^4, x1*x4^2*x5, x5^4, x2^2*x6^2, x6^4, x4^2*x7^2, x7^4");
}

/// One `u v` pair of 1-based vertices per line; blank lines and `#` comments skipped.
inline MonomialIdeal parse_edge_list(std::string_view text) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::size_t n = 0, line_no = 0;
    std::istringstream in{std::string(text)};
    for (std::string line; std::getline(in, line);) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        long long u = 0, v = 0;
        if (!(ls >> u)) continue;
        std::string rest;
        if (!(ls >> v) || (ls >> rest) || u < 1 || v < 1 || u == v)
            throw ParseError(line_no, 1, "expected two distinct positive vertex indices");
        edges.emplace_back(static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1));
        n = std::max<std::size_t>(n, static_cast<std::size_t>(std::max(u, v)));
    }
    return edge_ideal(n, edges);
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

/// An ideal named by one of
///   path:<n>  cycle:<n>  edges:<file>  rp2  example-4-1
///   an inline `ring ...; gens ...` text (';' separates the two lines)
///   a path to a file in the ring/gens grammar
inline MonomialIdeal resolve_ideal(const std::string& source) {
    auto count_after = [&](std::size_t prefix) -> std::size_t {
        const std::string digits = source.substr(prefix);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("expected a vertex count in '" + source + "'");
        return std::stoul(digits);
    };
    if (source.rfind("path:", 0) == 0) return path_ideal(count_after(5));
    if (source.rfind("cycle:", 0) == 0) return cycle_ideal(count_after(6));
    if (source.rfind("edges:", 0) == 0) return parse_edge_list(read_file(source.substr(6)));
    if (source == "rp2") return rp2_ideal();
    if (source == "example-4-1") return example_4_1_ideal();
    if (source.find("gens") != std::string::npos && source.find("ring") != std::string::npos) {
        std::string text = source;
        for (auto& c : text)
            if (c == ';') c = '\n';
        return parse_ideal(text);
    }
    return parse_ideal(read_file(source));
}

}  // namespace prunres
