#pragma once

// Text format for lattices and Graphviz export of the cover relation.
//
//   oml <name>
//   elements: <tok> <tok> ...
//   bottom: <tok>
//   top: <tok>
//   leq: <a> <b>        (one or more; closure is taken)
//   perp: <a> <b>       (one per complement pair)
//   end
//
// `#` starts a comment; blank lines are ignored.

#include <cstddef>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "omlkit/oml.hpp"

namespace omlkit {

enum class ParseErrorKind { Syntax, DuplicateElement, MissingSection };

class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorKind kind, std::size_t line, std::size_t column, const std::string& msg)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + kind_name(kind) + ": " + msg),
          kind_(kind),
          line_(line),
          column_(column) {}

    ParseErrorKind kind() const noexcept { return kind_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

    static std::string kind_name(ParseErrorKind k) {
        switch (k) {
            case ParseErrorKind::Syntax: return "ParseError";
            case ParseErrorKind::DuplicateElement: return "DuplicateElement";
            case ParseErrorKind::MissingSection: return "MissingSection";
        }
        return "ParseError";
    }

private:
    ParseErrorKind kind_;
    std::size_t line_;
    std::size_t column_;
};

namespace detail {

struct Token {
    std::string text;
    std::size_t column;  // 1-based
};

inline std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    const std::size_t end = line.find('#') == std::string::npos ? line.size() : line.find('#');
    while (i < end) {
        while (i < end && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        const std::size_t start = i;
        while (i < end && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

}  // namespace detail

inline OmlSpec parse_oml(std::istream& in) {
    enum Section { Header, Elements, Bottom, Top, Leq, Perp, End };
    static const char* const kSection[] = {"oml", "elements:", "bottom:", "top:", "leq:", "perp:", "end"};

    OmlSpec spec;
    std::set<std::string> known;
    std::set<std::string> paired;
    int last = -1;  // last section seen
    std::string raw;
    std::size_t lineno = 0;
    std::size_t last_line = 1;

    auto syntax = [&](std::size_t col, const std::string& msg) { return ParseError(ParseErrorKind::Syntax, lineno, col, msg); };
    auto element = [&](const detail::Token& t) -> const std::string& {
        if (!known.count(t.text)) throw syntax(t.column, "unknown element '" + t.text + "'");
        return t.text;
    };

    while (std::getline(in, raw)) {
        ++lineno;
        const auto toks = detail::tokenize(raw);
        if (toks.empty()) continue;
        last_line = lineno;
        for (const auto& t : toks)
            for (unsigned char c : t.text)
                if (c < 0x21 || c > 0x7e) throw syntax(t.column, "non-ASCII token '" + t.text + "'");

        const std::string& key = toks[0].text;
        if (last == End) throw syntax(toks[0].column, "content after 'end'");
        int section = -1;
        for (int s = 0; s < 7; ++s)
            if (key == kSection[s]) section = s;
        if (section < 0) throw syntax(toks[0].column, "unknown keyword '" + key + "'");

        // Sections come in order; only leq: and perp: repeat.
        const bool repeats = section == last && (section == Leq || section == Perp);
        if (!repeats && section != last + 1) {
            if (section <= last) throw syntax(toks[0].column, "'" + key + "' out of order");
            throw ParseError(ParseErrorKind::MissingSection, lineno, toks[0].column,
                             std::string("missing '") + kSection[last + 1] + "' before '" + key + "'");
        }
        last = section;

        auto arity = [&](std::size_t n) {
            if (toks.size() != n + 1)
                throw syntax(toks.size() > n + 1 ? toks[n + 1].column : raw.size() + 1,
                             "'" + key + "' takes " + std::to_string(n) + " argument(s)");
        };
        switch (section) {
            case Header:
                arity(1);
                spec.name = toks[1].text;
                break;
            case Elements:
                if (toks.size() < 2) throw syntax(raw.size() + 1, "'elements:' needs at least one element");
                for (std::size_t i = 1; i < toks.size(); ++i) {
                    if (!known.insert(toks[i].text).second)
                        throw ParseError(ParseErrorKind::DuplicateElement, lineno, toks[i].column,
                                         "duplicate element '" + toks[i].text + "'");
                    spec.elements.push_back(toks[i].text);
                }
                break;
            case Bottom:
                arity(1);
                spec.bottom = element(toks[1]);
                break;
            case Top:
                arity(1);
                spec.top = element(toks[1]);
                break;
            case Leq:
                arity(2);
                spec.leq.emplace_back(element(toks[1]), element(toks[2]));
                break;
            case Perp: {
                arity(2);
                const std::string& a = element(toks[1]);
                const std::string& b = element(toks[2]);
                if (paired.count(a)) throw syntax(toks[1].column, "element '" + a + "' already has a perp");
                if (paired.count(b)) throw syntax(toks[2].column, "element '" + b + "' already has a perp");
                if (a == b && spec.elements.size() != 1)
                    throw syntax(toks[2].column, "self-complement only allowed in a one-element lattice");
                paired.insert(a);
                paired.insert(b);
                spec.perp.emplace_back(a, b);
                break;
            }
            case End:
                arity(0);
                for (const auto& e : spec.elements)
                    if (!paired.count(e))
                        throw ParseError(ParseErrorKind::MissingSection, lineno, 1, "no 'perp:' line for element '" + e + "'");
                break;
        }
    }
    if (last < 0) throw ParseError(ParseErrorKind::Syntax, 1, 1, "empty file");
    if (last != End)
        throw ParseError(ParseErrorKind::MissingSection, last_line, 1, std::string("missing '") + kSection[last + 1] + "'");
    return spec;
}

inline OmlSpec parse_oml_string(const std::string& text) {
    std::istringstream in(text);
    return parse_oml(in);
}

/// Canonical text: covers as the generating order, one perp line per pair.
inline void write_oml(std::ostream& os, const Ortholattice& L) {
    os << "oml " << L.name() << '\n';
    os << "elements:";
    for (const auto& l : L.labels()) os << ' ' << l;
    os << '\n';
    os << "bottom: " << L.label(L.bottom()) << '\n';
    os << "top: " << L.label(L.top()) << '\n';
    const auto covers = L.covers();
    if (covers.empty()) os << "leq: " << L.label(L.bottom()) << ' ' << L.label(L.top()) << '\n';
    for (auto [x, y] : covers) os << "leq: " << L.label(x) << ' ' << L.label(y) << '\n';
    for (std::size_t x = 0; x < L.size(); ++x) {
        const auto e = static_cast<elem_t>(x);
        if (x <= L.perp(e)) os << "perp: " << L.label(e) << ' ' << L.label(L.perp(e)) << '\n';
    }
    os << "end\n";
}

inline std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

/// Hasse diagram, bottom at the bottom.
inline void write_dot(std::ostream& os, const Ortholattice& L) {
    os << "digraph \"" << dot_escape(L.name()) << "\" {\n";
    os << "  rankdir=BT;\n";
    os << "  node [shape=plaintext];\n";
    for (std::size_t x = 0; x < L.size(); ++x)
        os << "  n" << x << " [label=\"" << dot_escape(L.label(static_cast<elem_t>(x))) << "\"];\n";
    for (auto [x, y] : L.covers()) os << "  n" << unsigned{x} << " -> n" << unsigned{y} << ";\n";
    os << "}\n";
}

}  // namespace omlkit
