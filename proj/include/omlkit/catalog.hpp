#pragma once

// Deterministic generators for the lattice corpus. Element orderings are
// fixed: bottom first, atoms in index order with complements paired, top last.

#include <cctype>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "omlkit/error.hpp"
#include "omlkit/oml.hpp"

namespace omlkit {

enum class Family { One, Chain2, Boolean, Mo, Benzene, Product };

struct CatalogId {
    Family family = Family::One;
    unsigned parameter = 0;
    std::vector<CatalogId> operands;  // two entries for Family::Product

    std::string to_string() const {
        switch (family) {
            case Family::One: return "one";
            case Family::Chain2: return "chain2";
            case Family::Boolean: return "boolean" + std::to_string(parameter);
            case Family::Mo: return "mo" + std::to_string(parameter);
            case Family::Benzene: return "benzene";
            case Family::Product: return "product(" + operands.at(0).to_string() + "," + operands.at(1).to_string() + ")";
        }
        return {};
    }
};

namespace detail {

inline OmlSpec boolean_spec(unsigned k, std::string name) {
    if (k > 6) throw Error(ErrorKind::ParameterOutOfRange, "boolean atom count must be in 0..6, got " + std::to_string(k));
    const unsigned n = 1U << k;
    const unsigned full = n - 1;
    OmlSpec s;
    s.name = std::move(name);
    for (unsigned m = 0; m < n; ++m) {
        std::string label;
        if (m == 0)
            label = "0";
        else if (m == full)
            label = "1";
        else
            for (unsigned i = 0; i < k; ++i)
                if (m & (1U << i)) label += static_cast<char>('a' + i);
        s.elements.push_back(label);
    }
    for (unsigned m = 0; m < n; ++m)
        for (unsigned i = 0; i < k; ++i)
            if (!(m & (1U << i))) s.leq.emplace_back(s.elements[m], s.elements[m | (1U << i)]);
    if (s.leq.empty()) s.leq.emplace_back(s.elements[0], s.elements[0]);
    for (unsigned m = 0; m < n; ++m)
        if (m <= (full ^ m)) s.perp.emplace_back(s.elements[m], s.elements[full ^ m]);
    s.bottom = s.elements.front();
    s.top = s.elements.back();
    return s;
}

}  // namespace detail

inline OmlSpec one_spec() { return detail::boolean_spec(0, "one"); }
inline OmlSpec chain2_spec() { return detail::boolean_spec(1, "chain2"); }
inline OmlSpec boolean_spec(unsigned k) { return detail::boolean_spec(k, "boolean" + std::to_string(k)); }

/// MO_m: 0, 1 and m complementary atom pairs a, a', b, b', ...
inline OmlSpec mo_spec(unsigned m) {
    if (m < 1 || m > 8) throw Error(ErrorKind::ParameterOutOfRange, "mo pair count must be in 1..8, got " + std::to_string(m));
    OmlSpec s;
    s.name = "mo" + std::to_string(m);
    s.elements.push_back("0");
    for (unsigned i = 0; i < m; ++i) {
        const std::string a(1, static_cast<char>('a' + i));
        s.elements.push_back(a);
        s.elements.push_back(a + "'");
    }
    s.elements.push_back("1");
    for (std::size_t i = 1; i + 1 < s.elements.size(); ++i) s.leq.emplace_back("0", s.elements[i]);
    for (std::size_t i = 1; i + 1 < s.elements.size(); ++i) s.leq.emplace_back(s.elements[i], "1");
    s.perp.emplace_back("0", "1");
    for (std::size_t i = 1; i + 1 < s.elements.size(); i += 2) s.perp.emplace_back(s.elements[i], s.elements[i + 1]);
    s.bottom = "0";
    s.top = "1";
    return s;
}

/// The hexagon 0 < x < y < 1, 0 < y' < x' < 1: an ortholattice that is not
/// orthomodular.
inline OmlSpec benzene_spec() {
    OmlSpec s;
    s.name = "benzene";
    s.elements = {"0", "x", "y", "y'", "x'", "1"};
    s.leq = {{"0", "x"}, {"x", "y"}, {"y", "1"}, {"0", "y'"}, {"y'", "x'"}, {"x'", "1"}};
    s.perp = {{"0", "1"}, {"x", "x'"}, {"y", "y'"}};
    s.bottom = "0";
    s.top = "1";
    return s;
}

/// Componentwise product; elements ordered lexicographically (left major).
inline OmlSpec product_spec(const Ortholattice& left, const Ortholattice& right) {
    const std::size_t n1 = left.size(), n2 = right.size();
    if (n1 * n2 > kMaxElements)
        throw Error(ErrorKind::SizeCap, "product of " + std::to_string(n1) + " and " + std::to_string(n2) + " elements exceeds 64");
    OmlSpec s;
    s.name = "product(" + left.name() + "," + right.name() + ")";
    auto label = [&](std::size_t i, std::size_t j) {
        return "(" + left.label(static_cast<elem_t>(i)) + "," + right.label(static_cast<elem_t>(j)) + ")";
    };
    auto index = [&](std::size_t i, std::size_t j) { return i * n2 + j; };
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n2; ++j) s.elements.push_back(label(i, j));
    for (auto [x, y] : left.covers())
        for (std::size_t j = 0; j < n2; ++j) s.leq.emplace_back(label(x, j), label(y, j));
    for (auto [x, y] : right.covers())
        for (std::size_t i = 0; i < n1; ++i) s.leq.emplace_back(label(i, x), label(i, y));
    if (s.leq.empty()) s.leq.emplace_back(s.elements[0], s.elements[0]);
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n2; ++j) {
            const std::size_t pi = left.perp(static_cast<elem_t>(i)), pj = right.perp(static_cast<elem_t>(j));
            if (index(i, j) <= index(pi, pj)) s.perp.emplace_back(label(i, j), label(pi, pj));
        }
    s.bottom = label(left.bottom(), right.bottom());
    s.top = label(left.top(), right.top());
    return s;
}

inline OmlRef gen_one() { return build_oml(one_spec()); }
inline OmlRef gen_chain2() { return build_oml(chain2_spec()); }
inline OmlRef gen_boolean(unsigned k) { return build_oml(boolean_spec(k)); }
inline OmlRef gen_mo(unsigned m) { return build_oml(mo_spec(m)); }
inline Ortholattice gen_benzene() { return build_ortholattice(benzene_spec()); }
inline OmlRef gen_product(const Oml& left, const Oml& right) { return build_oml(product_spec(left, right)); }

/// Parses ids such as `one`, `chain2`, `boolean3`, `mo2`, `benzene`,
/// `product(mo2,chain2)`.
inline CatalogId parse_catalog_id(std::string_view text) {
    std::size_t pos = 0;
    auto bad = [&](const std::string& why) -> Error {
        return Error(ErrorKind::ParameterOutOfRange, "bad catalog id '" + std::string(text) + "': " + why);
    };
    auto number = [&]() -> unsigned {
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos || pos - start > 3) throw bad("expected a parameter");
        return static_cast<unsigned>(std::stoul(std::string(text.substr(start, pos - start))));
    };
    auto take = [&](std::string_view word) {
        if (text.substr(pos, word.size()) != word) return false;
        pos += word.size();
        return true;
    };
    auto parse = [&](auto&& self) -> CatalogId {
        CatalogId id;
        if (take("one")) {
            id.family = Family::One;
        } else if (take("chain2")) {
            id.family = Family::Chain2;
        } else if (take("benzene")) {
            id.family = Family::Benzene;
        } else if (take("boolean")) {
            id.family = Family::Boolean;
            id.parameter = number();
            if (id.parameter > 6) throw bad("boolean atom count must be in 0..6");
        } else if (take("mo")) {
            id.family = Family::Mo;
            id.parameter = number();
            if (id.parameter < 1 || id.parameter > 8) throw bad("mo pair count must be in 1..8");
        } else if (take("product(")) {
            id.family = Family::Product;
            id.operands.push_back(self(self));
            if (!take(",")) throw bad("expected ','");
            id.operands.push_back(self(self));
            if (!take(")")) throw bad("expected ')'");
        } else {
            throw bad("unknown family");
        }
        return id;
    };
    CatalogId id = parse(parse);
    if (pos != text.size()) throw bad("trailing characters");
    return id;
}

/// Raw description for any catalog id (benzene included).
inline OmlSpec catalog_spec(const CatalogId& id) {
    switch (id.family) {
        case Family::One: return one_spec();
        case Family::Chain2: return chain2_spec();
        case Family::Boolean: return boolean_spec(id.parameter);
        case Family::Mo: return mo_spec(id.parameter);
        case Family::Benzene: return benzene_spec();
        case Family::Product: {
            const auto left = build_oml(catalog_spec(id.operands.at(0)));
            const auto right = build_oml(catalog_spec(id.operands.at(1)));
            return product_spec(*left, *right);
        }
    }
    throw Error(ErrorKind::ParameterOutOfRange, "unknown family");
}

inline OmlRef generate(const CatalogId& id) { return build_oml(catalog_spec(id)); }

}  // namespace omlkit
