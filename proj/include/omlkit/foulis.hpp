#pragma once

// Involutive unital m-semilattices with a Foulis operation s ↦ [s], held as
// full operation tables, and the orthomodular lattice [S] of their Sasaki
// projections.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "omlkit/error.hpp"
#include "omlkit/linmap.hpp"
#include "omlkit/oml.hpp"
#include "omlkit/report.hpp"

namespace omlkit {

using idx_t = std::uint32_t;

/// Join-semilattice with zero and an associative multiplication with unit.
struct UnitalMS {
    std::size_t k = 0;
    std::vector<idx_t> join_table;  // k*k
    std::vector<idx_t> mult_table;  // k*k
    idx_t unit = 0;
    idx_t zero = 0;

    idx_t join(idx_t a, idx_t b) const { return join_table[a * k + b]; }
    idx_t mult(idx_t a, idx_t b) const { return mult_table[a * k + b]; }
};

struct FoulisMS : UnitalMS {
    std::vector<idx_t> star_table;
    std::vector<idx_t> sai_table;       // s ↦ [s]
    std::vector<LinMap> provenance;     // carrier element i is provenance[i] when built from Lin(X)

    idx_t star(idx_t s) const { return star_table[s]; }
    idx_t sai(idx_t s) const { return sai_table[s]; }
    /// s⊥ = [s*]
    idx_t perp(idx_t s) const { return sai(star(s)); }
    idx_t perp2(idx_t s) const { return perp(perp(s)); }

    /// s ≤ t iff s = t·s
    bool leq(idx_t s, idx_t t) const { return s == mult(t, s); }
    /// s ⊥ t iff s*·t = 0
    bool ortho(idx_t s, idx_t t) const { return mult(star(s), t) == zero; }

    std::string name(idx_t s) const { return "s" + std::to_string(s); }

    /// Witness token: `s<i>` plus the map table when the carrier came from Lin(X).
    std::string render(idx_t s) const {
        if (s < provenance.size()) return name(s) + "=" + provenance[s].render();
        return name(s);
    }
};

inline bool foulis_leq(const FoulisMS& S, idx_t s, idx_t t) { return S.leq(s, t); }
inline bool foulis_ortho(const FoulisMS& S, idx_t s, idx_t t) { return S.ortho(s, t); }

namespace detail {

inline std::string tokens(const FoulisMS& S, std::initializer_list<idx_t> xs) {
    std::string out;
    for (idx_t x : xs) {
        if (!out.empty()) out += ' ';
        out += S.render(x);
    }
    return out;
}

}  // namespace detail

/// Join-semilattice, monoid, distributivity and involution laws.
inline Report validate_involutive_ms(const FoulisMS& S, unsigned jobs = 1) {
    using detail::tokens;
    const std::string suite = "m-semilattice";
    Report r;
    const auto k = static_cast<idx_t>(S.k);
    auto scan1 = [&](auto&& pred) -> std::optional<std::string> {
        for (idx_t a = 0; a < k; ++a)
            if (auto w = pred(a)) return w;
        return std::nullopt;
    };
    auto scan2 = [&](auto&& pred) -> std::optional<std::string> {
        return first_failure(k, jobs, [&](std::size_t a) -> std::optional<std::string> {
            for (idx_t b = 0; b < k; ++b)
                if (auto w = pred(static_cast<idx_t>(a), b)) return w;
            return std::nullopt;
        });
    };
    auto scan3 = [&](auto&& pred) -> std::optional<std::string> {
        return first_failure(k, jobs, [&](std::size_t a) -> std::optional<std::string> {
            for (idx_t b = 0; b < k; ++b)
                for (idx_t c = 0; c < k; ++c)
                    if (auto w = pred(static_cast<idx_t>(a), b, c)) return w;
            return std::nullopt;
        });
    };
    using W = std::optional<std::string>;

    r.add(suite, "join-idempotent", scan1([&](idx_t a) -> W {
        if (S.join(a, a) != a) return tokens(S, {a});
        return std::nullopt;
    }));
    r.add(suite, "join-commutative", scan2([&](idx_t a, idx_t b) -> W {
        if (S.join(a, b) != S.join(b, a)) return tokens(S, {a, b});
        return std::nullopt;
    }));
    r.add(suite, "join-associative", scan3([&](idx_t a, idx_t b, idx_t c) -> W {
        if (S.join(S.join(a, b), c) != S.join(a, S.join(b, c))) return tokens(S, {a, b, c});
        return std::nullopt;
    }));
    r.add(suite, "zero-least", scan1([&](idx_t a) -> W {
        if (S.join(S.zero, a) != a) return tokens(S, {a});
        return std::nullopt;
    }));
    r.add(suite, "mult-associative", scan3([&](idx_t a, idx_t b, idx_t c) -> W {
        if (S.mult(S.mult(a, b), c) != S.mult(a, S.mult(b, c))) return tokens(S, {a, b, c});
        return std::nullopt;
    }));
    r.add(suite, "unit", scan1([&](idx_t a) -> W {
        if (S.mult(S.unit, a) != a || S.mult(a, S.unit) != a) return tokens(S, {a});
        return std::nullopt;
    }));
    r.add(suite, "distributes-left", scan3([&](idx_t a, idx_t b, idx_t c) -> W {
        if (S.mult(a, S.join(b, c)) != S.join(S.mult(a, b), S.mult(a, c))) return tokens(S, {a, b, c});
        return std::nullopt;
    }));
    r.add(suite, "distributes-right", scan3([&](idx_t a, idx_t b, idx_t c) -> W {
        if (S.mult(S.join(b, c), a) != S.join(S.mult(b, a), S.mult(c, a))) return tokens(S, {a, b, c});
        return std::nullopt;
    }));
    r.add(suite, "zero-annihilates", scan1([&](idx_t a) -> W {
        if (S.mult(a, S.zero) != S.zero || S.mult(S.zero, a) != S.zero) return tokens(S, {a});
        return std::nullopt;
    }));
    r.add(suite, "star-involutive", scan1([&](idx_t a) -> W {
        if (S.star(S.star(a)) != a) return tokens(S, {a});
        return std::nullopt;
    }));
    r.add(suite, "star-reverses-mult", scan2([&](idx_t a, idx_t b) -> W {
        if (S.star(S.mult(a, b)) != S.mult(S.star(b), S.star(a))) return tokens(S, {a, b});
        return std::nullopt;
    }));
    r.add(suite, "star-preserves-join", scan2([&](idx_t a, idx_t b) -> W {
        if (S.star(S.join(a, b)) != S.join(S.star(a), S.star(b))) return tokens(S, {a, b});
        return std::nullopt;
    }));
    r.add(suite, "star-zero", S.star(S.zero) == S.zero, tokens(S, {S.zero}));
    r.add(suite, "unit-self-adjoint", S.star(S.unit) == S.unit, tokens(S, {S.unit}));
    return r;
}

/// Foulis axioms (2)-(4), the equivalent ⊥-characterisation, and the derived
/// facts about ≤ and ⊥. The existential in axiom (4) is decided by scanning
/// every y in the carrier.
inline Report validate_foulis_axioms(const FoulisMS& S, unsigned jobs = 1) {
    using detail::tokens;
    using W = std::optional<std::string>;
    const std::string suite = "foulis";
    Report r;
    const auto k = static_cast<idx_t>(S.k);
    auto scan1 = [&](auto&& pred) -> W {
        for (idx_t a = 0; a < k; ++a)
            if (auto w = pred(a)) return w;
        return std::nullopt;
    };

    r.add(suite, "sai-idempotent", scan1([&](idx_t s) -> W {
        if (S.mult(S.sai(s), S.sai(s)) != S.sai(s)) return tokens(S, {s});
        return std::nullopt;
    }));
    r.add(suite, "sai-self-adjoint", scan1([&](idx_t s) -> W {
        if (S.star(S.sai(s)) != S.sai(s)) return tokens(S, {s});
        return std::nullopt;
    }));
    r.add(suite, "zero-is-sai-of-unit", S.sai(S.unit) == S.zero, tokens(S, {S.sai(S.unit), S.zero}));
    const idx_t z = S.sai(S.unit);
    r.add(suite, "sai-unit-is-mult-zero", scan1([&](idx_t s) -> W {
        if (S.mult(z, s) != z || S.mult(s, z) != z) return tokens(S, {s});
        return std::nullopt;
    }));

    // For a fixed p, the right ideal p·S.
    auto right_ideal = [&](idx_t p) {
        std::vector<bool> in(k, false);
        for (idx_t y = 0; y < k; ++y) in[S.mult(p, y)] = true;
        return in;
    };
    r.add(suite, "annihilator", first_failure(k, jobs, [&](std::size_t si) -> W {
        const auto s = static_cast<idx_t>(si);
        const auto ideal = right_ideal(S.sai(s));
        for (idx_t t = 0; t < k; ++t)
            if ((S.mult(s, t) == z) != ideal[t]) return tokens(S, {s, t});
        return std::nullopt;
    }));

    const std::string remark = "foulis-remark";
    r.add(remark, "perp-self-adjoint-idempotent", scan1([&](idx_t s) -> W {
        const idx_t p = S.perp(s);
        if (S.mult(p, p) != p || S.star(p) != p) return tokens(S, {s});
        return std::nullopt;
    }));
    r.add(remark, "unit-perp-is-zero", S.perp(S.unit) == S.zero, tokens(S, {S.perp(S.unit)}));
    r.add(remark, "ortho-characterisation", first_failure(k, jobs, [&](std::size_t si) -> W {
        const auto s = static_cast<idx_t>(si);
        const auto ideal = right_ideal(S.perp(s));
        for (idx_t t = 0; t < k; ++t)
            if (S.ortho(s, t) != ideal[t]) return tokens(S, {s, t});
        return std::nullopt;
    }));
    r.add(remark, "s-ortho-s-perp", scan1([&](idx_t s) -> W {
        if (S.mult(S.star(s), S.perp(s)) != S.zero || S.mult(S.perp(s), s) != S.zero) return tokens(S, {s});
        return std::nullopt;
    }));

    const std::string derived = "foulis-derived";
    r.add(derived, "leq-transitive", first_failure(k, jobs, [&](std::size_t si) -> W {
        const auto s = static_cast<idx_t>(si);
        for (idx_t t = 0; t < k; ++t) {
            if (!S.leq(s, t)) continue;
            for (idx_t u = 0; u < k; ++u)
                if (S.leq(t, u) && !S.leq(s, u)) return tokens(S, {s, t, u});
        }
        return std::nullopt;
    }));
    r.add(derived, "ortho-symmetric", first_failure(k, jobs, [&](std::size_t si) -> W {
        const auto s = static_cast<idx_t>(si);
        for (idx_t t = 0; t < k; ++t)
            if (S.ortho(s, t) != S.ortho(t, s)) return tokens(S, {s, t});
        return std::nullopt;
    }));
    return r;
}

/// All m-semilattice and Foulis checks; never throws on a bad table.
inline Report validate_foulis(const FoulisMS& S, unsigned jobs = 1) {
    Report r = validate_involutive_ms(S, jobs);
    r.append(validate_foulis_axioms(S, jobs));
    return r;
}

/// Lin(X) with pointwise join, composition, adjoints and [s] = π_{s*(1)⊥},
/// without validation. Carrier order is the lexicographic order of the map
/// tables.
/// Largest Lin(X) for which the k×k tables are materialised.
inline constexpr std::size_t kMaxTableCarrier = 1024;

/// Tables of Lin(X) from an already enumerated carrier.
inline FoulisMS build_lin_tables(const OmlRef& X, std::vector<LinMap> maps, unsigned jobs = 1) {
    if (maps.size() > kMaxTableCarrier)
        throw Error(ErrorKind::SizeCap, "Lin(" + X->name() + ") has " + std::to_string(maps.size()) +
                                            " maps; tables are limited to " + std::to_string(kMaxTableCarrier));
    FoulisMS S;
    S.k = maps.size();
    const auto k = static_cast<idx_t>(S.k);
    std::map<Table, idx_t> index;
    for (idx_t i = 0; i < k; ++i) index.emplace(maps[i].table(), i);
    auto lookup = [&](const Table& t) {
        auto it = index.find(t);
        if (it == index.end()) throw Error(ErrorKind::AxiomFailure, "Lin(" + X->name() + ") is not closed: " + render_table(*X, t));
        return it->second;
    };

    S.join_table.assign(S.k * S.k, 0);
    S.mult_table.assign(S.k * S.k, 0);
    parallel_for(k, jobs, [&](std::size_t a) {
        for (idx_t b = 0; b < k; ++b) {
            S.join_table[a * k + b] = lookup(join_maps(maps[a], maps[b]).table());
            S.mult_table[a * k + b] = lookup(compose(maps[a], maps[b]).table());
        }
    });
    S.star_table.resize(k);
    S.sai_table.resize(k);
    for (idx_t s = 0; s < k; ++s) {
        S.star_table[s] = lookup(maps[s].adjoint_table());
        const elem_t focus = X->perp(maps[s].adjoint(X->top()));
        S.sai_table[s] = lookup(sasaki_projection(*X, focus));
    }
    S.unit = lookup(identity_map(X).table());
    S.zero = lookup(Table(X->size(), X->bottom()));
    S.provenance = std::move(maps);
    return S;
}

inline FoulisMS build_lin_tables(const OmlRef& X, unsigned jobs = 1) { return build_lin_tables(X, enumerate_lin(X, jobs), jobs); }

/// build_lin_tables followed by validate_foulis; AxiomFailure on any FAIL.
inline FoulisMS build_lin_foulis(const OmlRef& X, unsigned jobs = 1) {
    FoulisMS S = build_lin_tables(X, jobs);
    const Report check = validate_foulis(S, jobs);
    for (const auto& c : check.checks())
        if (!c.pass) throw Error(ErrorKind::AxiomFailure, c.suite + "/" + c.name + " fails: " + c.witness);
    return S;
}

/// The two-element chain as a Foulis m-semilattice: multiplication is meet,
/// the involution is the identity and [s] is the Boolean complement.
inline FoulisMS two_ms() {
    FoulisMS S;
    S.k = 2;
    S.join_table = {0, 1, 1, 1};
    S.mult_table = {0, 0, 0, 1};
    S.unit = 1;
    S.zero = 0;
    S.star_table = {0, 1};
    S.sai_table = {1, 0};
    return S;
}

/// [S] with the structure read off from S: order k₁ ≤ k₂ iff k₁ = k₂·k₁ and
/// orthocomplement k ↦ [k].
struct SasakiSet {
    std::vector<idx_t> members;   // ascending carrier indices
    std::vector<int> position;    // carrier index -> position in members, -1 outside [S]
    OmlRef lattice;               // element i is members[i]

    bool contains(idx_t s) const { return position[s] >= 0; }
    elem_t at(idx_t s) const { return static_cast<elem_t>(position.at(s)); }
};

namespace detail {

/// Builds the SasakiSet; returns the build error text instead of throwing.
inline std::optional<std::string> try_sasaki_set(const FoulisMS& S, SasakiSet& out) {
    out.position.assign(S.k, -1);
    std::vector<bool> hit(S.k, false);
    for (idx_t t = 0; t < S.k; ++t) hit[S.sai(t)] = true;
    for (idx_t s = 0; s < S.k; ++s)
        if (hit[s]) {
            out.position[s] = static_cast<int>(out.members.size());
            out.members.push_back(s);
        }
    const std::size_t m = out.members.size();
    if (m > kMaxElements) return "[S] has " + std::to_string(m) + " elements, over the 64-element cap";

    std::vector<std::string> labels;
    std::vector<Bits> down(m, 0);
    Table perp(m);
    for (std::size_t i = 0; i < m; ++i) {
        const idx_t k2 = out.members[i];
        labels.push_back(S.name(k2));
        for (std::size_t j = 0; j < m; ++j)
            if (S.leq(out.members[j], k2)) down[i] |= bit(j);
        const idx_t pk = S.sai(k2);
        if (!out.contains(pk)) return "[k] outside [S] for " + S.render(k2);
        perp[i] = out.at(pk);
    }
    try {
        out.lattice = to_oml(make_ortholattice("[S]", std::move(labels), std::move(down), std::move(perp)));
    } catch (const Error& e) {
        std::string w;
        for (std::size_t i : e.witness()) w += " " + S.render(out.members.at(i));
        return std::string(e.what()) + w;
    }
    return std::nullopt;
}

}  // namespace detail

/// Checks the structure theorem on S: [S] is an orthomodular lattice under the
/// induced order, its top is [0] = e, and the closed-form meet
/// (k₁·[[k₂]·k₁])⊥⊥ and join [[⊔X]] agree with the order-theoretic ones for
/// all subsets of size at most 3.
inline Report verify_sasaki_structure(const FoulisMS& S, const SasakiSet& set) {
    using detail::tokens;
    const std::string suite = "structure";
    Report r;
    const Oml& L = *set.lattice;
    const auto m = static_cast<elem_t>(L.size());

    r.add(suite, "top-is-sai-zero", set.contains(S.sai(S.zero)) && set.at(S.sai(S.zero)) == L.top(),
          tokens(S, {S.sai(S.zero)}));
    r.add(suite, "top-is-unit", set.contains(S.unit) && set.at(S.unit) == L.top(), tokens(S, {S.unit}));
    r.add(suite, "orthocomplement-is-sai", [&]() -> std::optional<std::string> {
        for (elem_t i = 0; i < m; ++i)
            if (set.members[L.perp(i)] != S.sai(set.members[i])) return tokens(S, {set.members[i]});
        return std::nullopt;
    }());

    auto formula_meet = [&](idx_t k1, idx_t k2) { return S.perp2(S.mult(k1, S.sai(S.mult(S.sai(k2), k1)))); };
    auto formula_join = [&](std::initializer_list<idx_t> xs) {
        idx_t acc = S.zero;
        for (idx_t x : xs) acc = S.join(acc, x);
        return S.sai(S.sai(acc));
    };
    auto check = [&](idx_t formula, elem_t order) { return set.contains(formula) && set.at(formula) == order; };

    std::optional<std::string> meet_fail, join_fail;
    if (!check(formula_join({}), L.bottom())) join_fail = "empty";
    for (elem_t a = 0; a < m; ++a) {
        const idx_t ka = set.members[a];
        if (!join_fail && !check(formula_join({ka}), a)) join_fail = tokens(S, {ka});
        for (elem_t b = a; b < m; ++b) {
            const idx_t kb = set.members[b];
            if (!meet_fail && !check(formula_meet(ka, kb), L.meet(a, b))) meet_fail = tokens(S, {ka, kb});
            if (!meet_fail && !check(formula_meet(kb, ka), L.meet(a, b))) meet_fail = tokens(S, {kb, ka});
            if (!join_fail && !check(formula_join({ka, kb}), L.join(a, b))) join_fail = tokens(S, {ka, kb});
            for (elem_t c = b; c < m; ++c) {
                const idx_t kc = set.members[c];
                const elem_t order_meet = L.meet(L.meet(a, b), c);
                const idx_t fm = formula_meet(formula_meet(ka, kb), kc);
                if (!meet_fail && !check(fm, order_meet)) meet_fail = tokens(S, {ka, kb, kc});
                if (!join_fail && !check(formula_join({ka, kb, kc}), L.join(L.join(a, b), c)))
                    join_fail = tokens(S, {ka, kb, kc});
            }
        }
    }
    r.add(suite, "meet-formula", meet_fail);
    r.add(suite, "join-formula", join_fail);
    return r;
}

/// Builds [S] as an Oml and cross-checks the closed-form operations; throws
/// StructureFailure with a witness if anything disagrees.
inline SasakiSet sasaki_set(const FoulisMS& S) {
    SasakiSet set;
    if (auto err = detail::try_sasaki_set(S, set)) throw Error(ErrorKind::StructureFailure, *err);
    const Report r = verify_sasaki_structure(S, set);
    for (const auto& c : r.checks())
        if (!c.pass) throw Error(ErrorKind::StructureFailure, c.suite + "/" + c.name + " fails: " + c.witness);
    return set;
}

/// The displayed chains relating ⊥, ≤ and the Foulis operation, plus the
/// consequences r ≤ r⊥⊥, 0⊥ = e and r = 0 iff r⊥⊥ = 0.
inline Report verify_star_laws(const FoulisMS& S, unsigned jobs = 1) {
    using detail::tokens;
    using W = std::optional<std::string>;
    const std::string suite = "star-laws";
    Report r;
    const auto k = static_cast<idx_t>(S.k);

    r.add(suite, "ortho-chain", first_failure(k, jobs, [&](std::size_t ri) -> W {
        const auto rr = static_cast<idx_t>(ri);
        const idx_t rs = S.star(rr);
        for (idx_t t = 0; t < k; ++t) {
            const bool orthogonal = S.mult(rs, t) == S.zero;
            const bool absorbed = t == S.mult(S.sai(rs), t);
            const bool below = S.leq(t, S.perp(rr));
            const bool via_perp = t == S.mult(S.perp(rr), t);
            if (orthogonal != absorbed || absorbed != below || below != via_perp || S.ortho(rr, t) != orthogonal)
                return tokens(S, {rr, t});
        }
        return std::nullopt;
    }));
    r.add(suite, "leq-reverses-perp", first_failure(k, jobs, [&](std::size_t ri) -> W {
        const auto rr = static_cast<idx_t>(ri);
        for (idx_t t = 0; t < k; ++t) {
            if (S.leq(t, rr) != (t == S.mult(rr, t))) return tokens(S, {t, rr});
            if (!S.leq(t, rr)) continue;
            const bool absorbed = S.perp(rr) == S.mult(S.perp(t), S.perp(rr));
            if (!absorbed || !S.leq(S.perp(rr), S.perp(t))) return tokens(S, {t, rr});
        }
        return std::nullopt;
    }));
    r.add(suite, "double-perp-on-sai", [&]() -> W {
        for (idx_t t = 0; t < k; ++t) {
            const idx_t kk = S.sai(t);
            if (S.perp2(kk) != kk) return tokens(S, {kk});
        }
        return std::nullopt;
    }());
    r.add(suite, "perp-galois", first_failure(k, jobs, [&](std::size_t ti) -> W {
        const auto t = static_cast<idx_t>(ti);
        for (idx_t rr = 0; rr < k; ++rr)
            if (S.leq(t, S.perp(rr)) != S.leq(rr, S.perp(t))) return tokens(S, {t, rr});
        return std::nullopt;
    }));
    r.add(suite, "below-double-perp", [&]() -> W {
        for (idx_t t = 0; t < k; ++t)
            if (!S.leq(t, S.perp2(t))) return tokens(S, {t});
        return std::nullopt;
    }());
    r.add(suite, "zero-perp-is-unit", S.perp(S.zero) == S.unit, tokens(S, {S.perp(S.zero)}));
    r.add(suite, "zero-iff-double-perp-zero", [&]() -> W {
        for (idx_t t = 0; t < k; ++t)
            if ((t == S.zero) != (S.perp2(t) == S.zero)) return tokens(S, {t});
        return std::nullopt;
    }());
    return r;
}

}  // namespace omlkit
