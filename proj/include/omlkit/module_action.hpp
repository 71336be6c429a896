#pragma once

// Left modules over unital m-semilattices: X as a Lin(X)-module, [S] as an
// S-module under u • k = (u·k)⊥⊥, and the Sasaki action σ_u.

#include <optional>
#include <string>
#include <vector>

#include "omlkit/error.hpp"
#include "omlkit/foulis.hpp"
#include "omlkit/linmap.hpp"
#include "omlkit/oml.hpp"
#include "omlkit/report.hpp"

namespace omlkit {

/// A finite join-semilattice with least element.
struct JoinSemilattice {
    std::size_t n = 0;
    std::vector<idx_t> join_table;  // n*n
    idx_t bottom = 0;
    std::vector<std::string> labels;

    idx_t join(idx_t a, idx_t b) const { return join_table[a * n + b]; }
};

inline JoinSemilattice join_semilattice_of(const Ortholattice& L) {
    JoinSemilattice A;
    A.n = L.size();
    A.bottom = L.bottom();
    A.labels = L.labels();
    A.join_table.assign(L.join_table().begin(), L.join_table().end());
    return A;
}

/// Action table and the verdicts of A1-A4.
///
/// A1/A2 quantify over finite subsets. Subsets of size 1..3 are reported as
/// `A1`/`A2`; the empty subset (s • 0 = 0 and 0_S • a = 0) is reported
/// separately as `A1-empty`/`A2-empty`.
struct LeftModuleWitness {
    std::vector<idx_t> action;  // |S| * |A|, entry s * |A| + a
    std::size_t actor_count = 0;
    std::size_t module_size = 0;
    Report verdicts;

    idx_t act(idx_t s, idx_t a) const { return action[s * module_size + a]; }
};

/// Exhaustive check of A1-A4. `S` is only used as a unital m-semilattice.
inline LeftModuleWitness validate_left_module(const UnitalMS& S, const JoinSemilattice& A, std::vector<idx_t> action,
                                              const std::string& suite = "module", unsigned jobs = 1) {
    using W = std::optional<std::string>;
    LeftModuleWitness w;
    w.actor_count = S.k;
    w.module_size = A.n;
    w.action = std::move(action);
    if (w.action.size() != S.k * A.n) throw Error(ErrorKind::BadInput, "action table has the wrong size");
    for (idx_t v : w.action)
        if (v >= A.n) throw Error(ErrorKind::BadInput, "action value outside the module");

    const auto k = static_cast<idx_t>(S.k);
    const auto n = static_cast<idx_t>(A.n);
    auto s_name = [](idx_t s) { return "s" + std::to_string(s); };
    auto a_name = [&](idx_t a) { return a < A.labels.size() ? A.labels[a] : "a" + std::to_string(a); };

    // A1 over B = {b1 < b2 (< b3)}.
    w.verdicts.add(suite, "A1", first_failure(k, jobs, [&](std::size_t si) -> W {
        const auto s = static_cast<idx_t>(si);
        for (idx_t b1 = 0; b1 < n; ++b1)
            for (idx_t b2 = b1 + 1; b2 < n; ++b2) {
                const idx_t j2 = A.join(b1, b2);
                if (w.act(s, j2) != A.join(w.act(s, b1), w.act(s, b2)))
                    return s_name(s) + " " + a_name(b1) + " " + a_name(b2);
                for (idx_t b3 = b2 + 1; b3 < n; ++b3)
                    if (w.act(s, A.join(j2, b3)) != A.join(A.join(w.act(s, b1), w.act(s, b2)), w.act(s, b3)))
                        return s_name(s) + " " + a_name(b1) + " " + a_name(b2) + " " + a_name(b3);
            }
        return std::nullopt;
    }));
    w.verdicts.add(suite, "A1-empty", [&]() -> W {
        for (idx_t s = 0; s < k; ++s)
            if (w.act(s, A.bottom) != A.bottom) return s_name(s);
        return std::nullopt;
    }());

    // A2 over T = {t1 < t2 (< t3)}.
    w.verdicts.add(suite, "A2", first_failure(k, jobs, [&](std::size_t ti) -> W {
        const auto t1 = static_cast<idx_t>(ti);
        for (idx_t t2 = t1 + 1; t2 < k; ++t2) {
            const idx_t j2 = S.join(t1, t2);
            for (idx_t a = 0; a < n; ++a)
                if (w.act(j2, a) != A.join(w.act(t1, a), w.act(t2, a)))
                    return s_name(t1) + " " + s_name(t2) + " " + a_name(a);
            for (idx_t t3 = t2 + 1; t3 < k; ++t3) {
                const idx_t j3 = S.join(j2, t3);
                for (idx_t a = 0; a < n; ++a)
                    if (w.act(j3, a) != A.join(A.join(w.act(t1, a), w.act(t2, a)), w.act(t3, a)))
                        return s_name(t1) + " " + s_name(t2) + " " + s_name(t3) + " " + a_name(a);
            }
        }
        return std::nullopt;
    }));
    w.verdicts.add(suite, "A2-empty", [&]() -> W {
        for (idx_t a = 0; a < n; ++a)
            if (w.act(S.zero, a) != A.bottom) return a_name(a);
        return std::nullopt;
    }());

    w.verdicts.add(suite, "A3", first_failure(k, jobs, [&](std::size_t ui) -> W {
        const auto u = static_cast<idx_t>(ui);
        for (idx_t v = 0; v < k; ++v)
            for (idx_t a = 0; a < n; ++a)
                if (w.act(u, w.act(v, a)) != w.act(S.mult(u, v), a))
                    return s_name(u) + " " + s_name(v) + " " + a_name(a);
        return std::nullopt;
    }));
    w.verdicts.add(suite, "A4", [&]() -> W {
        for (idx_t a = 0; a < n; ++a)
            if (w.act(S.unit, a) != a) return a_name(a);
        return std::nullopt;
    }());
    return w;
}

/// The trivial action of the two-element chain: 1 • a = a, 0 • a = 0.
inline std::vector<idx_t> two_action(const JoinSemilattice& A) {
    std::vector<idx_t> act(2 * A.n);
    for (idx_t a = 0; a < A.n; ++a) {
        act[a] = A.bottom;
        act[A.n + a] = a;
    }
    return act;
}

/// X as a left Lin(X)-module, f • x = f(x). `S` must carry provenance.
inline LeftModuleWitness lin_action(const FoulisMS& S, unsigned jobs = 1) {
    if (S.provenance.size() != S.k) throw Error(ErrorKind::BadInput, "lin_action needs an m-semilattice built from Lin(X)");
    if (S.k == 0) throw Error(ErrorKind::BadInput, "empty carrier");
    const Oml& X = *S.provenance.front().dom();
    const JoinSemilattice A = join_semilattice_of(X);
    std::vector<idx_t> act(S.k * A.n);
    for (std::size_t s = 0; s < S.k; ++s)
        for (std::size_t x = 0; x < A.n; ++x) act[s * A.n + x] = S.provenance[s](static_cast<elem_t>(x));
    return validate_left_module(S, A, std::move(act), "lin-action", jobs);
}

inline LeftModuleWitness lin_action(const OmlRef& X, unsigned jobs = 1) { return lin_action(build_lin_foulis(X, jobs), jobs); }

/// u • k = (u·k)⊥⊥ as a table over member positions of [S].
inline std::vector<idx_t> foulis_action_table(const FoulisMS& S, const SasakiSet& set) {
    const std::size_t m = set.members.size();
    std::vector<idx_t> act(S.k * m);
    for (idx_t u = 0; u < S.k; ++u)
        for (std::size_t i = 0; i < m; ++i) act[u * m + i] = set.at(S.perp2(S.mult(u, set.members[i])));
    return act;
}

inline LeftModuleWitness foulis_action(const FoulisMS& S, const SasakiSet& set, unsigned jobs = 1) {
    return validate_left_module(S, join_semilattice_of(*set.lattice), foulis_action_table(S, set), "foulis-action", jobs);
}

inline LeftModuleWitness foulis_action(const FoulisMS& S, unsigned jobs = 1) { return foulis_action(S, sasaki_set(S), jobs); }

/// (M1) s ≤ t ⇒ r·s ≤ (r·s)⊥⊥ ≤ (r·t)⊥⊥; (M2) (s·t)⊥⊥ = (s·t⊥⊥)⊥⊥;
/// (M3) (⊔T)⊥ = ⋀ s⊥ and (⊔T)⊥⊥ = ⋁ s⊥⊥ in [S], |T| ≤ 3 (empty T included).
inline Report verify_m_claims(const FoulisMS& S, const SasakiSet& set, unsigned jobs = 1) {
    using detail::tokens;
    using W = std::optional<std::string>;
    const std::string suite = "m-claims";
    Report r;
    const auto k = static_cast<idx_t>(S.k);
    const Oml& L = *set.lattice;

    r.add(suite, "M1", first_failure(k, jobs, [&](std::size_t si) -> W {
        const auto s = static_cast<idx_t>(si);
        for (idx_t t = 0; t < k; ++t) {
            if (!S.leq(s, t)) continue;
            for (idx_t q = 0; q < k; ++q) {
                const idx_t qs = S.mult(q, s);
                if (!S.leq(qs, S.perp2(qs)) || !S.leq(S.perp2(qs), S.perp2(S.mult(q, t)))) return tokens(S, {q, s, t});
            }
        }
        return std::nullopt;
    }));
    r.add(suite, "M2", first_failure(k, jobs, [&](std::size_t si) -> W {
        const auto s = static_cast<idx_t>(si);
        for (idx_t t = 0; t < k; ++t)
            if (S.perp2(S.mult(s, t)) != S.perp2(S.mult(s, S.perp2(t)))) return tokens(S, {s, t});
        return std::nullopt;
    }));

    // Checks one subset T given its join and the [S]-meet/join of the images.
    auto m3_holds = [&](idx_t joined, elem_t meet_perp, elem_t join_perp2) {
        const idx_t p = S.perp(joined), pp = S.perp2(joined);
        return set.contains(p) && set.at(p) == meet_perp && set.contains(pp) && set.at(pp) == join_perp2;
    };
    auto perp_at = [&](idx_t s) { return set.at(S.perp(s)); };
    auto perp2_at = [&](idx_t s) { return set.at(S.perp2(s)); };
    r.add(suite, "M3", [&]() -> W {
        if (!m3_holds(S.zero, L.top(), L.bottom())) return std::string("empty");
        return first_failure(k, jobs, [&](std::size_t ai) -> W {
            const auto a = static_cast<idx_t>(ai);
            if (!m3_holds(a, perp_at(a), perp2_at(a))) return tokens(S, {a});
            for (idx_t b = a + 1; b < k; ++b) {
                const idx_t ab = S.join(a, b);
                const elem_t mab = L.meet(perp_at(a), perp_at(b));
                const elem_t jab = L.join(perp2_at(a), perp2_at(b));
                if (!m3_holds(ab, mab, jab)) return tokens(S, {a, b});
                for (idx_t c = b + 1; c < k; ++c)
                    if (!m3_holds(S.join(ab, c), L.meet(mab, perp_at(c)), L.join(jab, perp2_at(c))))
                        return tokens(S, {a, b, c});
            }
            return std::nullopt;
        });
    }());
    return r;
}

/// σ_u : k ↦ (u·k)⊥⊥ over member positions of [S].
inline Table sasaki_action(const FoulisMS& S, const SasakiSet& set, idx_t u) {
    Table t(set.members.size());
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = set.at(S.perp2(S.mult(u, set.members[i])));
    return t;
}

/// For u ∈ [S]: σ_u equals its own adjoint (computed by try_adjoint on the
/// [S] lattice), is idempotent, and has image ↓u.
inline Report verify_sasaki_action(const FoulisMS& S, const SasakiSet& set, idx_t u) {
    if (u >= S.k || !set.contains(u)) throw Error(ErrorKind::BadInput, S.name(u) + " is not a Sasaki projection");
    const std::string suite = "sasaki-action";
    const std::string who = S.render(u);
    Report r;
    const Table sigma = sasaki_action(S, set, u);
    const auto res = try_adjoint(LatMap(set.lattice, set.lattice, sigma));
    r.add(suite, "self-adjoint", res.has_value() && res.value().adjoint_table() == sigma,
          who + (res.has_value() ? "" : " " + res.error().reason));
    bool idempotent = true;
    for (elem_t v : sigma) idempotent = idempotent && sigma[v] == v;
    r.add(suite, "idempotent", idempotent, who);
    Bits img = 0;
    for (elem_t v : sigma) img |= bit(v);
    r.add(suite, "image-is-downset", img == set.lattice->down(set.at(u)), who);
    return r;
}

}  // namespace omlkit
