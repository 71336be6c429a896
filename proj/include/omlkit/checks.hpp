#pragma once

// Exhaustive check suites for the lattice- and map-level facts: Sasaki
// projections, downsets, kernels, and the dagger structure of Lin(X).

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "omlkit/linmap.hpp"
#include "omlkit/oml.hpp"
#include "omlkit/report.hpp"

namespace omlkit {

namespace detail {

inline std::string labels_of(const Ortholattice& L, std::initializer_list<elem_t> xs) {
    std::string out;
    for (elem_t x : xs) {
        if (!out.empty()) out += ' ';
        out += L.label(x);
    }
    return out;
}

}  // namespace detail

/// Sasaki projection facts for every a, y, z:
/// (a) y ≤ a iff π_a(y) = y; (b) π_a(π_a(y⊥)⊥) ≤ y; (c) π_a(y) = 0 iff y ≤ a⊥;
/// (d) π_a(y) ⊥ z iff y ⊥ π_a(z); plus idempotence and self-adjointness.
inline Report verify_sasaki_facts(const OmlRef& Xref) {
    using detail::labels_of;
    using W = std::optional<std::string>;
    const Oml& X = *Xref;
    const std::string suite = "sasaki";
    const auto n = static_cast<elem_t>(X.size());
    std::vector<Table> pi(n);
    for (elem_t a = 0; a < n; ++a) pi[a] = sasaki_projection(X, a);

    W fa, fb, fc, fd, idem, selfadj;
    for (elem_t a = 0; a < n; ++a) {
        const Table& p = pi[a];
        for (elem_t y = 0; y < n; ++y) {
            if (!fa && X.leq(y, a) != (p[y] == y)) fa = labels_of(X, {a, y});
            if (!fb && !X.leq(p[X.perp(p[X.perp(y)])], y)) fb = labels_of(X, {a, y});
            if (!fc && (p[y] == X.bottom()) != X.leq(y, X.perp(a))) fc = labels_of(X, {a, y});
            if (!idem && p[p[y]] != p[y]) idem = labels_of(X, {a, y});
            if (!fd)
                for (elem_t z = 0; z < n; ++z)
                    if (X.ortho(p[y], z) != X.ortho(y, p[z])) {
                        fd = labels_of(X, {a, y, z});
                        break;
                    }
        }
        if (!selfadj) {
            const auto res = try_adjoint(LatMap(Xref, Xref, p));
            if (!res || res.value().adjoint_table() != p) selfadj = X.label(a);
        }
    }
    Report r;
    r.add(suite, "fixes-downset", fa);
    r.add(suite, "double-perp-below", fb);
    r.add(suite, "zero-iff-orthogonal", fc);
    r.add(suite, "orthogonality-symmetric", fd);
    r.add(suite, "idempotent", idem);
    r.add(suite, "self-adjoint", selfadj);
    return r;
}

/// ⊥ between elements is symmetric and everything is orthogonal to 0.
inline Report verify_ortho_relation(const Ortholattice& X) {
    using W = std::optional<std::string>;
    const auto n = static_cast<elem_t>(X.size());
    W sym, zero;
    for (elem_t x = 0; x < n; ++x) {
        if (!zero && !X.ortho(x, X.bottom())) zero = X.label(x);
        for (elem_t y = 0; y < n; ++y)
            if (!sym && X.ortho(x, y) != X.ortho(y, x)) sym = detail::labels_of(X, {x, y});
    }
    Report r;
    r.add("oml", "ortho-symmetric", sym);
    r.add("oml", "ortho-zero", zero);
    return r;
}

/// Every principal downset with u ↦ a ∧ u⊥ is an OML, and the inclusion
/// ↓a ↣ X is a linear dagger monomorphism with adjoint π_a.
inline Report verify_downsets(const OmlRef& Xref) {
    using W = std::optional<std::string>;
    const Oml& X = *Xref;
    W valid, linear, mono;
    for (elem_t a = 0; a < X.size(); ++a) {
        try {
            const LinMap emb = downset_embedding(Xref, a);
            if (!linear)
                if (auto bad = linmap_violation(emb)) linear = X.label(a) + " " + *bad;
            if (!mono) {
                const LinMap back = compose(dagger(emb), emb);
                if (back.table() != identity_map(emb.dom()).table()) mono = X.label(a);
            }
        } catch (const Error& e) {
            if (!valid) valid = X.label(a) + " " + std::string(to_string(e.kind()));
        }
    }
    Report r;
    r.add("downset", "is-orthomodular", valid);
    r.add("downset", "embedding-linear", linear);
    r.add("downset", "dagger-mono", mono);
    return r;
}

/// ker f = ↓f*(1)⊥ for every map, the kernel downset is an OML, and the
/// self-adjoint maps satisfy f(f(y⊥)⊥) ≤ y with ker f = ↓f(1)⊥.
inline Report verify_kernels(const std::vector<LinMap>& maps) {
    using W = std::optional<std::string>;
    W equal, valid, selfadj;
    for (const LinMap& f : maps) {
        const Oml& X = *f.dom();
        const Kernel k = kernel(f);
        if (!equal && k.zero_set != X.down(k.generator)) equal = f.render();
        if (!valid) {
            try {
                (void)downset_oml(X, k.generator);
            } catch (const Error& e) {
                valid = f.render() + " " + std::string(to_string(e.kind()));
            }
        }
        if (!selfadj && f.dom() == f.cod() && is_self_adjoint(f)) {
            if (X.perp(f(X.top())) != k.generator) selfadj = f.render();
            for (elem_t y = 0; y < X.size() && !selfadj; ++y)
                if (!X.leq(f(X.perp(f(X.perp(y)))), y)) selfadj = f.render() + " " + X.label(y);
        }
    }
    Report r;
    r.add("kernel", "zero-set-is-downset", equal);
    r.add("kernel", "is-orthomodular", valid);
    r.add("kernel", "self-adjoint-corollary", selfadj);
    return r;
}

/// Dagger laws on an enumerated Lin(X): (f*)* = f, id* = id,
/// (g∘f)* = f*∘g*, the stored adjoint is the constructed one, and
/// (f ∨ g)* = f* ∨ g* with f ∨ g linear.
inline Report verify_dagger_laws(const OmlRef& Xref, const std::vector<LinMap>& maps, unsigned jobs = 1) {
    using W = std::optional<std::string>;
    Report r;
    const LinMap id = identity_map(Xref);
    r.add("dagger", "identity", dagger(id) == id, id.render());
    r.add("dagger", "involutive", [&]() -> W {
        for (const auto& f : maps)
            if (!(dagger(dagger(f)) == f)) return f.render();
        return std::nullopt;
    }());
    r.add("dagger", "adjoint-is-canonical", [&]() -> W {
        for (const auto& f : maps) {
            const auto res = try_adjoint(f.map());
            if (!res || !(res.value() == f)) return f.render();
            if (auto bad = linmap_violation(f)) return f.render() + " " + *bad;
        }
        return std::nullopt;
    }());
    r.add("dagger", "contravariant", first_failure(maps.size(), jobs, [&](std::size_t i) -> W {
        const LinMap& g = maps[i];
        for (const auto& f : maps)
            if (!(dagger(compose(g, f)) == compose(dagger(f), dagger(g)))) return g.render() + " " + f.render();
        return std::nullopt;
    }));
    r.add("lin-semilattice", "join-adjoint", first_failure(maps.size(), jobs, [&](std::size_t i) -> W {
        const LinMap& f = maps[i];
        for (const auto& g : maps) {
            const LinMap j = join_maps(f, g);
            if (j.adjoint_table() != join_maps(dagger(f), dagger(g)).table()) return f.render() + " " + g.render();
            const auto res = try_adjoint(j.map());
            if (!res || res.value().adjoint_table() != j.adjoint_table()) return f.render() + " " + g.render();
        }
        return std::nullopt;
    }));
    r.add("lin-semilattice", "zero-least", [&]() -> W {
        const LinMap z = zero_map(Xref, Xref);
        for (const auto& f : maps)
            if (!(join_maps(z, f) == f)) return f.render();
        return std::nullopt;
    }());
    return r;
}

}  // namespace omlkit
