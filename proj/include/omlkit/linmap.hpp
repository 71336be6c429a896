#pragma once

// Maps between orthomodular lattices and the linear ones among them: maps f
// with an adjoint f* such that f(x) ⊥ y iff x ⊥ f*(y).

#include <algorithm>
#include <cstdint>
#include <atomic>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "omlkit/error.hpp"
#include "omlkit/oml.hpp"
#include "omlkit/report.hpp"

namespace omlkit {

/// Renders a table as `[v0,v1,...]` using codomain labels.
inline std::string render_table(const Ortholattice& cod, const Table& t) {
    std::string out = "[";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) out += ',';
        out += cod.label(t[i]);
    }
    return out + "]";
}

/// A total function between the carriers of two lattices.
class LatMap {
public:
    LatMap(OmlRef dom, OmlRef cod, Table table) : dom_(std::move(dom)), cod_(std::move(cod)), table_(std::move(table)) {
        if (table_.size() != dom_->size()) throw Error(ErrorKind::BadInput, "map table size differs from domain size");
        for (elem_t v : table_)
            if (v >= cod_->size()) throw Error(ErrorKind::BadInput, "map value out of codomain range");
    }

    const OmlRef& dom() const noexcept { return dom_; }
    const OmlRef& cod() const noexcept { return cod_; }
    const Table& table() const noexcept { return table_; }
    elem_t operator()(elem_t x) const { return table_[x]; }

    friend bool operator==(const LatMap& a, const LatMap& b) {
        return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.table_ == b.table_;
    }

private:
    OmlRef dom_;
    OmlRef cod_;
    Table table_;
};

/// A linear map together with its (unique) adjoint.
class LinMap {
public:
    /// Pairs a map with an adjoint table that the caller guarantees correct.
    /// Only the constructions in this header use it; anything else goes
    /// through try_adjoint.
    static LinMap trusted(OmlRef dom, OmlRef cod, Table forward, Table adjoint) {
        LinMap m(LatMap(dom, cod, std::move(forward)));
        if (adjoint.size() != cod->size()) throw Error(ErrorKind::BadInput, "adjoint table size differs from codomain size");
        m.adjoint_ = std::move(adjoint);
        return m;
    }

    const LatMap& map() const noexcept { return map_; }
    const OmlRef& dom() const noexcept { return map_.dom(); }
    const OmlRef& cod() const noexcept { return map_.cod(); }
    const Table& table() const noexcept { return map_.table(); }
    const Table& adjoint_table() const noexcept { return adjoint_; }

    elem_t operator()(elem_t x) const { return map_(x); }
    elem_t adjoint(elem_t y) const { return adjoint_[y]; }

    std::string render() const { return render_table(*cod(), table()); }

    friend bool operator==(const LinMap& a, const LinMap& b) { return a.map_ == b.map_ && a.adjoint_ == b.adjoint_; }

private:
    explicit LinMap(LatMap m) : map_(std::move(m)) {}

    LatMap map_;
    Table adjoint_;
};

/// Why a map has no adjoint, with the pair of elements that shows it.
struct NoAdjoint {
    std::string reason;
    elem_t x = 0;
    elem_t y = 0;
};

class AdjointResult {
public:
    AdjointResult(LinMap m) : value_(std::move(m)) {}
    AdjointResult(NoAdjoint e) : value_(std::move(e)) {}

    bool has_value() const noexcept { return std::holds_alternative<LinMap>(value_); }
    explicit operator bool() const noexcept { return has_value(); }
    const LinMap& value() const {
        if (!has_value()) throw Error(ErrorKind::BadInput, "map has no adjoint: " + error().reason);
        return std::get<LinMap>(value_);
    }
    const NoAdjoint& error() const { return std::get<NoAdjoint>(value_); }

private:
    std::variant<LinMap, NoAdjoint> value_;
};

/// First pair (x, y) violating f(x) ⊥ y iff x ⊥ h(y), if any.
inline std::optional<std::pair<elem_t, elem_t>> orthogonality_violation(const Ortholattice& dom, const Ortholattice& cod,
                                                                       const Table& f, const Table& h) {
    for (std::size_t x = 0; x < dom.size(); ++x)
        for (std::size_t y = 0; y < cod.size(); ++y)
            if (cod.ortho(f[x], static_cast<elem_t>(y)) != dom.ortho(static_cast<elem_t>(x), h[y]))
                return std::pair{static_cast<elem_t>(x), static_cast<elem_t>(y)};
    return std::nullopt;
}

/// Decides linearity. The candidate adjoint is built from the order
/// right-adjoint r(y) = ⋁{x : f(x) ≤ y} as h(y) = r(y⊥)⊥; order adjoints are
/// unique, so a failed check means no adjoint exists at all.
inline AdjointResult try_adjoint(const LatMap& f) {
    const Oml& X = *f.dom();
    const Oml& Y = *f.cod();
    const std::size_t n = X.size(), m = Y.size();

    if (f(X.bottom()) != Y.bottom()) return NoAdjoint{"f(0) is not 0", X.bottom(), f(X.bottom())};
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            const auto x = static_cast<elem_t>(a), y = static_cast<elem_t>(b);
            if (f(X.join(x, y)) != Y.join(f(x), f(y))) return NoAdjoint{"join not preserved", x, y};
        }

    Table right(m);
    for (std::size_t yi = 0; yi < m; ++yi) {
        const auto y = static_cast<elem_t>(yi);
        Bits below = 0;
        for (std::size_t x = 0; x < n; ++x)
            if (Y.leq(f(static_cast<elem_t>(x)), y)) below |= bit(x);
        right[yi] = X.join_of(below);
        for (std::size_t xi = 0; xi < n; ++xi) {
            const auto x = static_cast<elem_t>(xi);
            if (Y.leq(f(x), y) != X.leq(x, right[yi])) return NoAdjoint{"no order right-adjoint", x, y};
        }
    }

    Table h(m);
    for (std::size_t y = 0; y < m; ++y) h[y] = X.perp(right[Y.perp(static_cast<elem_t>(y))]);
    if (auto bad = orthogonality_violation(X, Y, f.table(), h)) return NoAdjoint{"orthogonality law fails", bad->first, bad->second};
    return LinMap::trusted(f.dom(), f.cod(), f.table(), std::move(h));
}

/// Full invariant check of a LinMap: f(0) = 0, binary joins preserved, and
/// the orthogonality law against the stored adjoint.
inline std::optional<std::string> linmap_violation(const LinMap& f) {
    const Oml& X = *f.dom();
    const Oml& Y = *f.cod();
    if (f(X.bottom()) != Y.bottom()) return "f(0)!=0";
    for (std::size_t a = 0; a < X.size(); ++a)
        for (std::size_t b = 0; b < X.size(); ++b) {
            const auto x = static_cast<elem_t>(a), y = static_cast<elem_t>(b);
            if (f(X.join(x, y)) != Y.join(f(x), f(y))) return "join " + X.label(x) + " " + X.label(y);
        }
    if (auto bad = orthogonality_violation(X, Y, f.table(), f.adjoint_table()))
        return "ortho " + X.label(bad->first) + " " + Y.label(bad->second);
    return std::nullopt;
}

inline LinMap identity_map(const OmlRef& X) {
    Table t(X->size());
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = static_cast<elem_t>(i);
    return LinMap::trusted(X, X, t, t);
}

inline LinMap zero_map(const OmlRef& X, const OmlRef& Y) {
    return LinMap::trusted(X, Y, Table(X->size(), Y->bottom()), Table(Y->size(), X->bottom()));
}

/// π_a as a (self-adjoint) linear endomap.
inline LinMap sasaki_map(const OmlRef& X, elem_t a) {
    Table t = sasaki_projection(*X, a);
    return LinMap::trusted(X, X, t, t);
}

/// g ∘ f, with adjoint f* ∘ g*.
inline LinMap compose(const LinMap& g, const LinMap& f) {
    if (f.cod() != g.dom()) throw Error(ErrorKind::DomainMismatch, "cannot compose: codomain of f is not the domain of g");
    Table fwd(f.dom()->size()), adj(g.cod()->size());
    for (std::size_t x = 0; x < fwd.size(); ++x) fwd[x] = g(f(static_cast<elem_t>(x)));
    for (std::size_t z = 0; z < adj.size(); ++z) adj[z] = f.adjoint(g.adjoint(static_cast<elem_t>(z)));
    return LinMap::trusted(f.dom(), g.cod(), std::move(fwd), std::move(adj));
}

inline LinMap dagger(const LinMap& f) { return LinMap::trusted(f.cod(), f.dom(), f.adjoint_table(), f.table()); }

/// Pointwise join; (f ∨ g)* = f* ∨ g*.
inline LinMap join_maps(const LinMap& f, const LinMap& g) {
    if (f.dom() != g.dom() || f.cod() != g.cod()) throw Error(ErrorKind::DomainMismatch, "cannot join maps with different domain or codomain");
    const Oml& X = *f.dom();
    const Oml& Y = *f.cod();
    Table fwd(X.size()), adj(Y.size());
    for (std::size_t x = 0; x < fwd.size(); ++x) fwd[x] = Y.join(f(static_cast<elem_t>(x)), g(static_cast<elem_t>(x)));
    for (std::size_t y = 0; y < adj.size(); ++y)
        adj[y] = X.join(f.adjoint(static_cast<elem_t>(y)), g.adjoint(static_cast<elem_t>(y)));
    return LinMap::trusted(f.dom(), f.cod(), std::move(fwd), std::move(adj));
}

struct Kernel {
    elem_t generator = 0;  // f*(1)⊥
    Bits zero_set = 0;     // {x : f(x) = 0}
};

inline Kernel kernel(const LinMap& f) {
    const Oml& X = *f.dom();
    Kernel k;
    k.generator = X.perp(f.adjoint(f.cod()->top()));
    for (std::size_t x = 0; x < X.size(); ++x)
        if (f(static_cast<elem_t>(x)) == f.cod()->bottom()) k.zero_set |= bit(x);
    return k;
}

inline Bits image(const LinMap& f) {
    Bits out = 0;
    for (elem_t v : f.table()) out |= bit(v);
    return out;
}

/// The inclusion ↓a ↣ X, whose adjoint is π_a corestricted to ↓a.
inline LinMap downset_embedding(const OmlRef& X, elem_t a) {
    const OmlRef sub = downset_oml(*X, a);
    const Table members = downset_members(*X, a);
    std::vector<elem_t> local(X->size(), 0);
    for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<elem_t>(i);
    const Table pi = sasaki_projection(*X, a);
    Table adj(X->size());
    for (std::size_t x = 0; x < adj.size(); ++x) adj[x] = local[pi[x]];
    return LinMap::trusted(sub, X, members, std::move(adj));
}

inline bool is_self_adjoint(const LinMap& f) {
    if (f.dom() != f.cod()) throw Error(ErrorKind::DomainMismatch, "self-adjointness needs an endomap");
    return f.table() == f.adjoint_table();
}

/// Upper bound on |Lin(X)| produced by enumerate_lin.
inline constexpr std::size_t kMaxLinMaps = std::size_t{1} << 20;

/// Every endomap of X admitting an adjoint, sorted lexicographically by table.
///
/// Join-preserving maps on a finite (hence atomistic) OML are fixed by the
/// images of the atoms. Atoms are assigned depth-first; once every atom below
/// x ∨ y has an image, the pair (x, y) is checked for join preservation, which
/// prunes most of the n^atoms space. Survivors are certified by try_adjoint.
/// The outer level (image of the first atom) is split across `jobs` workers.
inline std::vector<LinMap> enumerate_lin(const OmlRef& Xref, unsigned jobs = 1) {
    const Oml& X = *Xref;
    const std::size_t n = X.size();
    const std::vector<elem_t> atoms = X.atoms();
    const std::size_t r = atoms.size();

    if (r == 0) return {identity_map(Xref)};

    // level[x]: position of the last atom below x (-1 for bottom).
    std::vector<int> level(n, -1);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t i = 0; i < r; ++i)
            if (X.leq(atoms[i], static_cast<elem_t>(x))) level[x] = static_cast<int>(i);

    std::vector<std::vector<elem_t>> settled(r);  // elements whose value is fixed at depth i
    for (std::size_t x = 0; x < n; ++x)
        if (level[x] >= 0) settled[level[x]].push_back(static_cast<elem_t>(x));

    std::vector<std::vector<std::pair<elem_t, elem_t>>> pairs(r);  // incomparable pairs checkable at depth i
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            const auto x = static_cast<elem_t>(a), y = static_cast<elem_t>(b);
            if (X.leq(x, y) || X.leq(y, x)) continue;
            pairs[level[X.join(x, y)]].emplace_back(x, y);
        }

    std::vector<std::vector<LinMap>> buckets(n);
    std::atomic<std::size_t> produced{0};
    std::atomic<bool> overflow{false};

    auto run_branch = [&](std::size_t first_image) {
        Table f(n, X.bottom());
        std::vector<elem_t> image(r, 0);
        auto settle = [&](std::size_t depth) {
            for (elem_t x : settled[depth]) {
                elem_t acc = X.bottom();
                for (std::size_t i = 0; i <= depth; ++i)
                    if (X.leq(atoms[i], x)) acc = X.join(acc, image[i]);
                f[x] = acc;
            }
            for (auto [x, y] : pairs[depth])
                if (f[X.join(x, y)] != X.join(f[x], f[y])) return false;
            return true;
        };
        auto dfs = [&](auto&& self, std::size_t depth) -> void {
            if (overflow.load(std::memory_order_relaxed)) return;
            if (depth == r) {
                auto res = try_adjoint(LatMap(Xref, Xref, f));
                if (res) {
                    if (produced.fetch_add(1) >= kMaxLinMaps) {
                        overflow = true;
                        return;
                    }
                    buckets[first_image].push_back(res.value());
                }
                return;
            }
            for (std::size_t v = 0; v < n; ++v) {
                image[depth] = static_cast<elem_t>(v);
                if (settle(depth)) self(self, depth + 1);
            }
        };
        image[0] = static_cast<elem_t>(first_image);
        if (settle(0)) dfs(dfs, 1);
    };

    parallel_for(n, jobs, run_branch);
    if (overflow) throw Error(ErrorKind::SizeCap, "Lin(" + X.name() + ") exceeds " + std::to_string(kMaxLinMaps) + " maps");

    std::vector<LinMap> out;
    for (auto& b : buckets)
        for (auto& m : b) out.push_back(std::move(m));
    std::sort(out.begin(), out.end(), [](const LinMap& a, const LinMap& b) { return a.table() < b.table(); });
    return out;
}

/// Brute-force reference: runs try_adjoint on all n^n endofunctions.
/// Restricted to n <= 6.
inline std::vector<LinMap> enumerate_lin_exhaustive(const OmlRef& Xref) {
    const std::size_t n = Xref->size();
    if (n > 6) throw Error(ErrorKind::SizeCap, "exhaustive enumeration is limited to 6 elements");
    std::vector<LinMap> out;
    Table f(n, 0);
    while (true) {
        if (auto res = try_adjoint(LatMap(Xref, Xref, f))) out.push_back(res.value());
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (++f[i] < n) break;
            f[i] = 0;
            if (i == 0) return out;
        }
        if (n == 0) return out;
    }
}

}  // namespace omlkit
