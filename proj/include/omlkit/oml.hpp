#pragma once

// Finite ortholattices and orthomodular lattices as validated operation tables.
//
// Elements are dense indices 0..n-1 (n <= 64). The order is kept as bitset
// rows: down(x) = {u : u <= x}, up(x) = {u : x <= u}. Meets and joins are full
// n*n tables computed once at construction.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "omlkit/error.hpp"

namespace omlkit {

using elem_t = std::uint8_t;
using Table = std::vector<elem_t>;
using Bits = std::uint64_t;

inline constexpr std::size_t kMaxElements = 64;

inline constexpr Bits bit(std::size_t i) { return Bits{1} << i; }

inline constexpr Bits all_bits(std::size_t n) { return n >= 64 ? ~Bits{0} : bit(n) - 1; }

template <typename Fn>
void for_each_bit(Bits set, Fn&& fn) {
    while (set != 0) {
        fn(static_cast<elem_t>(std::countr_zero(set)));
        set &= set - 1;
    }
}

/// Raw, label-based description of a lattice (the file format's content).
struct OmlSpec {
    std::string name;
    std::vector<std::string> elements;
    std::vector<std::pair<std::string, std::string>> leq;   // generating pairs
    std::vector<std::pair<std::string, std::string>> perp;  // unordered complement pairs
    std::string bottom;
    std::string top;
};

class Oml;

/// A bounded lattice with an antitone involutive orthocomplement satisfying
/// x ∧ x⊥ = 0. Every instance has passed full validation.
class Ortholattice {
public:
    const std::string& name() const noexcept { return name_; }
    std::size_t size() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(elem_t x) const { return labels_.at(x); }

    std::optional<elem_t> index_of(const std::string& label) const {
        for (std::size_t i = 0; i < labels_.size(); ++i)
            if (labels_[i] == label) return static_cast<elem_t>(i);
        return std::nullopt;
    }

    elem_t bottom() const noexcept { return bottom_; }
    elem_t top() const noexcept { return top_; }

    bool leq(elem_t x, elem_t y) const { return (down_[y] >> x) & 1U; }
    Bits down(elem_t x) const { return down_[x]; }
    Bits up(elem_t x) const { return up_[x]; }
    Bits everything() const { return all_bits(size()); }

    elem_t meet(elem_t x, elem_t y) const { return meet_[x * size() + y]; }
    elem_t join(elem_t x, elem_t y) const { return join_[x * size() + y]; }
    elem_t perp(elem_t x) const { return perp_[x]; }

    /// x ⊥ y iff x ≤ y⊥.
    bool ortho(elem_t x, elem_t y) const { return leq(x, perp(y)); }

    /// Join of a set of elements; the empty join is bottom.
    elem_t join_of(Bits set) const {
        elem_t acc = bottom_;
        for_each_bit(set, [&](elem_t x) { acc = join(acc, x); });
        return acc;
    }

    /// Elements covering bottom.
    std::vector<elem_t> atoms() const {
        std::vector<elem_t> out;
        for (std::size_t x = 0; x < size(); ++x)
            if (std::popcount(down_[x]) == 2) out.push_back(static_cast<elem_t>(x));
        return out;
    }

    /// Cover pairs (x, y): x < y with nothing strictly between, sorted by (x, y).
    std::vector<std::pair<elem_t, elem_t>> covers() const {
        std::vector<std::pair<elem_t, elem_t>> out;
        for (std::size_t x = 0; x < size(); ++x) {
            Bits above = up_[x] & ~bit(x);
            for_each_bit(above, [&](elem_t y) {
                Bits between = above & down_[y] & ~bit(y);
                if (between == 0) out.emplace_back(static_cast<elem_t>(x), y);
            });
        }
        return out;
    }

    const Table& perp_table() const noexcept { return perp_; }
    const Table& meet_table() const noexcept { return meet_; }
    const Table& join_table() const noexcept { return join_; }

    friend Ortholattice build_ortholattice(const OmlSpec& spec, std::size_t cap);
    friend Ortholattice make_ortholattice(std::string name, std::vector<std::string> labels,
                                          std::vector<Bits> down, Table perp, std::size_t cap);

protected:
    Ortholattice() = default;

    std::string name_;
    std::vector<std::string> labels_;
    std::vector<Bits> down_;
    std::vector<Bits> up_;
    Table meet_;
    Table join_;
    Table perp_;
    elem_t bottom_ = 0;
    elem_t top_ = 0;
};

/// An ortholattice that also satisfies the orthomodular law.
class Oml : public Ortholattice {
public:
    friend std::shared_ptr<const Oml> to_oml(Ortholattice lattice);

private:
    explicit Oml(Ortholattice&& base) : Ortholattice(std::move(base)) {}
};

using OmlRef = std::shared_ptr<const Oml>;

namespace detail {

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg, std::vector<std::size_t> witness = {}) {
    throw Error(kind, msg, std::move(witness));
}

inline std::string pair_text(const std::vector<std::string>& labels, std::size_t x, std::size_t y) {
    return "(" + labels[x] + ", " + labels[y] + ")";
}

/// Fills up-sets, meet/join tables, bounds and checks ortholattice laws.
/// `down_` and `perp_` must already be set and `down_` must be a partial order.
inline void finish_ortholattice(const std::vector<std::string>& labels, const std::vector<Bits>& down,
                                std::vector<Bits>& up, Table& meet, Table& join, const Table& perp, elem_t& bottom,
                                elem_t& top) {
    const std::size_t n = labels.size();
    up.assign(n, 0);
    for (std::size_t y = 0; y < n; ++y)
        for_each_bit(down[y], [&](elem_t x) { up[x] |= bit(y); });

    meet.assign(n * n, 0);
    join.assign(n * n, 0);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            const Bits lower = down[x] & down[y];
            const Bits upper = up[x] & up[y];
            std::optional<elem_t> m, j;
            for_each_bit(lower, [&](elem_t c) {
                if (down[c] == lower) m = c;
            });
            for_each_bit(upper, [&](elem_t c) {
                if (up[c] == upper) j = c;
            });
            if (!m) fail(ErrorKind::NotALattice, "no meet for " + pair_text(labels, x, y), {x, y});
            if (!j) fail(ErrorKind::NotALattice, "no join for " + pair_text(labels, x, y), {x, y});
            meet[x * n + y] = *m;
            join[x * n + y] = *j;
        }
    }

    // bottom/top exist in any finite lattice: fold meet/join over everything.
    bottom = 0;
    top = 0;
    for (std::size_t x = 0; x < n; ++x) {
        bottom = meet[bottom * n + x];
        top = join[top * n + x];
    }

    for (std::size_t x = 0; x < n; ++x)
        if (perp[perp[x]] != x) fail(ErrorKind::NotOrtho, "perp is not an involution at " + labels[x], {x});
    for (std::size_t x = 0; x < n; ++x)
        for_each_bit(up[x], [&](elem_t y) {
            if (!((down[perp[x]] >> perp[y]) & 1U))
                fail(ErrorKind::NotOrtho, "perp is not antitone at " + pair_text(labels, x, y), {x, y});
        });
    for (std::size_t x = 0; x < n; ++x) {
        if (meet[x * n + perp[x]] != bottom)
            fail(ErrorKind::NotOrtho, "x meet x-perp is not bottom at " + labels[x], {x});
        if (join[x * n + perp[x]] != top) fail(ErrorKind::NotOrtho, "x join x-perp is not top at " + labels[x], {x});
    }
    // The stored join table must agree with the De Morgan definition.
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (join[x * n + y] != perp[meet[perp[x] * n + perp[y]]])
                fail(ErrorKind::NotOrtho, "join disagrees with (x' meet y')' at " + pair_text(labels, x, y), {x, y});
}

}  // namespace detail

/// Builds an ortholattice from generating order pairs (reflexive-transitive
/// closure applied) and complement pairs. Throws Error on any violation.
inline Ortholattice build_ortholattice(const OmlSpec& spec, std::size_t cap = kMaxElements) {
    using detail::fail;
    Ortholattice L;
    L.name_ = spec.name;
    L.labels_ = spec.elements;
    const std::size_t n = L.labels_.size();
    if (n == 0) fail(ErrorKind::BadInput, "lattice has no elements");
    if (n > std::min(cap, kMaxElements))
        fail(ErrorKind::SizeCap, std::to_string(n) + " elements exceeds the cap of " + std::to_string(std::min(cap, kMaxElements)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (L.labels_[i] == L.labels_[j]) fail(ErrorKind::BadInput, "duplicate element " + L.labels_[i], {i, j});

    auto lookup = [&](const std::string& s) -> elem_t {
        auto idx = L.index_of(s);
        if (!idx) fail(ErrorKind::BadInput, "unknown element " + s);
        return *idx;
    };

    L.down_.assign(n, 0);
    for (std::size_t x = 0; x < n; ++x) L.down_[x] = bit(x);
    for (const auto& [a, b] : spec.leq) L.down_[lookup(b)] |= bit(lookup(a));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t y = 0; y < n; ++y)
            if ((L.down_[y] >> k) & 1U) L.down_[y] |= L.down_[k];
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y)
            if (((L.down_[y] >> x) & 1U) && ((L.down_[x] >> y) & 1U))
                fail(ErrorKind::NotAPoset, "cycle through " + detail::pair_text(L.labels_, x, y), {x, y});

    L.perp_.assign(n, 0);
    std::vector<bool> seen(n, false);
    for (const auto& [a, b] : spec.perp) {
        const elem_t x = lookup(a), y = lookup(b);
        if (seen[x] || seen[y] || (x == y && n != 1))
            fail(ErrorKind::BadInput, "perp pair " + detail::pair_text(L.labels_, x, y) + " reuses an element", {x, y});
        seen[x] = seen[y] = true;
        L.perp_[x] = y;
        L.perp_[y] = x;
    }
    for (std::size_t x = 0; x < n; ++x)
        if (!seen[x]) fail(ErrorKind::BadInput, "no perp given for " + L.labels_[x], {x});

    detail::finish_ortholattice(L.labels_, L.down_, L.up_, L.meet_, L.join_, L.perp_, L.bottom_, L.top_);

    if (auto b = L.index_of(spec.bottom); !b || *b != L.bottom_)
        fail(ErrorKind::NotALattice, "declared bottom " + spec.bottom + " is not the least element");
    if (auto t = L.index_of(spec.top); !t || *t != L.top_)
        fail(ErrorKind::NotALattice, "declared top " + spec.top + " is not the greatest element");
    return L;
}

/// Builds an ortholattice from a complete order relation (down-sets) and an
/// orthocomplement table. The relation itself is validated as a partial order.
inline Ortholattice make_ortholattice(std::string name, std::vector<std::string> labels, std::vector<Bits> down,
                                      Table perp, std::size_t cap = kMaxElements) {
    using detail::fail;
    const std::size_t n = labels.size();
    if (n == 0) fail(ErrorKind::BadInput, "lattice has no elements");
    if (n > std::min(cap, kMaxElements)) fail(ErrorKind::SizeCap, std::to_string(n) + " elements exceeds the cap");
    if (down.size() != n || perp.size() != n) fail(ErrorKind::BadInput, "table sizes disagree with element count");
    for (std::size_t x = 0; x < n; ++x) {
        if (perp[x] >= n) fail(ErrorKind::BadInput, "perp value out of range", {x});
        if ((down[x] & ~all_bits(n)) != 0) fail(ErrorKind::BadInput, "order row out of range", {x});
        if (!((down[x] >> x) & 1U)) fail(ErrorKind::NotAPoset, "order is not reflexive at " + labels[x], {x});
    }
    for (std::size_t y = 0; y < n; ++y)
        for_each_bit(down[y], [&](elem_t x) {
            if ((down[x] & ~down[y]) != 0)
                fail(ErrorKind::NotAPoset, "order is not transitive through " + detail::pair_text(labels, x, y), {x, y});
            if (x != y && ((down[x] >> y) & 1U))
                fail(ErrorKind::NotAPoset, "order is not antisymmetric at " + detail::pair_text(labels, x, y), {x, y});
        });

    Ortholattice L;
    L.name_ = std::move(name);
    L.labels_ = std::move(labels);
    L.down_ = std::move(down);
    L.perp_ = std::move(perp);
    detail::finish_ortholattice(L.labels_, L.down_, L.up_, L.meet_, L.join_, L.perp_, L.bottom_, L.top_);
    return L;
}

/// Verdicts of the three equivalent orthomodularity conditions, each with the
/// first failing pair (x, y), x ≤ y, in index order.
struct OrthomodularVerdict {
    std::optional<std::pair<elem_t, elem_t>> join_form;     // y = x ∨ (x⊥ ∧ y)
    std::optional<std::pair<elem_t, elem_t>> meet_form;     // x = y ∧ (y⊥ ∨ x)
    std::optional<std::pair<elem_t, elem_t>> kernel_form;   // x⊥ ∧ y = 0 implies x = y

    bool join_holds() const { return !join_form; }
    bool meet_holds() const { return !meet_form; }
    bool kernel_holds() const { return !kernel_form; }
    bool all() const { return join_holds() && meet_holds() && kernel_holds(); }
};

inline OrthomodularVerdict validate_orthomodular_three_ways(const Ortholattice& L) {
    OrthomodularVerdict v;
    const std::size_t n = L.size();
    for (std::size_t xi = 0; xi < n; ++xi) {
        const auto x = static_cast<elem_t>(xi);
        for_each_bit(L.up(x), [&](elem_t y) {
            if (!v.join_form && L.join(x, L.meet(L.perp(x), y)) != y) v.join_form = {x, y};
            if (!v.meet_form && L.meet(y, L.join(L.perp(y), x)) != x) v.meet_form = {x, y};
            if (!v.kernel_form && L.meet(L.perp(x), y) == L.bottom() && x != y) v.kernel_form = {x, y};
        });
    }
    return v;
}

/// Promotes a validated ortholattice to an Oml; throws NotOrthomodular with the
/// witness pair (x, y) when the law fails.
inline OmlRef to_oml(Ortholattice lattice) {
    const auto v = validate_orthomodular_three_ways(lattice);
    if (v.join_form) {
        auto [x, y] = *v.join_form;
        throw Error(ErrorKind::NotOrthomodular,
                    "orthomodular law fails at " + detail::pair_text(lattice.labels(), x, y), {x, y});
    }
    if (!v.all()) throw Error(ErrorKind::NotOrthomodular, "orthomodularity conditions disagree");
    return OmlRef(new Oml(std::move(lattice)));
}

inline OmlRef build_oml(const OmlSpec& spec, std::size_t cap = kMaxElements) {
    return to_oml(build_ortholattice(spec, cap));
}

/// The Sasaki projection y ↦ a ∧ (a⊥ ∨ y) as a table.
inline Table sasaki_projection(const Ortholattice& L, elem_t a) {
    Table t(L.size());
    for (std::size_t y = 0; y < L.size(); ++y) t[y] = L.meet(a, L.join(L.perp(a), static_cast<elem_t>(y)));
    return t;
}

inline bool ortho(const Ortholattice& L, elem_t x, elem_t y) { return L.ortho(x, y); }

/// Elements of ↓a in ascending index order; position i of the result is
/// element i of downset_oml(L, a).
inline Table downset_members(const Ortholattice& L, elem_t a) {
    Table out;
    for_each_bit(L.down(a), [&](elem_t u) { out.push_back(u); });
    return out;
}

/// The principal downset ↓a with order inherited from L and relative
/// orthocomplement u ↦ a ∧ u⊥.
inline OmlRef downset_oml(const Oml& L, elem_t a) {
    const Table members = downset_members(L, a);
    const std::size_t m = members.size();
    std::vector<elem_t> local(L.size(), 0);
    for (std::size_t i = 0; i < m; ++i) local[members[i]] = static_cast<elem_t>(i);

    std::vector<std::string> labels;
    std::vector<Bits> down(m, 0);
    Table perp(m);
    for (std::size_t i = 0; i < m; ++i) {
        const elem_t u = members[i];
        labels.push_back(L.label(u));
        for_each_bit(L.down(u), [&](elem_t v) { down[i] |= bit(local[v]); });
        perp[i] = local[L.meet(a, L.perp(u))];
    }
    return to_oml(make_ortholattice(L.name() + "/" + L.label(a), std::move(labels), std::move(down), std::move(perp)));
}

}  // namespace omlkit
