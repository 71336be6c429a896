#pragma once

// The full regression run over one lattice, suite by suite.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "omlkit/checks.hpp"
#include "omlkit/foulis.hpp"
#include "omlkit/linmap.hpp"
#include "omlkit/module_action.hpp"
#include "omlkit/oml.hpp"
#include "omlkit/report.hpp"

namespace omlkit {

/// Witness text for a construction error: kind plus offending labels.
inline std::string error_witness(const Error& e, const std::vector<std::string>& labels) {
    std::string out(to_string(e.kind()));
    for (std::size_t i : e.witness()) out += ' ' + (i < labels.size() ? labels[i] : std::to_string(i));
    return out;
}

/// Ortholattice construction plus the three orthomodularity conditions.
/// Returns the validated OML, or nullptr after recording the failure.
inline OmlRef validate_report(const OmlSpec& spec, Report& r, std::size_t cap = kMaxElements) {
    std::optional<Ortholattice> L;
    try {
        L.emplace(build_ortholattice(spec, cap));
    } catch (const Error& e) {
        r.add("oml", "ortholattice", false, error_witness(e, spec.elements));
        return nullptr;
    }
    r.add("oml", "ortholattice", true);
    const auto v = validate_orthomodular_three_ways(*L);
    auto witness = [&](const std::optional<std::pair<elem_t, elem_t>>& p) -> std::optional<std::string> {
        if (!p) return std::nullopt;
        return L->label(p->first) + " " + L->label(p->second);
    };
    r.add("oml", "orthomodular-join", witness(v.join_form));
    r.add("oml", "orthomodular-meet", witness(v.meet_form));
    r.add("oml", "orthomodular-kernel", witness(v.kernel_form));
    if (!v.all()) return nullptr;
    return to_oml(std::move(*L));
}

/// Every σ_u, u ∈ [S], checked and folded into one record per property.
inline Report verify_sasaki_actions(const FoulisMS& S, const SasakiSet& set) {
    Report all;
    for (idx_t u : set.members) all.append(verify_sasaki_action(S, set, u));
    Report r;
    for (const char* name : {"self-adjoint", "idempotent", "image-is-downset"}) {
        std::optional<std::string> fail;
        for (const auto& c : all.checks())
            if (c.name == name && !c.pass) {
                fail = c.witness;
                break;
            }
        r.add("sasaki-action", name, fail);
    }
    return r;
}

/// Compares b ↦ π_b against [Lin(X)]: bijective, order-preserving both
/// ways, and π_{b⊥} = [π_b]. Informational only.
inline std::string explore_projection_map(const Oml& X, const FoulisMS& S, const SasakiSet& set) {
    std::map<Table, idx_t> index;
    for (idx_t i = 0; i < S.k; ++i) index.emplace(S.provenance[i].table(), i);
    std::vector<idx_t> pi(X.size());
    Bits hit = 0;
    for (elem_t b = 0; b < X.size(); ++b) {
        auto it = index.find(sasaki_projection(X, b));
        if (it == index.end() || !set.contains(it->second)) return "FAILS pi_" + X.label(b) + " not in [S]";
        pi[b] = it->second;
        hit |= bit(set.at(pi[b]));
    }
    if (hit != set.lattice->everything()) return "FAILS not onto [S]";
    for (elem_t a = 0; a < X.size(); ++a) {
        if (S.sai(pi[a]) != pi[X.perp(a)]) return "FAILS perp at " + X.label(a);
        for (elem_t b = 0; b < X.size(); ++b)
            if (X.leq(a, b) != S.leq(pi[a], pi[b])) return "FAILS order at " + X.label(a) + " " + X.label(b);
    }
    return "HOLDS";
}

struct VerifyOptions {
    unsigned jobs = 1;
    std::size_t cap = kMaxElements;
};

/// Runs every suite in order. Stops early when the lattice itself is
/// invalid, and after the kernel suite when Lin(X) is too large for tables.
inline Report verify_all(const OmlSpec& spec, const VerifyOptions& opt = {}) {
    Report r;
    const OmlRef X = validate_report(spec, r, opt.cap);
    if (!X) return r;
    r.append(verify_ortho_relation(*X));
    r.append(verify_sasaki_facts(X));
    r.append(verify_downsets(X));

    std::vector<LinMap> maps;
    try {
        maps = enumerate_lin(X, opt.jobs);
    } catch (const Error& e) {
        r.add("lin", "enumerate", false, std::string(to_string(e.kind())) + " " + e.what());
        return r;
    }
    r.add("lin", "enumerate", true);
    r.note("lin/size " + std::to_string(maps.size()));
    r.append(verify_kernels(maps));
    if (maps.size() > kMaxTableCarrier) {
        r.note("lin/skipped carrier exceeds " + std::to_string(kMaxTableCarrier) + " maps");
        return r;
    }

    const FoulisMS S = build_lin_tables(X, std::move(maps), opt.jobs);
    r.append(verify_dagger_laws(X, S.provenance, opt.jobs));
    r.append(validate_foulis(S, opt.jobs));
    r.append(verify_star_laws(S, opt.jobs));

    SasakiSet set;
    if (auto err = detail::try_sasaki_set(S, set)) {
        r.add("structure", "is-orthomodular", false, *err);
        return r;
    }
    r.add("structure", "is-orthomodular", true);
    r.note("structure/size " + std::to_string(set.members.size()));
    r.append(verify_sasaki_structure(S, set));

    r.append(lin_action(S, opt.jobs).verdicts);
    r.append(foulis_action(S, set, opt.jobs).verdicts);
    r.append(verify_m_claims(S, set, opt.jobs));
    r.append(verify_sasaki_actions(S, set));
    r.note("exploratory/pi-map-iso " + explore_projection_map(*X, S, set));
    return r;
}

}  // namespace omlkit
