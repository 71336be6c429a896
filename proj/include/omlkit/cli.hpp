#pragma once

// Command-line front end. Exit codes: 0 all checks pass, 1 some check fails,
// 2 usage, I/O or parse error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "omlkit/catalog.hpp"
#include "omlkit/foulis.hpp"
#include "omlkit/io.hpp"
#include "omlkit/linmap.hpp"
#include "omlkit/verify.hpp"

namespace omlkit {

namespace cli {

inline constexpr int kOk = 0;
inline constexpr int kFail = 1;
inline constexpr int kUsage = 2;

/// Thrown for anything that maps to exit status 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Element cap: 64, lowered by OMLKIT_SIZE_CAP when set to a smaller value.
inline std::size_t size_cap() {
    const char* env = std::getenv("OMLKIT_SIZE_CAP");
    if (!env || !*env) return kMaxElements;
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (*end != '\0' || v == 0) throw UsageError("OMLKIT_SIZE_CAP must be a positive integer");
    return std::min<std::size_t>(v, kMaxElements);
}

inline OmlSpec read_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    try {
        return parse_oml(in);
    } catch (const ParseError& e) {
        throw UsageError(path + ":" + e.what());
    }
}

inline void write_text(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot write " + path);
    f << text;
    if (!f) throw UsageError("write failed for " + path);
}

inline int finish(const Report& r, std::ostream& out) {
    r.render(out);
    return r.all_passed() ? kOk : kFail;
}

inline int cmd_validate(const std::string& path, std::ostream& out) {
    const OmlSpec spec = read_spec(path);
    Report r;
    const OmlRef X = validate_report(spec, r, size_cap());
    if (X) r.append(verify_ortho_relation(*X));
    r.render_checks(out);
    if (const Check* c = r.find("oml", "orthomodular-join"); c && !c->pass) out << "ORTHOMODULAR FAIL " << c->witness << '\n';
    r.render_summary(out);
    return r.all_passed() ? kOk : kFail;
}

inline CatalogId catalog_from_args(const std::string& family, const std::string& param) {
    auto need = [&](bool want) {
        if (want && param.empty()) throw UsageError("family '" + family + "' needs a parameter");
        if (!want && !param.empty()) throw UsageError("family '" + family + "' takes no parameter");
    };
    try {
        if (family == "one" || family == "chain2" || family == "benzene") {
            need(false);
            return parse_catalog_id(family);
        }
        if (family == "boolean" || family == "mo") {
            need(true);
            return parse_catalog_id(family + param);
        }
        if (family == "product") {
            need(true);
            return parse_catalog_id("product(" + param + ")");
        }
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    throw UsageError("unknown family '" + family + "'");
}

inline int cmd_gen(const std::string& family, const std::string& param, const std::string& out_path, std::ostream& out) {
    const CatalogId id = catalog_from_args(family, param);
    std::ostringstream text;
    try {
        write_oml(text, build_ortholattice(catalog_spec(id), size_cap()));
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    write_text(out_path, text.str(), out);
    return kOk;
}

/// Validates and returns the OML, or renders the failure and returns nullptr.
inline OmlRef load_oml(const std::string& path, std::ostream& out, Report& r) {
    const OmlSpec spec = read_spec(path);
    OmlRef X = validate_report(spec, r, size_cap());
    if (!X) r.render(out);
    return X;
}

inline int cmd_sasaki(const std::string& path, const std::string& element, std::ostream& out) {
    Report r;
    const OmlRef X = load_oml(path, out, r);
    if (!X) return kFail;
    const auto a = X->index_of(element);
    if (!a) throw UsageError("unknown element '" + element + "'");
    const Table pi = sasaki_projection(*X, *a);
    out << "SASAKI " << element << '\n';
    for (elem_t y = 0; y < X->size(); ++y) out << X->label(y) << ' ' << X->label(pi[y]) << '\n';
    return kOk;
}

inline int cmd_linmaps(const std::string& path, bool list, unsigned jobs, std::ostream& out) {
    Report r;
    const OmlRef X = load_oml(path, out, r);
    if (!X) return kFail;
    std::vector<LinMap> maps;
    try {
        maps = enumerate_lin(X, jobs);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    if (list)
        for (const auto& f : maps) out << "MAP " << f.render() << " ADJ " << render_table(*X, f.adjoint_table()) << '\n';
    out << "COUNT " << maps.size() << '\n';
    return kOk;
}

inline int cmd_foulis(const std::string& path, unsigned jobs, std::ostream& out) {
    Report r;
    const OmlRef X = load_oml(path, out, r);
    if (!X) return kFail;
    FoulisMS S;
    try {
        S = build_lin_tables(X, jobs);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    r.note("lin/size " + std::to_string(S.k));
    r.append(validate_foulis(S, jobs));
    r.append(verify_star_laws(S, jobs));
    SasakiSet set;
    if (auto err = detail::try_sasaki_set(S, set)) {
        r.add("structure", "is-orthomodular", false, *err);
    } else {
        r.add("structure", "is-orthomodular", true);
        r.note("structure/size " + std::to_string(set.members.size()));
        r.append(verify_sasaki_structure(S, set));
    }
    return finish(r, out);
}

inline int cmd_verify_all(const std::string& path, unsigned jobs, std::ostream& out) {
    const OmlSpec spec = read_spec(path);
    VerifyOptions opt;
    opt.jobs = jobs;
    opt.cap = size_cap();
    return finish(verify_all(spec, opt), out);
}

inline int cmd_dot(const std::string& path, const std::string& out_path, std::ostream& out) {
    const OmlSpec spec = read_spec(path);
    std::optional<Ortholattice> L;
    try {
        L.emplace(build_ortholattice(spec, size_cap()));
    } catch (const Error& e) {
        Report r;
        r.add("oml", "ortholattice", false, error_witness(e, spec.elements));
        return finish(r, out);
    }
    std::ostringstream text;
    write_dot(text, *L);
    write_text(out_path, text.str(), out);
    return kOk;
}

}  // namespace cli

/// Entry point shared by the `omlkit` binary and the tests.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite orthomodular lattice toolkit", "omlkit"};
    app.require_subcommand(1);

    std::string file, out_path, element, family, param;
    unsigned jobs = 0;
    bool count = false, list = false;

    auto* validate = app.add_subcommand("validate", "Check that a file describes an orthomodular lattice");
    validate->add_option("file", file, "Lattice file")->required();

    auto* gen = app.add_subcommand("gen", "Write a catalog lattice (one, chain2, boolean K, mo M, benzene, product A,B)");
    gen->add_option("family", family, "Family")->required();
    gen->add_option("param", param, "Parameter");
    gen->add_option("-o,--output", out_path, "Output file (default stdout)");

    auto* sasaki = app.add_subcommand("sasaki", "Print the Sasaki projection onto an element");
    sasaki->add_option("file", file, "Lattice file")->required();
    sasaki->add_option("-a", element, "Element")->required();

    auto* linmaps = app.add_subcommand("linmaps", "Enumerate the linear endomaps");
    linmaps->add_option("file", file, "Lattice file")->required();
    auto* count_flag = linmaps->add_flag("--count", count, "Print the number of maps");
    auto* list_flag = linmaps->add_flag("--list", list, "List every map with its adjoint");
    count_flag->excludes(list_flag);
    linmaps->add_option("--jobs", jobs, "Worker threads (default: all cores)");

    auto* foulis = app.add_subcommand("foulis", "Check the Foulis m-semilattice Lin(X) and its Sasaki projections");
    foulis->add_option("file", file, "Lattice file")->required();
    foulis->add_option("--jobs", jobs, "Worker threads (default: all cores)");

    auto* verify = app.add_subcommand("verify-all", "Run every check suite");
    verify->add_option("file", file, "Lattice file")->required();
    verify->add_option("--jobs", jobs, "Worker threads (default: all cores)");

    auto* dot = app.add_subcommand("dot", "Export the cover relation as Graphviz");
    dot->add_option("file", file, "Lattice file")->required();
    dot->add_option("-o,--output", out_path, "Output file (default stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return cli::kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return cli::kUsage;
    }

    try {
        if (*validate) return cli::cmd_validate(file, out);
        if (*gen) return cli::cmd_gen(family, param, out_path, out);
        if (*sasaki) return cli::cmd_sasaki(file, element, out);
        if (*linmaps) {
            if (!count && !list) throw cli::UsageError("linmaps needs --count or --list");
            return cli::cmd_linmaps(file, list, jobs, out);
        }
        if (*foulis) return cli::cmd_foulis(file, jobs, out);
        if (*verify) return cli::cmd_verify_all(file, jobs, out);
        if (*dot) return cli::cmd_dot(file, out_path, out);
    } catch (const cli::UsageError& e) {
        err << "error: " << e.what() << '\n';
        return cli::kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return cli::kUsage;
    }
    return cli::kUsage;
}

}  // namespace omlkit
