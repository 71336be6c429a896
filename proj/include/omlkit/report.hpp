#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace omlkit {

/// One verdict line: `CHECK <suite>/<name> PASS|FAIL[ <witness>]`.
struct Check {
    std::string suite;
    std::string name;
    bool pass = true;
    std::string witness;  // empty on PASS
};

/// Ordered collection of checks. Informational notes are carried alongside
/// but never count towards the pass/fail summary.
class Report {
public:
    void add(std::string suite, std::string name, bool pass, std::string witness = {}) {
        checks_.push_back({std::move(suite), std::move(name), pass, pass ? std::string{} : std::move(witness)});
    }

    void add(std::string suite, std::string name, const std::optional<std::string>& failure) {
        add(std::move(suite), std::move(name), !failure.has_value(), failure.value_or(std::string{}));
    }

    void note(std::string line) { notes_.push_back(std::move(line)); }

    void append(const Report& other) {
        checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
        notes_.insert(notes_.end(), other.notes_.begin(), other.notes_.end());
    }

    const std::vector<Check>& checks() const noexcept { return checks_; }
    const std::vector<std::string>& notes() const noexcept { return notes_; }

    std::size_t pass_count() const {
        return static_cast<std::size_t>(std::count_if(checks_.begin(), checks_.end(), [](const Check& c) { return c.pass; }));
    }
    std::size_t fail_count() const { return checks_.size() - pass_count(); }
    bool all_passed() const { return fail_count() == 0; }

    /// Looks up a check by `suite/name`; nullptr when absent.
    const Check* find(const std::string& suite, const std::string& name) const {
        for (const auto& c : checks_)
            if (c.suite == suite && c.name == name) return &c;
        return nullptr;
    }

    void render_checks(std::ostream& os) const {
        for (const auto& c : checks_) {
            os << "CHECK " << c.suite << '/' << c.name << (c.pass ? " PASS" : " FAIL");
            if (!c.pass && !c.witness.empty()) os << ' ' << c.witness;
            os << '\n';
        }
        for (const auto& n : notes_) os << "NOTE " << n << '\n';
    }

    void render_summary(std::ostream& os) const { os << "SUMMARY " << pass_count() << ' ' << fail_count() << '\n'; }

    void render(std::ostream& os) const {
        render_checks(os);
        render_summary(os);
    }

private:
    std::vector<Check> checks_;
    std::vector<std::string> notes_;
};

/// Number of workers to use when the caller passes 0.
inline unsigned default_jobs() {
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : hc;
}

/// Runs `fn(i)` for i in [0, count) on up to `jobs` threads (strided).
template <typename Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn&& fn) {
    if (jobs == 0) jobs = default_jobs();
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
    if (jobs <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (unsigned w = 0; w < jobs; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += jobs) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

/// Scans outer indices (possibly in parallel) and returns the witness of the
/// failing index with the smallest position, so the result does not depend on
/// scheduling. `probe(i)` returns a witness string on failure.
template <typename Probe>
std::optional<std::string> first_failure(std::size_t count, unsigned jobs, Probe&& probe) {
    if (jobs == 0) jobs = default_jobs();
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            if (auto f = probe(i)) return f;
        return std::nullopt;
    }
    std::vector<std::optional<std::string>> found(count);
    std::atomic<std::size_t> lowest{count};
    parallel_for(count, jobs, [&](std::size_t i) {
        if (i > lowest.load(std::memory_order_relaxed)) return;
        found[i] = probe(i);
        if (found[i]) {
            std::size_t cur = lowest.load();
            while (i < cur && !lowest.compare_exchange_weak(cur, i)) {
            }
        }
    });
    for (auto& f : found)
        if (f) return f;
    return std::nullopt;
}

}  // namespace omlkit
