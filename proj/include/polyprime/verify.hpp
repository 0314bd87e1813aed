#pragma once

// Per-polyomino verification reports and exhaustive sweeps.
//
// For each polyomino the harness records whether it is simple, whether
// G(P) is weakly chordal, whether I_P = J_P, a witness of J_P \ I_P when
// they differ, and optionally an order with a squarefree quadratic basis.
// A simple polyomino that fails either of the other two checks is a
// violation.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "polyprime/toric.hpp"

namespace polyprime {

struct VerifyConfig {
    OrderSpec order{};
    GroebnerBudget budget{};
    std::size_t cycle_budget = kDefaultCycleBudget;
    bool quadratic_search = true;
    QuadraticSearchConfig search{};
};

struct VerificationReport {
    Polyomino polyomino = Polyomino::from_points(std::array{GridPoint{0, 0}});
    VariableSet vars;
    OrderSpec order;
    bool simple = false;
    std::optional<bool> weakly_chordal;
    std::optional<bool> ideals_equal;
    std::optional<bool> engine_consistent;
    std::optional<Binomial> gap_witness;
    std::optional<OrderSpec> quadratic_order;
    bool quadratic_searched = false;
    bool complete = false;
    std::string error;
    std::vector<std::string> violations;
    std::vector<std::pair<std::string, double>> timings;

    std::size_t cells() const { return polyomino.size(); }
};

namespace detail {

class StageTimer {
public:
    explicit StageTimer(std::vector<std::pair<std::string, double>>& sink) : sink_(sink) {}
    template <class F>
    auto run(const std::string& stage, F&& f) {
        const auto t0 = std::chrono::steady_clock::now();
        struct Record {
            StageTimer* self;
            std::string name;
            std::chrono::steady_clock::time_point t0;
            ~Record() {
                self->sink_.emplace_back(
                    name, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
            }
        } record{this, stage, t0};
        return f();
    }

private:
    std::vector<std::pair<std::string, double>>& sink_;
};

inline void check_report_invariants(VerificationReport& r) {
    if (!r.complete) return;
    if (r.simple && r.weakly_chordal == false) r.violations.push_back("simple polyomino with G(P) not weakly chordal");
    if (r.simple && r.ideals_equal == false) r.violations.push_back("simple polyomino with I_P != J_P");
    if (r.ideals_equal.has_value() && r.gap_witness.has_value() == *r.ideals_equal)
        r.violations.push_back("gap witness presence disagrees with ideal equality");
    if (r.engine_consistent == false) r.violations.push_back("ideal-equality decision routes disagree");
}

} // namespace detail

inline VerificationReport verify_polyomino(const Polyomino& p, const VerifyConfig& cfg = {}) {
    VerificationReport r;
    r.polyomino = p;
    r.order = cfg.order;
    detail::StageTimer timer(r.timings);
    try {
        r.simple = timer.run("simple", [&] { return is_simple(p); });
        const ToricMap phi = timer.run("graph", [&] { return ToricMap(p); });
        r.vars = phi.grid_vars();
        const MonomialOrder order = cfg.order.resolve(r.vars);
        r.weakly_chordal = timer.run("weakly_chordal", [&] { return is_weakly_chordal(phi.graph().graph, cfg.cycle_budget); });

        const std::vector<Binomial> minors = inner_minors(p, r.vars);
        const GroebnerBasis gb_i = timer.run("gb_minors", [&] { return buchberger(minors, order, cfg.budget); });
        const GroebnerBasis gb_j =
            timer.run("gb_toric", [&] { return toric_ideal_elimination(phi, order, cfg.budget); });
        const IdealComparison cmp =
            timer.run("ideal_equal", [&] { return compare_ideals(gb_i, minors, gb_j, gb_j.elements); });
        r.ideals_equal = cmp.equal();
        r.engine_consistent = cmp.consistent();

        timer.run("witness", [&] {
            const auto cycles = toric_ideal_cycles(phi, std::numeric_limits<std::size_t>::max(), cfg.cycle_budget);
            r.gap_witness = witness_gap(r.vars, cycles, gb_j, gb_i);
            return 0;
        });

        if (cfg.quadratic_search) {
            r.quadratic_searched = true;
            timer.run("quadratic_order", [&] {
                if (auto found = find_quadratic_order(minors, r.vars, cfg.search))
                    r.quadratic_order = describe(found->order, r.vars);
                return 0;
            });
        }
        r.complete = true;
    } catch (const BudgetExceeded& e) {
        r.error = e.what();
    } catch (const LimitExceeded& e) {
        r.error = e.what();
    }
    detail::check_report_invariants(r);
    return r;
}

struct SizeTally {
    std::size_t count = 0;
    std::size_t simple = 0;
    std::size_t non_simple = 0;
    std::size_t weakly_chordal = 0;
    std::size_t ideals_equal = 0;
    std::size_t quadratic_found = 0;
    std::size_t with_witness = 0;

    friend bool operator==(const SizeTally&, const SizeTally&) = default;
};

struct SweepSummary {
    int n_max = 0;
    std::map<int, SizeTally> sizes;
    std::size_t total = 0;
    std::vector<VerificationReport> violations;
    std::vector<VerificationReport> budget_errors;
    std::vector<VerificationReport> non_simple; // observation table
    bool aborted = false;
    double wall_seconds = 0;

    bool ok() const { return violations.empty() && budget_errors.empty() && !aborted; }
};

struct SweepOptions {
    int cap = kDefaultEnumerationCap;
    unsigned threads = 0; // 0: hardware concurrency
};

/// Verifies every fixed polyomino with 1..n_max cells. Items are verified
/// in parallel and merged in enumeration order. The first violation stops
/// the sweep; the summary then holds the earliest violating report.
inline SweepSummary sweep(int n_max, const VerifyConfig& cfg = {}, const SweepOptions& opts = {}) {
    if (n_max < 1 || n_max > opts.cap) throw CapExceeded(n_max, opts.cap);
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<Polyomino> all;
    for (int n = 1; n <= n_max; ++n) {
        auto level = enumerate_polyominoes(n, opts.cap);
        all.insert(all.end(), level.begin(), level.end());
    }

    std::vector<std::optional<VerificationReport>> results(all.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};
    auto worker = [&] {
        for (;;) {
            if (stop.load()) return;
            const std::size_t i = next.fetch_add(1);
            if (i >= all.size()) return;
            VerificationReport r = verify_polyomino(all[i], cfg);
            if (!r.violations.empty()) stop.store(true);
            results[i] = std::move(r);
        }
    };
    unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(all.size(), 1)));
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
        worker();
    }

    SweepSummary s;
    s.n_max = n_max;
    for (std::size_t i = 0; i < results.size(); ++i) {
        if (!results[i]) {
            s.aborted = true;
            continue;
        }
        VerificationReport& r = *results[i];
        if (!r.violations.empty()) {
            if (s.violations.empty()) s.violations.push_back(r);
            continue;
        }
        if (!s.violations.empty()) continue; // stop at the earliest violation
        SizeTally& t = s.sizes[static_cast<int>(r.cells())];
        ++t.count;
        ++s.total;
        (r.simple ? t.simple : t.non_simple)++;
        if (r.weakly_chordal == true) ++t.weakly_chordal;
        if (r.ideals_equal == true) ++t.ideals_equal;
        if (r.quadratic_order) ++t.quadratic_found;
        if (r.gap_witness) ++t.with_witness;
        if (!r.complete) s.budget_errors.push_back(r);
        if (!r.simple) s.non_simple.push_back(r);
    }
    if (!s.violations.empty()) s.aborted = true;
    s.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return s;
}

} // namespace polyprime
