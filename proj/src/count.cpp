#include "latpath/count.hpp"

#include <chrono>
#include <cstdlib>
#include <thread>

namespace latpath {

std::string to_string(CountKind kind) {
    switch (kind) {
        case CountKind::complex_curves: return "complex";
        case CountKind::real_curves: return "real";
        case CountKind::welschinger: return "welschinger";
    }
    return "?";
}

CountKind parse_count_kind(std::string_view text) {
    if (text == "complex") return CountKind::complex_curves;
    if (text == "real") return CountKind::real_curves;
    if (text == "welschinger") return CountKind::welschinger;
    throw Error("unknown count kind '" + std::string(text) + "'");
}

namespace {

unsigned resolve_workers(unsigned requested, std::uint64_t jobs) {
    unsigned workers = requested;
    if (const char* env = std::getenv("LATPATH_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) workers = static_cast<unsigned>(v);
    }
    if (workers == 0) workers = std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    if (jobs < workers) workers = jobs == 0 ? 1 : static_cast<unsigned>(jobs);
    return workers;
}

std::size_t check_delta(const LatticePolygon& polygon, std::size_t delta) {
    if (delta > polygon.m() - 1) {
        throw InvalidDelta("delta " + std::to_string(delta) + " outside [0, " +
                           std::to_string(polygon.m() - 1) + "]");
    }
    return polygon.m() - delta;
}

// Evaluates one contiguous rank range of the enumeration. Workers keep
// private memo tables; every per-path value is independent of sharing, so
// totals match for any worker count.
template <typename Eval>
void run_partitioned(const PathEnumeration& paths, unsigned workers,
                     std::vector<PathContribution>& out, Eval eval) {
    std::uint64_t total = paths.size();
    auto run_range = [&](std::uint64_t begin, std::uint64_t end) {
        if (begin >= end) return;
        auto subset = paths.subset_at(begin);
        auto eval_ctx = eval(); // per-worker engines
        for (std::uint64_t rank = begin; rank < end; ++rank) {
            out[rank] = eval_ctx(paths.make_path(subset));
            paths.next_subset(subset);
        }
    };
    if (workers <= 1) {
        run_range(0, total);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        std::uint64_t begin = total * w / workers;
        std::uint64_t end = total * (w + 1) / workers;
        pool.emplace_back(run_range, begin, end);
    }
    for (auto& t : pool) t.join();
}

CountReport finish_report(CountReport report, std::vector<PathContribution> per_path,
                          std::chrono::steady_clock::time_point started) {
    report.enumerated = per_path.size();
    for (const PathContribution& c : per_path) {
        report.total += c.contribution;
        if (c.contribution != 0) ++report.nonzero;
    }
    report.per_path = std::move(per_path);
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - started)
                            .count();
    return report;
}

CountReport base_report(CountKind kind, const LatticePolygon& polygon,
                        const DirectionOrder& order, std::size_t delta, std::size_t n) {
    CountReport report;
    report.kind = kind;
    report.polygon = polygon.vertices();
    report.lambda = order.str();
    report.m = polygon.m();
    report.l = polygon.l();
    report.delta = delta;
    report.n = n;
    return report;
}

} // namespace

CountReport count_complex(const LatticePolygon& polygon, const DirectionOrder& order,
                          std::size_t delta, const CountOptions& options) {
    auto started = std::chrono::steady_clock::now();
    std::size_t n = check_delta(polygon, delta);
    PathContext ctx = make_path_context(polygon, order);
    PathEnumeration paths(polygon, order, n);

    std::vector<PathContribution> per_path(paths.size());
    unsigned workers = resolve_workers(options.workers, paths.size());
    run_partitioned(paths, workers, per_path, [&ctx]() {
        return [engine = MultiplicityEngine(ctx)](const LatticePath& path) mutable {
            PathContribution c;
            c.mu = engine.mu(path);
            c.contribution = c.mu.mu;
            c.path = path;
            return c;
        };
    });
    return finish_report(base_report(CountKind::complex_curves, polygon, order, delta, n),
                         std::move(per_path), started);
}

CountReport count_real(const LatticePolygon& polygon, const DirectionOrder& order,
                       std::size_t delta, const SignSequence& signs,
                       const CountOptions& options) {
    auto started = std::chrono::steady_clock::now();
    std::size_t n = check_delta(polygon, delta);
    if (signs.size() != n) {
        throw SignLengthMismatch("sign sequence length " + std::to_string(signs.size()) +
                                 " does not match m - delta = " + std::to_string(n));
    }
    PathContext ctx = make_path_context(polygon, order);
    PathEnumeration paths(polygon, order, n);

    std::vector<PathContribution> per_path(paths.size());
    unsigned workers = resolve_workers(options.workers, paths.size());
    AllEvenRule rule = options.all_even_rule;
    run_partitioned(paths, workers, per_path, [&ctx, &signs, rule]() {
        return [complex_engine = MultiplicityEngine(ctx),
                real_engine = RealMultiplicityEngine(ctx, rule),
                &signs](const LatticePath& path) mutable {
            PathContribution c;
            c.mu = complex_engine.mu(path);
            c.real.mu_r_plus = real_engine.mu_real_side(path, signs, Side::plus);
            c.real.mu_r_minus = real_engine.mu_real_side(path, signs, Side::minus);
            c.real.mu_r = c.real.mu_r_plus * c.real.mu_r_minus;
            c.contribution = c.real.mu_r;
            c.path = path;
            return c;
        };
    });
    CountReport report = base_report(CountKind::real_curves, polygon, order, delta, n);
    report.signs = signs.str();
    return finish_report(std::move(report), std::move(per_path), started);
}

CountReport count_welschinger(const LatticePolygon& polygon, const DirectionOrder& order,
                              std::size_t delta, const CountOptions& options) {
    auto started = std::chrono::steady_clock::now();
    std::size_t n = check_delta(polygon, delta);
    PathContext ctx = make_path_context(polygon, order);
    PathEnumeration paths(polygon, order, n);

    std::vector<PathContribution> per_path(paths.size());
    unsigned workers = resolve_workers(options.workers, paths.size());
    run_partitioned(paths, workers, per_path, [&ctx]() {
        return [complex_engine = MultiplicityEngine(ctx),
                real_engine = RealMultiplicityEngine(ctx)](const LatticePath& path) mutable {
            PathContribution c;
            c.mu = complex_engine.mu(path);
            c.real.nu_plus = real_engine.nu_side(path, Side::plus);
            c.real.nu_minus = real_engine.nu_side(path, Side::minus);
            c.real.nu = c.real.nu_plus * c.real.nu_minus;
            c.contribution = c.real.nu;
            c.path = path;
            return c;
        };
    });
    return finish_report(base_report(CountKind::welschinger, polygon, order, delta, n),
                         std::move(per_path), started);
}

SweepResult invariance_sweep(const LatticePolygon& polygon, std::size_t delta,
                             const std::vector<DirectionOrder>& orders,
                             const CountOptions& options) {
    SweepResult result;
    result.delta = delta;
    for (const DirectionOrder& order : orders) {
        CountReport report = count_complex(polygon, order, delta, options);
        result.totals.emplace_back(order.str(), report.total);
    }
    result.consistent = true;
    for (const auto& [name, total] : result.totals) {
        if (total != result.totals.front().second) result.consistent = false;
    }
    return result;
}

std::int64_t discriminant_degree(std::int64_t d) {
    return 3 * (d - 1) * (d - 1);
}

std::int64_t multicomponent_genus(const std::vector<std::int64_t>& genera) {
    if (genera.empty()) throw Error("multicomponent genus of an empty curve");
    std::int64_t sum = 0;
    for (std::int64_t g : genera) sum += g;
    return sum + 1 - static_cast<std::int64_t>(genera.size());
}

RegistryReport verify_registry(const std::vector<RegistryCase>& cases,
                               const CountOptions& options) {
    RegistryReport report;
    for (const RegistryCase& entry : cases) {
        LatticePolygon polygon = make_polygon(entry.polygon);
        DirectionOrder order = DirectionOrder::parse(entry.lambda);
        Integer actual;
        switch (entry.kind) {
            case CountKind::complex_curves:
                actual = count_complex(polygon, order, entry.delta, options).total;
                break;
            case CountKind::real_curves: {
                SignSequence signs = parse_signs(entry.signs.value_or(""));
                if (signs.size() == 1) {
                    // a single token fills every edge, mirroring --signs-all
                    signs = SignSequence::uniform(polygon.m() - entry.delta, signs.signs[0]);
                }
                actual = count_real(polygon, order, entry.delta, signs, options).total;
                break;
            }
            case CountKind::welschinger:
                actual = count_welschinger(polygon, order, entry.delta, options).total;
                break;
        }
        report.outcomes.push_back(RegistryOutcome{entry, actual, actual == entry.expected});
    }
    return report;
}

} // namespace latpath
