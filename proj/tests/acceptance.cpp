// End-to-end acceptance runs: every published or hand-derived value the
// engine must reproduce, plus the randomized invariant sweeps. One line per
// criterion; the exit code is the number of failures.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "latpath/count.hpp"
#include "latpath/serialize.hpp"
#include "test_util.hpp"

using namespace latpath;
using testutil::triangle;
using testutil::x_minus_eps_y;

namespace {

struct Harness {
    int failures = 0;

    void criterion(int number, const std::string& label, const std::function<bool()>& body) {
        auto started = std::chrono::steady_clock::now();
        bool ok = false;
        std::string note;
        try {
            ok = body();
        } catch (const std::exception& e) {
            note = std::string(" (exception: ") + e.what() + ")";
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - started)
                      .count();
        std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << std::setw(2) << number
                  << " (" << std::setw(5) << ms << " ms)  " << label << note << "\n";
        if (!ok) ++failures;
    }
};

std::vector<LatticePolygon> corpus() {
    std::vector<LatticePolygon> polys;
    for (std::int64_t d = 2; d <= 5; ++d) polys.push_back(triangle(d));
    for (std::int64_t r = 1; r <= 3; ++r) {
        for (std::int64_t s = r; s <= 3; ++s) polys.push_back(testutil::rectangle(r, s));
    }
    polys.push_back(make_polygon({{0, 0}, {3, 0}, {1, 1}, {0, 1}}));
    polys.push_back(make_polygon({{0, 0}, {2, 0}, {2, 1}, {0, 3}}));
    return polys;
}

std::vector<DirectionOrder> eight_orders() {
    std::vector<DirectionOrder> orders;
    for (int sa : {1, -1}) {
        for (int st : {1, -1}) {
            orders.emplace_back(LatticePoint{sa, 0}, LatticePoint{0, st});
            orders.emplace_back(LatticePoint{0, sa}, LatticePoint{st, 0});
        }
    }
    return orders;
}

DirectionOrder random_order(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    while (true) {
        LatticePoint a{coeff(rng), coeff(rng)};
        LatticePoint t{coeff(rng), coeff(rng)};
        if (cross(a, t) != 0) return DirectionOrder(a, t);
    }
}

} // namespace

int main() {
    Harness h;

    h.criterion(1, "degree-3 triangle, delta 1: 12 rational cubics, under 1 s", [] {
        auto started = std::chrono::steady_clock::now();
        CountReport report = count_complex(triangle(3), x_minus_eps_y(), 1);
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - started)
                      .count();
        return report.total == 12 && ms < 1000;
    });

    h.criterion(2, "degree-4 triangle, delta 2: 225 genus-1 quartics, under 1 s", [] {
        auto started = std::chrono::steady_clock::now();
        CountReport report = count_complex(triangle(4), x_minus_eps_y(), 2);
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - started)
                      .count();
        return report.total == 225 && report.enumerated == 78 && ms < 1000;
    });

    h.criterion(3, "discriminant degrees 3(d-1)^2 for d = 2..5", [] {
        for (std::int64_t d = 2; d <= 5; ++d) {
            if (count_complex(triangle(d), x_minus_eps_y(), 1).total !=
                discriminant_degree(d)) {
                return false;
            }
        }
        return discriminant_degree(2) == 3 && discriminant_degree(3) == 12 &&
               discriminant_degree(4) == 27 && discriminant_degree(5) == 48;
    });

    h.criterion(4, "delta 0 count is 1 across the corpus", [] {
        std::vector<LatticePolygon> polys = corpus();
        // also the transposed rectangles, explicitly
        for (std::int64_t r = 1; r <= 3; ++r) {
            for (std::int64_t s = 1; s <= 3; ++s) polys.push_back(testutil::rectangle(r, s));
        }
        for (const LatticePolygon& poly : polys) {
            if (count_complex(poly, x_minus_eps_y(), 0).total != 1) return false;
        }
        return true;
    });

    h.criterion(5, "order invariance across 8 orders, corpus deltas up to 3", [] {
        std::vector<DirectionOrder> orders = eight_orders();
        for (const LatticePolygon& poly : corpus()) {
            std::size_t max_delta = std::min<std::size_t>(3, poly.m() - 1);
            for (std::size_t delta = 0; delta <= max_delta; ++delta) {
                SweepResult sweep = invariance_sweep(poly, delta, orders);
                if (!sweep.consistent) return false;
            }
        }
        return true;
    });

    h.criterion(6, "unimodular invariance, 5 random maps per corpus case", [] {
        std::mt19937_64 rng(190700);
        for (const LatticePolygon& poly : corpus()) {
            std::size_t max_delta = std::min<std::size_t>(3, poly.m() - 1);
            for (std::size_t delta = 0; delta <= max_delta; ++delta) {
                Integer base = count_complex(poly, x_minus_eps_y(), delta).total;
                for (int trial = 0; trial < 5; ++trial) {
                    testutil::Unimodular u = testutil::random_unimodular(rng);
                    LatticePolygon image = u.apply(poly);
                    DirectionOrder pushed = u.push(x_minus_eps_y());
                    if (count_complex(image, pushed, delta).total != base) return false;
                }
            }
        }
        return true;
    });

    h.criterion(7, "unit square, delta 1: 2", [] {
        return count_complex(testutil::rectangle(1, 1), x_minus_eps_y(), 1).total == 2;
    });

    h.criterion(8, "degree-2 triangle, delta 1: multiplicity multiset {2,1,0,0}", [] {
        CountReport report = count_complex(triangle(2), x_minus_eps_y(), 1);
        std::multiset<int> values;
        for (const PathContribution& c : report.per_path) {
            values.insert(static_cast<int>(c.mu.mu));
        }
        return values == std::multiset<int>{0, 0, 1, 2} && report.total == 3;
    });

    h.criterion(9, "positive-quadrant real counts: 12 of 12 cubics, 217 of 225 quartics", [] {
        SignSequence signs8 = SignSequence::uniform(8, parse_sign_pair("++"));
        if (count_real(triangle(3), x_minus_eps_y(), 1, signs8).total != 12) return false;
        SignSequence signs12 = SignSequence::uniform(12, parse_sign_pair("++"));
        return count_real(triangle(4), x_minus_eps_y(), 2, signs12).total == 217;
    });

    h.criterion(10, "a quartic path with multiplicity 9 and real multiplicity 1", [] {
        SignSequence signs12 = SignSequence::uniform(12, parse_sign_pair("++"));
        CountReport report = count_real(triangle(4), x_minus_eps_y(), 2, signs12);
        for (const PathContribution& c : report.per_path) {
            if (c.mu.mu == 9 && c.real.mu_r == 1) return true;
        }
        return false;
    });

    h.criterion(11, "degree-4 triangle, delta 3: 675 rational quartics", [] {
        // 620 irreducible plus C(11,2) = 55 line-plus-cubic splittings; the
        // split type has total genus sum 1 over two components
        if (multicomponent_genus({1, 0}) != 0) return false;
        return count_complex(triangle(4), x_minus_eps_y(), 3).total == 675;
    });

    h.criterion(12, "randomized bound and parity properties, 200 trials", [] {
        std::mt19937_64 rng(55200);
        std::uniform_int_distribution<int> bits(0, 3);
        struct Plan {
            std::int64_t degree;
            int trials;
        };
        for (Plan plan : {Plan{2, 100}, Plan{3, 60}, Plan{4, 40}}) {
            LatticePolygon poly = triangle(plan.degree);
            for (int trial = 0; trial < plan.trials; ++trial) {
                DirectionOrder order = random_order(rng);
                std::uniform_int_distribution<std::size_t> deltas(0, poly.m() - 1);
                std::size_t delta = deltas(rng);
                std::size_t n = poly.m() - delta;
                SignSequence signs;
                for (std::size_t j = 0; j < n; ++j) {
                    signs.signs.push_back(SignPair{static_cast<std::uint8_t>(bits(rng))});
                }
                CountReport complex_report = count_complex(poly, order, delta);
                CountReport real_report = count_real(poly, order, delta, signs);
                CountReport nu_report = count_welschinger(poly, order, delta);
                if (real_report.total < 0) return false;
                if (real_report.total > complex_report.total) return false;
                if ((complex_report.total - real_report.total) % 2 != 0) return false;
                Integer nu_abs = nu_report.total < 0 ? Integer(-nu_report.total)
                                                     : nu_report.total;
                if (nu_abs > real_report.total) return false;
                for (std::size_t i = 0; i < complex_report.per_path.size(); ++i) {
                    const Integer& mu = complex_report.per_path[i].mu.mu;
                    const Integer& mu_r = real_report.per_path[i].real.mu_r;
                    const Integer& nu = nu_report.per_path[i].real.nu;
                    if (mu_r > mu) return false;
                    if ((mu_r - mu) % 2 != 0) return false;
                    if ((nu - mu) % 2 != 0) return false;
                }
            }
        }
        return true;
    });

    h.criterion(13, "signed counts: conic pairs 3, cubic total positive and even, delta 0 is 1",
                [] {
                    if (count_welschinger(triangle(2), x_minus_eps_y(), 1).total != 3) {
                        return false;
                    }
                    CountReport w3 =
                        count_welschinger(triangle(3), testutil::y_minus_eps_x(), 1);
                    if (!(w3.total > 0) || w3.total % 2 != 0) return false;
                    for (const LatticePolygon& poly : corpus()) {
                        if (count_welschinger(poly, x_minus_eps_y(), 0).total != 1) {
                            return false;
                        }
                    }
                    return true;
                });

    h.criterion(14, "memoized engine matches the naive recursion and the path oracle", [] {
        for (std::int64_t d : {2, 3}) {
            LatticePolygon poly = triangle(d);
            DirectionOrder order = x_minus_eps_y();
            PathContext ctx = make_path_context(poly, order);
            MultiplicityEngine engine(ctx);
            for (std::size_t delta = 0; delta <= poly.m() - 1; ++delta) {
                std::size_t n = poly.m() - delta;
                PathEnumeration paths(poly, order, n);

                std::set<std::string> enumerated;
                auto subset = paths.subset_at(0);
                for (std::uint64_t rank = 0; rank < paths.size(); ++rank) {
                    LatticePath gamma = paths.make_path(subset);
                    paths.next_subset(subset);
                    enumerated.insert(to_string(gamma));
                    if (engine.mu_side(gamma, Side::plus) !=
                        testutil::naive_mu_side(gamma, Side::plus, ctx)) {
                        return false;
                    }
                    if (engine.mu_side(gamma, Side::minus) !=
                        testutil::naive_mu_side(gamma, Side::minus, ctx)) {
                        return false;
                    }
                }

                std::set<std::string> oracle;
                for (const LatticePath& path : testutil::oracle_paths(poly, order, n)) {
                    oracle.insert(to_string(path));
                }
                if (oracle != enumerated) return false;
            }
        }
        return true;
    });

    std::cout << (h.failures == 0 ? "all criteria pass" : "FAILURES: " + std::to_string(h.failures))
              << "\n";
    return h.failures;
}
