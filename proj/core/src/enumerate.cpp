#include "icosal/classify.hpp"

#include <atomic>
#include <cstddef>
#include <future>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

namespace icosal {

namespace {

// Per-value data hoisted out of the inner pair loop: for fixed central value
// w the side tables depend on x alone, so the quadratic scan reduces to
// multiset comparisons plus rare deeper checks.
struct SideData {
    Cyclo x;
    UnramifiedParam s3;
    UnramifiedParam ad;
};

std::vector<Cyclo> roots_mod(long n) {
    std::vector<Cyclo> out;
    out.reserve(static_cast<std::size_t>(n));
    for (long e = 0; e < n; ++e) out.push_back(Cyclo::root_of_unity(n, e));
    return out;
}

std::vector<Cyclo> roots_of_order_up_to(long bound) {
    std::vector<Cyclo> out;
    for (long m = 1; m <= bound; ++m)
        for (long k = 0; k < m; ++k)
            if (std::gcd(k, m) == 1) out.push_back(Cyclo::root_of_unity(m, k));
    return out;
}

std::vector<SideData> build_side(const std::vector<Cyclo>& mu, const Cyclo& w) {
    std::vector<SideData> side;
    side.reserve(mu.size());
    for (const Cyclo& x : mu) {
        const UnramifiedParam p({x, w / x});
        side.push_back({x, sym_power(p, 3), adjoint(p)});
    }
    return side;
}

void scan_center_pair(const std::vector<Cyclo>& mu, const Cyclo& w, const Cyclo& wp,
                      bool trivial_center, EnumerationReport& rep) {
    const Cyclo one(1);
    const bool w_is_one = w == one;
    const std::vector<SideData> aside = build_side(mu, w);
    const std::vector<SideData> cside = build_side(mu, wp);

    for (const SideData& lhs : aside) {
        for (const SideData& rhs : cside) {
            ++rep.tuples_scanned;
            const bool sym3 = lhs.s3 == rhs.s3;
            const bool adiso = lhs.ad == rhs.ad;
            if (!sym3 && !adiso) continue;

            const Cyclo& a = lhs.x;
            const Cyclo& c = rhs.x;
            const bool si3 = check_si3_local(a, w, c, wp);

            if (sym3) {
                ++rep.sym3_matches;
                ClassificationReport r = check_sym3_match(a, w, c, wp);
                bool case2 = false;
                for (const CaseWitness& wit : r.matched) {
                    ++rep.case_counts[static_cast<std::size_t>(wit.label)];
                    if (wit.label == CaseLabel::case_2) case2 = true;
                }
                if (r.matched.empty()) rep.uncovered.push_back({a, w, c, wp});
                if (case2 && w_is_one && si3) {
                    ++rep.case2_w1_count;
                    if (a.pow(4) != one) ++rep.case2_w1_a4_violations;
                }
                if (trivial_center && si3) {
                    ++rep.consistent_pairs;
                    const TrivialCentralResult tc = classify_trivial_central(a, c);
                    if (tc.outcome == TrivialCentralResult::Case::none) {
                        rep.dichotomy_uncovered.push_back({a, w, c, wp});
                    } else {
                        if (tc.outcome == TrivialCentralResult::Case::case_i) {
                            ++(tc.m == 4 ? rep.case_i_m4 : rep.case_i_m6);
                        } else {
                            ++rep.case_ii;
                            const UnramifiedParam cpar({c, c.inverse()});
                            const UnramifiedParam apar({a, a.inverse()});
                            if (!multiset_equal(cpar, tau_conjugate(apar)))
                                ++rep.tau_mismatches;
                        }
                        const NumberFieldDesc f =
                            rationality_field(UnramifiedParam({a, a.inverse()}));
                        const NumberFieldDesc want =
                            tc.outcome == TrivialCentralResult::Case::case_i
                                ? NumberFieldDesc::rationals()
                                : NumberFieldDesc::fixed_field(5, {1, 4});
                        if (!(f == want)) ++rep.rationality_mismatches;
                    }
                }
                rep.solutions.push_back({a, w, c, wp, std::move(r)});
            }

            if (adiso && si3) {
                ++rep.adjoint_si3_pairs;
                const PowerRelation pr = power_relation_of(a, w);
                ++rep.power_counts[static_cast<std::size_t>(pr)];
                if (pr == PowerRelation::none) rep.power_none.push_back({a, w, c, wp});
            }
        }
    }
}

template <typename T>
void append_moved(std::vector<T>& dst, std::vector<T>& src) {
    dst.insert(dst.end(), std::make_move_iterator(src.begin()),
               std::make_move_iterator(src.end()));
    src.clear();
}

} // namespace

EnumerationReport enumerate_solutions(long max_order, bool w_trivial, long max_central_order,
                                      int workers) {
    if (max_order < 1)
        throw std::domain_error("enumerate_solutions: max_order must be positive");
    if (!w_trivial && max_central_order < 1)
        throw std::domain_error("enumerate_solutions: max_central_order must be positive");

    const std::vector<Cyclo> mu = roots_mod(max_order);

    std::vector<std::pair<Cyclo, Cyclo>> centers;
    if (w_trivial) {
        centers.emplace_back(Cyclo(1), Cyclo(1));
    } else {
        const std::vector<Cyclo> ws = roots_of_order_up_to(max_central_order);
        std::vector<Cyclo> cubes;
        cubes.reserve(ws.size());
        for (const Cyclo& w : ws) cubes.push_back(w.pow(3));
        for (std::size_t i = 0; i < ws.size(); ++i)
            for (std::size_t j = 0; j < ws.size(); ++j)
                if (cubes[i] == cubes[j]) centers.emplace_back(ws[i], ws[j]);
    }

    EnumerationReport total;
    total.max_order = max_order;
    total.trivial_center = w_trivial;
    total.max_central_order = w_trivial ? 1 : max_central_order;

    const std::size_t n_units = centers.size();
    int pool = workers > 0 ? workers
                           : static_cast<int>(std::thread::hardware_concurrency());
    if (pool < 1) pool = 1;
    if (pool > 8) pool = 8;
    if (static_cast<std::size_t>(pool) > n_units) pool = static_cast<int>(n_units);

    std::vector<EnumerationReport> parts(n_units);
    if (pool == 1) {
        for (std::size_t u = 0; u < n_units; ++u)
            scan_center_pair(mu, centers[u].first, centers[u].second, w_trivial, parts[u]);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            for (;;) {
                const std::size_t u = next.fetch_add(1);
                if (u >= n_units) return;
                scan_center_pair(mu, centers[u].first, centers[u].second, w_trivial,
                                 parts[u]);
            }
        };
        std::vector<std::future<void>> futs;
        futs.reserve(static_cast<std::size_t>(pool));
        for (int t = 0; t < pool; ++t)
            futs.push_back(std::async(std::launch::async, worker));
        for (auto& f : futs) f.get();
    }

    // Merging in unit order keeps the report independent of thread timing.
    for (EnumerationReport& p : parts) {
        total.tuples_scanned += p.tuples_scanned;
        total.sym3_matches += p.sym3_matches;
        for (std::size_t k = 0; k < total.case_counts.size(); ++k)
            total.case_counts[k] += p.case_counts[k];
        append_moved(total.solutions, p.solutions);
        append_moved(total.uncovered, p.uncovered);
        total.adjoint_si3_pairs += p.adjoint_si3_pairs;
        for (std::size_t k = 0; k < total.power_counts.size(); ++k)
            total.power_counts[k] += p.power_counts[k];
        append_moved(total.power_none, p.power_none);
        total.case2_w1_count += p.case2_w1_count;
        total.case2_w1_a4_violations += p.case2_w1_a4_violations;
        total.consistent_pairs += p.consistent_pairs;
        total.case_i_m4 += p.case_i_m4;
        total.case_i_m6 += p.case_i_m6;
        total.case_ii += p.case_ii;
        append_moved(total.dichotomy_uncovered, p.dichotomy_uncovered);
        total.rationality_mismatches += p.rationality_mismatches;
        total.tau_mismatches += p.tau_mismatches;
    }
    return total;
}

} // namespace icosal
