#include "etri/classical.hpp"

#include <stdexcept>

namespace etri {

RatSeries SliceSeriesTable::R(int k) const {
    if (k < 0) throw std::invalid_argument("R_k needs k >= 0");
    if (k == 0) return RatSeries("g", order);
    if (k <= kmax) return entries[k - 1];
    return r_infinity;
}

RatSeries r_infinity_series(int order) {
    // Route 1: g-adic fixed point of S = 1 + 2 g S^2.
    RatSeries s = RatSeries::constant("g", 1, order);
    RatSeries g = RatSeries::identity("g", order);
    for (int sweep = 0; sweep <= order; ++sweep) {
        RatSeries next = RatSeries::constant("g", 1, order) + Rational(2) * (g * (s * s));
        if (next == s) break;
        s = next;
    }
    // Route 2: (1 - sqrt(1-8g)) / (4g); the numerator has valuation 1.
    RatSeries radicand = RatSeries::constant("g", 1, order + 1);
    radicand.set_coeff(1, -8);
    RatSeries closed =
        (RatSeries::constant("g", 1, order + 1) - series_sqrt(radicand)).shifted_down(1) * Rational(1, 4);
    if (!(closed == s)) throw std::logic_error("r_infinity routes disagree");
    return s;
}

SliceSeriesTable solve_classical(int kmax, int order, SweepSchedule schedule) {
    if (kmax < 1 || order < 0) throw std::invalid_argument("solve_classical needs kmax >= 1, order >= 0");

    // The relation couples R_k upward; close the tail with R_infinity, which
    // agrees with R_k to the working order once k exceeds it (the closed form
    // puts the first discrepancy at g-valuation ~ k+1).
    int K = kmax + order + 2;
    RatSeries rinf = r_infinity_series(order);
    RatSeries g = RatSeries::identity("g", order);
    RatSeries one = RatSeries::constant("g", 1, order);

    std::vector<RatSeries> r(K + 2, one);
    r[0] = RatSeries("g", order);  // R_0 = 0
    r[K + 1] = rinf;

    auto updated = [&](const std::vector<RatSeries>& cur, int k) {
        return one + g * (cur[k] * (cur[k + 1] + cur[k - 1]));
    };

    // Each sweep settles at least one more g-order (the update's order-n
    // coefficient only reads orders < n), so order+1 sweeps must reach the
    // fixed point; anything more signals a bug.
    bool converged = false;
    for (int sweep = 0; sweep <= order + 1; ++sweep) {
        bool changed = false;
        if (schedule == SweepSchedule::Jacobi) {
            std::vector<RatSeries> next = r;
            for (int k = 1; k <= K; ++k) next[k] = updated(r, k);
            changed = !(next == r);
            if (changed) r = std::move(next);
        } else {
            bool ascending = schedule == SweepSchedule::AscendingGaussSeidel;
            for (int i = 0; i < K; ++i) {
                int k = ascending ? i + 1 : K - i;
                RatSeries next = updated(r, k);
                if (!(next == r[k])) {
                    changed = true;
                    r[k] = std::move(next);
                }
            }
        }
        if (!changed) {
            converged = true;
            break;
        }
    }
    if (!converged) throw std::logic_error("classical recursion did not reach its g-adic fixed point");

    SliceSeriesTable table;
    table.kmax = kmax;
    table.order = order;
    table.entries.assign(r.begin() + 1, r.begin() + kmax + 1);
    table.r_infinity = std::move(rinf);
    return table;
}

RatSeries two_point_series(int k, int order) {
    if (k < 1) throw std::invalid_argument("two_point_series needs k >= 1");
    SliceSeriesTable t = solve_classical(k, order);
    RatSeries gk = t.R(k) - t.R(k - 1);
    if (k == 1) gk.set_coeff(0, gk.coeff(0) - 1);
    return gk;
}

}  // namespace etri
