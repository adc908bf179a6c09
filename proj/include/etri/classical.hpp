#pragma once

#include "etri/series.hpp"

#include <vector>

namespace etri {

// Order-by-order solution of the slice relation
//   R_k = 1 + g R_k (R_{k+1} + R_{k-1}),  R_0 = 0,  R_k = 1 + O(g),
// together with R_infinity = 1 + 2 g R_infinity^2 and the two-point series
// G_k = R_k - R_{k-1} - [k=1].

enum class SweepSchedule { Jacobi, AscendingGaussSeidel, DescendingGaussSeidel };

struct SliceSeriesTable {
    int kmax = 0;
    int order = 0;
    std::vector<RatSeries> entries;  // entries[k-1] = R_k for 1 <= k <= kmax
    RatSeries r_infinity;

    // R_k with the R_0 = 0 convention; k > kmax falls back to r_infinity,
    // valid to the table's order for k >= order (stabilization).
    RatSeries R(int k) const;
};

SliceSeriesTable solve_classical(int kmax, int order, SweepSchedule schedule = SweepSchedule::Jacobi);

RatSeries r_infinity_series(int order);

RatSeries two_point_series(int k, int order);

}  // namespace etri
