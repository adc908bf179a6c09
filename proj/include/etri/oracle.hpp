#pragma once

#include "etri/pmap.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace etri {

// Exhaustive generation of rooted planar Eulerian triangulations with F white
// and F black faces (root dart = dart 0, in a white face). Each rooted
// isomorphism class is produced exactly once by canonical gluing exploration.
inline constexpr int kMaxOracleFaces = 4;
void enumerate_maps(int F, const std::function<void(const Pmap&)>& emit);
std::vector<Pmap> enumerate_maps(int F);

// The marked oriented edge of a generated map: the canonical (black-side)
// dart of the root edge.
inline int marked_dart(const Pmap& m) { return m.alpha[m.root]; }

// Number of isomorphism classes of (map, origin, marked oriented edge of
// type (k-1,k)) with F white faces; equals [g^F] G_k.
long long count_two_point(int F, int k);

// The dividing line at distance d in a slice of height k >= d+1.
struct DividingLine {
    int p = 0;                  // number of two-step pieces; hull perimeter = 2p
    std::vector<int> vertices;  // x0, y0, x1, y1, ... as slice vertex ids
    std::vector<int> edges;     // forward darts of the line's edges, in walk order
    bool ended_on_left_x = false;
};
DividingLine dividing_line(const SliceStructure& s, int d);

// Checks properties (d1) and (d2) of a dividing line by explicit edge scan.
void check_dividing_line_properties(const SliceStructure& s, const DividingLine& line);

// Hull-perimeter histogram: count of (map, origin, marked edge of type
// (k-1,k)) with F white faces and perimeter 2p, keyed by p.
std::map<int, long long> count_hull(int F, int k, int d);

// Newline-delimited record of a generated map (stable golden format).
std::string dump_record(const Pmap& m);

// The slice split behind R_k = 1 + g R_k(R_{k+1} + R_{k-1}): remove the white
// face right of the base together with the black face across its long edge,
// cut along the leftmost backward path from the black face's third vertex,
// and return the two sub-slices (their codes are rooted at their bases).
struct SplitResult {
    bool case_a = false;            // long edge incident to the base origin
    std::vector<int> code1, code2;  // piece codes rooted at their bases
    int h1 = 0, h2 = 0;             // piece heights
    int f1 = 0, f2 = 0;             // piece white-face counts
};
SplitResult split_slice(const SliceStructure& s);

// Splits every slice and compares the multiset of split pairs against all
// pairs of slices. Throws on the first structural failure.
struct AppendixReport {
    long long slices = 0;       // slices examined (height <= k_max per F)
    long long case_a = 0;
    long long case_b = 0;
    bool pair_multisets_match = false;
    bool counts_match_series = false;
};
AppendixReport verify_appendix_split(int F_max, int k_max);

}  // namespace etri
