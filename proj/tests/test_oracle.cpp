#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "etri/classical.hpp"
#include "etri/oracle.hpp"

#include <algorithm>
#include <set>

using namespace etri;

TEST_CASE("F=1: the rooted triangle map") {
    std::vector<Pmap> maps = enumerate_maps(1);
    REQUIRE(maps.size() == 1);
    const Pmap& m = maps[0];
    CHECK(m.n_edges() == 3);
    CHECK(m.num_vertices == 3);

    // second generation strategy: all gluings of one white and one black
    // triangle, deduplicated by canonical code at every white root dart
    std::set<std::vector<int>> codes;
    int valid = 0;
    std::vector<int> perm = {3, 4, 5};
    std::sort(perm.begin(), perm.end());
    do {
        Pmap cand;
        cand.faces = {{0, 1, 2}, {3, 4, 5}};
        cand.face_colors = {FaceColor::White, FaceColor::Black};
        cand.alpha.assign(6, -1);
        for (int i = 0; i < 3; ++i) {
            cand.alpha[i] = perm[i];
            cand.alpha[perm[i]] = i;
        }
        try {
            cand.finalize();
            cand.check_triangulation();
        } catch (const std::logic_error&) {
            continue;
        }
        ++valid;
        for (int r = 0; r < 3; ++r) codes.insert(cand.canonical_code(r));
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(valid == 3);                   // cyclic gluings are planar, the rest are not
    CHECK(codes.size() == 1);            // a single rooted class
    CHECK(codes.count(m.canonical_code(0)) == 1);
}

TEST_CASE("map invariants at F <= 3") {
    for (int F = 1; F <= 3; ++F) {
        for (const Pmap& m : enumerate_maps(F)) {
            CHECK(m.num_vertices == F + 2);
            for (int origin = 0; origin < m.num_vertices; ++origin) {
                std::vector<int> dist = m.oriented_distances(origin);
                int long_edges = 0;
                for (int d = 0; d < m.n_darts(); ++d) {
                    if (!m.is_forward(d)) continue;
                    int step = dist[m.head(d)] - dist[m.tail(d)];
                    REQUIRE((step == 1 || step == -2));
                    if (step == -2) ++long_edges;
                }
                CHECK(long_edges == F);
                // each face carries exactly one long edge, and the face across
                // it has the same type
                for (int f = 0; f < static_cast<int>(m.faces.size()); ++f) {
                    int count = 0;
                    int type = -1, other_type = -2;
                    for (int dart : m.faces[f]) {
                        int fw = m.forward_dart(dart);
                        if (!m.is_long_edge(fw, dist)) continue;
                        ++count;
                        type = dist[m.head(fw)];
                        int g = m.face_of[dart] == f ? m.face_of[m.alpha[dart]] : m.face_of[dart];
                        other_type = -1;
                        for (int dd : m.faces[g]) {
                            int fw2 = m.forward_dart(dd);
                            if (m.is_long_edge(fw2, dist)) other_type = dist[m.head(fw2)];
                        }
                    }
                    CHECK(count == 1);
                    CHECK(type == other_type);
                }
            }
        }
    }
}

TEST_CASE("erasing long edges leaves a quadrangulation") {
    for (int F = 1; F <= 3; ++F) {
        for (const Pmap& m : enumerate_maps(F)) {
            std::vector<int> dist = m.oriented_distances(0 % m.num_vertices);
            // merged face degree = 3 + 3 - 2 for each long edge; every face is
            // merged exactly once since it has exactly one long edge
            for (int d = 0; d < m.n_darts(); ++d) {
                if (!m.is_forward(d) || !m.is_long_edge(d, dist)) continue;
                size_t degree = m.faces[m.face_of[d]].size() + m.faces[m.face_of[m.alpha[d]]].size() - 2;
                CHECK(degree == 4);
            }
        }
    }
}

TEST_CASE("two-point counts match the series") {
    for (int F = 1; F <= 3; ++F) {
        for (int k = 1; k <= 6; ++k) {
            RatSeries gk = two_point_series(k, F);
            CHECK(Rational(count_two_point(F, k)) == gk.coeff(F));
        }
    }
    CHECK(count_two_point(1, 1) == 1);
    CHECK(count_two_point(1, 2) == 1);
    CHECK(count_two_point(1, 3) == 0);
}

TEST_CASE("rooted count balance between short and long markings") {
    // every (map, origin, edge) triple is marked either short of some type
    // (k-1,k) or long
    for (int F = 1; F <= 3; ++F) {
        std::vector<Pmap> maps = enumerate_maps(F);
        long long total = static_cast<long long>(maps.size()) * (F + 2);
        long long shorts = 0;
        for (int k = 1; k <= 2 * F + 2; ++k) shorts += count_two_point(F, k);
        long long longs = 0;
        for (const Pmap& m : maps) {
            int md = marked_dart(m);
            for (int v = 0; v < m.num_vertices; ++v) {
                std::vector<int> dist = m.oriented_distances(v);
                if (dist[m.head(md)] == dist[m.tail(md)] - 2) ++longs;
            }
        }
        CHECK(total == shorts + longs);
    }
}

TEST_CASE("slices: cut, verify, reglue") {
    for (int F = 1; F <= 3; ++F) {
        for (const Pmap& m : enumerate_maps(F)) {
            int md = marked_dart(m);
            for (int v = 0; v < m.num_vertices; ++v) {
                std::vector<int> dist = m.oriented_distances(v);
                int k = dist[m.head(md)];
                if (dist[m.tail(md)] != k - 1) continue;
                SliceStructure s = cut_slice(m, v, md);
                CHECK(s.k == k);
                check_slice_properties(s);
                CHECK(s.map.faces[s.map.outer_face].size() == 2 * static_cast<size_t>(k));

                Pmap back = reglue_slice(s);
                CHECK(back.canonical_code(md) == m.canonical_code(md));
            }
        }
    }
}

TEST_CASE("triangle slice at k=2") {
    Pmap m = enumerate_maps(1)[0];
    int md = marked_dart(m);
    // find the origin that makes the root edge of type (1,2)
    int origin = -1;
    for (int v = 0; v < m.num_vertices; ++v) {
        std::vector<int> dist = m.oriented_distances(v);
        if (dist[m.tail(md)] == 1 && dist[m.head(md)] == 2) origin = v;
    }
    REQUIRE(origin != -1);
    SliceStructure s = cut_slice(m, origin, md);
    CHECK(s.k == 2);
    CHECK(s.map.faces[s.map.outer_face].size() == 4);

    // 1-slices are bundles: outer face of degree 2
    int o1 = m.tail(md);  // origin at the tail gives type (0,1)
    SliceStructure bundle = cut_slice(m, o1, md);
    CHECK(bundle.k == 1);
    CHECK(bundle.map.faces[bundle.map.outer_face].size() == 2);
}

TEST_CASE("dividing line basics") {
    // at d = l-1 in slices of height l = 2 the line reduces to the base
    // backward edge (p = 0)
    for (int F = 1; F <= 2; ++F) {
        for (const Pmap& m : enumerate_maps(F)) {
            int md = marked_dart(m);
            for (int v = 0; v < m.num_vertices; ++v) {
                std::vector<int> dist = m.oriented_distances(v);
                if (dist[m.tail(md)] != 1 || dist[m.head(md)] != 2) continue;
                SliceStructure s = cut_slice(m, v, md);
                DividingLine line = dividing_line(s, 1);
                CHECK(line.p == 0);
            }
        }
    }
}

TEST_CASE("dividing line properties (d1)/(d2) at F <= 3") {
    for (int F = 2; F <= 3; ++F) {
        for (const Pmap& m : enumerate_maps(F)) {
            int md = marked_dart(m);
            for (int v = 0; v < m.num_vertices; ++v) {
                std::vector<int> dist = m.oriented_distances(v);
                int k = dist[m.head(md)];
                if (dist[m.tail(md)] != k - 1 || k < 3) continue;
                SliceStructure s = cut_slice(m, v, md);
                for (int d = 2; d <= k - 1; ++d) {
                    DividingLine line = dividing_line(s, d);
                    CHECK(line.p >= 1);  // perimeter 2p >= 2
                    check_dividing_line_properties(s, line);
                }
            }
        }
    }
}

TEST_CASE("dump record format") {
    Pmap m = enumerate_maps(1)[0];
    std::string rec = dump_record(m);
    CHECK(rec.substr(0, 4) == "E=3;");
    CHECK(rec.find("root=0") != std::string::npos);
    CHECK(rec.find("colors=01") != std::string::npos);
}

TEST_CASE("appendix split bijection") {
    AppendixReport rep = verify_appendix_split(3, 4);
    CHECK(rep.pair_multisets_match);
    CHECK(rep.counts_match_series);
    CHECK(rep.case_a > 0);
    CHECK(rep.case_b > 0);
}
