#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace etri {

enum class FaceColor : uint8_t { White, Black, Outer };

// Rooted planar map in the dart representation: faces are counterclockwise
// dart cycles (face interior on the left of each dart), alpha is the edge
// involution. The vertex rotation sigma and everything else is derived.
//
// Edges carry the canonical orientation "black face on the left"; boundary
// edges of a map with an outer face keep their colored side, so a dart is
// forward iff its own face is black or its partner's face is white.
struct Pmap {
    std::vector<std::vector<int>> faces;
    std::vector<FaceColor> face_colors;
    std::vector<int> alpha;
    int root = 0;

    // derived by finalize()
    std::vector<int> face_of, pos_of;
    std::vector<int> sigma, sigma_inv;
    std::vector<int> vertex_of;
    std::vector<std::vector<int>> vertex_darts;  // darts with tail at v, one sigma orbit each
    int num_vertices = 0;
    int outer_face = -1;

    int n_darts() const { return static_cast<int>(alpha.size()); }
    int n_edges() const { return n_darts() / 2; }
    int next_in_face(int d) const {
        const auto& f = faces[face_of[d]];
        return f[(pos_of[d] + 1) % f.size()];
    }
    int prev_in_face(int d) const {
        const auto& f = faces[face_of[d]];
        return f[(pos_of[d] + f.size() - 1) % f.size()];
    }
    int tail(int d) const { return vertex_of[d]; }
    int head(int d) const { return vertex_of[alpha[d]]; }
    FaceColor dart_color(int d) const { return face_colors[face_of[d]]; }
    bool is_forward(int d) const {
        return dart_color(d) == FaceColor::Black || face_colors[face_of[alpha[d]]] == FaceColor::White;
    }
    int forward_dart(int d) const { return is_forward(d) ? d : alpha[d]; }
    int edge_of(int d) const { return d < alpha[d] ? d : alpha[d]; }
    // forward edge type: long iff the oriented distance drops by 2
    bool is_long_edge(int forward, const std::vector<int>& dist) const {
        return dist[head(forward)] == dist[tail(forward)] - 2;
    }

    void finalize();  // builds derived tables; throws on malformed input
    int euler_characteristic() const;
    bool is_connected() const;
    // full sphere-triangulation invariants (faces of degree 3, proper
    // coloring, genus 0, vertex tricolorability)
    void check_triangulation() const;

    // complete invariant of the rooted map (labels from a BFS over sigma/alpha)
    std::vector<int> canonical_code(int root_dart) const;

    // oriented graph distances from an origin vertex; throws if some vertex
    // is unreachable
    std::vector<int> oriented_distances(int origin) const;
};

// Rotation sweep used by every "leftmost" construction: starting from the
// anchor dart at vertex tail(anchor), visit the other darts at the same
// vertex in rotation order and return the first one satisfying pred, or -1.
// The sweep direction is the one calibrated against the brute-force counts.
int sweep_next(const Pmap& m, int anchor, const std::vector<char>& admissible);

// Calibrated against the brute-force hull counts and the dividing-line
// properties (d1)/(d2): with faces stored counterclockwise, "leftmost from
// the arrival dart" is the sigma sweep.
inline constexpr bool kLeftmostSweepUsesSigma = false;

template <class Pred>
int sweep_first(const Pmap& m, int anchor, Pred&& pred) {
    int v = m.tail(anchor);
    int deg = static_cast<int>(m.vertex_darts[v].size());
    int d = anchor;
    for (int i = 1; i < deg; ++i) {
        d = kLeftmostSweepUsesSigma ? m.sigma[d] : m.sigma_inv[d];
        if (pred(d)) return d;
    }
    return -1;
}

// A k-slice: a map with one outer face of degree 2k plus the boundary data.
struct SliceStructure {
    Pmap map;
    int k = 0;
    int apex = 0;
    int base_dart = 0;               // outer dart oriented (k-1) -> k
    std::vector<int> left_forward;   // black-side darts of the left boundary, apex upward
    std::vector<int> right_forward;  // outer-side forward darts; last one is the base
    std::vector<int> dist;           // oriented distances from the apex
    std::vector<int> left_vertices;  // l_0 = apex .. l_k = v1
    std::vector<int> right_vertices; // r_0 = apex .. r_{k-1}
    int white_faces = 0;
};

// Cut a pointed sphere map open along the leftmost backward shortest path
// from the head of the marked forward dart.
SliceStructure cut_slice(const Pmap& m, int origin, int marked_forward_dart);

// Inverse of cut_slice: re-glue the left boundary onto right boundary + base.
Pmap reglue_slice(const SliceStructure& s);

// Checks (s1)-(s3); throws with a description on the first violation.
void check_slice_properties(const SliceStructure& s);

// Extract the submap spanned by a set of inner faces of `m`; darts whose
// partner leaves the set are matched to fresh outer-face darts. The returned
// map has exactly one outer face (the face subset must be a disk) and carries
// old-dart ids via dart_map (old -> new, -1 if dropped).
struct PieceExtraction {
    Pmap piece;
    std::vector<int> dart_map;
};
PieceExtraction extract_piece(const Pmap& m, const std::vector<char>& keep_face);

}  // namespace etri
