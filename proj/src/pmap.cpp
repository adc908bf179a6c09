#include "etri/pmap.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace etri {

void Pmap::finalize() {
    int nd = n_darts();
    if (nd == 0 || nd % 2) throw std::logic_error("map needs a positive even number of darts");
    face_of.assign(nd, -1);
    pos_of.assign(nd, -1);
    if (faces.size() != face_colors.size()) throw std::logic_error("face/color size mismatch");
    outer_face = -1;
    for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
        if (face_colors[f] == FaceColor::Outer) {
            if (outer_face != -1) throw std::logic_error("more than one outer face");
            outer_face = f;
        }
        for (int i = 0; i < static_cast<int>(faces[f].size()); ++i) {
            int d = faces[f][i];
            if (d < 0 || d >= nd || face_of[d] != -1) throw std::logic_error("faces do not partition darts");
            face_of[d] = f;
            pos_of[d] = i;
        }
    }
    for (int d = 0; d < nd; ++d) {
        if (face_of[d] == -1) throw std::logic_error("dart missing from all faces");
        if (alpha[d] == d || alpha[d] < 0 || alpha[d] >= nd || alpha[alpha[d]] != d)
            throw std::logic_error("alpha is not a fixed-point-free involution");
    }
    sigma.assign(nd, -1);
    sigma_inv.assign(nd, -1);
    for (int d = 0; d < nd; ++d) sigma[d] = alpha[prev_in_face(d)];
    for (int d = 0; d < nd; ++d) sigma_inv[sigma[d]] = d;

    vertex_of.assign(nd, -1);
    vertex_darts.clear();
    num_vertices = 0;
    for (int d = 0; d < nd; ++d) {
        if (vertex_of[d] != -1) continue;
        vertex_darts.emplace_back();
        int e = d;
        do {
            vertex_of[e] = num_vertices;
            vertex_darts.back().push_back(e);
            e = sigma[e];
        } while (e != d);
        ++num_vertices;
    }
}

int Pmap::euler_characteristic() const {
    return num_vertices - n_edges() + static_cast<int>(faces.size());
}

bool Pmap::is_connected() const {
    std::vector<char> seen(n_darts(), 0);
    std::deque<int> q{0};
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
        int d = q.front();
        q.pop_front();
        for (int e : {sigma[d], alpha[d]}) {
            if (!seen[e]) {
                seen[e] = 1;
                ++count;
                q.push_back(e);
            }
        }
    }
    return count == n_darts();
}

void Pmap::check_triangulation() const {
    if (outer_face != -1) throw std::logic_error("triangulation check on a map with boundary");
    int white = 0, black = 0;
    for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
        if (faces[f].size() != 3) throw std::logic_error("face of degree != 3");
        (face_colors[f] == FaceColor::White ? white : black)++;
    }
    if (white != black) throw std::logic_error("unbalanced face colors");
    for (int d = 0; d < n_darts(); ++d) {
        if (dart_color(d) == dart_color(alpha[d]))
            throw std::logic_error("edge incident to two faces of the same color");
    }
    if (!is_connected()) throw std::logic_error("map not connected");
    if (euler_characteristic() != 2) throw std::logic_error("map not planar");

    // vertex colors 0/1/2 increasing along oriented edges
    std::vector<int> color(num_vertices, -1);
    std::deque<int> q{vertex_of[0]};
    color[vertex_of[0]] = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int d : vertex_darts[v]) {
            int w = head(d);
            int expect = is_forward(d) ? (color[v] + 1) % 3 : (color[v] + 2) % 3;
            if (color[w] == -1) {
                color[w] = expect;
                q.push_back(w);
            } else if (color[w] != expect) {
                throw std::logic_error("vertex colors are not cyclic along orientations");
            }
        }
    }
}

std::vector<int> Pmap::canonical_code(int root_dart) const {
    std::vector<int> label(n_darts(), -1);
    std::vector<int> order;
    order.reserve(n_darts());
    label[root_dart] = 0;
    order.push_back(root_dart);
    for (size_t i = 0; i < order.size(); ++i) {
        int d = order[i];
        for (int e : {sigma[d], alpha[d]}) {
            if (label[e] == -1) {
                label[e] = static_cast<int>(order.size());
                order.push_back(e);
            }
        }
    }
    std::vector<int> code;
    code.reserve(3 * n_darts() + 1);
    code.push_back(n_darts());
    for (int d : order) {
        code.push_back(label[sigma[d]]);
        code.push_back(label[alpha[d]]);
        code.push_back(static_cast<int>(dart_color(d)));
    }
    return code;
}

std::vector<int> Pmap::oriented_distances(int origin) const {
    std::vector<int> dist(num_vertices, -1);
    std::deque<int> q{origin};
    dist[origin] = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int d : vertex_darts[v]) {
            if (!is_forward(d)) continue;
            int w = head(d);
            if (dist[w] == -1) {
                dist[w] = dist[v] + 1;
                q.push_back(w);
            }
        }
    }
    for (int v = 0; v < num_vertices; ++v)
        if (dist[v] == -1) throw std::logic_error("vertex unreachable by oriented paths");
    return dist;
}

// ---------------------------------------------------------------------------

namespace {

// Leftmost backward step: from `vertex` = tail(arrival), pick the first dart
// e in the rotation sweep from the arrival dart such that e leads backwards
// to a vertex one step closer to the origin. Returns -1 if none exists.
int backward_step(const Pmap& m, const std::vector<int>& dist, int arrival) {
    int v = m.tail(arrival);
    return sweep_first(m, arrival, [&](int e) {
        return m.is_forward(m.alpha[e]) && dist[m.head(e)] == dist[v] - 1;
    });
}

}  // namespace

SliceStructure cut_slice(const Pmap& m, int origin, int marked_forward_dart) {
    if (!m.is_forward(marked_forward_dart)) throw std::invalid_argument("marked dart is not forward");
    std::vector<int> dist0 = m.oriented_distances(origin);
    int k = dist0[m.head(marked_forward_dart)];
    if (dist0[m.tail(marked_forward_dart)] != k - 1)
        throw std::invalid_argument("marked dart is not of type (k-1,k)");

    // leftmost backward shortest path, recorded as forward darts f_k .. f_1
    std::vector<int> down{marked_forward_dart};
    std::vector<char> on_path(m.num_vertices, 0);
    on_path[m.head(marked_forward_dart)] = 1;
    int arrival = marked_forward_dart;
    while (dist0[m.tail(arrival)] > 0) {
        int v = m.tail(arrival);
        if (on_path[v]) throw std::logic_error("backward path revisits a vertex");
        on_path[v] = 1;
        int e = backward_step(m, dist0, arrival);
        if (e == -1) throw std::logic_error("no backward step found");
        int f = m.alpha[e];
        down.push_back(f);
        arrival = f;
    }

    int nd = m.n_darts();
    SliceStructure s;
    s.k = k;
    s.map.faces = m.faces;
    s.map.face_colors = m.face_colors;
    s.map.alpha = m.alpha;
    s.map.alpha.resize(nd + 2 * k, -1);
    s.map.root = m.root;
    std::vector<int> outer_cycle;
    s.left_forward.resize(k);
    s.right_forward.resize(k);
    for (int i = 1; i <= k; ++i) {
        int f = down[k - i];  // f_i joins p_{i-1} -> p_i
        int w = m.alpha[f];
        int lam = nd + 2 * (i - 1);
        int rho = lam + 1;
        s.map.alpha[f] = lam;
        s.map.alpha[lam] = f;
        s.map.alpha[w] = rho;
        s.map.alpha[rho] = w;
        s.left_forward[i - 1] = f;
        s.right_forward[i - 1] = rho;
    }
    for (int i = 1; i <= k; ++i) outer_cycle.push_back(s.right_forward[i - 1]);
    for (int i = k; i >= 1; --i) outer_cycle.push_back(s.map.alpha[s.left_forward[i - 1]]);
    s.map.faces.push_back(outer_cycle);
    s.map.face_colors.push_back(FaceColor::Outer);
    s.map.finalize();

    if (s.map.num_vertices != m.num_vertices + k - 1)
        throw std::logic_error("cut did not duplicate the path interior");
    if (s.map.euler_characteristic() != 2) throw std::logic_error("cut produced a non-planar map");

    s.base_dart = s.right_forward[k - 1];
    s.apex = s.map.tail(s.right_forward[0]);
    s.dist = s.map.oriented_distances(s.apex);
    s.left_vertices.resize(k + 1);
    s.right_vertices.resize(k);
    for (int i = 0; i < k; ++i) {
        s.left_vertices[i] = s.map.tail(s.left_forward[i]);
        s.right_vertices[i] = s.map.tail(s.right_forward[i]);
    }
    s.left_vertices[k] = s.map.head(s.left_forward[k - 1]);
    for (int f = 0; f < static_cast<int>(s.map.faces.size()); ++f)
        if (s.map.face_colors[f] == FaceColor::White) ++s.white_faces;
    return s;
}

Pmap reglue_slice(const SliceStructure& s) {
    Pmap m;
    int nd = s.map.n_darts() - 2 * s.k;
    m.alpha.assign(s.map.alpha.begin(), s.map.alpha.begin() + nd);
    for (int i = 0; i < s.k; ++i) {
        int f = s.left_forward[i];
        int w = s.map.alpha[s.right_forward[i]];
        m.alpha[f] = w;
        m.alpha[w] = f;
    }
    for (int fi = 0; fi < static_cast<int>(s.map.faces.size()); ++fi) {
        if (s.map.face_colors[fi] == FaceColor::Outer) continue;
        m.faces.push_back(s.map.faces[fi]);
        m.face_colors.push_back(s.map.face_colors[fi]);
    }
    m.root = s.map.root;
    m.finalize();
    return m;
}

void check_slice_properties(const SliceStructure& s) {
    const Pmap& m = s.map;
    int k = s.k;
    const auto& outer = m.faces[m.outer_face];
    if (static_cast<int>(outer.size()) != 2 * k) throw std::logic_error("outer face degree != 2k");

    // (s1) simple closed boundary: corners at pairwise distinct vertices
    std::vector<int> corners;
    for (int d : outer) corners.push_back(m.tail(d));
    std::vector<int> sorted = corners;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::logic_error("outer boundary is not a simple curve");

    // (s2) inner faces are colored triangles; boundary edges keep the correct
    // colored side
    for (int f = 0; f < static_cast<int>(m.faces.size()); ++f) {
        if (f == m.outer_face) continue;
        if (m.faces[f].size() != 3) throw std::logic_error("inner face of degree != 3");
    }
    for (int d = 0; d < m.n_darts(); ++d) {
        if (m.face_of[d] == m.outer_face || m.face_of[m.alpha[d]] == m.outer_face) continue;
        if (m.dart_color(d) == m.dart_color(m.alpha[d]))
            throw std::logic_error("inner edge with equal colors on both sides");
    }
    for (int i = 0; i < k; ++i) {
        if (m.dart_color(s.left_forward[i]) != FaceColor::Black)
            throw std::logic_error("left boundary edge without its black face on the left");
        if (m.dart_color(m.alpha[s.right_forward[i]]) != FaceColor::White)
            throw std::logic_error("right boundary edge without its white face on the right");
    }

    // distances: boundary paths realize the oriented distance
    for (int i = 0; i <= k; ++i)
        if (s.dist[s.left_vertices[i]] != i) throw std::logic_error("left boundary is not geodesic");
    for (int i = 0; i < k; ++i)
        if (s.dist[s.right_vertices[i]] != i) throw std::logic_error("right boundary is not geodesic");

    // distance steps are +1 or -2 along every oriented edge
    for (int d = 0; d < m.n_darts(); ++d) {
        if (!m.is_forward(d)) continue;
        int step = s.dist[m.head(d)] - s.dist[m.tail(d)];
        if (step != 1 && step != -2) throw std::logic_error("oriented edge with an invalid distance step");
    }

    // (s3) the right boundary is the unique shortest path to the base origin:
    // count shortest oriented paths by dynamic programming over distances.
    int x0 = s.right_vertices[k - 1];
    std::vector<long long> ways(m.num_vertices, 0);
    std::vector<int> by_dist(m.num_vertices);
    std::iota(by_dist.begin(), by_dist.end(), 0);
    std::sort(by_dist.begin(), by_dist.end(), [&](int a, int b) { return s.dist[a] < s.dist[b]; });
    for (int v : by_dist) {
        if (v == s.apex) {
            ways[v] = 1;
            continue;
        }
        long long acc = 0;
        for (int d : m.vertex_darts[v]) {
            // incoming forward edge u -> v on a geodesic
            if (m.is_forward(m.alpha[d]) && s.dist[m.head(d)] == s.dist[v] - 1) acc += ways[m.head(d)];
        }
        ways[v] = acc;
    }
    if (ways[x0] != 1) throw std::logic_error("right boundary is not the unique shortest path");
}

PieceExtraction extract_piece(const Pmap& m, const std::vector<char>& keep_face) {
    PieceExtraction out;
    std::vector<int>& dart_map = out.dart_map;
    dart_map.assign(m.n_darts(), -1);
    auto kept = [&](int d) { return keep_face[m.face_of[d]] != 0; };

    int next_id = 0;
    Pmap& p = out.piece;
    for (int f = 0; f < static_cast<int>(m.faces.size()); ++f) {
        if (!keep_face[f]) continue;
        std::vector<int> cycle;
        for (int d : m.faces[f]) {
            dart_map[d] = next_id++;
            cycle.push_back(dart_map[d]);
        }
        p.faces.push_back(std::move(cycle));
        p.face_colors.push_back(m.face_colors[f]);
    }

    std::vector<int> boundary;
    for (int d = 0; d < m.n_darts(); ++d)
        if (kept(d) && !kept(m.alpha[d])) boundary.push_back(d);

    p.alpha.assign(next_id, -1);
    for (int d = 0; d < m.n_darts(); ++d) {
        if (!kept(d)) continue;
        if (kept(m.alpha[d])) p.alpha[dart_map[d]] = dart_map[m.alpha[d]];
    }

    // The outer face of the piece: walk the boundary. The successor of
    // boundary dart b is prev_in_face(d*) where d* is the first dart in the
    // clockwise sweep from b at tail(b) whose face is kept.
    auto next_boundary = [&](int b) {
        int d = b;
        for (int i = 0; i < static_cast<int>(m.vertex_darts[m.tail(b)].size()); ++i) {
            d = m.sigma_inv[d];
            if (kept(d)) return m.prev_in_face(d);
        }
        throw std::logic_error("boundary walk failed");
    };

    if (!boundary.empty()) {
        std::vector<char> used(m.n_darts(), 0);
        int cycles = 0;
        for (int start : boundary) {
            if (used[start]) continue;
            ++cycles;
            if (cycles > 1) throw std::logic_error("piece has more than one boundary component");
            std::vector<int> outer_cycle;
            int b = start;
            do {
                used[b] = 1;
                int o = next_id++;
                p.alpha.push_back(-1);
                p.alpha[o] = dart_map[b];
                p.alpha[dart_map[b]] = o;
                outer_cycle.push_back(o);
                b = next_boundary(b);
            } while (b != start);
            // outer face interior sits on the left of the reversed darts; the
            // cycle below lists them in walk order, i.e. o_{b}, o_{next(b)}, ...
            p.faces.push_back(std::move(outer_cycle));
            p.face_colors.push_back(FaceColor::Outer);
        }
        size_t used_count = 0;
        for (int b : boundary) used_count += used[b];
        if (used_count != boundary.size()) throw std::logic_error("boundary walk missed darts");
    }
    p.root = 0;
    p.finalize();
    if (p.euler_characteristic() != 2) throw std::logic_error("extracted piece is not a disk");
    return out;
}

}  // namespace etri
