#include "etri/oracle.hpp"

#include "etri/classical.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace etri {

namespace {

constexpr auto kWhite = FaceColor::White;
constexpr auto kBlack = FaceColor::Black;

// Partial gluing state: triangles with some sides matched, the unmatched
// sides linked into hole cycles (bnext/bprev). Gluing within a hole keeps the
// complex planar; fresh triangles extend it.
struct GlueState {
    int target = 0;
    std::vector<FaceColor> colors;  // per face
    std::vector<int> alpha, bnext, bprev;
    int whites = 0, blacks = 0;

    int n_darts() const { return static_cast<int>(alpha.size()); }
    FaceColor dart_color(int d) const { return colors[d / 3]; }
    void add_face(FaceColor c) {
        colors.push_back(c);
        for (int i = 0; i < 3; ++i) {
            alpha.push_back(-1);
            bnext.push_back(-1);
            bprev.push_back(-1);
        }
        (c == kWhite ? whites : blacks)++;
    }
};

Pmap build_map(const GlueState& st) {
    Pmap m;
    int nf = static_cast<int>(st.colors.size());
    for (int f = 0; f < nf; ++f) {
        m.faces.push_back({3 * f, 3 * f + 1, 3 * f + 2});
        m.face_colors.push_back(st.colors[f]);
    }
    m.alpha = st.alpha;
    m.root = 0;
    m.finalize();
    m.check_triangulation();
    return m;
}

void explore(GlueState& st, int scan_from, const std::function<void(const Pmap&)>& emit) {
    int d = scan_from;
    while (d < st.n_darts() && st.alpha[d] != -1) ++d;
    if (d == st.n_darts()) {
        if (st.whites == st.target && st.blacks == st.target) emit(build_map(st));
        return;
    }
    FaceColor dc = st.dart_color(d);

    // glue a fresh triangle of the opposite color onto d
    bool fresh_ok = dc == kWhite ? st.blacks < st.target : st.whites < st.target;
    if (fresh_ok) {
        GlueState next = st;
        int n = next.n_darts();
        next.add_face(dc == kWhite ? kBlack : kWhite);
        next.alpha[d] = n;
        next.alpha[n] = d;
        int X = next.bprev[d], Y = next.bnext[d];
        if (X == d) {  // d was a hole on its own
            next.bnext[n + 2] = n + 1;
            next.bprev[n + 1] = n + 2;
            next.bnext[n + 1] = n + 2;
            next.bprev[n + 2] = n + 1;
        } else {
            next.bnext[X] = n + 2;
            next.bprev[n + 2] = X;
            next.bnext[n + 2] = n + 1;
            next.bprev[n + 1] = n + 2;
            next.bnext[n + 1] = Y;
            next.bprev[Y] = n + 1;
        }
        explore(next, d, emit);
    }

    // or glue d to another unmatched dart of the opposite color on the same
    // hole (gluing across holes would raise the genus)
    for (int e = st.bnext[d]; e != d; e = st.bnext[e]) {
        if (st.dart_color(e) == dc) continue;
        GlueState next = st;
        next.alpha[d] = e;
        next.alpha[e] = d;
        int A1 = next.bnext[d], Ar = next.bprev[e];
        int B1 = next.bnext[e], Bs = next.bprev[d];
        if (A1 != e) {
            next.bnext[Ar] = A1;
            next.bprev[A1] = Ar;
        }
        if (B1 != d) {
            next.bnext[Bs] = B1;
            next.bprev[B1] = Bs;
        }
        explore(next, d + 1, emit);
    }
}

std::mutex cache_mutex;
std::map<int, std::vector<Pmap>> map_cache;

}  // namespace

void enumerate_maps(int F, const std::function<void(const Pmap&)>& emit) {
    if (F < 1 || F > kMaxOracleFaces)
        throw std::invalid_argument("enumerate_maps supports 1 <= F <= " + std::to_string(kMaxOracleFaces));
    GlueState st;
    st.target = F;
    st.add_face(kWhite);  // root face, root dart 0
    st.bnext = {2, 0, 1};
    st.bprev = {1, 2, 0};
    explore(st, 0, emit);
}

std::vector<Pmap> enumerate_maps(int F) {
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = map_cache.find(F);
        if (it != map_cache.end()) return it->second;
    }
    std::vector<Pmap> out;
    enumerate_maps(F, [&](const Pmap& m) { out.push_back(m); });
    std::lock_guard<std::mutex> lock(cache_mutex);
    map_cache[F] = out;
    return out;
}

long long count_two_point(int F, int k) {
    if (F < 1 || k < 1) throw std::invalid_argument("count_two_point needs F >= 1, k >= 1");
    long long count = 0;
    for (const Pmap& m : enumerate_maps(F)) {
        int md = marked_dart(m);
        for (int v = 0; v < m.num_vertices; ++v) {
            std::vector<int> dist = m.oriented_distances(v);
            if (dist[m.tail(md)] == k - 1 && dist[m.head(md)] == k) ++count;
        }
    }
    return count;
}

DividingLine dividing_line(const SliceStructure& s, int d) {
    if (d < 1 || d > s.k - 1) throw std::invalid_argument("dividing_line needs 1 <= d <= k-1");
    const Pmap& m = s.map;
    std::vector<char> on_left(m.num_vertices, 0);
    for (int v : s.left_vertices) on_left[v] = 1;

    DividingLine line;
    int x_prev = s.right_vertices[d];
    int y = s.right_vertices[d - 1];
    line.vertices = {x_prev, y};
    line.edges = {s.right_forward[d - 1]};
    int arrival = s.right_forward[d - 1];  // dart at y pointing to x0

    std::vector<char> seen(m.num_vertices, 0);
    seen[x_prev] = 1;
    seen[y] = 1;
    while (!on_left[y]) {
        // The leftmost complete two-step path y -> x -> y': sweep the first
        // halves in rotation order; a first half that lands on the left
        // boundary terminates the line, otherwise it needs a second half.
        int e = -1, back = -1;
        int cand = arrival;
        int deg = static_cast<int>(m.vertex_darts[m.tail(arrival)].size());
        for (int i = 1; i < deg && e == -1; ++i) {
            cand = kLeftmostSweepUsesSigma ? m.sigma[cand] : m.sigma_inv[cand];
            if (!m.is_forward(cand) || s.dist[m.head(cand)] != d || m.head(cand) == x_prev) continue;
            if (on_left[m.head(cand)]) {
                e = cand;
                break;
            }
            back = sweep_first(m, m.alpha[cand], [&](int c) {
                return m.is_forward(m.alpha[c]) && s.dist[m.head(c)] == d - 1 && m.head(c) != y;
            });
            if (back != -1) e = cand;
        }
        if (e == -1) throw std::logic_error("dividing line: no admissible two-step path");
        int x = m.head(e);
        line.edges.push_back(e);
        line.vertices.push_back(x);
        ++line.p;
        if (on_left[x]) {
            line.ended_on_left_x = true;
            break;
        }
        if (seen[x]) throw std::logic_error("dividing line revisits a vertex");
        seen[x] = 1;

        int ynew = m.head(back);
        line.edges.push_back(m.alpha[back]);
        line.vertices.push_back(ynew);
        if (!on_left[ynew] && seen[ynew]) throw std::logic_error("dividing line revisits a vertex");
        seen[ynew] = 1;
        arrival = m.alpha[back];  // forward dart at ynew pointing to x
        x_prev = x;
        y = ynew;
    }
    return line;
}

namespace {

// face side classification relative to a dividing line: 0 lower, 1 upper
std::vector<int> side_of_faces(const SliceStructure& s, const DividingLine& line) {
    const Pmap& m = s.map;
    std::set<int> blocked;
    for (int e : line.edges) blocked.insert(m.edge_of(e));
    int nf = static_cast<int>(m.faces.size());
    std::vector<int> comp(nf, -1);
    comp[m.outer_face] = -2;
    auto flood = [&](int seed, int id) {
        std::vector<int> stack{seed};
        comp[seed] = id;
        while (!stack.empty()) {
            int f = stack.back();
            stack.pop_back();
            for (int dart : m.faces[f]) {
                if (blocked.count(m.edge_of(dart))) continue;
                int g = m.face_of[m.alpha[dart]];
                if (comp[g] == -1) {
                    comp[g] = id;
                    stack.push_back(g);
                }
            }
        }
    };
    int lower_seed = m.face_of[m.alpha[s.base_dart]];  // white face right of the base
    flood(lower_seed, 0);
    int extra = -1;
    for (int f = 0; f < nf && extra == -1; ++f)
        if (comp[f] == -1) extra = f;
    if (extra == -1) throw std::logic_error("dividing line does not separate the slice");
    flood(extra, 1);
    for (int f = 0; f < nf; ++f)
        if (comp[f] == -1) throw std::logic_error("dividing line leaves more than two parts");
    // the upper part contains the apex
    int apex_face = m.face_of[m.vertex_darts[s.apex].front()];
    if (m.face_colors[apex_face] == FaceColor::Outer)
        apex_face = m.face_of[m.alpha[m.vertex_darts[s.apex].front()]];
    if (comp[apex_face] != 1) throw std::logic_error("apex ended up below the dividing line");
    return comp;
}

}  // namespace

void check_dividing_line_properties(const SliceStructure& s, const DividingLine& line) {
    const Pmap& m = s.map;
    std::vector<int> comp = side_of_faces(s, line);
    std::set<int> line_edges;
    for (int e : line.edges) line_edges.insert(m.edge_of(e));
    std::vector<char> on_line(m.num_vertices, 0);
    for (int v : line.vertices) on_line[v] = 1;

    auto face_is_upper = [&](int f) { return f != m.outer_face && comp[f] == 1; };

    // (d1): no edge strictly below the line joins two line vertices
    for (int dart = 0; dart < m.n_darts(); dart += 1) {
        if (m.alpha[dart] < dart) continue;  // one representative per edge
        if (line_edges.count(m.edge_of(dart))) continue;
        if (face_is_upper(m.face_of[dart]) || face_is_upper(m.face_of[m.alpha[dart]])) continue;
        if (on_line[m.tail(dart)] && on_line[m.head(dart)])
            throw std::logic_error("(d1) violated: lower-part chord between line vertices");
    }

    // (d2): no lower-part vertex at distance d is a short-edge neighbor of two
    // distinct y-vertices (such a vertex would support an alternative
    // two-step path; common neighbors at distance d+1, reached through long
    // edges, are explicitly harmless).
    int d_level = s.dist[line.vertices[0]];
    for (int z = 0; z < m.num_vertices; ++z) {
        if (on_line[z] || s.dist[z] != d_level) continue;
        bool touches_upper = false;
        for (int dart : m.vertex_darts[z]) {
            if (face_is_upper(m.face_of[dart])) touches_upper = true;
        }
        if (touches_upper) continue;  // vertex lies in the upper part
        std::set<int> y_neighbors;
        for (int dart : m.vertex_darts[z]) {
            // incoming short edge y -> z with y on the line at distance d-1
            if (!m.is_forward(m.alpha[dart])) continue;
            int y = m.head(dart);
            if (on_line[y] && s.dist[y] == d_level - 1) y_neighbors.insert(y);
        }
        if (y_neighbors.size() >= 2)
            throw std::logic_error("(d2) violated: lower-part vertex adjacent to two y-vertices");
    }
}

std::map<int, long long> count_hull(int F, int k, int d) {
    if (d < 2 || d > k - 1) throw std::invalid_argument("count_hull needs 2 <= d <= k-1");
    std::map<int, long long> hist;
    for (const Pmap& m : enumerate_maps(F)) {
        int md = marked_dart(m);
        for (int v = 0; v < m.num_vertices; ++v) {
            std::vector<int> dist = m.oriented_distances(v);
            if (dist[m.tail(md)] != k - 1 || dist[m.head(md)] != k) continue;
            SliceStructure s = cut_slice(m, v, md);
            DividingLine line = dividing_line(s, d);
            ++hist[line.p];
        }
    }
    return hist;
}

std::string dump_record(const Pmap& m) {
    std::ostringstream os;
    auto perm = [&](const std::vector<int>& p) {
        std::string s;
        for (size_t i = 0; i < p.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(p[i]);
        }
        return s;
    };
    os << "E=" << m.n_edges() << "; alpha=" << perm(m.alpha) << "; sigma=" << perm(m.sigma)
       << "; root=" << m.root << "; colors=";
    for (FaceColor c : m.face_colors) os << (c == kWhite ? '0' : '1');
    return os.str();
}

// ---------------------------------------------------------------------------
// Appendix split

namespace {

// the single-edge map (the unique zero-face slice)
Pmap single_edge_map() {
    Pmap m;
    m.faces = {{0, 1}};
    m.face_colors = {FaceColor::Outer};
    m.alpha = {1, 0};
    m.root = 0;
    m.finalize();
    return m;
}

std::vector<int> single_edge_code() { return single_edge_map().canonical_code(0); }

// Reconstruct slice metadata for a map with one outer face, rooted at the
// base dart (an outer-face dart); validates (s1)-(s3).
SliceStructure derive_slice(const Pmap& map, int base_dart) {
    SliceStructure s;
    s.map = map;
    const Pmap& m = s.map;
    if (m.n_darts() == 2) {  // single-edge slice
        s.k = 1;
        s.base_dart = base_dart;
        s.apex = m.tail(base_dart);
        s.left_forward = {m.alpha[base_dart]};
        s.right_forward = {base_dart};
        s.dist = {0, 0};
        s.dist[m.head(base_dart)] = 1;
        s.dist[m.tail(base_dart)] = 0;
        s.left_vertices = {s.apex, m.head(base_dart)};
        s.right_vertices = {s.apex};
        return s;
    }
    const auto& outer = m.faces[m.outer_face];
    int deg = static_cast<int>(outer.size());
    if (deg % 2) throw std::logic_error("outer face of odd degree");
    int h = deg / 2;
    if (m.face_of[base_dart] != m.outer_face) throw std::logic_error("base dart not on the outer face");
    int pos = m.pos_of[base_dart];
    s.k = h;
    s.base_dart = base_dart;
    s.left_forward.resize(h);
    s.right_forward.resize(h);
    for (int i = 1; i <= h; ++i) {
        int lam = outer[(pos + 1 + (h - i)) % deg];
        s.left_forward[i - 1] = m.alpha[lam];
        s.right_forward[i - 1] = outer[(pos + h + i) % deg];
    }
    if (s.right_forward[h - 1] != base_dart) throw std::logic_error("outer cycle misaligned");
    s.apex = m.tail(s.right_forward[0]);
    s.dist = m.oriented_distances(s.apex);
    s.left_vertices.resize(h + 1);
    s.right_vertices.resize(h);
    for (int i = 0; i < h; ++i) {
        s.left_vertices[i] = m.tail(s.left_forward[i]);
        s.right_vertices[i] = m.tail(s.right_forward[i]);
    }
    s.left_vertices[h] = m.head(s.left_forward[h - 1]);
    for (int f = 0; f < static_cast<int>(m.faces.size()); ++f)
        if (m.face_colors[f] == FaceColor::White) ++s.white_faces;
    check_slice_properties(s);
    return s;
}

}  // namespace

// Split an l-slice at the white face right of its base, per the classical
// relation's bijection.
SplitResult split_slice(const SliceStructure& s) {
    const Pmap& m = s.map;
    int l = s.k;
    SplitResult out;

    int w_face = m.face_of[m.alpha[s.base_dart]];  // white face right of the base
    if (m.face_colors[w_face] != FaceColor::White) throw std::logic_error("base has no white face");
    int long_dart = -1;
    for (int dart : m.faces[w_face])
        if (m.is_long_edge(m.forward_dart(dart), s.dist)) long_dart = m.forward_dart(dart);
    if (long_dart == -1) throw std::logic_error("white face without a long edge");

    int x0 = m.tail(s.base_dart), v1 = m.head(s.base_dart);
    int b_face = m.face_of[long_dart] == w_face ? m.face_of[m.alpha[long_dart]] : m.face_of[long_dart];
    if (m.face_colors[b_face] != FaceColor::Black) throw std::logic_error("no black face across the long edge");

    int w_vertex = -1;  // third vertex of the black face, off the long edge
    for (int dart : m.faces[b_face]) {
        int v = m.tail(dart);
        if (v != m.tail(long_dart) && v != m.head(long_dart)) w_vertex = v;
    }
    if (w_vertex == -1) throw std::logic_error("degenerate black face");

    if (m.head(long_dart) == x0) {
        out.case_a = true;
        if (s.dist[w_vertex] != l) throw std::logic_error("case (a) vertex at the wrong distance");
    } else if (m.tail(long_dart) == v1) {
        out.case_a = false;
        if (s.dist[w_vertex] != l - 1) throw std::logic_error("case (b) vertex at the wrong distance");
    } else {
        throw std::logic_error("long edge incident to neither base endpoint");
    }

    // base slots: the black face's short edges; slot1 ascends from w, slot2
    // ascends into w. Their forward (black-side) darts lie in b_face.
    int slot1 = -1, slot2 = -1;
    for (int dart : m.faces[b_face]) {
        if (m.edge_of(dart) == m.edge_of(long_dart)) continue;
        if (m.tail(dart) == w_vertex) slot1 = dart;
        if (m.head(dart) == w_vertex) slot2 = dart;
    }
    if (slot1 == -1 || slot2 == -1) throw std::logic_error("black face misses a short edge");

    // leftmost backward path from w, the sweep anchored at the forbidden
    // black-face sector, stopped at the first vertex of the outer boundary
    std::vector<char> on_boundary(m.num_vertices, 0);
    for (int dart : m.faces[m.outer_face]) on_boundary[m.tail(dart)] = 1;
    std::set<int> cut_edges;
    int arrival = slot1;
    int cur = w_vertex;
    while (!on_boundary[cur]) {
        int e = sweep_first(m, arrival, [&](int c) {
            return m.is_forward(m.alpha[c]) && s.dist[m.head(c)] == s.dist[cur] - 1;
        });
        if (e == -1) throw std::logic_error("appendix split: no backward step");
        cut_edges.insert(m.edge_of(e));
        arrival = m.alpha[e];
        cur = m.tail(arrival);
    }

    // components of inner faces minus {W, B}, not crossing the cut path
    int nf = static_cast<int>(m.faces.size());
    std::vector<int> comp(nf, -1);
    comp[m.outer_face] = comp[w_face] = comp[b_face] = -2;
    int ncomp = 0;
    for (int f = 0; f < nf; ++f) {
        if (comp[f] != -1) continue;
        std::vector<int> stack{f};
        comp[f] = ncomp;
        while (!stack.empty()) {
            int g = stack.back();
            stack.pop_back();
            for (int dart : m.faces[g]) {
                if (cut_edges.count(m.edge_of(dart))) continue;
                int gg = m.face_of[m.alpha[dart]];
                if (comp[gg] == -1) {
                    comp[gg] = ncomp;
                    stack.push_back(gg);
                }
            }
        }
        ++ncomp;
    }

    // A sub-slice degenerates to the single-edge map when its base slot has
    // no surviving white side (the slot was shared with the removed white
    // face, lies on the old boundary, or the cut path ran along it and left
    // only a bare duplicate). Otherwise it is the face component on the
    // slot's white side.
    auto piece_info = [&](int slot, bool path_took_slot, std::vector<int>* code, int* height,
                          int* wf) -> bool {
        int surv = m.face_of[m.alpha[slot]];
        if (surv == w_face || surv == m.outer_face || path_took_slot) {
            *code = single_edge_code();
            *height = 1;
            *wf = 0;
            return false;  // no face component consumed
        }
        std::vector<char> keep(nf, 0);
        for (int f = 0; f < nf; ++f) keep[f] = comp[f] == comp[surv];
        PieceExtraction ex = extract_piece(m, keep);
        int base = ex.piece.alpha[ex.dart_map[m.alpha[slot]]];
        SliceStructure ps = derive_slice(ex.piece, base);
        *code = ex.piece.canonical_code(base);
        *height = ps.k;
        *wf = ps.white_faces;
        return true;
    };

    // only the descending slot can coincide with the cut path's first edge
    bool path_took_slot2 = cut_edges.count(m.edge_of(slot2)) > 0;
    bool used1 = piece_info(slot1, false, &out.code1, &out.h1, &out.f1);
    bool used2 = piece_info(slot2, path_took_slot2, &out.code2, &out.h2, &out.f2);
    int pieces = ncomp + (used1 ? 0 : 1) + (used2 ? 0 : 1);
    if (pieces != 2) throw std::logic_error("appendix split did not produce two pieces");
    if (used1 && used2 && comp[m.face_of[m.alpha[slot1]]] == comp[m.face_of[m.alpha[slot2]]])
        throw std::logic_error("appendix split pieces are not separated");

    if (out.f1 + out.f2 != s.white_faces - 1) throw std::logic_error("split loses or gains faces");
    int lp = out.case_a ? out.h1 - 1 : out.h1;
    int lpp = out.case_a ? out.h2 : out.h2 + 1;
    if (std::max(lp, lpp) != l) throw std::logic_error("split heights do not recombine to l");
    return out;
}

AppendixReport verify_appendix_split(int F_max, int k_max) {
    AppendixReport rep;

    // all slices by (white faces, height), rooted at the base, plus the split
    // of each
    std::map<std::pair<int, int>, std::vector<std::vector<int>>> pool;
    pool[{0, 1}].push_back(single_edge_code());
    struct Entry {
        int F, height;
        SplitResult split;
    };
    std::vector<Entry> entries;
    for (int F = 1; F <= F_max; ++F) {
        for (const Pmap& m : enumerate_maps(F)) {
            int md = marked_dart(m);
            for (int v = 0; v < m.num_vertices; ++v) {
                std::vector<int> dist = m.oriented_distances(v);
                int k = dist[m.head(md)];
                if (dist[m.tail(md)] != k - 1) continue;
                SliceStructure s = cut_slice(m, v, md);
                pool[{F, k}].push_back(s.map.canonical_code(s.base_dart));
                entries.push_back({F, k, split_slice(s)});
                ++rep.slices;
                (entries.back().split.case_a ? rep.case_a : rep.case_b)++;
            }
        }
    }

    using PairCode = std::pair<std::vector<int>, std::vector<int>>;
    bool all_match = true;
    for (int F = 1; F <= F_max; ++F) {
        for (int k = 1; k <= k_max; ++k) {
            std::vector<PairCode> lhs_a, lhs_b, rhs_a, rhs_b;
            for (const Entry& e : entries) {
                if (e.F != F || e.height > k) continue;
                (e.split.case_a ? lhs_a : lhs_b).emplace_back(e.split.code1, e.split.code2);
            }
            for (const auto& [key1, codes1] : pool) {
                if (key1.first >= F) continue;
                for (const auto& [key2, codes2] : pool) {
                    if (key1.first + key2.first != F - 1) continue;
                    bool in_a = key1.second <= k + 1 && key2.second <= k;
                    bool in_b = key1.second <= k && key2.second <= k - 1;
                    if (!in_a && !in_b) continue;
                    for (const auto& c1 : codes1)
                        for (const auto& c2 : codes2) {
                            if (in_a) rhs_a.emplace_back(c1, c2);
                            if (in_b) rhs_b.emplace_back(c1, c2);
                        }
                }
            }
            std::sort(lhs_a.begin(), lhs_a.end());
            std::sort(lhs_b.begin(), lhs_b.end());
            std::sort(rhs_a.begin(), rhs_a.end());
            std::sort(rhs_b.begin(), rhs_b.end());
            if (lhs_a != rhs_a || lhs_b != rhs_b) all_match = false;
        }
    }
    rep.pair_multisets_match = all_match;

    // coefficient identity of the classical relation against the raw counts
    int order = F_max;
    bool counts_ok = true;
    SliceSeriesTable tab = solve_classical(k_max + 1, order);
    for (int k = 1; k <= k_max; ++k) {
        RatSeries one = RatSeries::constant("g", 1, order);
        RatSeries g = RatSeries::identity("g", order);
        RatSeries rhs = one + g * (tab.R(k) * (tab.R(k + 1) + tab.R(k - 1)));
        if (!(tab.R(k) == rhs)) counts_ok = false;
        for (int F = 1; F <= F_max; ++F) {
            long long n_slices = 0;
            for (const Entry& e : entries)
                if (e.F == F && e.height <= k) ++n_slices;
            if (Rational(n_slices) != tab.R(k).coeff(F)) counts_ok = false;
        }
    }
    rep.counts_match_series = counts_ok;
    return rep;
}

}  // namespace etri
