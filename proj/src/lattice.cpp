#include "tqft/lattice.hpp"
#include "tqft/errors.hpp"

#include <algorithm>
#include <unordered_map>
#include <stdexcept>

namespace tqft {

namespace {

void require(bool cond, const std::string& what) {
    if (!cond) throw std::invalid_argument(what);
}

} // namespace

int Triangulation::euler_characteristic() const {
    if (!has_vertex_data()) throw std::invalid_argument("euler characteristic needs vertex data");
    return n_vertices - static_cast<int>(edges.size()) + static_cast<int>(tris.size());
}

std::vector<Slot> Triangulation::boundary_slots() const {
    std::vector<Slot> out;
    for (const auto& circle : boundary_circles) out.insert(out.end(), circle.begin(), circle.end());
    return out;
}

int Triangulation::pairing_of(Slot s) const {
    for (size_t i = 0; i < pairings.size(); ++i)
        if (pairings[i].first == s || pairings[i].second == s) return static_cast<int>(i);
    return -1;
}

void Triangulation::validate() const {
    const int nt = static_cast<int>(tris.size());
    std::vector<int> use(3 * nt, 0); // 0 free, 1 paired, 2 boundary
    for (auto [a, b] : pairings) {
        require(a >= 0 && a < 3 * nt && b >= 0 && b < 3 * nt && a != b, "triangulation: bad pairing slot");
        require(use[a] == 0 && use[b] == 0, "triangulation: slot paired twice");
        use[a] = use[b] = 1;
    }
    for (const auto& circle : boundary_circles)
        for (Slot s : circle) {
            require(s >= 0 && s < 3 * nt, "triangulation: bad boundary slot");
            require(use[s] == 0, "triangulation: boundary slot also paired");
            use[s] = 2;
        }
    for (int s = 0; s < 3 * nt; ++s) require(use[s] != 0, "triangulation: unaccounted slot " + std::to_string(s));

    for (const auto& t : tris)
        for (int i = 0; i < 3; ++i)
            require(t.edge[i] >= 0 && t.edge[i] < static_cast<int>(edges.size()),
                    "triangulation: edge id out of range");

    if (has_vertex_data()) {
        for (const auto& t : tris)
            for (int i = 0; i < 3; ++i) {
                const Edge& e = edges[t.edge[i]];
                int from = t.vert[i], to = t.vert[(i + 1) % 3];
                // the face-map identities: each slot's traversal endpoints match
                // its edge, and consecutive slots share a vertex (the triangle
                // closes up)
                int esrc = t.forward[i] ? e.src : e.dst;
                int edst = t.forward[i] ? e.dst : e.src;
                require(esrc == from && edst == to, "triangulation: face maps do not close");
            }
    }
}

Triangulation standard_surface(int genus) {
    require(genus >= 0, "standard_surface: genus must be nonnegative");
    Triangulation t;
    if (genus == 0) {
        // two triangles glued along all three edges
        t.n_vertices = 3;
        t.edges = {{0, 1}, {1, 2}, {2, 0}};
        t.tris.push_back({{0, 1, 2}, {true, true, true}, {0, 1, 2}});
        t.tris.push_back({{2, 1, 0}, {false, false, false}, {0, 2, 1}});
        t.pairings = {{make_slot(0, 0), make_slot(1, 2)},
                      {make_slot(0, 1), make_slot(1, 1)},
                      {make_slot(0, 2), make_slot(1, 0)}};
        t.validate();
        return t;
    }
    // fan triangulation of the 4g-gon, all polygon vertices identified to one
    const int sides = 4 * genus;
    t.n_vertices = 1;
    // edges: 2g identified polygon sides (a_1, b_1, ..., a_g, b_g), then the
    // fan diagonals d_2..d_{sides-2} from polygon vertex 0 to vertex i
    const int n_sides = 2 * genus;
    auto side_edge = [&](int s) {  // polygon side s -> (edge id, traversed forward?)
        int quad = s / 4, pos = s % 4;
        int id = 2 * quad + (pos % 2); // a_quad or b_quad
        bool fwd = pos < 2;
        return std::pair<int, bool>(id, fwd);
    };
    for (int i = 0; i < n_sides; ++i) t.edges.push_back({0, 0});
    std::vector<int> diag(sides - 1, -1); // diagonal to polygon vertex i, for i = 2..sides-2
    for (int i = 2; i <= sides - 2; ++i) {
        diag[i] = static_cast<int>(t.edges.size());
        t.edges.push_back({0, 0});
    }
    // triangle i = (0, i, i+1) for i = 1..sides-2; slots: 0->i, i->i+1, i+1->0
    for (int i = 1; i <= sides - 2; ++i) {
        Triangulation::Tri tr;
        // slot 0: vertex 0 -> i (diagonal, or polygon side 0 when i == 1)
        if (i == 1) {
            auto [id, fwd] = side_edge(0);
            tr.edge[0] = id;
            tr.forward[0] = fwd;
        } else {
            tr.edge[0] = diag[i];
            tr.forward[0] = true;
        }
        // slot 1: i -> i+1 (polygon side i)
        auto [sid, sfwd] = side_edge(i);
        tr.edge[1] = sid;
        tr.forward[1] = sfwd;
        // slot 2: i+1 -> 0 (diagonal reversed, or polygon side sides-1 when i+1 == sides-1)
        if (i == sides - 2) {
            auto [id, fwd] = side_edge(sides - 1);
            tr.edge[2] = id;
            tr.forward[2] = fwd;
        } else {
            tr.edge[2] = diag[i + 1];
            tr.forward[2] = false;
        }
        tr.vert = {0, 0, 0};
        t.tris.push_back(tr);
    }
    // pair diagonal slots between consecutive fan triangles
    for (int i = 2; i <= sides - 2; ++i)
        t.pairings.emplace_back(make_slot(i - 2, 2), make_slot(i - 1, 0));
    // pair identified polygon sides: the slot carrying side s
    auto slot_of_side = [&](int s) {
        if (s == 0) return make_slot(0, 0);
        if (s == sides - 1) return make_slot(sides - 3, 2);
        return make_slot(s - 1, 1);
    };
    for (int q = 0; q < genus; ++q) {
        t.pairings.emplace_back(slot_of_side(4 * q), slot_of_side(4 * q + 2));
        t.pairings.emplace_back(slot_of_side(4 * q + 1), slot_of_side(4 * q + 3));
    }
    t.validate();
    return t;
}

Triangulation cylinder_triangulation() {
    // square with left and right sides glued: bottom x, top y, seam s, diagonal d
    Triangulation t;
    t.n_vertices = 2;               // bottom point P = 0, top point Q = 1
    t.edges = {{0, 0},              // x: input circle (loop at P)
               {1, 1},              // y: output circle (loop at Q)
               {0, 1},              // s: seam
               {0, 1}};             // d: diagonal
    t.tris.push_back({{0, 2, 3}, {true, true, false}, {0, 0, 1}});  // P->P (x), P->Q (s), Q->P (d rev)
    t.tris.push_back({{3, 1, 2}, {true, false, false}, {0, 1, 1}}); // P->Q (d), Q->Q (y rev), Q->P (s rev)
    t.pairings = {{make_slot(0, 1), make_slot(1, 2)},   // seam
                  {make_slot(0, 2), make_slot(1, 0)}};  // diagonal
    t.boundary_circles = {{make_slot(0, 0)}, {make_slot(1, 1)}};
    t.validate();
    return t;
}

Triangulation pachner_22(const Triangulation& t, int edge) {
    require(edge >= 0 && edge < static_cast<int>(t.edges.size()), "pachner_22: edge out of range");
    // locate the two slots carrying this edge
    std::vector<Slot> carriers;
    for (int tri = 0; tri < static_cast<int>(t.tris.size()); ++tri)
        for (int i = 0; i < 3; ++i)
            if (t.tris[tri].edge[i] == edge) carriers.push_back(make_slot(tri, i));
    require(carriers.size() == 2, "pachner_22: edge is not interior");
    int p = t.pairing_of(carriers[0]);
    require(p >= 0 && (t.pairings[p].first == carriers[1] || t.pairings[p].second == carriers[1]),
            "pachner_22: edge slots are not glued to each other");
    Slot sa = carriers[0], sb = carriers[1];
    require(slot_tri(sa) != slot_tri(sb), "pachner_22: degenerate configuration (both slots on one triangle)");

    const int ta = slot_tri(sa), tb = slot_tri(sb);
    const int ia = slot_idx(sa), ib = slot_idx(sb);
    const auto& A = t.tris[ta];
    const auto& B = t.tris[tb];
    // quad corners: A traverses P->Q on the shared edge, B traverses Q->P
    int P = A.vert[ia], Q = A.vert[(ia + 1) % 3];
    int R = A.vert[(ia + 2) % 3];
    int S = B.vert[(ib + 2) % 3];
    // outer slots, in quad order: X = Q->R, Y = R->P (from A); Z = P->S, W = S->Q (from B)
    struct Side { int edge; bool forward; Slot old_slot; };
    Side X{A.edge[(ia + 1) % 3], A.forward[(ia + 1) % 3], make_slot(ta, (ia + 1) % 3)};
    Side Y{A.edge[(ia + 2) % 3], A.forward[(ia + 2) % 3], make_slot(ta, (ia + 2) % 3)};
    Side Z{B.edge[(ib + 1) % 3], B.forward[(ib + 1) % 3], make_slot(tb, (ib + 1) % 3)};
    Side W{B.edge[(ib + 2) % 3], B.forward[(ib + 2) % 3], make_slot(tb, (ib + 2) % 3)};

    Triangulation out = t;
    out.edges[edge] = {R, S}; // reuse the id for the flipped diagonal
    // ta := (R->P, P->S, S->R),  tb := (S->Q, Q->R, R->S)
    out.tris[ta] = {{Y.edge, Z.edge, edge}, {Y.forward, Z.forward, false}, {R, P, S}};
    out.tris[tb] = {{W.edge, X.edge, edge}, {W.forward, X.forward, true}, {S, Q, R}};

    std::vector<std::pair<Slot, Slot>> remap = {
        {Y.old_slot, make_slot(ta, 0)},
        {Z.old_slot, make_slot(ta, 1)},
        {W.old_slot, make_slot(tb, 0)},
        {X.old_slot, make_slot(tb, 1)},
    };
    auto remap_slot = [&](Slot s) {
        for (auto [from, to] : remap)
            if (s == from) return to;
        return s;
    };
    out.pairings.clear();
    for (auto [a, b] : t.pairings) {
        if ((a == sa && b == sb) || (a == sb && b == sa)) continue;
        out.pairings.emplace_back(remap_slot(a), remap_slot(b));
    }
    out.pairings.emplace_back(make_slot(ta, 2), make_slot(tb, 2));
    for (auto& circle : out.boundary_circles)
        for (auto& s : circle) s = remap_slot(s);
    out.validate();
    return out;
}

Triangulation pachner_13(const Triangulation& t, int tri) {
    require(tri >= 0 && tri < static_cast<int>(t.tris.size()), "pachner_13: triangle out of range");
    Triangulation out = t;
    const auto A = t.tris[tri]; // copy: slots (v0->v1, v1->v2, v2->v0)
    int v0 = A.vert[0], v1 = A.vert[1], v2 = A.vert[2];
    int u = out.n_vertices++;
    int ep = static_cast<int>(out.edges.size());
    out.edges.push_back({v0, u}); // p
    out.edges.push_back({v1, u}); // q
    out.edges.push_back({v2, u}); // r
    const int eq = ep + 1, er = ep + 2;
    // replace tri by (v0,v1,u); append (v1,v2,u) and (v2,v0,u)
    out.tris[tri] = {{A.edge[0], eq, ep}, {A.forward[0], true, false}, {v0, v1, u}};
    int t2 = static_cast<int>(out.tris.size());
    out.tris.push_back({{A.edge[1], er, eq}, {A.forward[1], true, false}, {v1, v2, u}});
    int t3 = static_cast<int>(out.tris.size());
    out.tris.push_back({{A.edge[2], ep, er}, {A.forward[2], true, false}, {v2, v0, u}});

    // original slots 1 and 2 moved to the new triangles
    auto remap_slot = [&](Slot s) {
        if (s == make_slot(tri, 1)) return make_slot(t2, 0);
        if (s == make_slot(tri, 2)) return make_slot(t3, 0);
        return s;
    };
    for (auto& pr : out.pairings) {
        pr.first = remap_slot(pr.first);
        pr.second = remap_slot(pr.second);
    }
    for (auto& circle : out.boundary_circles)
        for (auto& s : circle) s = remap_slot(s);
    out.pairings.emplace_back(make_slot(tri, 1), make_slot(t2, 2));  // q
    out.pairings.emplace_back(make_slot(t2, 1), make_slot(t3, 2));   // r
    out.pairings.emplace_back(make_slot(t3, 1), make_slot(tri, 2));  // p
    out.validate();
    return out;
}

Triangulation random_pachner_mix(const Triangulation& t, int moves, std::uint64_t seed) {
    Rng rng(seed);
    Triangulation cur = t;
    for (int m = 0; m < moves; ++m) {
        bool flip = rng.uniform01() < 0.5;
        if (flip) {
            // collect flippable interior edges
            std::vector<int> candidates;
            for (auto [a, b] : cur.pairings)
                if (slot_tri(a) != slot_tri(b) && cur.tris[slot_tri(a)].edge[slot_idx(a)] ==
                                                      cur.tris[slot_tri(b)].edge[slot_idx(b)])
                    candidates.push_back(cur.tris[slot_tri(a)].edge[slot_idx(a)]);
            if (!candidates.empty()) {
                cur = pachner_22(cur, candidates[rng.below(candidates.size())]);
                continue;
            }
        }
        cur = pachner_13(cur, static_cast<int>(rng.below(cur.tris.size())));
    }
    return cur;
}

LatticeTensorData group_algebra_tensors(const FiniteGroup& G) {
    const int n = G.order();
    LatticeTensorData d;
    d.dim = n;
    d.m.reserve(size_t(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            d.m.push_back({i, j, G.inverse(G.mul(i, j)), Rational(n)});
    d.metric.assign(n, std::vector<Rational>(n, Rational(0)));
    d.metric_inv.assign(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i) {
        d.metric[i][G.inverse(i)] = Rational(n);
        d.metric_inv[i][G.inverse(i)] = Rational(1, n);
    }
    return d;
}

Rational ContractionResult::scalar() const {
    if (!closed()) throw std::invalid_argument("contraction result is a tensor, not a scalar");
    if (entries.empty()) return Rational(0);
    return entries.begin()->second;
}

Rational ContractionResult::at(const std::vector<int>& coloring) const {
    if (coloring.size() != open_slots.size())
        throw std::invalid_argument("coloring length does not match boundary edges");
    auto it = entries.find(coloring);
    return it == entries.end() ? Rational(0) : it->second;
}

namespace {

// Index tuples packed 8 bits per slot into 128 bits: rank <= 16, dim <= 256.
using Key = unsigned __int128;
constexpr int kMaxRank = 16;

struct KeyHash {
    size_t operator()(Key k) const {
        std::uint64_t lo = static_cast<std::uint64_t>(k);
        std::uint64_t hi = static_cast<std::uint64_t>(k >> 64);
        std::uint64_t x = lo ^ (hi * 0x9E3779B97F4A7C15ull);
        x ^= x >> 33;
        x *= 0xFF51AFD7ED558CCDull;
        x ^= x >> 33;
        return static_cast<size_t>(x);
    }
};

inline int key_at(Key k, int pos) { return static_cast<int>((k >> (8 * pos)) & 0xFF); }

inline Key key_erase(Key k, int pos) {
    Key low_mask = (Key(1) << (8 * pos)) - 1;
    return (k & low_mask) | ((k >> 8) & ~low_mask);
}

inline Key key_append(Key k, int rank, int value) {
    return k | (Key(static_cast<unsigned>(value)) << (8 * rank));
}

// Intermediate sparse tensor during contraction.  Uniform constants (the
// C[G] tensors are |G| on their support, the inverse metric 1/|G|) are
// factored into `scale`, which keeps the per-entry arithmetic on small
// integers instead of |G|-power rationals.
struct Block {
    std::vector<Slot> slots;
    std::unordered_map<Key, Rational, KeyHash> entries;
    Rational scale{1};
};

int slot_position(const Block& b, Slot s) {
    for (size_t i = 0; i < b.slots.size(); ++i)
        if (b.slots[i] == s) return static_cast<int>(i);
    return -1;
}

constexpr size_t kEntryCap = 8'000'000;

} // namespace

ContractionResult contract(const Triangulation& t, const LatticeTensorData& d) {
    t.validate();
    if (d.dim > 256) throw std::invalid_argument("contraction supports algebra dimension <= 256");
    const int nt = static_cast<int>(t.tris.size());

    // factor out a uniform three-point value, when there is one
    Rational m_uniform(0);
    bool m_is_uniform = !d.m.empty();
    for (const auto& e : d.m) {
        if (e.value == 0) continue;
        if (m_uniform == 0) m_uniform = e.value;
        else if (e.value != m_uniform) { m_is_uniform = false; break; }
    }
    if (m_uniform == 0) m_is_uniform = false;

    std::vector<Block> blocks(nt);
    for (int tri = 0; tri < nt; ++tri) {
        Block& b = blocks[tri];
        b.slots = {make_slot(tri, 0), make_slot(tri, 1), make_slot(tri, 2)};
        b.entries.reserve(d.m.size());
        for (const auto& e : d.m) {
            if (e.value == 0) continue;
            Key k = key_append(key_append(key_append(0, 0, e.i), 1, e.j), 2, e.k);
            b.entries[k] += m_is_uniform ? Rational(1) : e.value;
        }
        if (m_is_uniform) b.scale = m_uniform;
    }
    std::vector<int> owner(3 * nt); // slot -> block index
    for (int tri = 0; tri < nt; ++tri)
        for (int i = 0; i < 3; ++i) owner[make_slot(tri, i)] = tri;

    std::vector<char> done(t.pairings.size(), 0);
    Rational closed_factor(1); // product over components that reduce to scalars

    // nonzero columns of the inverse metric per row (for C[G] a single entry);
    // a uniform value is likewise moved into the block scales
    Rational g_uniform(0);
    bool g_is_uniform = true;
    for (int i = 0; i < d.dim && g_is_uniform; ++i)
        for (int j = 0; j < d.dim; ++j) {
            if (d.metric_inv[i][j] == 0) continue;
            if (g_uniform == 0) g_uniform = d.metric_inv[i][j];
            else if (d.metric_inv[i][j] != g_uniform) { g_is_uniform = false; break; }
        }
    if (g_uniform == 0) g_is_uniform = false;
    std::vector<std::vector<std::pair<int, Rational>>> inv_rows(d.dim);
    for (int i = 0; i < d.dim; ++i)
        for (int j = 0; j < d.dim; ++j)
            if (d.metric_inv[i][j] != 0)
                inv_rows[i].emplace_back(j, g_is_uniform ? Rational(1) : d.metric_inv[i][j]);

    size_t remaining = t.pairings.size();
    while (remaining > 0) {
        // greedy: cheapest remaining contraction.  Self-traces shrink a block
        // in place; block merges consume every pairing between the two blocks
        // at once, so the resulting rank is ra + rb - 2k.
        int best = -1;
        bool best_self = false;
        std::pair<long long, size_t> best_cost{0, 0};
        for (size_t pi = 0; pi < t.pairings.size(); ++pi) {
            if (done[pi]) continue;
            auto [a, b] = t.pairings[pi];
            int oa = owner[a], ob = owner[b];
            const Block& ba = blocks[oa];
            const Block& bb = blocks[ob];
            std::pair<long long, size_t> cost;
            bool self = oa == ob;
            if (self) {
                cost = {static_cast<long long>(ba.slots.size()) - 2, ba.entries.size()};
            } else {
                long long shared = 0;
                for (size_t pj = 0; pj < t.pairings.size(); ++pj)
                    if (!done[pj] &&
                        ((owner[t.pairings[pj].first] == oa && owner[t.pairings[pj].second] == ob) ||
                         (owner[t.pairings[pj].first] == ob && owner[t.pairings[pj].second] == oa)))
                        ++shared;
                cost = {static_cast<long long>(ba.slots.size() + bb.slots.size()) - 2 * shared,
                        ba.entries.size() + bb.entries.size()};
            }
            if (best < 0 || cost < best_cost) {
                best = static_cast<int>(pi);
                best_cost = cost;
                best_self = self;
            }
        }
        auto [sa, sb] = t.pairings[best];
        int oa = owner[sa], ob = owner[sb];
        Block& A = blocks[oa];
        if (best_self) {
            done[best] = 1;
            --remaining;
            int pa = slot_position(A, sa), pb = slot_position(A, sb);
            int phi = std::max(pa, pb), plo = std::min(pa, pb);
            Block out;
            out.scale = A.scale;
            if (g_is_uniform) out.scale *= g_uniform;
            for (size_t i = 0; i < A.slots.size(); ++i)
                if (static_cast<int>(i) != pa && static_cast<int>(i) != pb)
                    out.slots.push_back(A.slots[i]);
            out.entries.reserve(A.entries.size() / std::max(1, d.dim));
            for (const auto& [key, val] : A.entries) {
                const Rational& g = d.metric_inv[key_at(key, pa)][key_at(key, pb)];
                if (g == 0) continue;
                Key nk = key_erase(key_erase(key, phi), plo);
                if (g_is_uniform) out.entries[nk] += val;
                else out.entries[nk] += val * g;
            }
            blocks[oa] = std::move(out);
        } else {
            Block& B = blocks[ob];
            // every live pairing between A and B, as position lists
            std::vector<int> pa_pos, pb_pos;
            for (size_t pj = 0; pj < t.pairings.size(); ++pj) {
                if (done[pj]) continue;
                auto [x, y] = t.pairings[pj];
                if (owner[x] == oa && owner[y] == ob) {
                    pa_pos.push_back(slot_position(A, x));
                    pb_pos.push_back(slot_position(B, y));
                } else if (owner[x] == ob && owner[y] == oa) {
                    pa_pos.push_back(slot_position(A, y));
                    pb_pos.push_back(slot_position(B, x));
                } else {
                    continue;
                }
                done[pj] = 1;
                --remaining;
            }
            const int m = static_cast<int>(pa_pos.size());
            int rank_a = static_cast<int>(A.slots.size()), rank_b = static_cast<int>(B.slots.size());
            if (rank_a + rank_b - 2 * m > kMaxRank)
                throw std::invalid_argument("contraction intermediate rank exceeds " +
                                            std::to_string(kMaxRank));
            auto erase_many = [](Key k, std::vector<int> pos) {
                std::sort(pos.rbegin(), pos.rend());
                for (int p : pos) k = key_erase(k, p);
                return k;
            };
            // bucket B by the packed tuple of contracted slot values
            std::unordered_map<Key, std::vector<std::pair<Key, const Rational*>>, KeyHash> bucket;
            bucket.reserve(B.entries.size());
            for (const auto& [key, val] : B.entries) {
                Key jkey = 0;
                for (int i = 0; i < m; ++i) jkey = key_append(jkey, i, key_at(key, pb_pos[i]));
                bucket[jkey].emplace_back(erase_many(key, pb_pos), &val);
            }
            Block out;
            out.scale = A.scale * B.scale;
            if (g_is_uniform)
                for (int i = 0; i < m; ++i) out.scale *= g_uniform;
            for (int i = 0; i < rank_a; ++i)
                if (std::find(pa_pos.begin(), pa_pos.end(), i) == pa_pos.end())
                    out.slots.push_back(A.slots[i]);
            for (int i = 0; i < rank_b; ++i)
                if (std::find(pb_pos.begin(), pb_pos.end(), i) == pb_pos.end())
                    out.slots.push_back(B.slots[i]);
            out.entries.reserve(std::max(A.entries.size(), B.entries.size()));
            // join: enumerate the product of inverse-metric rows across the m
            // contracted positions (a single column each for C[G])
            std::vector<int> choice(m, 0);
            for (const auto& [akey, aval] : A.entries) {
                bool skip = false;
                for (int i = 0; i < m && !skip; ++i)
                    skip = inv_rows[key_at(akey, pa_pos[i])].empty();
                if (skip) continue;
                Key abase = erase_many(akey, pa_pos);
                std::fill(choice.begin(), choice.end(), 0);
                while (true) {
                    Key jkey = 0;
                    for (int i = 0; i < m; ++i)
                        jkey = key_append(jkey, i, inv_rows[key_at(akey, pa_pos[i])][choice[i]].first);
                    auto it = bucket.find(jkey);
                    if (it != bucket.end()) {
                        Rational factor = aval;
                        if (!g_is_uniform)
                            for (int i = 0; i < m; ++i)
                                factor *= inv_rows[key_at(akey, pa_pos[i])][choice[i]].second;
                        for (const auto& [bkey, bval] : it->second)
                            out.entries[abase | (bkey << (8 * (rank_a - m)))] += factor * *bval;
                    }
                    int pos = m - 1;
                    while (pos >= 0 &&
                           choice[pos] + 1 >=
                               static_cast<int>(inv_rows[key_at(akey, pa_pos[pos])].size()))
                        choice[pos--] = 0;
                    if (pos < 0) break;
                    ++choice[pos];
                }
                if (out.entries.size() > kEntryCap)
                    throw std::invalid_argument("contraction intermediate exceeds the entry cap");
            }
            blocks[oa] = std::move(out);
            blocks[ob].slots.clear();
            blocks[ob].entries.clear();
        }
        for (Slot s : blocks[oa].slots) owner[s] = oa;
        // fold fully-contracted components into the scalar factor
        if (blocks[oa].slots.empty()) {
            closed_factor *= blocks[oa].entries.empty()
                                 ? Rational(0)
                                 : blocks[oa].entries.begin()->second * blocks[oa].scale;
            blocks[oa].entries.clear();
            blocks[oa].slots = {-1}; // consumed marker
        }
    }

    // assemble the boundary tensor in declared slot order
    ContractionResult res;
    res.open_slots = t.boundary_slots();
    std::vector<const Block*> live;
    for (int tri = 0; tri < nt; ++tri) {
        const Block& b = blocks[tri];
        if (!b.slots.empty() && b.slots[0] == -1) continue; // consumed scalar
        if (b.slots.empty() && b.entries.empty()) continue; // merged away
        live.push_back(&b);
    }
    // outer-product the remaining open blocks (usually at most one)
    std::unordered_map<Key, Rational, KeyHash> acc;
    std::vector<Slot> acc_slots;
    acc[0] = closed_factor;
    for (const Block* b : live) {
        if (acc_slots.size() + b->slots.size() > kMaxRank)
            throw std::invalid_argument("boundary rank exceeds " + std::to_string(kMaxRank));
        std::unordered_map<Key, Rational, KeyHash> next;
        int shift = static_cast<int>(acc_slots.size());
        for (const auto& [k1, v1] : acc)
            for (const auto& [k2, v2] : b->entries)
                next[k1 | (k2 << (8 * shift))] = v1 * v2 * b->scale;
        acc = std::move(next);
        acc_slots.insert(acc_slots.end(), b->slots.begin(), b->slots.end());
    }
    if (acc_slots.size() != res.open_slots.size())
        throw invariant_error("boundary_bookkeeping", "unpaired interior slots after contraction");
    // permute tuple order to the declared boundary slot order
    std::vector<int> perm(res.open_slots.size());
    for (size_t i = 0; i < res.open_slots.size(); ++i) {
        int pos = -1;
        for (size_t j = 0; j < acc_slots.size(); ++j)
            if (acc_slots[j] == res.open_slots[i]) pos = static_cast<int>(j);
        if (pos < 0) throw invariant_error("boundary_bookkeeping", "open slot missing after contraction");
        perm[i] = pos;
    }
    for (const auto& [k, v] : acc) {
        if (v == 0) continue;
        std::vector<int> key(perm.size());
        for (size_t i = 0; i < perm.size(); ++i) key[i] = key_at(k, perm[i]);
        res.entries[key] += v;
    }
    return res;
}

Rational partition_function(const Triangulation& t, const LatticeTensorData& d) {
    require(t.boundary_circles.empty(), "closed partition function requires an empty boundary");
    return contract(t, d).scalar();
}

Rational partition_function(const Triangulation& t, const LatticeTensorData& d,
                            const std::vector<int>& boundary_coloring) {
    return contract(t, d).at(boundary_coloring);
}

std::vector<std::vector<Rational>> cylinder_projector(const FiniteGroup& G) {
    const int n = G.order();
    ContractionResult z = contract(cylinder_triangulation(), group_algebra_tensors(G));
    // z = Z_{in,out}; raise the output index: pi[out'][in] = sum_out Z_{in,out} g^{out,out'}
    std::vector<std::vector<Rational>> pi(n, std::vector<Rational>(n, Rational(0)));
    for (const auto& [key, val] : z.entries) {
        int in = key[0], out = key[1];
        pi[G.inverse(out)][in] += val * Rational(1, n);
    }
    // idempotency is part of the contract
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rational acc(0);
            for (int k = 0; k < n; ++k) acc += pi[i][k] * pi[k][j];
            if (acc != pi[i][j]) throw invariant_error("cylinder_idempotent", "pi^2 != pi");
        }
    return pi;
}

} // namespace tqft
