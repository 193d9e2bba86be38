#pragma once

// Hand-built instances shared by the unit and acceptance suites.

#include <numeric>
#include <vector>

#include "dpc/graph.hpp"

namespace fixtures {

using dpc::PlaneGraph;
using dpc::SimpleGraph;

inline PlaneGraph triangle() {
    return PlaneGraph{{{1, 2}, {2, 0}, {0, 1}}};
}

inline PlaneGraph cycle_graph(int n) {
    std::vector<std::vector<int>> rot(n);
    for (int i = 0; i < n; ++i) rot[i] = {(i + 1) % n, (i - 1 + n) % n};
    return PlaneGraph{rot};
}

inline std::vector<int> iota_cycle(int n) {
    std::vector<int> c(n);
    std::iota(c.begin(), c.end(), 0);
    return c;
}

// Bottom square 0..3, top square 4..7, verticals i - i+4.
inline PlaneGraph cube() {
    return PlaneGraph{{
        {3, 4, 1}, // 0
        {0, 5, 2}, // 1
        {1, 6, 3}, // 2
        {7, 0, 2}, // 3
        {0, 7, 5}, // 4
        {4, 6, 1}, // 5
        {5, 7, 2}, // 6
        {4, 3, 6}, // 7
    }};
}

// Outer triangle 0,1,2 with 3 in the center.
inline PlaneGraph k4_plane() {
    return PlaneGraph{{{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {1, 2, 0}}};
}

inline SimpleGraph k4() { return k4_plane().skeleton(); }

// Triangular prism: outer triangle 0,1,2, inner 3,4,5 (i+3 below i).
inline PlaneGraph prism() {
    return PlaneGraph{{
        {1, 3, 2}, // 0
        {2, 4, 0}, // 1
        {0, 5, 1}, // 2
        {4, 5, 0}, // 3
        {1, 5, 3}, // 4
        {2, 3, 4}, // 5
    }};
}

// Rim 0,1,2 with hub 3 inside and hub 4 outside.
inline PlaneGraph two_hub_wheel() {
    return PlaneGraph{{
        {4, 1, 3, 2}, // 0
        {2, 3, 0, 4}, // 1
        {4, 0, 3, 1}, // 2
        {0, 1, 2},    // 3 inner hub
        {1, 0, 2},    // 4 outer hub
    }};
}

// Wheel with rim 0..5 and hub 6.
inline PlaneGraph wheel6() {
    std::vector<std::vector<int>> rot(7);
    for (int i = 0; i < 6; ++i) rot[i] = {(i + 1) % 6, 6, (i + 5) % 6};
    rot[6] = {0, 1, 2, 3, 4, 5};
    return PlaneGraph{rot};
}

// Octahedron: equator 0..3, pole 4 inside, pole 5 outside.
inline PlaneGraph octahedron() {
    return PlaneGraph{{
        {3, 4, 1, 5}, // 0
        {0, 4, 2, 5}, // 1
        {3, 5, 1, 4}, // 2
        {5, 2, 4, 0}, // 3
        {0, 3, 2, 1}, // 4
        {0, 1, 2, 3}, // 5
    }};
}

inline SimpleGraph petersen() {
    std::vector<std::vector<int>> adj(10);
    for (int i = 0; i < 5; ++i) {
        adj[i].push_back((i + 1) % 5);
        adj[i].push_back((i + 4) % 5);
        adj[i].push_back(i + 5);
        adj[i + 5].push_back(i);
        adj[i + 5].push_back((i + 2) % 5 + 5);
        adj[i + 5].push_back((i + 3) % 5 + 5);
    }
    return SimpleGraph{adj};
}

// Dodecahedron via LCF notation [10,7,4,-4,-7,10,-4,7,-7,4]^2.
inline SimpleGraph dodecahedron() {
    const int d[20] = {10, 7, 4, -4, -7, 10, -4, 7, -7, 4,
                       10, 7, 4, -4, -7, 10, -4, 7, -7, 4};
    std::vector<std::vector<int>> adj(20);
    auto add = [&](int a, int b) {
        for (int x : adj[a])
            if (x == b) return;
        adj[a].push_back(b);
        adj[b].push_back(a);
    };
    for (int i = 0; i < 20; ++i) {
        add(i, (i + 1) % 20);
        add(i, ((i + d[i]) % 20 + 20) % 20);
    }
    return SimpleGraph{adj};
}

inline SimpleGraph simple_cycle(int n) { return cycle_graph(n).skeleton(); }

inline SimpleGraph simple_path(int n) {
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i + 1 < n; ++i) {
        adj[i].push_back(i + 1);
        adj[i + 1].push_back(i);
    }
    return SimpleGraph{adj};
}

// --- discharging fixtures ------------------------------------------------

// 12-cycle with x (=12) adjacent to 0 and 2: 4-face + 12-face inside.
inline PlaneGraph chord12() {
    std::vector<std::vector<int>> rot(13);
    for (int i = 0; i < 12; ++i) {
        rot[i].push_back((i + 1) % 12);
        if (i == 0 || i == 2) rot[i].push_back(12);
        rot[i].push_back((i + 11) % 12);
    }
    rot[12] = {2, 0};
    PlaneGraph g{rot};
    g.designate_outer(iota_cycle(12));
    return g;
}

// 12-cycle with internal path 0 - x(12) - y(13) - 6: two 9-faces inside.
inline PlaneGraph path12() {
    std::vector<std::vector<int>> rot(14);
    for (int i = 0; i < 12; ++i) {
        rot[i].push_back((i + 1) % 12);
        if (i == 0) rot[i].push_back(12);
        if (i == 6) rot[i].push_back(13);
        rot[i].push_back((i + 11) % 12);
    }
    rot[12] = {0, 13};
    rot[13] = {12, 6};
    PlaneGraph g{rot};
    g.designate_outer(iota_cycle(12));
    return g;
}

// Internal 10-face with eight bad 3-vertices (two runs of four) and two good
// 3-vertices. Outer 12-cycle 0..11; 10-gon u1..u10 = 12..21; apexes
// t12=22, t34=23, t67=24, t89=25; third neighbors w5=26, w10=27 spoked to
// D at 0 and 6.
struct TenFace {
    PlaneGraph g;
    std::vector<int> u; // u[0] = u1 .. u[9] = u10
    int face10 = -1;    // id of the 10-face
};

inline TenFace ten_face_eight_bad() {
    const int L = 12;
    std::vector<int> u(10);
    std::iota(u.begin(), u.end(), L);
    int t12 = 22, t34 = 23, t67 = 24, t89 = 25, w5 = 26, w10 = 27;
    std::vector<std::vector<int>> rot(28);
    for (int i = 0; i < L; ++i) {
        rot[i].push_back((i + 1) % L);
        if (i == 0) rot[i].push_back(w5);
        if (i == 6) rot[i].push_back(w10);
        rot[i].push_back((i + L - 1) % L);
    }
    auto U = [&](int i) { return u[((i - 1) % 10 + 10) % 10]; }; // 1-based
    // 10-gon: [prev, satellites.., next]
    rot[U(1)] = {U(10), t12, U(2)};
    rot[U(2)] = {U(1), t12, U(3)};
    rot[U(3)] = {U(2), t34, U(4)};
    rot[U(4)] = {U(3), t34, U(5)};
    rot[U(5)] = {U(4), w5, U(6)};
    rot[U(6)] = {U(5), t67, U(7)};
    rot[U(7)] = {U(6), t67, U(8)};
    rot[U(8)] = {U(7), t89, U(9)};
    rot[U(9)] = {U(8), t89, U(10)};
    rot[U(10)] = {U(9), w10, U(1)};
    rot[t12] = {U(2), U(1)};
    rot[t34] = {U(4), U(3)};
    rot[t67] = {U(7), U(6)};
    rot[t89] = {U(9), U(8)};
    rot[w5] = {U(5), 0};
    rot[w10] = {U(10), 6};
    PlaneGraph g{rot};
    g.designate_outer(iota_cycle(L));
    TenFace fx{std::move(g), u, -1};
    for (const dpc::FaceRecord& f : fx.g.faces())
        if (f.length == 10) fx.face10 = f.id;
    return fx;
}

// Internal 9-face with five bad, three light and one 4-vertex in the R4
// one-sixth pattern. Outer 12-cycle 0..11; 9-gon w1..w9 = 12..20;
// 4-face A = [w1 w2 a b] (a=21, b=22); 4-face B = [w7 w8 e f] (e=23, f=24);
// apexes t34=25, t56=26, t89=27; spoke midpoints ma=28, m34=29, m89=30.
struct NineFace {
    PlaneGraph g;
    std::vector<int> w; // w[0] = w1 .. w[8] = w9
    int face9 = -1;
    int z = -1; // the 4-vertex (w8)
};

inline NineFace nine_face_s5_t3() {
    const int L = 12;
    std::vector<int> w(9);
    std::iota(w.begin(), w.end(), L);
    int a = 21, b = 22, e = 23, f = 24, t34 = 25, t56 = 26, t89 = 27;
    int ma = 28, m34 = 29, m89 = 30;
    int dA = 0, dB = 4, dC = 8;
    std::vector<std::vector<int>> rot(31);
    for (int i = 0; i < L; ++i) {
        rot[i].push_back((i + 1) % L);
        if (i == dA) rot[i].push_back(ma);
        if (i == dB) rot[i].push_back(m34);
        if (i == dC) rot[i].push_back(m89);
        rot[i].push_back((i + L - 1) % L);
    }
    auto W = [&](int i) { return w[i - 1]; }; // 1-based
    rot[W(1)] = {W(9), b, W(2)};
    rot[W(2)] = {W(1), a, W(3)};
    rot[W(3)] = {W(2), t34, W(4)};
    rot[W(4)] = {W(3), t34, W(5)};
    rot[W(5)] = {W(4), t56, W(6)};
    rot[W(6)] = {W(5), t56, W(7)};
    rot[W(7)] = {W(6), f, W(8)};
    rot[W(8)] = {W(7), e, t89, W(9)};
    rot[W(9)] = {W(8), t89, W(1)};
    rot[a] = {W(2), b, ma};
    rot[b] = {W(1), a};
    rot[e] = {W(8), f};
    rot[f] = {W(7), e};
    rot[t34] = {W(4), W(3), m34};
    rot[t56] = {W(6), W(5)};
    rot[t89] = {W(9), W(8), m89};
    rot[ma] = {a, dA};
    rot[m34] = {t34, dB};
    rot[m89] = {t89, dC};
    PlaneGraph g{rot};
    g.designate_outer(iota_cycle(L));
    NineFace fx{std::move(g), w, -1, W(8)};
    for (const dpc::FaceRecord& fc : fx.g.faces())
        if (fc.length == 9) fx.face9 = fc.id;
    return fx;
}

// A 4-vertex on D paying 1 to a special 4-face: outer 12-cycle 0..11 with
// vertex 0 of degree 4; internal 4-face [0 a c b] meeting D only at 0
// (a=12, b=13, c=14); spoke paths a-15-16-d7 and b-17-18-d5.
inline PlaneGraph special_face_payer() {
    const int L = 12;
    int a = 12, b = 13, c = 14, ma1 = 15, ma2 = 16, mb1 = 17, mb2 = 18;
    std::vector<std::vector<int>> rot(19);
    for (int i = 0; i < L; ++i) {
        if (i == 0) {
            rot[i] = {1, b, a, 11};
            continue;
        }
        rot[i].push_back((i + 1) % L);
        if (i == 5) rot[i].push_back(mb2);
        if (i == 7) rot[i].push_back(ma2);
        rot[i].push_back((i + L - 1) % L);
    }
    rot[a] = {c, ma1, 0};
    rot[b] = {mb1, c, 0};
    rot[c] = {a, b};
    rot[ma1] = {a, ma2};
    rot[ma2] = {ma1, 7};
    rot[mb1] = {b, mb2};
    rot[mb2] = {mb1, 5};
    PlaneGraph g{rot};
    g.designate_outer(iota_cycle(L));
    return g;
}

// An internal 4-vertex on two non-special 3-faces and two 9+-faces (the R4
// one-third pattern). v=12 centered in the outer 12-cycle; n1..n4 = 13..16;
// triangle edges n1n2 and n3n4; spoke chains n_i - x_i - y_i - D.
struct FourVertexR4 {
    PlaneGraph g;
    int v = 12;
    std::array<int, 4> n{13, 14, 15, 16};
};

inline FourVertexR4 four_vertex_r4() {
    const int L = 12;
    int v = 12, n1 = 13, n2 = 14, n3 = 15, n4 = 16;
    int x1 = 17, y1 = 18, x2 = 19, y2 = 20, x3 = 21, y3 = 22, x4 = 23, y4 = 24;
    int A1 = 10, A2 = 1, A3 = 4, A4 = 7;
    std::vector<std::vector<int>> rot(25);
    for (int i = 0; i < L; ++i) {
        rot[i].push_back((i + 1) % L);
        if (i == A1) rot[i].push_back(y1);
        if (i == A2) rot[i].push_back(y2);
        if (i == A3) rot[i].push_back(y3);
        if (i == A4) rot[i].push_back(y4);
        rot[i].push_back((i + L - 1) % L);
    }
    rot[v] = {n1, n2, n3, n4};
    rot[n1] = {v, x1, n2};
    rot[n2] = {v, n1, x2};
    rot[n3] = {x3, n4, v};
    rot[n4] = {x4, v, n3};
    rot[x1] = {n1, y1};
    rot[y1] = {x1, A1};
    rot[x2] = {n2, y2};
    rot[y2] = {x2, A2};
    rot[x3] = {n3, y3};
    rot[y3] = {x3, A3};
    rot[x4] = {n4, y4};
    rot[y4] = {x4, A4};
    PlaneGraph g{rot};
    g.designate_outer(iota_cycle(L));
    return FourVertexR4{std::move(g)};
}

// A 10-face with a bad run of exactly four whose context edges v0v1, v2v3,
// v4v5 all lie on triangles (the staggered run pattern). Outer
// 12-cycle 0..11; 10-gon p0..p9 = 12..21; apexes t01=22, t23=23, t45=24;
// spoke midpoints s0=25 (at p0, anchor 0), s5=26 (at p5, anchor 6).
struct BadRunFixture {
    PlaneGraph g;
    std::vector<int> p; // p[0] = p0 .. p[9] = p9
};

inline BadRunFixture staggered_bad_run() {
    const int L = 12;
    std::vector<int> p(10);
    std::iota(p.begin(), p.end(), L);
    int t01 = 22, t23 = 23, t45 = 24, s0 = 25, s5 = 26;
    std::vector<std::vector<int>> rot(27);
    for (int i = 0; i < L; ++i) {
        rot[i].push_back((i + 1) % L);
        if (i == 0) rot[i].push_back(s0);
        if (i == 6) rot[i].push_back(s5);
        rot[i].push_back((i + L - 1) % L);
    }
    rot[p[0]] = {p[9], s0, t01, p[1]};
    rot[p[1]] = {p[0], t01, p[2]};
    rot[p[2]] = {p[1], t23, p[3]};
    rot[p[3]] = {p[2], t23, p[4]};
    rot[p[4]] = {p[3], t45, p[5]};
    rot[p[5]] = {p[4], t45, s5, p[6]};
    for (int i = 6; i <= 8; ++i) rot[p[i]] = {p[i - 1], p[i + 1]};
    rot[p[9]] = {p[8], p[0]};
    rot[t01] = {p[1], p[0]};
    rot[t23] = {p[3], p[2]};
    rot[t45] = {p[5], p[4]};
    rot[s0] = {p[0], 0};
    rot[s5] = {p[5], 6};
    PlaneGraph g{rot};
    g.designate_outer(iota_cycle(L));
    return BadRunFixture{std::move(g), p};
}

} // namespace fixtures
