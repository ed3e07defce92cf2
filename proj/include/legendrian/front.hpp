#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"
#include "grid.hpp"

namespace legendrian {

// A front as a left-to-right sweep. Strands are numbered by birth: the k-th
// left cusp creates strands 2k (lower) and 2k+1 (upper).
struct FrontEvent {
    char type;  // 'L' left cusp, 'X' crossing, 'R' right cusp
    int p;      // lower position involved
    friend bool operator==(const FrontEvent&, const FrontEvent&) = default;
};

struct Front {
    std::vector<FrontEvent> events;
    std::vector<char> rightward;  // per strand
    friend bool operator==(const Front&, const Front&) = default;
};

struct FrontGenerator {
    std::string name;
    int event;
    int degree;
    int sign;
};

struct FrontInfo {
    std::vector<std::array<int, 2>> strands;  // per event: strands at (p, p+1), lower first
    std::vector<int> comp;                    // strand -> component
    int ncomp = 0;
    std::vector<int> mu;                      // Maslov potential per strand
    std::vector<int> rotation;                // per component
    int modulus = 0;                          // grading modulus
    int writhe = 0, right_cusps = 0;
    std::vector<FrontGenerator> gens;         // crossings and right cusps in event order

    int tb() const { return writhe - right_cusps; }
    int rotation_total() const { return std::accumulate(rotation.begin(), rotation.end(), 0); }
};

namespace detail {

inline int reduce(int v, int m) {
    if (m == 0) return v;
    v %= m;
    return v < 0 ? v + m : v;
}

struct Seg {
    int ax, az, bx, bz;
    int slope() const { return (bz - az) / (bx - ax); }
    int zat(int X) const { return az + slope() * (X - ax); }
    bool spans(int X) const { return std::min(ax, bx) < X && X < std::max(ax, bx); }
};

}  // namespace detail

// Front of a grid: rotate by 45 degrees, X = col - row, Z = col + row.
inline Front grid_to_front(const GridDiagram& d) {
    std::vector<int> colX(d.g);
    for (int c = 0; c < d.g; ++c) colX[d.x[c]] = c;
    std::vector<detail::Seg> segs;
    struct Corner { int X, Z, sin, sout; };
    std::vector<Corner> corners;
    std::vector<char> seen(d.g, 0);
    for (int start = 0; start < d.g; ++start) {
        if (seen[start]) continue;
        std::vector<std::array<int, 2>> verts;
        for (int c = start; !seen[c]; c = colX[d.o[c]]) {
            seen[c] = 1;
            verts.push_back({c, d.x[c]});
            verts.push_back({c, d.o[c]});
        }
        if (d.reversed) std::reverse(verts.begin() + 1, verts.end());
        const int m = static_cast<int>(verts.size()), base = static_cast<int>(segs.size());
        for (int k = 0; k < m; ++k) {
            const auto& a = verts[k];
            const auto& b = verts[(k + 1) % m];
            segs.push_back({a[0] - a[1], a[0] + a[1], b[0] - b[1], b[0] + b[1]});
        }
        for (int k = 0; k < m; ++k)
            corners.push_back({verts[k][0] - verts[k][1], verts[k][0] + verts[k][1], base + (k + m - 1) % m, base + k});
    }
    struct Feature { int X, Z; char t; int s1, s2; };
    std::vector<Feature> feats;
    for (const auto& c : corners) {
        const int xin = segs[c.sin].ax, xout = segs[c.sout].bx;
        const char t = (xin > c.X && xout > c.X) ? 'L' : (xin < c.X && xout < c.X) ? 'R' : 'S';
        feats.push_back({c.X, c.Z, t, c.sin, c.sout});
    }
    for (int s = 0; s < static_cast<int>(segs.size()); ++s)
        for (int t = s + 1; t < static_cast<int>(segs.size()); ++t) {
            const int m1 = segs[s].slope(), m2 = segs[t].slope();
            if (m1 == m2) continue;
            const int num = segs[t].az - segs[s].az + m1 * segs[s].ax - m2 * segs[t].ax;
            if (num % (m1 - m2) != 0) continue;
            const int X = num / (m1 - m2);
            if (segs[s].spans(X) && segs[t].spans(X)) feats.push_back({X, segs[s].zat(X), 'X', s, t});
        }
    std::sort(feats.begin(), feats.end(), [](const Feature& a, const Feature& b) {
        return a.X != b.X ? a.X < b.X : a.Z < b.Z;
    });

    Front f;
    std::vector<int> cur;  // segment ids by position
    for (const auto& ft : feats) {
        int p = 0;
        for (int s : cur)
            if (segs[s].zat(ft.X) < ft.Z) ++p;
        if (ft.t == 'L') {
            const bool first_low = segs[ft.s1].slope() < segs[ft.s2].slope();
            const int lo = first_low ? ft.s1 : ft.s2, up = first_low ? ft.s2 : ft.s1;
            f.rightward.push_back(segs[lo].bx > segs[lo].ax);
            f.rightward.push_back(segs[up].bx > segs[up].ax);
            cur.insert(cur.begin() + p, {lo, up});
            f.events.push_back({'L', p});
        } else if (ft.t == 'R') {
            f.events.push_back({'R', p});
            cur.erase(cur.begin() + p, cur.begin() + p + 2);
        } else if (ft.t == 'S') {
            auto it = std::find(cur.begin(), cur.end(), ft.s1);
            if (it != cur.end()) *it = ft.s2;
            else *std::find(cur.begin(), cur.end(), ft.s2) = ft.s1;
        } else {
            f.events.push_back({'X', p});
            std::swap(cur[p], cur[p + 1]);
        }
    }
    return f;
}

// Sweeps the front, checks consistency and computes classical data.
inline FrontInfo analyze(const Front& f) {
    FrontInfo info;
    const int ns = static_cast<int>(f.rightward.size());
    std::vector<int> cur;
    std::vector<int> partnerL(ns, -1), partnerR(ns, -1);
    std::vector<char> upperL(ns, 0), upperR(ns, 0);
    int born = 0;
    for (std::size_t k = 0; k < f.events.size(); ++k) {
        const auto& e = f.events[k];
        const int n = static_cast<int>(cur.size());
        const std::string where = " at event " + std::to_string(k);
        if (e.type == 'L') {
            if (e.p < 0 || e.p > n) throw InputError("left cusp position out of range" + where);
            if (born + 2 > ns) throw InputError("front has more left cusps than strand orientations");
            const int lo = born++, up = born++;
            cur.insert(cur.begin() + e.p, {lo, up});
            partnerL[lo] = up;
            partnerL[up] = lo;
            upperL[up] = 1;
            if (f.rightward[lo] == f.rightward[up]) throw InputError("inconsistent orientation at left cusp" + where);
            info.strands.push_back({lo, up});
        } else if (e.type == 'X' || e.type == 'R') {
            if (e.p < 0 || e.p + 1 >= n) throw InputError("event position out of range" + where);
            const int a = cur[e.p], b = cur[e.p + 1];
            info.strands.push_back({a, b});
            if (e.type == 'X') {
                std::swap(cur[e.p], cur[e.p + 1]);
                info.writhe += f.rightward[a] == f.rightward[b] ? 1 : -1;
            } else {
                if (f.rightward[a] == f.rightward[b]) throw InputError("inconsistent orientation at right cusp" + where);
                partnerR[a] = b;
                partnerR[b] = a;
                upperR[b] = 1;
                cur.erase(cur.begin() + e.p, cur.begin() + e.p + 2);
                ++info.right_cusps;
            }
        } else {
            throw InputError("unknown front event type" + where);
        }
    }
    if (!cur.empty()) throw InputError("front does not close up");
    if (born != ns) throw InputError("front has unused strand orientations");

    // walk each component along its orientation
    info.comp.assign(ns, -1);
    info.mu.assign(ns, 0);
    for (int s0 = 1; s0 < ns; s0 += 2) {  // upper strand of each left cusp, leftmost first
        if (info.comp[s0] >= 0) continue;
        const int c = info.ncomp++;
        int s = s0, acc = 0;
        info.comp[s0] = c;
        for (;;) {
            const int next = f.rightward[s] ? partnerR[s] : partnerL[s];
            const bool up = f.rightward[s] ? upperR[next] : upperL[next];
            acc += up ? 1 : -1;
            if (next == s0) break;
            info.comp[next] = c;
            info.mu[next] = acc;
            s = next;
        }
        info.rotation.push_back(-acc / 2);
    }
    int m = 0;
    for (int r : info.rotation) m = std::gcd(m, 2 * std::abs(r));
    info.modulus = m;
    for (auto& v : info.mu) v = detail::reduce(v, m);

    int nc = 0, nq = 0;
    for (std::size_t k = 0; k < f.events.size(); ++k) {
        const auto& e = f.events[k];
        if (e.type == 'X') {
            const int a = info.strands[k][0], b = info.strands[k][1];
            info.gens.push_back({"c" + std::to_string(++nc), static_cast<int>(k), detail::reduce(info.mu[b] - info.mu[a], m),
                                 f.rightward[a] == f.rightward[b] ? 1 : -1});
        } else if (e.type == 'R') {
            info.gens.push_back({"q" + std::to_string(++nq), static_cast<int>(k), detail::reduce(1, m), -1});
        }
    }
    return info;
}

inline Front reverse_orientation(Front f) {
    for (auto& r : f.rightward) r = !r;
    return f;
}

// 0-resolution of the front crossing at event k: the two strands stop crossing.
inline Front remove_crossing(const Front& f, int k) {
    if (k < 0 || k >= static_cast<int>(f.events.size()) || f.events[k].type != 'X')
        throw InputError("event " + std::to_string(k) + " is not a crossing");
    Front g = f;
    g.events.erase(g.events.begin() + k);
    return g;
}

// Index of the event that kills the strands of an isolated tb = -1 eye whose
// left cusp is event k, or -1 if the component is not such an eye.
inline int isolated_eye_end(const Front& f, const FrontInfo& info, int k) {
    if (f.events[k].type != 'L') return -1;
    const int lo = info.strands[k][0], up = info.strands[k][1];
    int pos = f.events[k].p;
    for (int j = k + 1; j < static_cast<int>(f.events.size()); ++j) {
        const auto& e = f.events[j];
        if (e.type == 'L') {
            if (e.p == pos + 1) return -1;
            if (e.p <= pos) pos += 2;
            continue;
        }
        const int a = info.strands[j][0], b = info.strands[j][1];
        const bool ours_a = a == lo || a == up, ours_b = b == lo || b == up;
        if (e.type == 'R' && ours_a && ours_b) return j;
        if (ours_a || ours_b) return -1;
        if (e.type == 'R' && e.p < pos) pos -= 2;
    }
    return -1;
}

// Removes the isolated eye born at event k.
inline Front remove_eye(const Front& f, const FrontInfo& info, int k) {
    const int end = isolated_eye_end(f, info, k);
    if (end < 0) throw InputError("component is not a tb=-1 unknot");
    Front g;
    int pos = f.events[k].p;
    for (int j = 0; j < static_cast<int>(f.events.size()); ++j) {
        if (j == k || j == end) continue;
        FrontEvent e = f.events[j];
        if (j > k && j < end) {
            if (e.type == 'L') {
                if (e.p <= pos) pos += 2;
                else e.p -= 2;
            } else if (e.p > pos) {
                e.p -= 2;
            } else if (e.type == 'R') {
                pos -= 2;
            }
        }
        g.events.push_back(e);
    }
    const int lo = info.strands[k][0];
    for (int s = 0; s < static_cast<int>(f.rightward.size()); ++s)
        if (s != lo && s != lo + 1) g.rightward.push_back(f.rightward[s]);
    return g;
}

// Planar isotopy exchanging events k and k+1 when they involve disjoint strands.
inline bool swap_events(Front& f, int k) {
    if (k < 0 || k + 1 >= static_cast<int>(f.events.size())) return false;
    auto width_in = [](char t) { return t == 'L' ? 0 : 2; };
    auto width_out = [](char t) { return t == 'R' ? 0 : 2; };
    FrontEvent a = f.events[k], b = f.events[k + 1];
    const int ina = width_in(a.type), outa = width_out(a.type);
    const int inb = width_in(b.type), outb = width_out(b.type);
    FrontEvent na = a, nb = b;
    if (b.p + inb <= a.p) {
        na.p = a.p + outb - inb;
    } else if (b.p >= a.p + outa) {
        nb.p = b.p - outa + ina;
    } else {
        return false;
    }
    // strand numbering follows left cusp order
    Front g = f;
    g.events[k] = nb;
    g.events[k + 1] = na;
    if (a.type == 'L' && b.type == 'L') {
        int before = 0;
        for (int j = 0; j < k; ++j)
            if (f.events[j].type == 'L') ++before;
        std::swap_ranges(g.rightward.begin() + 2 * before, g.rightward.begin() + 2 * before + 2,
                         g.rightward.begin() + 2 * before + 2);
    }
    f = std::move(g);
    return true;
}

inline int thurston_bennequin(const GridDiagram& d) { return analyze(grid_to_front(d)).tb(); }
inline int rotation_number(const GridDiagram& d) { return analyze(grid_to_front(d)).rotation_total(); }

}  // namespace legendrian
