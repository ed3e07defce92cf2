#pragma once

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

#include "front.hpp"
#include "simplex.hpp"

namespace legendrian {

// Sweep event of the resolved diagram: smooth birth 'B', crossing 'X', loop tip 'D'.
struct SweepEvent {
    char type;
    int p;
    int gen;  // crossing index for 'X', else -1
};

// Slots are listed counterclockwise: NE, NW, SW, SE. The strand through NW and SE
// descends from left to right and is the over strand.
enum Slot { NE = 0, NW = 1, SW = 2, SE = 3 };

struct SlotRef {
    int crossing;
    int slot;
    friend bool operator==(const SlotRef&, const SlotRef&) = default;
};

struct Crossing {
    std::string name;
    int sign;
    int degree;
    bool cusp;                   // loop crossing of a right cusp
    std::array<int, 4> arcs;     // arc through each slot
    int strand_over, strand_under;
};

struct Arc {
    SlotRef tail, head;  // along the orientation
    int strand;          // front strand carrying the arc
};

struct LagrangianDiagram {
    std::vector<SweepEvent> events;
    std::vector<Crossing> crossings;
    std::vector<Arc> arcs;
    std::vector<Rational> heights;
    int modulus = 0;
    int components = 0;
};

namespace detail {

inline int cross_sign(int ox, int oy, int ux, int uy) {
    const int c = ox * uy - oy * ux;
    return c > 0 ? 1 : -1;
}

}  // namespace detail

// Resolves a front: left cusps become smooth births, each right cusp becomes a
// loop crossing followed by the loop tip.
inline LagrangianDiagram ng_resolve(const Front& f) {
    const FrontInfo info = analyze(f);
    LagrangianDiagram l;
    l.modulus = info.modulus;
    l.components = info.ncomp;

    // endpoint of a segment: slot (crossing >= 0) or junction (crossing = -1 - id)
    struct Seg { SlotRef left{-1, 0}, right{-1, 0}; int strand; };
    std::vector<Seg> segs;
    std::vector<int> open;  // segment by position
    std::vector<int> cur;   // strand by position
    int junctions = 0;

    for (std::size_t k = 0; k < f.events.size(); ++k) {
        const auto& e = f.events[k];
        if (e.type == 'L') {
            l.events.push_back({'B', e.p, -1});
            const SlotRef j{-1 - junctions++, 0};
            const int lo = info.strands[k][0], up = info.strands[k][1];
            segs.push_back({j, {-1, 0}, lo});
            segs.push_back({j, {-1, 0}, up});
            const int n = static_cast<int>(segs.size());
            open.insert(open.begin() + e.p, {n - 2, n - 1});
            cur.insert(cur.begin() + e.p, {lo, up});
            continue;
        }
        const int idx = static_cast<int>(l.crossings.size());
        const FrontGenerator* gen = nullptr;
        for (const auto& g : info.gens)
            if (g.event == static_cast<int>(k)) gen = &g;
        const int a = cur[e.p], b = cur[e.p + 1];  // a ascends, b descends and is over
        const int ax = f.rightward[a] ? 1 : -1, bx = f.rightward[b] ? 1 : -1;
        Crossing c{gen->name, detail::cross_sign(bx, -bx, ax, ax), gen->degree, e.type == 'R', {-1, -1, -1, -1}, b, a};
        l.crossings.push_back(c);
        l.events.push_back({'X', e.p, idx});
        segs[open[e.p]].right = {idx, SW};
        segs[open[e.p + 1]].right = {idx, NW};
        segs.push_back({{idx, SE}, {-1, 0}, b});
        segs.push_back({{idx, NE}, {-1, 0}, a});
        const int n = static_cast<int>(segs.size());
        open[e.p] = n - 2;
        open[e.p + 1] = n - 1;
        cur[e.p] = b;
        cur[e.p + 1] = a;
        if (e.type == 'R') {
            l.events.push_back({'D', e.p, -1});
            const SlotRef j{-1 - junctions++, 0};
            segs[open[e.p]].right = j;
            segs[open[e.p + 1]].right = j;
            open.erase(open.begin() + e.p, open.begin() + e.p + 2);
            cur.erase(cur.begin() + e.p, cur.begin() + e.p + 2);
        }
    }

    // chain segments through junctions into arcs between slots
    std::vector<std::array<int, 2>> at_junction(junctions, {-1, -1});
    std::vector<std::array<int, 4>> at_slot(l.crossings.size(), {-1, -1, -1, -1});
    for (int s = 0; s < static_cast<int>(segs.size()); ++s)
        for (const SlotRef& end : {segs[s].left, segs[s].right}) {
            if (end.crossing >= 0) at_slot[end.crossing][end.slot] = s;
            else {
                auto& jj = at_junction[-1 - end.crossing];
                jj[jj[0] < 0 ? 0 : 1] = s;
            }
        }
    std::vector<std::array<char, 4>> done(l.crossings.size(), {0, 0, 0, 0});
    for (int c = 0; c < static_cast<int>(l.crossings.size()); ++c)
        for (int sl = 0; sl < 4; ++sl) {
            if (done[c][sl]) continue;
            const SlotRef start{c, sl};
            int s = at_slot[c][sl];
            SlotRef from = start;
            // leaving a right-side slot moves rightward along the segment
            const bool moving_right = sl == NE || sl == SE;
            const bool forward = moving_right == static_cast<bool>(f.rightward[segs[s].strand]);
            const int strand = segs[s].strand;
            SlotRef end;
            for (;;) {
                const SlotRef other = segs[s].left == from ? segs[s].right : segs[s].left;
                if (other.crossing >= 0) { end = other; break; }
                const auto& jj = at_junction[-1 - other.crossing];
                s = jj[0] == s ? jj[1] : jj[0];
                from = other;
            }
            done[c][sl] = 1;
            done[end.crossing][end.slot] = 1;
            const int id = static_cast<int>(l.arcs.size());
            l.arcs.push_back(forward ? Arc{start, end, strand} : Arc{end, start, strand});
            l.crossings[c].arcs[sl] = id;
            l.crossings[end.crossing].arcs[end.slot] = id;
        }

    Rational h = 1;
    for (std::size_t i = 0; i < l.crossings.size(); ++i, h *= 2) l.heights.push_back(h);
    return l;
}

inline LagrangianDiagram ng_resolve(const GridDiagram& d) { return ng_resolve(grid_to_front(d)); }

inline int tb_signed_chord_sum(const LagrangianDiagram& l) {
    int s = 0;
    for (const auto& c : l.crossings) s += c.sign;
    return s;
}

inline std::string rational_string(const Rational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

inline nlohmann::json to_json(const LagrangianDiagram& l) {
    static const char* slot_names[4] = {"NE", "NW", "SW", "SE"};
    nlohmann::json cs = nlohmann::json::array(), arcs = nlohmann::json::array(), hs = nlohmann::json::object();
    for (std::size_t i = 0; i < l.crossings.size(); ++i) {
        const auto& c = l.crossings[i];
        nlohmann::json slots = nlohmann::json::array();
        for (int s = 0; s < 4; ++s)
            slots.push_back({{"slot", slot_names[s]}, {"arc", c.arcs[s]}, {"over", s == NW || s == SE}});
        cs.push_back({{"id", c.name}, {"sign", c.sign}, {"degree", c.degree}, {"slots", slots},
                      {"quadrants", {{{"between", "SE-NE"}, {"reeb_sign", "+"}},
                                     {{"between", "NE-NW"}, {"reeb_sign", "-"}},
                                     {{"between", "NW-SW"}, {"reeb_sign", "+"}},
                                     {{"between", "SW-SE"}, {"reeb_sign", "-"}}}}});
        hs[c.name] = rational_string(l.heights[i]);
    }
    for (const auto& a : l.arcs)
        arcs.push_back({{"from", {l.crossings[a.tail.crossing].name, slot_names[a.tail.slot]}},
                        {"to", {l.crossings[a.head.crossing].name, slot_names[a.head.slot]}}});
    return {{"crossings", cs}, {"arcs", arcs}, {"heights", hs}, {"modulus", l.modulus}};
}

}  // namespace legendrian
