#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "errors.hpp"

namespace legendrian {

// Column i carries an X in row x[i] and an O in row o[i].
struct GridDiagram {
    int g = 0;
    std::vector<int> x, o;
    bool reversed = false;

    friend bool operator==(const GridDiagram&, const GridDiagram&) = default;
};

inline int grid_components(const GridDiagram& d) {
    std::vector<int> colX(d.g);
    for (int c = 0; c < d.g; ++c) colX[d.x[c]] = c;
    std::vector<char> seen(d.g, 0);
    int n = 0;
    for (int s = 0; s < d.g; ++s) {
        if (seen[s]) continue;
        ++n;
        for (int c = s; !seen[c]; c = colX[d.o[c]]) seen[c] = 1;
    }
    return n;
}

inline void validate_grid(const GridDiagram& d, bool allow_links = false) {
    if (d.g < 2) throw InputError("grid size must be at least 2, got " + std::to_string(d.g));
    if (static_cast<int>(d.x.size()) != d.g) throw InputError("x_cells has length " + std::to_string(d.x.size()) + ", expected " + std::to_string(d.g));
    if (static_cast<int>(d.o.size()) != d.g) throw InputError("o_cells has length " + std::to_string(d.o.size()) + ", expected " + std::to_string(d.g));
    auto check_perm = [&](const std::vector<int>& v, const char* name) {
        std::vector<int> col(d.g, -1);
        for (int c = 0; c < d.g; ++c) {
            if (v[c] < 0 || v[c] >= d.g)
                throw InputError(std::string(name) + " not a permutation: cell (" + std::to_string(c) + "," + std::to_string(v[c]) + ") out of range");
            if (col[v[c]] >= 0)
                throw InputError(std::string(name) + " not a permutation: row " + std::to_string(v[c]) + " used by columns " +
                                 std::to_string(col[v[c]]) + " and " + std::to_string(c));
            col[v[c]] = c;
        }
    };
    check_perm(d.x, "x_cells");
    check_perm(d.o, "o_cells");
    for (int c = 0; c < d.g; ++c)
        if (d.x[c] == d.o[c])
            throw InputError("marker collision at cell (" + std::to_string(c) + "," + std::to_string(d.x[c]) + ")");
    if (!allow_links) {
        const int n = grid_components(d);
        if (n != 1) throw InputError("grid describes a " + std::to_string(n) + "-component link; multi-component mode not enabled");
    }
}

inline GridDiagram parse_grid(const nlohmann::json& j, bool allow_links = false) {
    GridDiagram d;
    try {
        if (!j.is_object()) throw InputError("grid must be a JSON object");
        for (const char* key : {"g", "x", "o"})
            if (!j.contains(key)) throw InputError(std::string("grid is missing field \"") + key + "\"");
        d.g = j.at("g").get<int>();
        d.x = j.at("x").get<std::vector<int>>();
        d.o = j.at("o").get<std::vector<int>>();
        if (j.contains("orientation")) {
            const auto orient = j.at("orientation").get<std::string>();
            if (orient == "reversed") d.reversed = true;
            else if (orient != "auto") throw InputError("orientation must be \"auto\" or \"reversed\", got \"" + orient + "\"");
        }
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed grid: ") + e.what());
    }
    validate_grid(d, allow_links);
    return d;
}

inline GridDiagram parse_grid(const std::string& text, bool allow_links = false) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("malformed syntax: ") + e.what());
    }
    return parse_grid(j, allow_links);
}

inline nlohmann::json to_json(const GridDiagram& d) {
    return {{"g", d.g}, {"x", d.x}, {"o", d.o}, {"orientation", d.reversed ? "reversed" : "auto"}};
}

inline GridDiagram unknot_grid() { return {2, {1, 0}, {0, 1}, false}; }

// Legendrian (2, 2k+1) torus knot with tb = 2k - 1.
inline GridDiagram torus_knot_grid(int k) {
    if (k < 1) throw InputError("torus_knot_grid needs k >= 1 (k = 0 is the unknot)");
    const int g = 2 * k + 3;
    GridDiagram d;
    d.g = g;
    d.x.push_back(0);
    for (int r = g - 1; r >= 1; --r) d.x.push_back(r);
    for (int r = g - 2; r >= 0; --r) d.o.push_back(r);
    d.o.push_back(g - 1);
    return d;
}

// Once-stabilized unknot, tb = -2.
inline GridDiagram stabilized_unknot_grid() { return {3, {1, 2, 0}, {0, 1, 2}, false}; }

// Swaps adjacent columns i and i+1 when their marker intervals are
// disjoint or nested. Returns false if the move is not a commutation.
inline bool commute_columns(GridDiagram& d, int i) {
    if (i < 0 || i + 1 >= d.g) return false;
    const int j = i + 1;
    auto [a0, a1] = std::minmax(d.x[i], d.o[i]);
    auto [b0, b1] = std::minmax(d.x[j], d.o[j]);
    if (a0 == b0 || a0 == b1 || a1 == b0 || a1 == b1) return false;
    if ((a0 < b0 && b0 < a1 && a1 < b1) || (b0 < a0 && a0 < b1 && b1 < a1)) return false;
    std::swap(d.x[i], d.x[j]);
    std::swap(d.o[i], d.o[j]);
    return true;
}

// Row version of commute_columns.
inline bool commute_rows(GridDiagram& d, int i) {
    if (i < 0 || i + 1 >= d.g) return false;
    const int j = i + 1;
    std::vector<int> xr(d.g), orow(d.g);
    for (int c = 0; c < d.g; ++c) {
        xr[d.x[c]] = c;
        orow[d.o[c]] = c;
    }
    auto [a0, a1] = std::minmax(xr[i], orow[i]);
    auto [b0, b1] = std::minmax(xr[j], orow[j]);
    if (a0 == b0 || a0 == b1 || a1 == b0 || a1 == b1) return false;
    if ((a0 < b0 && b0 < a1 && a1 < b1) || (b0 < a0 && a0 < b1 && b1 < a1)) return false;
    for (int c = 0; c < d.g; ++c) {
        if (d.x[c] == i) d.x[c] = j;
        else if (d.x[c] == j) d.x[c] = i;
        if (d.o[c] == i) d.o[c] = j;
        else if (d.o[c] == j) d.o[c] = i;
    }
    return true;
}

}  // namespace legendrian
