#pragma once

#include <set>
#include <vector>

#include "disks.hpp"
#include "simplex.hpp"

namespace legendrian {

// Whether the height of crossing c can be pushed to 0 while every other height
// stays >= 1 and every disk keeps positive area (>= 1 after scaling).
inline bool lp_contractible(const LagrangianDiagram& l, const DiskSet& ds, int c) {
    const int n = static_cast<int>(l.crossings.size());
    std::set<std::vector<int>> rows;
    for (const auto& disk : ds.disks) {
        if (disk.positive == c) return false;  // area h(c) - ... <= 0
        std::vector<int> r(n, 0);
        r[disk.positive] += 1;
        for (int b : disk.negatives) r[b] -= 1;
        r[c] = 0;
        rows.insert(r);
    }
    // h_d = 1 + y_d for d != c; y >= 0
    std::vector<int> var(n, -1);
    int nv = 0;
    for (int d = 0; d < n; ++d)
        if (d != c) var[d] = nv++;
    std::vector<std::vector<Rational>> A;
    std::vector<Rational> b;
    for (const auto& r : rows) {
        std::vector<Rational> row(nv, 0);
        int s = 0;
        for (int d = 0; d < n; ++d)
            if (var[d] >= 0) {
                row[var[d]] = r[d];
                s += r[d];
            }
        A.push_back(std::move(row));
        b.push_back(1 - s);
    }
    return lp::feasible<Rational>(A, b, nv);
}

inline std::vector<int> contractible_crossings(const LagrangianDiagram& l, const DiskSet& ds) {
    std::vector<int> out;
    for (int c = 0; c < static_cast<int>(l.crossings.size()); ++c)
        if (lp_contractible(l, ds, c)) out.push_back(c);
    return out;
}

}  // namespace legendrian
