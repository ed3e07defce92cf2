#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "dga.hpp"
#include "gf2.hpp"

namespace legendrian {

struct Augmentation {
    std::vector<std::uint8_t> values;  // per generator
    friend bool operator==(const Augmentation&, const Augmentation&) = default;
};

inline bool eval_word(const Augmentation& e, const Word& w) {
    for (int x : w)
        if (!e.values[x]) return false;
    return true;
}

// First generator c with e(dc) != 0, or -1.
inline int augmentation_violation(const DGA& a, const Augmentation& e) {
    for (std::size_t c = 0; c < a.generators.size(); ++c) {
        if (e.values[c] && a.reduce(a.generators[c].degree) != 0) return static_cast<int>(c);
        bool s = false;
        for (const auto& w : a.d[c]) s ^= eval_word(e, w);
        if (s) return static_cast<int>(c);
    }
    return -1;
}

// All graded augmentations, ordered by the binary number formed by the values
// on degree-0 generators (first generator least significant).
inline std::vector<Augmentation> enumerate_augmentations(const DGA& a, unsigned jobs = 1) {
    std::vector<int> zero;
    for (std::size_t c = 0; c < a.generators.size(); ++c)
        if (a.reduce(a.generators[c].degree) == 0) zero.push_back(static_cast<int>(c));
    if (zero.size() > 40) throw InputError("too many degree-0 generators for exhaustive enumeration");
    const std::uint64_t total = std::uint64_t{1} << zero.size();
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::min<std::uint64_t>(total, 64))));
    std::vector<std::vector<Augmentation>> parts(jobs);
    auto work = [&](unsigned j) {
        const std::uint64_t lo = total * j / jobs, hi = total * (j + 1) / jobs;
        Augmentation e{std::vector<std::uint8_t>(a.generators.size(), 0)};
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            for (std::size_t i = 0; i < zero.size(); ++i) e.values[zero[i]] = (mask >> i) & 1;
            if (augmentation_violation(a, e) < 0) parts[j].push_back(e);
        }
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(work, j);
        for (auto& t : pool) t.join();
    }
    std::vector<Augmentation> out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

// Linearized complex. d.at(k) maps degree k to degree k-1 (reduced).
struct GradedComplex {
    int modulus = 0;
    std::map<int, std::vector<int>> gens;  // degree -> generators
    std::map<int, gf2::Matrix> d;

    int reduce(int v) const { return detail::reduce(v, modulus); }
    std::size_t size(int deg) const {
        auto it = gens.find(reduce(deg));
        return it == gens.end() ? 0 : it->second.size();
    }
    const gf2::Matrix* diff(int k) const {
        auto it = d.find(reduce(k));
        return it == d.end() ? nullptr : &it->second;
    }
};

inline GradedComplex linearize(const DGA& a, const Augmentation& e) {
    const int bad = augmentation_violation(a, e);
    if (bad >= 0) throw InputError("not an augmentation: fails at generator " + a.generators[bad].name);
    GradedComplex cx;
    cx.modulus = a.modulus;
    std::vector<int> slot(a.generators.size());
    for (std::size_t c = 0; c < a.generators.size(); ++c) {
        auto& v = cx.gens[a.reduce(a.generators[c].degree)];
        slot[c] = static_cast<int>(v.size());
        v.push_back(static_cast<int>(c));
    }
    for (const auto& [k, src] : cx.gens) cx.d.emplace(k, gf2::Matrix(cx.size(k - 1), src.size()));
    for (std::size_t c = 0; c < a.generators.size(); ++c) {
        const int k = a.reduce(a.generators[c].degree);
        auto& m = cx.d.at(k);
        for (const auto& w : a.d[c])
            for (std::size_t i = 0; i < w.size(); ++i) {
                bool rest = true;
                for (std::size_t j = 0; j < w.size() && rest; ++j)
                    if (j != i && !e.values[w[j]]) rest = false;
                if (rest) m.flip(slot[w[i]], slot[c]);
            }
    }
    return cx;
}

inline bool is_complex(const GradedComplex& cx) {
    for (const auto& [k, m] : cx.d) {
        const gf2::Matrix* next = cx.diff(k - 1);
        if (next && next->cols() == m.rows() && !(*next * m).is_zero()) return false;
    }
    return true;
}

inline std::map<int, int> homology_dims(const GradedComplex& cx) {
    std::map<int, int> out;
    for (const auto& [k, g] : cx.gens) {
        const gf2::Matrix* out_d = cx.diff(k);
        const gf2::Matrix* in_d = cx.diff(k + 1);
        const std::size_t r_out = out_d ? out_d->rank() : 0;
        const std::size_t r_in = in_d && in_d->rows() == g.size() ? in_d->rank() : 0;
        const int dim = static_cast<int>(g.size() - r_out - r_in);
        if (dim) out[k] = dim;
    }
    return out;
}

// Homology of the dual complex, computed on explicitly transposed matrices.
inline std::map<int, int> cohomology_dims(const GradedComplex& cx) {
    std::map<int, int> out;
    for (const auto& [k, g] : cx.gens) {
        // delta^k = (d_{k+1})^T : C^k -> C^{k+1}; delta^{k-1} = (d_k)^T : C^{k-1} -> C^k
        const gf2::Matrix* dk1 = cx.diff(k + 1);
        const gf2::Matrix* dk = cx.diff(k);
        const std::size_t r_out = dk1 && dk1->rows() == g.size() ? dk1->transposed().rank() : 0;
        const std::size_t r_in = dk ? dk->transposed().rank() : 0;
        const int dim = static_cast<int>(g.size() - r_out - r_in);
        if (dim) out[k] = dim;
    }
    return out;
}

inline int euler_characteristic(const std::map<int, int>& dims) {
    int s = 0;
    for (const auto& [k, v] : dims) s += (k % 2 == 0) ? v : -v;
    return s;
}

inline nlohmann::json dims_json(const std::map<int, int>& dims) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [k, v] : dims) j[std::to_string(k)] = v;
    return j;
}

inline nlohmann::json augmentation_report(const DGA& a, const std::vector<Augmentation>& augs) {
    nlohmann::json p = nlohmann::json::array();
    for (std::size_t i = 0; i < augs.size(); ++i)
        p.push_back({{"aug", i}, {"dims", dims_json(homology_dims(linearize(a, augs[i])))}});
    return {{"augmentations", augs.size()}, {"poincare", p}};
}

}  // namespace legendrian
