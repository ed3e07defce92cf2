#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "disks.hpp"

namespace legendrian {

using Word = std::vector<int>;

struct Generator {
    std::string name;
    int degree;
};

struct DGA {
    std::vector<Generator> generators;
    int modulus = 0;
    std::vector<std::vector<Word>> d;  // sorted, each word with odd disk count

    int reduce(int v) const { return detail::reduce(v, modulus); }
    int word_degree(const Word& w) const {
        int s = 0;
        for (int x : w) s += generators[x].degree;
        return reduce(s);
    }
};

inline DGA dga_from_disks(const LagrangianDiagram& l, const DiskSet& ds) {
    DGA a;
    a.modulus = l.modulus;
    for (const auto& c : l.crossings) a.generators.push_back({c.name, c.degree});
    std::vector<std::map<Word, std::int64_t>> cnt(l.crossings.size());
    for (const auto& disk : ds.disks) cnt[disk.positive][disk.negatives] += disk.count;
    a.d.resize(l.crossings.size());
    for (std::size_t c = 0; c < cnt.size(); ++c)
        for (const auto& [w, n] : cnt[c])
            if (n % 2) a.d[c].push_back(w);
    return a;
}

inline DGA compute_dga(const LagrangianDiagram& l, std::uint64_t budget = default_budget) {
    return dga_from_disks(l, admissible_disks(l, budget));
}

// Monomials whose degree is not one less than that of the generator.
inline std::vector<std::pair<int, Word>> degree_violations(const DGA& a) {
    std::vector<std::pair<int, Word>> bad;
    for (std::size_t c = 0; c < a.d.size(); ++c)
        for (const auto& w : a.d[c])
            if (a.word_degree(w) != a.reduce(a.generators[c].degree - 1)) bad.push_back({static_cast<int>(c), w});
    return bad;
}

// d applied to a word by the Leibniz rule, as a set of monomials over Z2.
inline std::set<Word> differential(const DGA& a, const Word& w) {
    std::set<Word> out;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (const auto& dw : a.d[w[i]]) {
            Word t(w.begin(), w.begin() + i);
            t.insert(t.end(), dw.begin(), dw.end());
            t.insert(t.end(), w.begin() + i + 1, w.end());
            if (!out.erase(t)) out.insert(std::move(t));
        }
    return out;
}

struct DSquaredReport {
    bool ok = true;
    int generator = -1;
    std::vector<Word> survivors;
};

inline DSquaredReport verify_d_squared(const DGA& a) {
    DSquaredReport r;
    for (std::size_t c = 0; c < a.d.size(); ++c) {
        std::set<Word> acc;
        for (const auto& w : a.d[c])
            for (const auto& t : differential(a, w))
                if (!acc.erase(t)) acc.insert(t);
        if (!acc.empty()) {
            r.ok = false;
            r.generator = static_cast<int>(c);
            r.survivors.assign(acc.begin(), acc.end());
            return r;
        }
    }
    return r;
}

inline int graded_chord_signature(const DGA& a) {
    int s = 0;
    for (const auto& g : a.generators) s += (g.degree % 2 == 0) ? 1 : -1;
    return s;
}

inline nlohmann::json word_json(const DGA& a, const Word& w) {
    nlohmann::json j = nlohmann::json::array();
    if (w.empty()) j.push_back("1");
    for (int x : w) j.push_back(a.generators[x].name);
    return j;
}

inline nlohmann::json to_json(const DGA& a) {
    nlohmann::json gens = nlohmann::json::array(), d = nlohmann::json::object();
    for (std::size_t i = 0; i < a.generators.size(); ++i) {
        nlohmann::json g{{"name", a.generators[i].name}, {"degree", a.generators[i].degree}};
        if (a.modulus) g["reduced_degree"] = a.reduce(a.generators[i].degree);
        gens.push_back(g);
        nlohmann::json ws = nlohmann::json::array();
        for (const auto& w : a.d[i]) ws.push_back(word_json(a, w));
        d[a.generators[i].name] = ws;
    }
    return {{"generators", gens}, {"modulus", a.modulus}, {"d", d}};
}

inline DGA dga_from_json(const nlohmann::json& j) {
    DGA a;
    try {
        a.modulus = j.at("modulus").get<int>();
        std::map<std::string, int> idx;
        for (const auto& g : j.at("generators")) {
            idx[g.at("name").get<std::string>()] = static_cast<int>(a.generators.size());
            a.generators.push_back({g.at("name").get<std::string>(), g.at("degree").get<int>()});
        }
        a.d.resize(a.generators.size());
        for (const auto& [name, words] : j.at("d").items()) {
            const int c = idx.at(name);
            for (const auto& w : words) {
                Word word;
                for (const auto& x : w) {
                    const auto s = x.get<std::string>();
                    if (s != "1") word.push_back(idx.at(s));
                }
                a.d[c].push_back(word);
            }
            std::sort(a.d[c].begin(), a.d[c].end());
        }
    } catch (const std::exception& e) {
        throw InputError(std::string("malformed DGA: ") + e.what());
    }
    return a;
}

}  // namespace legendrian
