#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cobordism.hpp"

namespace legendrian {

// Symbolic summary of an n-dimensional Legendrian: dimension, tb if known,
// Euler characteristic and Z2 Betti numbers b_0..b_n.
struct InvariantRecord {
    int n = 1;
    std::optional<int> tb;
    int chi = 0;
    std::vector<int> betti;
    nlohmann::json trace = nlohmann::json::array();
};

inline int sign_power(int e) { return (e % 2 == 0) ? 1 : -1; }

inline void validate_record(const InvariantRecord& r) {
    if (r.n < 1) throw InputError("record dimension must be positive");
    if (static_cast<int>(r.betti.size()) != r.n + 1)
        throw InputError("record needs " + std::to_string(r.n + 1) + " Betti numbers, got " + std::to_string(r.betti.size()));
    int chi = 0;
    for (int i = 0; i <= r.n; ++i) {
        if (r.betti[i] < 0) throw InputError("negative Betti number b_" + std::to_string(i));
        chi += sign_power(i) * r.betti[i];
    }
    if (chi != r.chi) throw InputError("record chi " + std::to_string(r.chi) + " differs from the Betti sum " + std::to_string(chi));
    if (r.n % 2 == 0 && r.tb) {
        if (r.chi % 2 != 0 || *r.tb != sign_power(r.n / 2 + 1) * r.chi / 2)
            throw InputError("record tb " + std::to_string(*r.tb) + " violates tb = (-1)^(n/2+1) chi/2 in dimension " + std::to_string(r.n));
    }
}

inline nlohmann::json to_json(const InvariantRecord& r) {
    return {{"n", r.n}, {"tb", r.tb ? nlohmann::json(*r.tb) : nlohmann::json(nullptr)}, {"chi", r.chi},
            {"betti", r.betti}, {"trace", r.trace}};
}

inline InvariantRecord record_from_json(const nlohmann::json& j) {
    InvariantRecord r;
    try {
        r.n = j.at("n").get<int>();
        if (j.contains("tb") && !j.at("tb").is_null()) r.tb = j.at("tb").get<int>();
        r.chi = j.at("chi").get<int>();
        r.betti = j.at("betti").get<std::vector<int>>();
        if (j.contains("trace")) r.trace = j.at("trace");
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed invariant record: ") + e.what());
    }
    validate_record(r);
    return r;
}

// Record of a Legendrian link in R^3.
inline InvariantRecord knot_record(const Front& f, const std::string& name) {
    const FrontInfo info = analyze(f);
    InvariantRecord r{1, info.tb(), 0, {info.ncomp, info.ncomp}, nlohmann::json::array({name})};
    validate_record(r);
    return r;
}

inline InvariantRecord spin(const InvariantRecord& r) {
    validate_record(r);
    InvariantRecord s;
    s.n = r.n + 1;
    s.betti.assign(s.n + 1, 0);
    for (int i = 0; i <= r.n; ++i) {
        s.betti[i] += r.betti[i];
        s.betti[i + 1] += r.betti[i];
    }
    s.chi = 0;
    if (s.n % 2 == 0) s.tb = sign_power(s.n / 2 + 1) * s.chi / 2;
    s.trace = r.trace;
    s.trace.push_back("spin");
    return s;
}

struct SpunCobordismRecord {
    std::optional<InvariantRecord> bottom;  // empty: a filling
    InvariantRecord top;
    int euler_L = 0;
    bool exact = true;
    bool bottom_filled = false;  // the bottom is known to bound an exact filling
    int m = 0;
};

inline nlohmann::json to_json(const SpunCobordismRecord& s) {
    return {{"bottom", s.bottom ? to_json(*s.bottom) : nlohmann::json("empty")},
            {"top", to_json(s.top)},
            {"euler_L", s.euler_L},
            {"exact", s.exact},
            {"bottom_filled", s.bottom_filled},
            {"m", s.m}};
}

// Summary of a verified cobordism between knots in R^3.
inline SpunCobordismRecord summarize(const CobordismRecord& c, const std::string& top_name = "top",
                                     const std::string& bottom_name = "bottom") {
    SpunCobordismRecord s;
    s.top = knot_record(c.levels.front(), top_name);
    if (!c.is_filling()) s.bottom = knot_record(c.levels.back(), bottom_name);
    s.euler_L = c.euler_char;
    s.exact = !c.forced;
    s.bottom_filled = c.bottom_filled;
    return s;
}

inline SpunCobordismRecord spin_cobordism(const SpunCobordismRecord& c, int m) {
    if (m < 0) throw InputError("spin count must be nonnegative");
    SpunCobordismRecord s = c;
    for (int i = 0; i < m; ++i) {
        s.top = spin(s.top);
        if (s.bottom) s.bottom = spin(*s.bottom);
        s.euler_L = 0;
    }
    s.m = c.m + m;
    return s;
}

inline Report theorem_tb_check(const SpunCobordismRecord& s) {
    Report rep{"theorem_tb", "fail", {}};
    validate_record(s.top);
    if (s.bottom) validate_record(*s.bottom);
    const int n = s.top.n;
    const bool filling = !s.bottom;
    rep.detail = {{"n", n}, {"chi_L", s.euler_L}};
    if (!s.top.tb || (!filling && !s.bottom->tb)) {
        rep.verdict = "insufficient data";
        rep.detail["reason"] = "tb unknown in dimension " + std::to_string(n);
        return rep;
    }
    const int tp = *s.top.tb, tm = filling ? 0 : *s.bottom->tb;
    int lhs, rhs;
    if (n % 2 == 0) {
        lhs = tp + tm;
        rhs = sign_power(n / 2 + 1) * s.euler_L;
        rep.detail["relation"] = "tb+ + tb- = (-1)^(n/2+1) chi(L)";
    } else {
        lhs = tp - tm;
        rhs = sign_power((n - 2) * (n - 1) / 2 + 1) * s.euler_L;
        rep.detail["relation"] = "tb+ - tb- = (-1)^((n-2)(n-1)/2+1) chi(L)";
    }
    rep.detail["lhs"] = lhs;
    rep.detail["rhs"] = rhs;
    if (lhs != rhs) return rep;
    rep.verdict = "pass";
    if (n % 2 == 1 && (!s.exact || !(filling || s.bottom_filled))) {
        rep.verdict = "conditional";
        rep.detail["hypothesis"] = !s.exact ? "cobordism not known to be exact" : "no exact filling of the lower end declared";
    }
    return rep;
}

// Script filling T_{2k+1}: saddles down to the trefoil, three saddles at c1, two caps.
inline MoveScript torus_filling_script(int k) {
    if (k < 1) throw InputError("need k >= 1");
    MoveScript s;
    s.top = torus_knot_grid(k);
    if (k > 1) s.moves = torus_saddle_script(1, k).moves;
    for (int i = 0; i < 3; ++i) s.moves.push_back({"saddle", "", 0, "c1", false});
    for (int i = 0; i < 2; ++i) s.moves.push_back({"cap", "", 0, "q1", false});
    return s;
}

// T_{2j+1} -> T_{2k+1} by 2(k-j) saddles, spun m times. The script is not
// replayed here; tb comes from the grids and chi from the move count.
inline Report tori_pipeline(int j, int k, int m) {
    if (k <= j || j < 1) throw InputError("tori pipeline needs k > j >= 1 (got j=" + std::to_string(j) + ", k=" + std::to_string(k) + ")");
    if (m < 1) throw InputError("tori pipeline needs m >= 1");
    const MoveScript script = torus_saddle_script(j, k);
    int saddles = 0;
    for (const auto& mv : script.moves) saddles += mv.type == "saddle";
    const int chi = -saddles;
    const int tbp = thurston_bennequin(torus_knot_grid(k)), tbm = thurston_bennequin(torus_knot_grid(j));
    const std::string tn = "T" + std::to_string(2 * k + 1), bn = "T" + std::to_string(2 * j + 1);

    SpunCobordismRecord base;
    base.top = {1, tbp, 0, {1, 1}, nlohmann::json::array({tn})};
    base.bottom = InvariantRecord{1, tbm, 0, {1, 1}, nlohmann::json::array({bn})};
    base.euler_L = chi;
    base.exact = true;
    base.bottom_filled = true;  // torus_filling_script(j)

    Report rep{"tori_pipeline", "pass", {}};
    nlohmann::json levels = nlohmann::json::array();
    const bool classical = tbp - tbm == 2 * (k - j) && tbp - tbm == -chi;
    if (!classical) rep.verdict = "fail";
    for (int s = 0; s <= m; ++s) {
        const SpunCobordismRecord sp = spin_cobordism(base, s);
        const Report t = theorem_tb_check(sp);
        if (t.verdict == "fail" || (s > 0 && sp.euler_L != 0)) rep.verdict = "fail";
        if (t.verdict == "conditional" && rep.verdict == "pass") rep.verdict = "conditional";
        levels.push_back({{"record", to_json(sp)}, {"theorem_tb", to_json(t)}});
    }
    rep.detail = {{"j", j}, {"k", k}, {"m", m},
                  {"saddles", saddles}, {"chi_L", chi}, {"delta_tb", tbp - tbm},
                  {"bottom_filling", j == 1 ? std::string("trefoil filling")
                                            : bn + " saddles to T3, then the trefoil filling"},
                  {"levels", levels},
                  {"notes", {"the ends are not Legendrian isotopic (cited, not recomputed)",
                             "the ends are not distinguished by the classical invariants at any spin level"}}};
    return rep;
}

}  // namespace legendrian
