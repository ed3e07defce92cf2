#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "spin.hpp"

namespace legendrian::cli {

enum ExitCode { pass = 0, check_failed = 1, input_error = 2, budget_exceeded = 3 };

struct RunConfig {
    std::string subcommand;
    std::vector<std::string> inputs;
    int sigma = 0;
    std::uint64_t budget = default_budget;
    unsigned jobs = 1;
    std::string format = "json";
    std::vector<int> tori;  // spin --tori j k
    int m = 1;
};

struct Outcome {
    nlohmann::json report;
    int code = pass;
};

inline nlohmann::json to_json(const RunConfig& c) {
    return {{"subcommand", c.subcommand}, {"inputs", c.inputs}, {"sigma", c.sigma},
            {"budget", c.budget}, {"jobs", c.jobs}, {"format", c.format}};
}

inline nlohmann::json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return nlohmann::json::parse(ss.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(path + ": malformed syntax: " + e.what());
    }
}

inline const std::string& single_input(const RunConfig& c) {
    if (c.inputs.size() != 1) throw InputError(c.subcommand + " takes exactly one input file");
    return c.inputs.front();
}

inline std::string worst(const std::vector<std::string>& verdicts) {
    std::string v = "pass";
    for (const auto& x : verdicts) {
        if (x == "fail") return "fail";
        if (x == "conditional") v = "conditional";
    }
    return v;
}

inline Outcome cmd_invariants(const RunConfig& c) {
    const GridDiagram g = parse_grid(read_json(single_input(c)));
    const Front f = grid_to_front(g);
    const FrontInfo info = analyze(f);
    const LagrangianDiagram l = ng_resolve(f);
    const int chord = tb_signed_chord_sum(l);
    int ncross = 0;
    for (const auto& e : f.events) ncross += e.type == 'X';
    Outcome o;
    o.report = {{"tb_linking", info.tb()},
                {"tb_chord_sum", chord},
                {"rotation", info.rotation_total()},
                {"components", info.ncomp},
                {"front_crossings", ncross},
                {"right_cusps", info.right_cusps},
                {"generators", l.crossings.size()},
                {"maslov_modulus", info.modulus},
                {"verdict", info.tb() == chord ? "pass" : "fail"}};
    o.code = info.tb() == chord ? pass : check_failed;
    return o;
}

inline Outcome cmd_lch(const RunConfig& c) {
    const GridDiagram g = parse_grid(read_json(single_input(c)));
    const Front f = grid_to_front(g);
    const int tb = analyze(f).tb();
    const DGA a = compute_dga(ng_resolve(f), c.budget);
    const DSquaredReport d2 = verify_d_squared(a);
    const auto augs = enumerate_augmentations(a, c.jobs);
    nlohmann::json per = nlohmann::json::array();
    bool euler_ok = true;
    for (std::size_t i = 0; i < augs.size(); ++i) {
        const auto h = homology_dims(linearize(a, augs[i]));
        const int chi = euler_characteristic(h);
        euler_ok = euler_ok && chi == tb;
        nlohmann::json on = nlohmann::json::array();
        for (std::size_t k = 0; k < a.generators.size(); ++k)
            if (augs[i].values[k]) on.push_back(a.generators[k].name);
        per.push_back({{"aug", i}, {"nonzero_on", on}, {"homology", dims_json(h)}, {"euler", chi}});
    }
    Outcome o;
    o.report = {{"tb", tb},
                {"dga", to_json(a)},
                {"d_squared_zero", d2.ok},
                {"augmentations", augs.size()},
                {"poincare", per},
                {"euler_equals_tb", euler_ok}};
    if (!d2.ok) o.report["d_squared_witness"] = a.generators[d2.generator].name;
    const bool ok = d2.ok && euler_ok;
    o.report["verdict"] = ok ? "pass" : "fail";
    o.code = ok ? pass : check_failed;
    return o;
}

inline Outcome cmd_cobordism(const RunConfig& c) {
    const MoveScript script = parse_script(read_json(single_input(c)));
    Outcome o;
    CobordismRecord rec;
    try {
        rec = compile_script(script, c.budget);
    } catch (const MoveError& e) {
        o.report = {{"verdict", "fail"}, {"error", {{"move", e.index}, {"message", e.what()}, {"witness", e.witness}}}};
        o.code = check_failed;
        return o;
    }
    const EndData upper = end_data(rec.levels.front(), c.budget, c.jobs);
    const EndData lower = end_data(rec.is_filling() ? std::nullopt : std::optional<Front>(rec.levels.back()), c.budget, c.jobs);
    std::vector<Report> checks{verify_tb_relation(rec, rec.is_filling() ? 0 : rec.tb.back(), rec.tb.front()),
                               les_euler_check(rec, lower, upper, c.sigma)};
    if (rec.is_filling()) checks.push_back(filling_dim_check(rec, upper, c.sigma));
    nlohmann::json cj = nlohmann::json::array();
    std::vector<std::string> verdicts;
    for (const auto& r : checks) {
        cj.push_back(to_json(r));
        verdicts.push_back(r.verdict);
    }
    o.report = {{"record", to_json(rec)}, {"checks", cj}, {"verdict", worst(verdicts)}};
    o.code = worst(verdicts) == "fail" ? check_failed : pass;
    return o;
}

inline Outcome cmd_spin(const RunConfig& c) {
    Outcome o;
    if (!c.tori.empty()) {
        if (c.tori.size() != 2) throw InputError("usage: spin --tori J K --m M with K > J >= 1");
        if (c.tori[1] <= c.tori[0] || c.tori[0] < 1)
            throw InputError("usage: spin --tori J K --m M requires K > J >= 1");
        const Report r = tori_pipeline(c.tori[0], c.tori[1], c.m);
        o.report = to_json(r);
        o.code = r.verdict == "fail" ? check_failed : pass;
        return o;
    }
    const nlohmann::json j = read_json(single_input(c));
    if (c.m < 0) throw InputError("--m must be nonnegative");
    if (j.contains("moves")) {
        const CobordismRecord rec = compile_script(parse_script(j), c.budget);
        SpunCobordismRecord s = spin_cobordism(summarize(rec), c.m);
        const Report t = theorem_tb_check(s);
        o.report = {{"record", to_json(s)}, {"theorem_tb", to_json(t)}, {"verdict", t.verdict}};
        o.code = t.verdict == "fail" ? check_failed : pass;
        return o;
    }
    InvariantRecord r = record_from_json(j);
    for (int i = 0; i < c.m; ++i) r = spin(r);
    o.report = {{"record", to_json(r)}, {"verdict", "pass"}};
    return o;
}

// Runs one subcommand; every report carries the config that produced it.
inline Outcome run(const RunConfig& c) {
    Outcome o;
    try {
        if (c.budget == 0) throw InputError("--budget must be positive");
        if (c.subcommand == "invariants") o = cmd_invariants(c);
        else if (c.subcommand == "lch") o = cmd_lch(c);
        else if (c.subcommand == "cobordism") o = cmd_cobordism(c);
        else if (c.subcommand == "spin") o = cmd_spin(c);
        else throw InputError("unknown subcommand " + c.subcommand);
    } catch (const BudgetExceeded& e) {
        o.report = {{"verdict", "budget exceeded"}, {"error", e.what()}, {"nodes", e.nodes}};
        o.code = budget_exceeded;
    } catch (const InputError& e) {
        o.report = {{"verdict", "input error"}, {"error", e.what()}};
        o.code = input_error;
    }
    o.report["config"] = to_json(c);
    return o;
}

namespace detail {

inline void text_lines(const nlohmann::json& j, const std::string& prefix, std::ostream& out) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) text_lines(v, prefix.empty() ? k : prefix + "." + k, out);
    } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
        for (std::size_t i = 0; i < j.size(); ++i) text_lines(j[i], prefix + "[" + std::to_string(i) + "]", out);
    } else {
        out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

}  // namespace detail

inline std::string render(const Outcome& o, const std::string& format) {
    if (format == "text") {
        std::ostringstream out;
        detail::text_lines(o.report, "", out);
        return out.str();
    }
    return o.report.dump(2) + "\n";
}

}  // namespace legendrian::cli
