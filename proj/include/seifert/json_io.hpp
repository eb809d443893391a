// JSON encoding of every externally visible value.  Ratios serialize as
// [beta, alpha] pairs, rationals as "p/q" strings in lowest terms, and
// permutations in cycle form with fixed points omitted.
#pragma once

#include "abelian.hpp"
#include "lift.hpp"
#include "symbol.hpp"
#include "universal.hpp"

#include <nlohmann/json.hpp>

namespace seifert {

using json = nlohmann::json;

inline json to_json(const Permutation& p) {
    json cycles = json::array();
    for (const auto& c : p.cycles()) cycles.push_back(c);
    return json{{"n", p.degree()}, {"cycles", cycles}};
}

inline Permutation permutation_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("cycles"))
        throw bad_input("permutation: expected {\"n\": int, \"cycles\": [[...]]}");
    int n = j.at("n").get<int>();
    std::vector<std::vector<int>> cycles;
    for (const auto& c : j.at("cycles")) cycles.push_back(c.get<std::vector<int>>());
    try {
        return Permutation::from_cycles(n, cycles);
    } catch (const error& e) {
        throw bad_input(std::string("permutation: ") + e.what());
    }
}

inline json to_json(const Ratio& r) { return json::array({r.beta, r.alpha}); }

inline Ratio ratio_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw bad_input("ratio: expected [beta, alpha]");
    try {
        return make_ratio(j.at(1).get<long long>(), j.at(0).get<long long>());
    } catch (const error& e) {
        throw bad_input(std::string("ratio: ") + e.what());
    }
}

inline json to_json(const SeifertSymbol& s) {
    json ratios = json::array();
    for (const auto& r : s.ratios) ratios.push_back(to_json(r));
    return json{{"class", "Oo"}, {"genus", s.genus}, {"ratios", ratios}};
}

inline SeifertSymbol symbol_from_json(const json& j) {
    if (!j.is_object() || !j.contains("genus") || !j.contains("ratios"))
        throw bad_input("symbol: expected {\"class\":\"Oo\",\"genus\":g,\"ratios\":[[beta,alpha],...]}");
    if (j.contains("class") && j.at("class").get<std::string>() != "Oo")
        throw bad_input("symbol: only class Oo is supported");
    SeifertSymbol s;
    s.genus = j.at("genus").get<int>();
    for (const auto& r : j.at("ratios")) s.ratios.push_back(ratio_from_json(r));
    try {
        s.validate();
    } catch (const error& e) {
        throw bad_input(std::string("symbol: ") + e.what());
    }
    return s;
}

inline json to_json(const CanonicalSymbol& c) {
    json ex = json::array();
    for (const auto& r : c.exceptional) ex.push_back(to_json(r));
    return json{{"class", "Oo"}, {"genus", c.genus}, {"b", c.b}, {"exceptional", ex}};
}

inline json to_json(const AbelianGroup& g) {
    return json{{"free_rank", g.free_rank}, {"torsion", g.torsion}};
}

inline json to_json(const Frame& f) {
    return json{{"symbol", to_json(f.symbol)}, {"labels", f.labels}};
}

inline Frame frame_from_json(const json& j) {
    if (!j.is_object() || !j.contains("symbol") || !j.contains("labels"))
        throw bad_input("frame: expected {\"symbol\":...,\"labels\":[...]}");
    Frame f;
    f.symbol = symbol_from_json(j.at("symbol"));
    f.labels = j.at("labels").get<std::vector<std::string>>();
    try {
        f.validate();
    } catch (const error& e) {
        throw bad_input(std::string("frame: ") + e.what());
    }
    return f;
}

inline json to_json(const FrameRep& r) {
    json q = json::array();
    for (const auto& p : r.q_images) q.push_back(to_json(p));
    json surf = json::array();
    for (const auto& p : r.surface_images) surf.push_back(to_json(p));
    return json{{"frame", to_json(r.frame)}, {"n", r.n}, {"h", to_json(r.h_image)},
                {"q", q},       {"surface", surf}};
}

inline FrameRep framerep_from_json(const json& j) {
    if (!j.is_object() || !j.contains("frame") || !j.contains("n") || !j.contains("h") ||
        !j.contains("q"))
        throw bad_input("framerep: expected {\"frame\":...,\"n\":...,\"h\":...,\"q\":[...]}");
    FrameRep r;
    r.frame = frame_from_json(j.at("frame"));
    r.n = j.at("n").get<int>();
    r.h_image = permutation_from_json(j.at("h"));
    for (const auto& p : j.at("q")) r.q_images.push_back(permutation_from_json(p));
    if (j.contains("surface"))
        for (const auto& p : j.at("surface")) r.surface_images.push_back(permutation_from_json(p));
    else
        r.surface_images.assign(2 * r.frame.symbol.genus, Permutation::identity(r.n));
    return r;
}

inline json to_json(const LiftedFiber& f) {
    return json{{"source", f.source_label}, {"d", f.cycle_length}, {"ratio", to_json(f.ratio)},
                {"branched", f.branched},   {"label", f.new_label}};
}

inline json to_json(const CoverResult& r) {
    json fibers = json::array();
    for (const auto& f : r.fibers) fibers.push_back(to_json(f));
    return json{{"symbol", to_json(r.cover_symbol)},
                {"canonical", to_json(canonicalize(r.cover_symbol))},
                {"genus", r.cover_symbol.genus},
                {"degree", r.degree},
                {"base_degree", r.base_degree},
                {"fiber_degree", r.fiber_degree},
                {"fibers", fibers}};
}

inline json to_json(const FourTuple& t) { return json::array({t.a1, t.a2, t.delta, t.i0}); }

inline FourTuple tuple_from_json(const json& j) {
    if (!j.is_array() || j.size() != 4) throw bad_input("tuple: expected [a1,a2,delta,i0]");
    FourTuple t{j.at(0).get<long long>(), j.at(1).get<long long>(), j.at(2).get<long long>(),
                j.at(3).get<long long>()};
    try {
        t.validate();
    } catch (const error& e) {
        throw bad_input(std::string("tuple: ") + e.what());
    }
    return t;
}

inline json to_json(const AbelianCoverReport& r) {
    json out{{"case", r.case_tag},
             {"symbol", to_json(r.cover_symbol)},
             {"canonical", to_json(canonicalize(r.cover_symbol))},
             {"genus", r.genus},
             {"h1", to_json(r.h1_closed_form)},
             {"h1_snf", to_json(h1(r.cover_symbol))},
             {"unbranched", r.unbranched}};
    if (r.tuple) out["tuple"] = to_json(*r.tuple);
    if (r.cyclic_n) out["n"] = *r.cyclic_n;
    return out;
}

inline json to_json(const PlanStep& s) {
    return json{{"rep", to_json(s.rep)},
                {"base", to_json(s.base)},
                {"expected_cover", to_json(s.expected_cover)},
                {"branch_labels", s.branch_labels},
                {"knot_preimage_labels", s.knot_preimage_labels}};
}

inline PlanStep planstep_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rep") || !j.contains("base") ||
        !j.contains("expected_cover"))
        throw bad_input("plan step: missing fields");
    PlanStep s;
    s.rep = framerep_from_json(j.at("rep"));
    s.base = symbol_from_json(j.at("base"));
    s.expected_cover = symbol_from_json(j.at("expected_cover"));
    if (j.contains("branch_labels"))
        s.branch_labels = j.at("branch_labels").get<std::vector<std::string>>();
    if (j.contains("knot_preimage_labels"))
        s.knot_preimage_labels = j.at("knot_preimage_labels").get<std::vector<std::string>>();
    return s;
}

inline json to_json(const CoveringPlan& p) {
    json steps = json::array();
    for (const auto& s : p.steps) steps.push_back(to_json(s));
    return json{{"target", to_json(p.target)}, {"alpha", p.alpha}, {"beta", p.beta},
                {"steps", steps},              {"total_degree", p.total_degree}};
}

inline CoveringPlan plan_from_json(const json& j) {
    if (!j.is_object() || !j.contains("target") || !j.contains("alpha") || !j.contains("beta") ||
        !j.contains("steps"))
        throw bad_input("plan: missing fields");
    CoveringPlan p;
    p.target = symbol_from_json(j.at("target"));
    p.alpha = j.at("alpha").get<long long>();
    p.beta = j.at("beta").get<long long>();
    for (const auto& s : j.at("steps")) p.steps.push_back(planstep_from_json(s));
    p.total_degree = j.value("total_degree", 1LL);
    return p;
}

inline json to_json(const VerifyReport& r) {
    json out{{"pass", r.pass}, {"steps_checked", r.steps_checked}, {"message", r.message}};
    if (r.failed_step >= 0) out["failed_step"] = r.failed_step;
    return out;
}

} // namespace seifert
