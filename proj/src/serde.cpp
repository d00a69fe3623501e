#include "syncro/serde.hpp"

#include <stdexcept>

namespace syncro {

json coset_table_json(const CosetTable& table) {
    json cosets = json::array();
    for (const auto& c : table.cosets) cosets.push_back(c);
    return json{{"n", table.n}, {"cosets", cosets}, {"reps", table.reps}};
}

json code_json(const CyclicCode& code) {
    return json{{"n", code.length()},
                {"generator", code.generator().to_string()},
                {"k", code.dim()}};
}

json descriptor_json(const CodeDescriptor& d) {
    json j{{"family", d.family}, {"m", d.m},
           {"n", d.n},           {"k", d.k},
           {"generator", d.generator.to_string()}};
    j["r"] = d.r ? json(*d.r) : json(nullptr);
    j["d"] = d.d ? json(*d.d) : json(nullptr);
    j["b"] = d.b ? json(*d.b) : json(nullptr);
    return j;
}

json scheme_json(const SyncScheme& s) {
    json factors = json::array();
    for (const auto& [poly, mult] : s.f_factors.factors)
        factors.push_back(json::array({poly.to_string(), mult}));
    return json{
        {"n", s.params.n},
        {"k1", s.c.dim()},
        {"k2", s.d.dim()},
        {"f", s.f.to_string()},
        {"f_factors", factors},
        {"tolerance", s.tolerance},
        {"legacy_tolerance", legacy_tolerance(s)},
        {"logical", s.params.logical},
        {"phase_floor", s.params.phase_floor},
        {"bit_floor", s.params.bit_floor},
        {"distance_mode",
         s.params.distance_mode == DistanceMode::exact ? "exact" : "designed"},
    };
}

const char* failure_name(SyncFailure reason) {
    switch (reason) {
        case SyncFailure::none: return "none";
        case SyncFailure::excess_errors: return "excess-errors";
        case SyncFailure::shift_inconsistency: return "shift-inconsistency";
        case SyncFailure::decode_failure: return "decode-failure";
    }
    return "unknown";
}

json batch_report_json(const BatchReport& report) {
    json trials = json::array();
    for (const TrialRecord& t : report.trials) {
        trials.push_back(json{{"index", t.index},
                              {"shift", t.shift},
                              {"trial", t.trial},
                              {"seed", t.seed},
                              {"flips", t.flips},
                              {"recovered_shift", t.recovered_shift},
                              {"decode_success", t.decode_success},
                              {"reason", failure_name(t.reason)},
                              {"bit_corrections", t.bit_corrections},
                              {"success", t.ground_truth_match}});
    }
    return json{{"a_l", report.options.a_l},
                {"a_r", report.options.a_r},
                {"trials_per_shift", report.options.trials_per_shift},
                {"error_weight", report.options.error_weight},
                {"seed", report.options.seed},
                {"trials", trials},
                {"aggregate",
                 json{{"trials", report.trials.size()},
                      {"successes", report.successes},
                      {"success_rate", report.success_rate}}}};
}

CyclicCode code_from_json(const json& j) {
    if (j.contains("family")) {
        std::string family = j.at("family").get<std::string>();
        if (family == "rm*")
            return punctured_rm(j.at("r").get<int>(), j.at("m").get<int>());
        if (family == "bch")
            return bch(j.at("m").get<int>(), j.at("d").get<int>(),
                       j.contains("b") && !j.at("b").is_null()
                           ? j.at("b").get<int>()
                           : 1);
        if (family != "cyclic")
            throw std::invalid_argument("unknown code family: " + family);
    }
    return CyclicCode(j.at("n").get<int>(),
                      Poly2::parse(j.at("generator").get<std::string>()));
}

std::optional<int> designed_distance_from_json(const json& j) {
    if (!j.contains("family")) return std::nullopt;
    std::string family = j.at("family").get<std::string>();
    if (family == "bch") return j.at("d").get<int>();
    if (family == "rm*")
        return rm_designed_distance(j.at("r").get<int>(), j.at("m").get<int>());
    return std::nullopt;
}

BatchSpec batch_spec_from_json(const json& j) {
    const json& sj = j.at("scheme");
    CyclicCode c = code_from_json(sj.at("C"));
    CyclicCode d = code_from_json(sj.at("D"));
    SchemeOptions options;
    options.mode = DistanceMode::designed;
    options.designed_d1 = designed_distance_from_json(sj.at("C"));
    options.designed_d2 = designed_distance_from_json(sj.at("D"));
    if (sj.contains("distance_mode") &&
        sj.at("distance_mode").get<std::string>() == "exact")
        options.mode = DistanceMode::exact;

    BatchSpec spec{build_scheme(c, d, options),
                   BatchOptions{j.at("a_l").get<int>(), j.at("a_r").get<int>(),
                                j.at("trials").get<int>(),
                                j.at("error_weight").get<int>(),
                                j.at("seed").get<std::uint64_t>()}};
    return spec;
}

}  // namespace syncro
