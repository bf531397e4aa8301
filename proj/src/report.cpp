#include "derivkit/report.hpp"

#include "derivkit/expr.hpp"

namespace derivkit {

using nlohmann::json;

json to_json(const OrderVerdict& v) {
    json j;
    j["is_order_n"] = v.is_order_n;
    j["n"] = v.n;
    j["trials_run"] = v.trials_run;
    j["seed"] = v.seed;
    if (v.witness) {
        json w;
        w["alphas"] = json::array();
        for (const auto& a : v.witness->alphas) w["alphas"].push_back(render(a));
        w["x"] = render(v.witness->x);
        w["value"] = render(v.witness->value);
        j["witness"] = w;
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

json to_json(const LinearSplit& s) {
    json j;
    j["lambda"] = render(s.lambda);
    j["derivation_part"] = render(s.derivation_part);
    j["verified_order"] = s.verified_order;
    j["verdict"] = to_json(s.verdict);
    return j;
}

json to_json(const PolyDecomposition& d) {
    json j;
    j["degree_bound"] = d.degree_bound;
    j["components"] = json::array();
    for (const auto& c : d.components) {
        j["components"].push_back({{"degree", c.degree}, {"coefficient", to_string(c.coefficient)}});
    }
    j["residual_zero"] = d.residual_zero;
    j["probes"] = d.probes;
    j["seed"] = d.seed;
    return j;
}

json to_json(const RecoveryResult& r) {
    json j;
    j["lambda"] = to_string(r.lambda);
    j["derivation_part"] = "0";  // on Q every order-n derivation vanishes
    j["order"] = r.order;
    j["epsilon_hat"] = to_string(r.report.epsilon_hat);
    j["depth"] = r.report.depth;
    j["residual_sup"] = to_string(r.report.residual_sup);
    j["cauchy_defect_of_aN"] = to_string(r.report.cauchy_defect_of_aN);
    j["samples"] = r.report.samples;
    j["range_bound"] = to_string(r.report.range_bound);
    j["seed"] = r.report.seed;
    j["pass"] = r.report.pass;
    return j;
}

json make_run_report(const std::string& command, json inputs, json result, std::uint64_t seed) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["version"] = kVersion;
    j["command"] = command;
    j["inputs"] = std::move(inputs);
    j["result"] = std::move(result);
    j["seed"] = seed;
    return j;
}

}  // namespace derivkit
