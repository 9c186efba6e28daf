#include "saddlelink/report.hpp"

namespace saddlelink {

using nlohmann::json;

namespace {

void put(json& j, const char* key, const std::optional<double>& v)
{
    if (v) j[key] = *v;
}

json frames_json(const FrameAngles& f)
{
    return {{"ws_p", f.omega_s_p}, {"wu_q", f.omega_u_q}, {"wss_p", f.omega_ss_p}, {"wuu_q", f.omega_uu_q}};
}

} // namespace

json to_json(const NormalizedParams& np)
{
    json j = json::object();
    j["subset"] = to_string(np.subset);
    put(j, "alpha", np.alpha);
    put(j, "beta", np.beta);
    put(j, "mu", np.mu);
    put(j, "gamma", np.gamma);
    put(j, "lambda", np.lambda);
    put(j, "t", np.t);
    put(j, "s", np.s);
    put(j, "theta0", np.theta0);
    put(j, "theta1", np.theta1);
    if (np.lambda) j["reflected"] = np.reflected;
    if (np.frames) j["frames"] = frames_json(*np.frames);
    return j;
}

json to_json(const TTVerdict& v)
{
    return {{"in_tt", v.in_tt}, {"boundary", v.boundary}, {"witness", v.witness}};
}

json to_json(const Classification& c)
{
    json j = json::object();
    j["subset"] = to_string(c.subset);
    if (c.tt) j["tt"] = to_json(*c.tt);
    if (c.rr_type) j["rr_type"] = to_string(*c.rr_type);
    const NormalizedParams& p = c.params;
    if (c.alpha_beta_ratio) j["alpha_beta_ratio"] = *c.alpha_beta_ratio;
    if (c.psi_value)
        j["psi"] = {{"value", *c.psi_value}, {"at", {{"alpha", *p.alpha}, {"beta", *p.beta}, {"t", *p.t}}}};
    if (c.upsilon_value) {
        json at;
        if (c.subset == Subset::S21RC)
            at = {{"beta", *p.beta}, {"mu", *p.mu}, {"s", *p.s}, {"theta0", *p.theta0}};
        else
            at = {{"alpha", *p.alpha}, {"gamma", *p.gamma}, {"lambda", *p.lambda}, {"theta1", *p.theta1}};
        j["upsilon"] = {{"value", *c.upsilon_value}, {"at", at}};
    }
    return j;
}

json to_json(const EquivalenceVerdict& v)
{
    json j = json::object();
    if (v.outcome == Outcome::BoundaryIndeterminate) j["equivalent"] = "boundary-indeterminate";
    else j["equivalent"] = v.outcome == Outcome::Equivalent;
    j["rule"] = v.rule;
    json cmp = json::array();
    for (const auto& c : v.compared) cmp.push_back({{"name", c.name}, {"first", c.first}, {"second", c.second}});
    j["compared"] = cmp;
    j["tol"] = v.tol;
    return j;
}

json to_json(const std::vector<ViolationReport>& v)
{
    json arr = json::array();
    for (const auto& r : v) arr.push_back({{"kind", to_string(r.kind)}, {"detail", r.detail}});
    return arr;
}

json report_header(const char* command)
{
    json j = json::object();
    j["format_version"] = report_format_version;
    j["tool"] = "saddlelink";
    j["tool_version"] = tool_version;
    j["command"] = command;
    return j;
}

} // namespace saddlelink
