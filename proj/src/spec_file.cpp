#include "saddlelink/spec_file.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include <json.hpp>

#include "saddlelink/error.hpp"

namespace saddlelink {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& msg) { throw Error(ErrorCode::InvalidInput, msg); }

void only_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& where)
{
    if (!obj.is_object()) fail(where + " must be an object");
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const char* k : allowed) known = known || it.key() == k;
        if (!known) fail("unknown key '" + it.key() + "' in " + where);
    }
}

double number(const json& v, const std::string& where)
{
    if (!v.is_number()) fail(where + " must be a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) fail(where + " must be finite");
    return x;
}

std::vector<Eigenvalue> eigenvalues(const json& arr, const std::string& where)
{
    if (!arr.is_array() || arr.empty()) fail(where + " must be a non-empty array");
    std::vector<Eigenvalue> out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const json& e = arr[i];
        const std::string at = where + "[" + std::to_string(i) + "]";
        if (!e.is_array() || e.empty() || e.size() > 2) fail(at + " must be [re] or [re, im]");
        Eigenvalue w;
        w.re = number(e[0], at);
        if (e.size() == 2) w.im = std::fabs(number(e[1], at));
        out.push_back(w);
    }
    return out;
}

SaddleData saddle(const json& obj, const std::string& where)
{
    only_keys(obj, {"stable", "unstable"}, where);
    if (!obj.contains("stable") || !obj.contains("unstable"))
        fail(where + " needs 'stable' and 'unstable'");
    SaddleData s;
    s.stable = eigenvalues(obj["stable"], where + ".stable");
    s.unstable = eigenvalues(obj["unstable"], where + ".unstable");
    if (s.stable_dimension() + s.unstable_dimension() != 3 || s.stable_dimension() > 2 ||
        s.unstable_dimension() > 2)
        fail(where + " must describe a saddle in dimension 3");
    return s;
}

TransitionMap transition(const json& v)
{
    if (!v.is_array() || v.size() != 2 || !v[0].is_array() || !v[1].is_array() ||
        v[0].size() != 2 || v[1].size() != 2)
        fail("transition must be [[m11, m12], [m21, m22]]");
    TransitionMap t;
    t.m11 = number(v[0][0], "transition");
    t.m12 = number(v[0][1], "transition");
    t.m21 = number(v[1][0], "transition");
    t.m22 = number(v[1][1], "transition");
    return t;
}

FrameAngles frames(const json& obj)
{
    only_keys(obj, {"ws_p", "wu_q", "wss_p", "wuu_q"}, "frames");
    for (const char* k : {"ws_p", "wu_q", "wss_p", "wuu_q"})
        if (!obj.contains(k)) fail(std::string("frames needs '") + k + "'");
    FrameAngles f;
    f.omega_s_p = number(obj["ws_p"], "frames.ws_p");
    f.omega_u_q = number(obj["wu_q"], "frames.wu_q");
    f.omega_ss_p = number(obj["wss_p"], "frames.wss_p");
    f.omega_uu_q = number(obj["wuu_q"], "frames.wuu_q");
    return f;
}

} // namespace

ConnectionSpec parse_connection_spec(const std::string& text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(std::string("malformed spec document: ") + e.what());
    }
    only_keys(doc, {"p", "q", "transition", "frames"}, "spec");
    if (!doc.contains("p") || !doc.contains("q")) fail("spec needs 'p' and 'q'");

    ConnectionSpec spec;
    spec.p = saddle(doc["p"], "p");
    spec.q = saddle(doc["q"], "q");
    if (doc.contains("transition")) spec.transition = transition(doc["transition"]);
    if (doc.contains("frames")) spec.frames = frames(doc["frames"]);
    return spec;
}

std::string read_text_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ConnectionSpec load_connection_spec(const std::string& path)
{
    return parse_connection_spec(read_text_file(path));
}

} // namespace saddlelink
