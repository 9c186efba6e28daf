#pragma once

#include <array>
#include <cstdio>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "saddlelink/params.hpp"
#include "saddlelink/spec_file.hpp"

namespace support {

inline std::string fixture(const std::string& rel) { return std::string(SADDLELINK_FIXTURES) + "/" + rel; }

inline saddlelink::ConnectionSpec spec(const std::string& name)
{
    return saddlelink::load_connection_spec(fixture("specs/" + name + ".json"));
}

/// One row of moduli_golden.txt: the leading tag and its numbers.
struct GoldenRow {
    std::string kind;
    std::vector<double> v;
};

inline std::vector<GoldenRow> golden_rows()
{
    std::ifstream in(fixture("moduli_golden.txt"));
    std::vector<GoldenRow> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        GoldenRow r;
        ss >> r.kind;
        double x;
        while (ss >> x) r.v.push_back(x);
        rows.push_back(std::move(r));
    }
    return rows;
}

/// The same connection followed backwards in time: p and q swap, stable and
/// unstable swap with negated eigenvalues, and the transition is inverted.
inline saddlelink::ConnectionSpec time_reverse(const saddlelink::ConnectionSpec& s)
{
    auto flip = [](const saddlelink::SaddleData& d) {
        saddlelink::SaddleData r;
        for (auto e : d.unstable) r.stable.push_back({-e.re, e.im});
        for (auto e : d.stable) r.unstable.push_back({-e.re, e.im});
        return r;
    };
    saddlelink::ConnectionSpec r;
    r.p = flip(s.q);
    r.q = flip(s.p);
    if (s.transition) {
        const saddlelink::Mat2 inv = s.transition->matrix().inverse();
        r.transition = saddlelink::TransitionMap{inv.a, inv.b, inv.c, inv.d};
    }
    if (s.frames) {
        const auto& f = *s.frames;
        r.frames = saddlelink::FrameAngles{f.omega_u_q, f.omega_s_p, f.omega_uu_q, f.omega_ss_p};
    }
    return r;
}

struct CommandResult {
    int status = -1;
    std::string out;
};

/// Runs a shell command and captures its standard output.
inline CommandResult run(const std::string& cmd)
{
    CommandResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int st = pclose(pipe);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

inline std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Uniform draw on +-[lo, hi].
inline double signed_uniform(std::mt19937_64& rng, double lo, double hi)
{
    std::uniform_real_distribution<double> mag(lo, hi);
    std::bernoulli_distribution sign(0.5);
    const double m = mag(rng);
    return sign(rng) ? m : -m;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi)
{
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

} // namespace support
