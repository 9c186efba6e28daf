#include "saddlelink/render.hpp"

#include <cmath>
#include <cstdio>
#include <optional>
#include <vector>

#include "saddlelink/error.hpp"
#include "saddlelink/foliation.hpp"
#include "saddlelink/holonomy.hpp"
#include "saddlelink/tangency.hpp"

namespace saddlelink {

namespace {

std::string fmt(const char* pattern, double a)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, pattern, a);
    return buf;
}

class Canvas {
public:
    Canvas(double radius, int size) : w_(radius), size_(size) {}

    std::string point(Vec2 p) const
    {
        const double sx = (p.x + w_) / (2.0 * w_) * size_;
        const double sy = (w_ - p.y) / (2.0 * w_) * size_;
        return fmt("%.2f", sx) + "," + fmt("%.2f", sy);
    }

    double x(Vec2 p) const { return (p.x + w_) / (2.0 * w_) * size_; }
    double y(Vec2 p) const { return (w_ - p.y) / (2.0 * w_) * size_; }

private:
    double w_;
    int size_;
};

bool inside(Vec2 p, double w) { return std::fabs(p.x) <= w && std::fabs(p.y) <= w; }

/// Unit-speed tracing of the leaf of x' = A x through `seed`, in one direction.
std::vector<Vec2> trace(const Mat2& a, Vec2 seed, double sign, double w)
{
    std::vector<Vec2> pts;
    auto dir = [&](Vec2 p) {
        const Vec2 v = a * p;
        const double n = norm(v);
        return n > 0.0 ? (sign / n) * v : Vec2{0.0, 0.0};
    };
    Vec2 p = seed;
    for (int i = 0; i < 6000; ++i) {
        const double r = norm(p);
        if (r < 1e-3 * w || !inside(p, w * 1.0000001)) break;
        const double h = std::min(0.04 * r, w / 150.0);
        const Vec2 k1 = dir(p);
        const Vec2 k2 = dir(p + (0.5 * h) * k1);
        const Vec2 k3 = dir(p + (0.5 * h) * k2);
        const Vec2 k4 = dir(p + h * k3);
        p = p + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        pts.push_back(p);
    }
    return pts;
}

Vec2 boundary_seed(int k, int n, double w)
{
    // Perimeter walk starting at the top-right corner, counter-clockwise.
    const double per = 8.0 * w;
    double d = (k + 0.5) / n * per;
    if (d < 2 * w) return {w - d, w};
    d -= 2 * w;
    if (d < 2 * w) return {-w, w - d};
    d -= 2 * w;
    if (d < 2 * w) return {-w + d, -w};
    d -= 2 * w;
    return {w, -w + d};
}

std::string leaves(const Mat2& field, const Canvas& cv, const RenderOptions& o)
{
    std::string out;
    for (int k = 0; k < o.leaves; ++k) {
        const Vec2 seed = boundary_seed(k, o.leaves, o.radius);
        std::vector<Vec2> back = trace(field, seed, -1.0, o.radius);
        std::vector<Vec2> fwd = trace(field, seed, 1.0, o.radius);
        std::string pts;
        for (auto it = back.rbegin(); it != back.rend(); ++it) pts += cv.point(*it) + " ";
        pts += cv.point(seed);
        for (const Vec2& p : fwd) pts += " " + cv.point(p);
        out += "    <polyline points=\"" + pts + "\"/>\n";
    }
    return out;
}

TangencyLocus locus_for(const NormalizedParams& np, const FoliationPair& pair)
{
    switch (np.subset) {
    case Subset::S21CC: return tangency_lines_cc(*np.alpha, *np.beta, *np.lambda);
    case Subset::S21RC: return tangency_lines_rc(*np.beta, *np.mu, *np.lambda, *np.theta0);
    case Subset::S21CR: return tangency_lines_rc(*np.alpha, *np.gamma, *np.lambda, *np.theta1 - pi / 2);
    default: return tangency_lines(pair);
    }
}

std::optional<SectorFrame> sector_for(const NormalizedParams& np, const TangencyLocus& lines)
{
    try {
        switch (np.subset) {
        case Subset::S21CC:
            if (is_tt_cc(*np.alpha, *np.beta, *np.t).in_tt) return std::nullopt;
            return sector_frame_cc(*np.alpha, *np.beta, *np.lambda);
        case Subset::S21RC:
            if (is_tt_rc(*np.beta, *np.mu, np.shear(), *np.theta0).in_tt) return std::nullopt;
            return sector_frame_rc(lines, *np.mu);
        case Subset::S21CR:
            if (is_tt_cr(*np.alpha, *np.gamma, *np.lambda, *np.theta1).in_tt) return std::nullopt;
            return sector_frame_rc(lines, *np.gamma);
        default:
            return std::nullopt;
        }
    } catch (const Error&) {
        return std::nullopt;
    }
}

std::string wedge(const Canvas& cv, double from, double to, double reach)
{
    std::string d = "M " + cv.point({0.0, 0.0});
    const int steps = 24;
    for (int i = 0; i <= steps; ++i) {
        const double a = from + (to - from) * i / steps;
        d += " L " + cv.point(reach * unit(a));
    }
    return d + " Z";
}

} // namespace

std::string render_svg(const NormalizedParams& np, const RenderOptions& o)
{
    if (o.leaves < 1) throw Error(ErrorCode::InvalidInput, "at least one leaf per foliation");
    if (!(o.radius > 0.0) || !std::isfinite(o.radius)) throw Error(ErrorCode::InvalidInput, "radius must be positive");
    const auto pair = model_pair(np);
    if (!pair) throw Error(ErrorCode::NotApplicable, "only (2-1) subsets have a foliation pair to draw");

    const Canvas cv(o.radius, o.size);
    const std::string size = std::to_string(o.size);
    const TangencyLocus lines = locus_for(np, *pair);

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + size + "\" height=\"" + size +
           "\" viewBox=\"0 0 " + size + " " + size + "\">\n";
    svg += "  <title>" + std::string(to_string(np.subset)) + " characteristic foliations</title>\n";
    svg += "  <rect x=\"0\" y=\"0\" width=\"" + size + "\" height=\"" + size + "\" fill=\"#ffffff\"/>\n";

    if (o.shade_sector) {
        if (const auto frame = sector_for(np, lines)) {
            const double reach = 2.0 * o.radius;
            svg += "  <g class=\"sector\" fill=\"#f2e3bd\" stroke=\"none\">\n";
            svg += "    <path d=\"" + wedge(cv, frame->start, frame->end(), reach) + "\"/>\n";
            svg += "    <path d=\"" + wedge(cv, frame->start + pi, frame->end() + pi, reach) + "\"/>\n";
            svg += "  </g>\n";
        }
    }

    svg += "  <g class=\"leaves-first\" fill=\"none\" stroke=\"#2a5d9f\" stroke-width=\"0.9\">\n";
    svg += leaves(pair->first, cv, o);
    svg += "  </g>\n";
    svg += "  <g class=\"leaves-second\" fill=\"none\" stroke=\"#b5452b\" stroke-width=\"0.9\">\n";
    svg += leaves(pair->second, cv, o);
    svg += "  </g>\n";

    if (!lines.angles.empty()) {
        svg += "  <g class=\"tangency\" stroke=\"#222222\" stroke-width=\"1.4\">\n";
        for (double a : lines.angles) {
            const Vec2 far = (std::sqrt(2.0) * o.radius) * unit(a);
            svg += "    <line x1=\"" + fmt("%.2f", cv.x(-1.0 * far)) + "\" y1=\"" + fmt("%.2f", cv.y(-1.0 * far)) +
                   "\" x2=\"" + fmt("%.2f", cv.x(far)) + "\" y2=\"" + fmt("%.2f", cv.y(far)) +
                   "\" stroke-dasharray=\"6 4\"/>\n";
        }
        svg += "  </g>\n";
    }

    const Vec2 origin{0.0, 0.0};
    svg += "  <circle class=\"origin\" cx=\"" + fmt("%.2f", cv.x(origin)) + "\" cy=\"" + fmt("%.2f", cv.y(origin)) +
           "\" r=\"3\" fill=\"#000000\"/>\n";
    svg += "</svg>\n";
    return svg;
}

} // namespace saddlelink
