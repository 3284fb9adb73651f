#include "polarfit/contour.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <string_view>

#include "polarfit/error.hpp"

namespace polarfit {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kDupTol = 1e-12;    // consecutive-duplicate tolerance, relative
constexpr double kThetaTol = 1e-9;   // duplicate-angle tolerance, radians

bool same_point(const Point& p, const Point& q) {
    double sx = std::max({1.0, std::fabs(p.x), std::fabs(q.x)});
    double sy = std::max({1.0, std::fabs(p.y), std::fabs(q.y)});
    return std::fabs(p.x - q.x) <= kDupTol * sx &&
           std::fabs(p.y - q.y) <= kDupTol * sy;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

double parse_field(std::string_view field, std::size_t line_no) {
    field = trim(field);
    double value = 0.0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || field.empty() || !std::isfinite(value)) {
        throw Error(Errc::ParseError,
                    "line " + std::to_string(line_no) + ": expected a finite number, got '" +
                        std::string(field) + "'");
    }
    return value;
}

// Maps an angle difference onto [-pi, pi).
double wrap_angle(double a) {
    a = std::fmod(a + kPi, kTwoPi);
    if (a < 0.0) a += kTwoPi;
    return a - kPi;
}

// Strictly-inside test via winding number, with on-boundary rejection.
bool origin_strictly_inside(const std::vector<Point>& pts) {
    double scale = 1.0;
    for (const Point& p : pts) scale = std::max({scale, std::fabs(p.x), std::fabs(p.y)});
    const double edge_tol = 1e-12 * scale;

    const std::size_t m = pts.size();
    double winding = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const Point& a = pts[i];
        const Point& b = pts[(i + 1) % m];
        // distance from origin to segment ab
        double dx = b.x - a.x, dy = b.y - a.y;
        double len2 = dx * dx + dy * dy;
        double t = len2 > 0.0 ? std::clamp(-(a.x * dx + a.y * dy) / len2, 0.0, 1.0) : 0.0;
        double px = a.x + t * dx, py = a.y + t * dy;
        if (std::hypot(px, py) <= edge_tol) return false;  // on the boundary
        winding += std::atan2(a.x * b.y - a.y * b.x, a.x * b.x + a.y * b.y);
    }
    return std::lround(winding / kTwoPi) != 0;
}

}  // namespace

double grid_angle(int i, int n) {
    return -kPi + (kTwoPi * i) / n;
}

Contour load_contour(const std::string& text) {
    std::vector<Point> points;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line(text.data() + pos,
                              (eol == std::string::npos ? text.size() : eol) - pos);
        pos = (eol == std::string::npos) ? text.size() + 1 : eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        std::string_view body = trim(line);
        if (body.empty() || body.front() == '#') continue;

        std::size_t comma = body.find(',');
        if (comma == std::string_view::npos) {
            throw Error(Errc::ParseError,
                        "line " + std::to_string(line_no) + ": expected 'x,y'");
        }
        double x = parse_field(body.substr(0, comma), line_no);
        double y = parse_field(body.substr(comma + 1), line_no);
        points.push_back({x, y});
    }

    // Collapse consecutive duplicates, then a duplicated closing point.
    std::vector<Point> cleaned;
    for (const Point& p : points) {
        if (cleaned.empty() || !same_point(cleaned.back(), p)) cleaned.push_back(p);
    }
    while (cleaned.size() > 1 && same_point(cleaned.front(), cleaned.back()))
        cleaned.pop_back();

    if (cleaned.size() < 3) {
        throw Error(Errc::TooFewPoints,
                    "need at least 3 distinct points, got " +
                        std::to_string(cleaned.size()));
    }
    return Contour{std::move(cleaned), true};
}

Contour center(const Contour& c) {
    Contour out = c;
    // Two passes so the residual centroid is far below the 1e-12 contract.
    for (int pass = 0; pass < 2; ++pass) {
        double mx = 0.0, my = 0.0;
        for (const Point& p : out.points) {
            mx += p.x;
            my += p.y;
        }
        mx /= static_cast<double>(out.points.size());
        my /= static_cast<double>(out.points.size());
        for (Point& p : out.points) {
            p.x -= mx;
            p.y -= my;
        }
    }
    return out;
}

PolarSamples to_polar(const Contour& c) {
    if (c.points.size() < 3)
        throw std::invalid_argument("to_polar: contour needs at least 3 points");

    if (!origin_strictly_inside(c.points))
        throw Error(Errc::OriginOutside, "polar origin not strictly inside the contour");

    const std::size_t m = c.points.size();
    std::vector<PolarSample> polar(m);
    for (std::size_t i = 0; i < m; ++i) {
        double theta = std::atan2(c.points[i].y, c.points[i].x);
        if (theta >= kPi) theta -= kTwoPi;  // keep the range [-pi, pi)
        polar[i] = {theta, std::hypot(c.points[i].x, c.points[i].y)};
    }

    // The traversal must sweep the full circle exactly once and
    // monotonically, or r(theta) is multi-valued and the polar series
    // does not apply. A straight edge seen from an interior origin always
    // subtends less than pi, so the wrapped per-edge step is faithful.
    int positive = 0, negative = 0;
    double total = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        double step = wrap_angle(polar[(i + 1) % m].theta - polar[i].theta);
        if (step > kThetaTol) ++positive;
        else if (step < -kThetaTol) ++negative;
        total += step;
    }
    if ((positive != 0 && negative != 0) || std::fabs(std::fabs(total) - kTwoPi) > 1e-6) {
        throw Error(Errc::NonStarShaped,
                    "angular traversal is not monotone modulo 2*pi");
    }

    std::sort(polar.begin(), polar.end(),
              [](const PolarSample& a, const PolarSample& b) { return a.theta < b.theta; });

    for (std::size_t i = 0; i < m; ++i) {
        const PolarSample& cur = polar[i];
        const PolarSample& next = polar[(i + 1) % m];
        double gap = (i + 1 < m) ? next.theta - cur.theta
                                 : next.theta + kTwoPi - cur.theta;
        double rs = std::max({1.0, cur.r, next.r});
        if (gap < kThetaTol && std::fabs(next.r - cur.r) > kThetaTol * rs) {
            throw Error(Errc::NonStarShaped,
                        "two points share theta within 1e-9 rad with differing radii");
        }
    }

    PolarSamples out;
    out.samples = std::move(polar);
    out.uniform = false;
    return out;
}

PolarSamples resample_uniform(const PolarSamples& p, int n) {
    if (n < 3) throw std::invalid_argument("resample_uniform: n must be >= 3");
    if (p.samples.empty()) throw std::invalid_argument("resample_uniform: empty input");

    const std::size_t m = p.samples.size();
    PolarSamples out;
    out.samples.resize(static_cast<std::size_t>(n));
    out.uniform = true;

    for (int i = 0; i < n; ++i) {
        double t = grid_angle(i, n);
        // last sample with theta <= t, wrapping across the +-pi seam
        auto it = std::upper_bound(p.samples.begin(), p.samples.end(), t,
                                   [](double v, const PolarSample& s) { return v < s.theta; });
        double lo_theta, lo_r, hi_theta, hi_r;
        if (it == p.samples.begin()) {
            lo_theta = p.samples[m - 1].theta - kTwoPi;
            lo_r = p.samples[m - 1].r;
            hi_theta = p.samples[0].theta;
            hi_r = p.samples[0].r;
        } else if (it == p.samples.end()) {
            lo_theta = p.samples[m - 1].theta;
            lo_r = p.samples[m - 1].r;
            hi_theta = p.samples[0].theta + kTwoPi;
            hi_r = p.samples[0].r;
        } else {
            lo_theta = (it - 1)->theta;
            lo_r = (it - 1)->r;
            hi_theta = it->theta;
            hi_r = it->r;
        }
        double width = hi_theta - lo_theta;
        double w = width > 0.0 ? (t - lo_theta) / width : 0.0;
        out.samples[static_cast<std::size_t>(i)] = {t, lo_r + w * (hi_r - lo_r)};
    }
    return out;
}

PolarSamples symmetrize(const PolarSamples& p) {
    if (!p.uniform) throw Error(Errc::NotUniform, "symmetrize requires the uniform grid");
    const std::size_t n = p.samples.size();
    if (n % 2 != 0) throw Error(Errc::OddSampleCount, "symmetrize requires an even sample count");

    PolarSamples out = p;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t mirror = (n - i) % n;  // grid index of -theta_i
        out.samples[i].r = (p.samples[i].r + p.samples[mirror].r) / 2.0;
    }
    return out;
}

}  // namespace polarfit
