#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace polarfit {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

/// Closed polyline in Cartesian coordinates; the last point connects back
/// to the first.
struct Contour {
    std::vector<Point> points;
    bool closed = true;
};

struct PolarSample {
    double theta = 0.0;  // radians in [-pi, pi)
    double r = 0.0;
};

/// Angle/radius pairs sorted by angle. `uniform` marks samples sitting on
/// the grid theta_i = -pi + 2*pi*i/n.
struct PolarSamples {
    std::vector<PolarSample> samples;
    bool uniform = false;

    std::size_t size() const { return samples.size(); }
};

/// Angle of node i on the n-point uniform grid over [-pi, pi).
double grid_angle(int i, int n);

/// Parses CSV point data: one `x,y` pair per line, `#` comment lines and
/// blank lines skipped, LF or CRLF endings. Consecutive duplicate points
/// (including a repeated closing point) are collapsed.
///
/// Throws Error(ParseError) with the offending 1-based line number, or
/// Error(TooFewPoints) if fewer than 3 points remain.
Contour load_contour(const std::string& text);

/// Translates the contour so its vertex centroid lands on the origin.
/// Idempotent.
Contour center(const Contour& c);

/// Converts a centered contour to polar samples sorted by angle.
///
/// Throws Error(OriginOutside) if the origin is not strictly inside the
/// polygon, or Error(NonStarShaped) if r(theta) would be multi-valued
/// (angle collision closer than 1e-9 rad with differing radii, or a
/// traversal that is not monotone modulo 2*pi).
PolarSamples to_polar(const Contour& c);

/// Resamples onto the n-point uniform grid by periodic linear
/// interpolation between the bracketing input samples. Constant-radius
/// input stays constant exactly.
PolarSamples resample_uniform(const PolarSamples& p, int n);

/// Averages mirror pairs r(theta), r(-theta) so the result satisfies
/// r(theta) == r(-theta) exactly. Requires a uniform grid with even n;
/// throws Error(NotUniform) or Error(OddSampleCount) otherwise.
PolarSamples symmetrize(const PolarSamples& p);

}  // namespace polarfit
