#include "polarfit/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "polarfit/error.hpp"

namespace polarfit {

namespace {

// cos/sin pair with exact parity: both are computed from |x|, with the
// sine negated for negative x, so cos is exactly even and sin exactly odd
// regardless of libm internals. Models with b == 0 therefore evaluate
// identically at theta and -theta.
void cos_sin(double x, double& c, double& s) {
    double m = std::fabs(x);
    c = std::cos(m);
    double sm = std::sin(m);
    s = std::signbit(x) ? -sm : sm;
}

void check_columns(const PolarSamples& p, const std::vector<BasisColumn>& columns) {
    const std::size_t n = p.samples.size();
    if (n == 0) throw std::invalid_argument("ols_fit: empty samples");
    for (const BasisColumn& col : columns) {
        if (col.k < 1) throw std::invalid_argument("ols_fit: harmonic must be >= 1");
        if (2 * static_cast<std::size_t>(col.k) >= n) {
            throw Error(Errc::HarmonicTooHigh,
                        "harmonic " + std::to_string(col.k) + " aliases on a " +
                            std::to_string(n) + "-point grid (needs k < n/2)");
        }
    }
    if (columns.size() >= n) {
        throw Error(Errc::Underdetermined,
                    std::to_string(columns.size()) + " free coefficients but only " +
                        std::to_string(n) + " samples");
    }
}

// Gaussian elimination with partial pivoting on the (symmetric) normal
// matrix. Sizes here are tiny, conditioning is benign on uniform grids.
std::vector<double> solve_dense(std::vector<std::vector<double>> g,
                                std::vector<double> h) {
    const std::size_t m = g.size();
    double scale = 0.0;
    for (const auto& row : g)
        for (double v : row) scale = std::max(scale, std::fabs(v));
    if (scale == 0.0) scale = 1.0;

    std::vector<std::size_t> order(m);
    for (std::size_t i = 0; i < m; ++i) order[i] = i;

    for (std::size_t col = 0; col < m; ++col) {
        std::size_t pivot = col;
        for (std::size_t row = col + 1; row < m; ++row)
            if (std::fabs(g[row][col]) > std::fabs(g[pivot][col])) pivot = row;
        if (std::fabs(g[pivot][col]) <= 1e-13 * scale) {
            throw Error(Errc::Underdetermined, "design matrix is rank-deficient");
        }
        std::swap(g[col], g[pivot]);
        std::swap(h[col], h[pivot]);
        for (std::size_t row = col + 1; row < m; ++row) {
            double f = g[row][col] / g[col][col];
            for (std::size_t j = col; j < m; ++j) g[row][j] -= f * g[col][j];
            h[row] -= f * h[col];
        }
    }
    std::vector<double> x(m, 0.0);
    for (std::size_t i = m; i-- > 0;) {
        double acc = h[i];
        for (std::size_t j = i + 1; j < m; ++j) acc -= g[i][j] * x[j];
        x[i] = acc / g[i][i];
    }
    return x;
}

}  // namespace

int nonzero_count(const FourierModel& m) {
    int count = 0;
    for (const FourierTerm& t : m.terms) {
        if (t.a != 0.0) ++count;
        if (t.b != 0.0) ++count;
    }
    return count;
}

double evaluate(const FourierModel& m, double theta) {
    double sum = m.c;
    for (const FourierTerm& t : m.terms) {
        double c, s;
        cos_sin(static_cast<double>(t.k) * theta, c, s);
        sum += t.a * c + t.b * s;
    }
    return sum;
}

GridEval evaluate_grid(const FourierModel& m, int n) {
    if (n < 3) throw std::invalid_argument("evaluate_grid: n must be >= 3");
    GridEval out;
    out.samples.samples.resize(static_cast<std::size_t>(n));
    out.samples.uniform = true;
    for (int i = 0; i < n; ++i) {
        double theta = grid_angle(i, n);
        double r = evaluate(m, theta);
        if (r < 0.0) out.negative_radius = true;
        out.samples.samples[static_cast<std::size_t>(i)] = {theta, r};
    }
    return out;
}

double estimate_constant(const PolarSamples& p) {
    if (p.samples.empty()) throw std::invalid_argument("estimate_constant: empty samples");
    double sum = 0.0;
    for (const PolarSample& s : p.samples) sum += s.r;
    return sum / static_cast<double>(p.samples.size());
}

OlsResult ols_fit_columns(const PolarSamples& p,
                          const std::vector<BasisColumn>& columns, double c) {
    check_columns(p, columns);
    const std::size_t n = p.samples.size();
    const std::size_t m = columns.size();

    std::vector<std::vector<double>> design(n, std::vector<double>(m));
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        double theta = p.samples[i].theta;
        y[i] = p.samples[i].r - c;
        for (std::size_t j = 0; j < m; ++j) {
            double cv, sv;
            cos_sin(static_cast<double>(columns[j].k) * theta, cv, sv);
            design[i][j] = columns[j].sine ? sv : cv;
        }
    }

    std::vector<double> coef;
    if (m > 0) {
        std::vector<std::vector<double>> g(m, std::vector<double>(m, 0.0));
        std::vector<double> h(m, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                h[j] += design[i][j] * y[i];
                for (std::size_t l = j; l < m; ++l) g[j][l] += design[i][j] * design[i][l];
            }
        }
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t l = 0; l < j; ++l) g[j][l] = g[l][j];
        coef = solve_dense(std::move(g), std::move(h));
    }

    OlsResult out;
    out.model.c = c;
    std::map<int, FourierTerm> by_k;
    for (std::size_t j = 0; j < m; ++j) {
        FourierTerm& t = by_k[columns[j].k];
        t.k = columns[j].k;
        (columns[j].sine ? t.b : t.a) = coef[j];
    }
    out.model.terms.reserve(by_k.size());
    for (const auto& [k, term] : by_k) out.model.terms.push_back(term);

    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double fitted = 0.0;
        for (std::size_t j = 0; j < m; ++j) fitted += design[i][j] * coef[j];
        double resid = y[i] - fitted;
        acc += resid * resid;
    }
    out.sse = acc;
    return out;
}

OlsResult ols_fit(const PolarSamples& p, const std::vector<int>& harmonics,
                  double c, bool include_sine) {
    std::vector<int> ks = harmonics;
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());

    std::vector<BasisColumn> columns;
    columns.reserve(ks.size() * (include_sine ? 2 : 1));
    for (int k : ks) {
        columns.push_back({k, false});
        if (include_sine) columns.push_back({k, true});
    }
    return ols_fit_columns(p, columns, c);
}

double projection_coefficient(const PolarSamples& p, int k, double c) {
    if (k < 1) throw std::invalid_argument("projection_coefficient: harmonic must be >= 1");
    if (!p.uniform)
        throw Error(Errc::NotUniform, "projection requires the uniform grid");
    const std::size_t n = p.samples.size();
    if (2 * static_cast<std::size_t>(k) >= n) {
        throw Error(Errc::HarmonicTooHigh,
                    "harmonic " + std::to_string(k) + " aliases on a " +
                        std::to_string(n) + "-point grid (needs k < n/2)");
    }
    double sum = 0.0;
    for (const PolarSample& s : p.samples) {
        double cv, sv;
        cos_sin(static_cast<double>(k) * s.theta, cv, sv);
        sum += (s.r - c) * cv;
    }
    return 2.0 * sum / static_cast<double>(n);
}

double sse(const PolarSamples& p, const FourierModel& m) {
    if (p.samples.empty()) throw std::invalid_argument("sse: empty samples");
    double acc = 0.0;
    for (const PolarSample& s : p.samples) {
        double resid = s.r - evaluate(m, s.theta);
        acc += resid * resid;
    }
    return acc;
}

}  // namespace polarfit
