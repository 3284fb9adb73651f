#pragma once

#include <cstdint>
#include <vector>

#include "polarfit/contour.hpp"

namespace polarfit {

struct FourierTerm {
    int k = 1;       // harmonic
    double a = 0.0;  // cosine coefficient
    double b = 0.0;  // sine coefficient
};

/// Truncated polar Fourier series r(theta) = c + sum_k a_k cos(k theta)
/// + b_k sin(k theta). Terms are sorted by strictly increasing harmonic.
struct FourierModel {
    double c = 0.0;
    std::vector<FourierTerm> terms;
};

/// Number of coefficients among all a, b that are not exactly zero.
int nonzero_count(const FourierModel& m);

/// r(theta). Models with all b == 0 evaluate exactly evenly:
/// evaluate(m, theta) == evaluate(m, -theta) bit for bit.
double evaluate(const FourierModel& m, double theta);

struct GridEval {
    PolarSamples samples;
    bool negative_radius = false;  // model dips below r = 0 on the grid
};

/// Evaluates the model on the n-point uniform grid. Negative radii are
/// kept as-is and flagged rather than rejected.
GridEval evaluate_grid(const FourierModel& m, int n);

/// Mean radius of the samples, the estimator for the series constant.
double estimate_constant(const PolarSamples& p);

/// One basis function cos(k theta) or sin(k theta).
struct BasisColumn {
    int k = 1;
    bool sine = false;
};

struct OlsResult {
    FourierModel model;
    double sse = 0.0;
};

/// Least-squares fit of the given basis columns with the constant held
/// fixed at c. Exact normal-equations minimizer.
///
/// Throws Error(HarmonicTooHigh) when some k >= n/2 (aliasing) and
/// Error(Underdetermined) when the free coefficient count reaches n or
/// the design is rank-deficient.
OlsResult ols_fit_columns(const PolarSamples& p,
                          const std::vector<BasisColumn>& columns, double c);

/// Least-squares fit over the given harmonics, cosine-only unless
/// include_sine. Duplicate harmonics are collapsed.
OlsResult ols_fit(const PolarSamples& p, const std::vector<int>& harmonics,
                  double c, bool include_sine);

/// (2/n) sum (r_i - c) cos(k theta_i). On a uniform grid this equals the
/// ols_fit cosine coefficient for any harmonic set containing k.
/// Throws Error(NotUniform) or Error(HarmonicTooHigh).
double projection_coefficient(const PolarSamples& p, int k, double c);

/// Sum of squared residuals of the model against the samples.
double sse(const PolarSamples& p, const FourierModel& m);

/// Outcome of a selection run: the fitted sparse model plus the audit
/// trail the CLI reports.
struct FitReport {
    FourierModel model;
    double sse = 0.0;
    double rmse = 0.0;                      // sqrt(sse / n)
    std::vector<int> selected_harmonics;    // sorted, deduplicated
    std::vector<double> parameter_vector;   // non-zero coefficients, harmonic order
    std::int64_t candidates_evaluated = 0;
};

}  // namespace polarfit
