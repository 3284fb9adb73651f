#pragma once

#include "polarfit/fourier.hpp"

namespace polarfit {

enum class Symmetry { XAxis, None };
enum class Strategy { Exhaustive, Greedy };

struct FitConfig {
    int n = 100;          // uniform sample count
    int k_max = 10;       // highest candidate harmonic
    int sparsity_k = 4;   // exact number of non-zero coefficients
    Symmetry symmetry = Symmetry::XAxis;
    Strategy strategy = Strategy::Exhaustive;
};

/// Throws std::invalid_argument when the config violates its invariants
/// (sparsity bounds, k_max vs n/2).
void validate(const FitConfig& cfg);

/// Evaluates every size-sparsity_k coefficient subset and keeps the
/// minimum-SSE one. Under x-axis symmetry the candidate pool is the
/// cosine coefficients a_1..a_kmax; otherwise every a_k and b_k counts as
/// its own candidate. Ties resolve to the lexicographically smallest
/// subset. Deterministic.
FitReport exhaustive_select(const PolarSamples& p, const FitConfig& cfg,
                            double c);

/// Forward selection: repeatedly adds the candidate whose joint refit
/// lowers SSE the most, ties to the smallest harmonic (cosine before
/// sine). On a uniform symmetric grid this picks the sparsity_k largest
/// |projection_coefficient| harmonics.
FitReport greedy_select(const PolarSamples& p, const FitConfig& cfg,
                        double c);

/// Least-squares fit over all candidate coefficients up to k_max, the
/// many-parameter baseline.
FitReport dense_fit(const PolarSamples& p, const FitConfig& cfg, double c);

}  // namespace polarfit
