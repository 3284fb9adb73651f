#include "polarfit/select.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "polarfit/error.hpp"

namespace polarfit {

namespace {

constexpr double kSymmetryTol = 1e-9;

// Candidate coefficients in tie-break order: ascending harmonic, cosine
// before sine. Under x-axis symmetry the sine half of the pool is gone.
std::vector<BasisColumn> candidate_pool(const FitConfig& cfg) {
    std::vector<BasisColumn> pool;
    for (int k = 1; k <= cfg.k_max; ++k) {
        pool.push_back({k, false});
        if (cfg.symmetry == Symmetry::None) pool.push_back({k, true});
    }
    return pool;
}

void require_symmetric(const PolarSamples& p) {
    const std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t mirror = (n - i) % n;
        if (std::fabs(p.samples[i].r - p.samples[mirror].r) > kSymmetryTol) {
            throw Error(Errc::SymmetryViolated,
                        "x-axis symmetry requested but r(theta) != r(-theta) at grid index " +
                            std::to_string(i));
        }
    }
}

void check_selector_input(const PolarSamples& p, const FitConfig& cfg,
                          bool needs_symmetry) {
    validate(cfg);
    if (!p.uniform)
        throw Error(Errc::NotUniform, "selection requires the uniform grid");
    if (needs_symmetry && cfg.symmetry == Symmetry::XAxis) require_symmetric(p);
}

// Candidate subsets whose SSE difference is below this scale count as
// tied, so the tie-break rule decides instead of floating-point noise at
// the residual floor.
double tie_tolerance(const PolarSamples& p, double c) {
    double baseline = 0.0;
    for (const PolarSample& s : p.samples) baseline += (s.r - c) * (s.r - c);
    return 1e-12 * (baseline + 1.0);
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t pool_size) {
    const std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] < pool_size - k + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<BasisColumn> pick(const std::vector<BasisColumn>& pool,
                              const std::vector<std::size_t>& idx) {
    std::vector<BasisColumn> cols;
    cols.reserve(idx.size());
    for (std::size_t i : idx) cols.push_back(pool[i]);
    return cols;
}

FitReport build_report(const PolarSamples& p, OlsResult res,
                       const std::vector<BasisColumn>& selected,
                       std::int64_t candidates) {
    FitReport rep;
    rep.model = std::move(res.model);
    rep.sse = res.sse;
    rep.rmse = std::sqrt(res.sse / static_cast<double>(p.size()));
    for (const BasisColumn& col : selected) rep.selected_harmonics.push_back(col.k);
    std::sort(rep.selected_harmonics.begin(), rep.selected_harmonics.end());
    rep.selected_harmonics.erase(
        std::unique(rep.selected_harmonics.begin(), rep.selected_harmonics.end()),
        rep.selected_harmonics.end());
    for (const FourierTerm& t : rep.model.terms) {
        if (t.a != 0.0) rep.parameter_vector.push_back(t.a);
        if (t.b != 0.0) rep.parameter_vector.push_back(t.b);
    }
    rep.candidates_evaluated = candidates;
    return rep;
}

}  // namespace

void validate(const FitConfig& cfg) {
    if (cfg.n < 3) throw std::invalid_argument("FitConfig: n must be >= 3");
    if (cfg.k_max < 1) throw std::invalid_argument("FitConfig: k_max must be >= 1");
    const int pool = cfg.symmetry == Symmetry::XAxis ? cfg.k_max : 2 * cfg.k_max;
    if (cfg.sparsity_k < 1 || cfg.sparsity_k > pool) {
        throw std::invalid_argument("FitConfig: sparsity_k must be in [1, " +
                                    std::to_string(pool) + "]");
    }
    if (2 * cfg.k_max >= cfg.n) {
        throw Error(Errc::HarmonicTooHigh,
                    "k_max " + std::to_string(cfg.k_max) + " aliases on an n = " +
                        std::to_string(cfg.n) + " grid (needs k_max < n/2)");
    }
}

FitReport exhaustive_select(const PolarSamples& p, const FitConfig& cfg, double c) {
    check_selector_input(p, cfg, true);
    const std::vector<BasisColumn> pool = candidate_pool(cfg);
    const std::size_t k = static_cast<std::size_t>(cfg.sparsity_k);

    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;

    // Lexicographic enumeration plus improvement-beyond-tie implements the
    // smallest-subset tie-break.
    const double tie = tie_tolerance(p, c);
    bool have_best = false;
    OlsResult best;
    std::vector<std::size_t> best_idx;
    std::int64_t candidates = 0;
    do {
        OlsResult res = ols_fit_columns(p, pick(pool, idx), c);
        ++candidates;
        if (!have_best || res.sse < best.sse - tie) {
            have_best = true;
            best = std::move(res);
            best_idx = idx;
        }
    } while (next_combination(idx, pool.size()));

    return build_report(p, std::move(best), pick(pool, best_idx), candidates);
}

FitReport greedy_select(const PolarSamples& p, const FitConfig& cfg, double c) {
    check_selector_input(p, cfg, true);
    const std::vector<BasisColumn> pool = candidate_pool(cfg);
    const std::size_t k = static_cast<std::size_t>(cfg.sparsity_k);

    const double tie = tie_tolerance(p, c);
    std::vector<std::size_t> chosen;  // ascending pool indices
    OlsResult current;
    std::int64_t candidates = 0;
    for (std::size_t step = 0; step < k; ++step) {
        bool have = false;
        std::size_t best_cand = 0;
        OlsResult best_res;
        for (std::size_t cand = 0; cand < pool.size(); ++cand) {
            if (std::binary_search(chosen.begin(), chosen.end(), cand)) continue;
            std::vector<std::size_t> trial = chosen;
            trial.insert(std::upper_bound(trial.begin(), trial.end(), cand), cand);
            OlsResult res = ols_fit_columns(p, pick(pool, trial), c);
            ++candidates;
            if (!have || res.sse < best_res.sse - tie) {
                have = true;
                best_cand = cand;
                best_res = std::move(res);
            }
        }
        chosen.insert(std::upper_bound(chosen.begin(), chosen.end(), best_cand), best_cand);
        current = std::move(best_res);
    }

    return build_report(p, std::move(current), pick(pool, chosen), candidates);
}

FitReport dense_fit(const PolarSamples& p, const FitConfig& cfg, double c) {
    check_selector_input(p, cfg, false);
    const std::vector<BasisColumn> pool = candidate_pool(cfg);
    OlsResult res = ols_fit_columns(p, pool, c);
    return build_report(p, std::move(res), pool, 1);
}

}  // namespace polarfit
