#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "occwalk/drift_sequence.hpp"

namespace occwalk {

// Deterministic scaling sequences at horizon n:
//   a_n = n + sum_{i<=n} 1/eps_i        (expected n-th return time)
//   c_n = min{i : a_i >= n}             (inverse of a)
//   b_n = 1/eps_{c_n}
//   g_n = sqrt(sum_{i<=n} (eps_i^{-3} - eps_i^{-1}))
//   h_n = b_n/2 * log(c_n/b_n)          (NaN when c_n <= b_n)
struct ScalingBundle {
    std::int64_t n;
    double a_n;
    std::int64_t c_n;
    double b_n;
    double g_n;
    double h_n;
};

// Partial sums of 1/eps_i and eps_i^{-3} - eps_i^{-1}, Kahan-compensated,
// with (sum, compensation) checkpoints every 2^16 terms. Resuming from a
// checkpoint replays the exact single-pass summation stream, so cached
// queries are bit-identical to a from-scratch loop. Read-only once built;
// safe to share across threads.
class ScalingTable {
public:
    ScalingTable(const DriftSequence& eps, std::int64_t max_n);

    double a(std::int64_t n) const;
    double g(std::int64_t n) const;
    std::int64_t c(std::int64_t n) const;  // requires a(max_n) >= n
    ScalingBundle bundle(std::int64_t n) const;

    std::int64_t max_n() const { return max_n_; }
    const DriftSequence& eps() const { return eps_; }

private:
    struct Checkpoint {
        double inv_sum, inv_comp;  // running sum of 1/eps_i
        double g2_sum, g2_comp;    // running sum of eps_i^{-3} - eps_i^{-1}
    };

    void accumulate(std::int64_t from_block, std::int64_t n, double* inv_sum,
                    double* g2_sum) const;

    DriftSequence eps_;
    std::int64_t max_n_;
    std::vector<Checkpoint> checkpoints_;  // checkpoints_[k] = state after index k*2^16
};

// One-shot convenience; builds a throwaway table of size n.
ScalingBundle scaling_bundle(const DriftSequence& eps, std::int64_t n);

// --- Regular-variation diagnostics (finite-n surrogates for the limits) ---

struct RvCheck {
    std::string name;
    std::int64_t n;
    double measured;
    double expected;
    double rel_err;
    bool pass;
};

struct RvReport {
    std::vector<RvCheck> checks;
    bool all_pass = true;
    void add(std::string name, std::int64_t n, double measured, double expected, double tol);
};

// Dyadic ratio checks r_{2n}/r_n vs 2^rho, r_{n/2}/r_n vs 2^-rho, and the
// Karamata sum ratio (1/(n r_n)) sum_{m<=n} r_m vs 1/(1+rho) (rho > -1),
// evaluated at each grid point. Grid must be increasing and positive.
RvReport rv_diagnostics(const std::function<double(std::int64_t)>& r, double rho_claimed,
                        const std::vector<std::int64_t>& n_grid, double rel_tol = 0.02);

// Battery for a drift sequence with claimed index -alpha: eps itself,
// a in RV(1+alpha), the inverse consistency a_{c_n}/n -> 1, and
// b_n * c_n / ((1+alpha) n) -> 1.
RvReport rv_diagnostics_for_drift(const DriftSequence& eps, double alpha,
                                  const std::vector<std::int64_t>& n_grid,
                                  double rel_tol = 0.02);

}  // namespace occwalk
