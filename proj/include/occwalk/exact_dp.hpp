#pragma once

#include <cstdint>
#include <vector>

#include "occwalk/drift_sequence.hpp"
#include "occwalk/pmf.hpp"

namespace occwalk {

// Exact joint law of (X_n, eta_n) started from (0, 1), by forward recursion
// of the pair-chain kernel. Stores the x >= 0 half only (the law is
// symmetric in x); memory is O(n^2) doubles, hence the horizon cap.
class JointLaw {
public:
    JointLaw(const DriftSequence& eps, std::int64_t horizon, std::int64_t horizon_cap = 4096);

    std::int64_t horizon() const { return horizon_; }
    std::int64_t max_eta() const { return max_eta_; }

    double prob(std::int64_t x, std::int64_t eta) const;  // signed x
    double prob_x(std::int64_t x) const;
    double prob_at_zero() const { return prob_x(0); }
    Pmf marginal_x() const;    // support {-n, -n+2, ..., n}
    Pmf marginal_eta() const;  // support {1, ..., 1 + n/2}

private:
    double half(std::int64_t x_abs, std::int64_t eta) const;
    std::int64_t horizon_;
    std::int64_t max_eta_;
    std::vector<double> v_;  // [x * max_eta_ + (eta-1)], x in [0, horizon]
};

JointLaw joint_law(const DriftSequence& eps, std::int64_t n, std::int64_t horizon_cap = 4096);

// Exact pmf of the return time tau under constant drift delta, support
// {2, 4, ..., 2*max_half_support}; mass beyond the cap is reported as
// truncation (delta = 0 is legitimately heavy-tailed).
Pmf tau_pmf(double delta, std::int64_t max_half_support);

// Exact pmf of T_n (time of the n-th return) as the convolution of the n
// per-excursion laws, clipped at support_cap; the clipped mass accumulates
// into truncation_mass and flags the result approximate when it exceeds
// trunc_bound.
Pmf t_n_pmf(const DriftSequence& eps, std::int64_t n_returns, std::int64_t support_cap,
            double trunc_bound = 1e-12, bool* flagged = nullptr);

// Exact P(X_1 > 0, ..., X_n > 0) under constant drift delta.
double stay_positive_prob(double delta, std::int64_t n);

// Per-excursion maximum under constant drift delta.
// Closed form (ruin probability): P(max reaches level) = rho/((1+rho)^level - 1),
// rho = 2 delta/(1-delta); the DP route iterates the magnitude chain with
// absorbing barriers at 0 and level and is independent of the formula.
double excursion_max_reach_formula(double delta, std::int64_t level);
double excursion_max_reach_dp(double delta, std::int64_t level);
double excursion_max_cdf(double delta, std::int64_t x);  // 1 - reach(x) = P(max < x), closed form
Pmf excursion_max_pmf(double delta, std::int64_t cap);   // P(max = m), m = 1..cap, via DP

// Exact law of X_n under constant drift (the oscillating comparison walk);
// X alone is Markov when the drift sequence is constant.
Pmf constant_walk_law(double delta, std::int64_t n);

}  // namespace occwalk
