#pragma once

#include <cstdint>
#include <iosfwd>

namespace occwalk {

// Stationary law of the two-step chain (X_{2n}) under constant drift delta,
// supported on the even lattice:
//   mu(0)  = 2 delta / (1+delta)
//   mu(2i) = 2 delta (1-delta) / (1+delta)^3 * r^{|i|-1},  r = ((1-delta)/(1+delta))^2
class StationaryMeasure {
public:
    explicit StationaryMeasure(double delta);

    double delta() const { return delta_; }
    double prob(std::int64_t x) const;         // 0 on odd sites
    double tail_above(double y) const;         // mu((y, inf)), closed form
    double tail_above_by_summation(double y) const;
    double total_mass_residual() const;        // |sum mu - 1| by direct summation

    void write_csv(std::ostream& os, std::int64_t radius) const;

private:
    double delta_;
    double ratio_;  // ((1-delta)/(1+delta))^2
    double coef_;   // 2 delta (1-delta)/(1+delta)^3
};

// max |mu K^2 - mu| over even sites |x| <= radius, K the one-step kernel
// with constant drift. The two-step kernel sidesteps the period-2 chain.
double stationarity_residual(double delta, std::int64_t radius);

// Same residual after scaling mu at one site by `factor` (a non-stationary
// control input).
double stationarity_residual_perturbed(double delta, std::int64_t radius, std::int64_t site,
                                       double factor);

// E(s^tau) = (1 - sqrt(1 - (1-delta^2) s^2)) / (1-delta), 0 < s < (1-delta^2)^{-1/2}.
double mgf_tau(double delta, double s);

// Raw moment E(tau^order), order in {1,2,3}, by central differences of the
// factorial-moment derivatives of the MGF at s=1. The third derivative
// needs a wider step than the first two to stay above double rounding.
double tau_moment_from_mgf(double delta, int order);

// Lemma-rate bound 2 (1+delta^2)^{-n} on sup_A |P(X_{2n} in A) - mu(A)|.
double tv_convergence_bound(double delta, std::int64_t n);

// Exact total-variation distance between the law of X_{2n} started at 0 and
// the stationary measure (companion check for the bound).
double exact_tv_to_stationary(double delta, std::int64_t n);

}  // namespace occwalk
