#include "occwalk/oscillating.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "occwalk/exact_dp.hpp"

namespace occwalk {

StationaryMeasure::StationaryMeasure(double delta) : delta_(delta) {
    if (!(delta > 0.0 && delta < 1.0))
        throw std::invalid_argument("stationary measure requires delta in (0,1)");
    const double s = (1.0 - delta) / (1.0 + delta);
    ratio_ = s * s;
    coef_ = 2.0 * delta * (1.0 - delta) / ((1.0 + delta) * (1.0 + delta) * (1.0 + delta));
}

double StationaryMeasure::prob(std::int64_t x) const {
    if (x % 2 != 0) return 0.0;
    if (x == 0) return 2.0 * delta_ / (1.0 + delta_);
    const std::int64_t i = (x < 0 ? -x : x) / 2;
    return coef_ * std::pow(ratio_, static_cast<double>(i - 1));
}

double StationaryMeasure::tail_above(double y) const {
    // smallest i >= 1 with 2i > y
    if (y < 0.0) y = 0.0;  // one-sided tail on the positive axis
    const std::int64_t i0 = static_cast<std::int64_t>(std::floor(y / 2.0)) + 1;
    // sum_{i >= i0} coef * ratio^{i-1} = coef * ratio^{i0-1} / (1 - ratio)
    return coef_ * std::pow(ratio_, static_cast<double>(i0 - 1)) / (1.0 - ratio_);
}

double StationaryMeasure::tail_above_by_summation(double y) const {
    if (y < 0.0) y = 0.0;
    double sum = 0.0, comp = 0.0;
    for (std::int64_t i = static_cast<std::int64_t>(std::floor(y / 2.0)) + 1;; ++i) {
        const double term = coef_ * std::pow(ratio_, static_cast<double>(i - 1));
        const double yk = term - comp;
        const double t = sum + yk;
        comp = (t - sum) - yk;
        sum = t;
        if (term < 1e-20 * (sum + 1e-300)) break;
    }
    return sum;
}

double StationaryMeasure::total_mass_residual() const {
    double sum = prob(0), comp = 0.0;
    for (std::int64_t i = 1;; ++i) {
        const double term = 2.0 * prob(2 * i);
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if (term < 1e-22) break;
    }
    return std::fabs(sum - 1.0);
}

void StationaryMeasure::write_csv(std::ostream& os, std::int64_t radius) const {
    os << "value,probability\n";
    char buf[64];
    for (std::int64_t x = -radius; x <= radius; x += 2) {
        std::snprintf(buf, sizeof(buf), "%.17g", prob(x));
        os << x << ',' << buf << '\n';
    }
}

namespace {

// one application of the constant-drift kernel to a signed-lattice vector
std::vector<double> apply_kernel(const std::vector<double>& v, std::int64_t radius, double delta) {
    const auto idx = [radius](std::int64_t x) { return static_cast<std::size_t>(x + radius); };
    std::vector<double> out(v.size(), 0.0);
    const double p = 0.5 * (1.0 + delta);
    const double q = 1.0 - p;
    for (std::int64_t x = -radius; x <= radius; ++x) {
        const double w = v[idx(x)];
        if (w == 0.0) continue;
        if (x == 0) {
            out[idx(1)] += 0.5 * w;
            out[idx(-1)] += 0.5 * w;
        } else if (x > 0) {
            out[idx(x - 1)] += p * w;
            if (x + 1 <= radius) out[idx(x + 1)] += q * w;
        } else {
            out[idx(x + 1)] += p * w;
            if (x - 1 >= -radius) out[idx(x - 1)] += q * w;
        }
    }
    return out;
}

double residual_of(const std::vector<double>& mu_vec, std::int64_t inner_radius,
                   std::int64_t outer_radius, double delta) {
    const auto idx = [outer_radius](std::int64_t x) {
        return static_cast<std::size_t>(x + outer_radius);
    };
    const std::vector<double> k1 = apply_kernel(mu_vec, outer_radius, delta);
    const std::vector<double> k2 = apply_kernel(k1, outer_radius, delta);
    double worst = 0.0;
    for (std::int64_t x = -inner_radius; x <= inner_radius; x += 2) {
        const double r = std::fabs(k2[idx(x)] - mu_vec[idx(x)]);
        if (r > worst) worst = r;
    }
    return worst;
}

}  // namespace

double stationarity_residual(double delta, std::int64_t radius) {
    if (radius < 2) throw std::invalid_argument("stationarity check needs radius >= 2");
    StationaryMeasure mu(delta);
    const std::int64_t outer = radius + 4;  // sites beyond radius+2 cannot reach |x|<=radius in 2 steps
    std::vector<double> v(static_cast<std::size_t>(2 * outer) + 1, 0.0);
    for (std::int64_t x = -outer; x <= outer; x += 2)
        v[static_cast<std::size_t>(x + outer)] = mu.prob(x);
    return residual_of(v, radius, outer, delta);
}

double stationarity_residual_perturbed(double delta, std::int64_t radius, std::int64_t site,
                                       double factor) {
    if (radius < 2) throw std::invalid_argument("stationarity check needs radius >= 2");
    StationaryMeasure mu(delta);
    const std::int64_t outer = radius + 4;
    std::vector<double> v(static_cast<std::size_t>(2 * outer) + 1, 0.0);
    for (std::int64_t x = -outer; x <= outer; x += 2)
        v[static_cast<std::size_t>(x + outer)] = mu.prob(x);
    v[static_cast<std::size_t>(site + outer)] *= factor;
    return residual_of(v, radius, outer, delta);
}

double mgf_tau(double delta, double s) {
    if (!(delta >= 0.0 && delta < 1.0))
        throw std::invalid_argument("mgf_tau: delta must lie in [0,1)");
    const double s_max = 1.0 / std::sqrt(1.0 - delta * delta);
    if (!(s > 0.0 && s < s_max))
        throw std::domain_error("mgf_tau: s outside (0, (1-delta^2)^{-1/2})");
    return (1.0 - std::sqrt(1.0 - (1.0 - delta * delta) * s * s)) / (1.0 - delta);
}

double tau_moment_from_mgf(double delta, int order) {
    if (order < 1 || order > 3) throw std::invalid_argument("tau_moment_from_mgf: order in 1..3");
    const auto f = [delta](double s) { return mgf_tau(delta, s); };
    // factorial moments E tau(tau-1)...(tau-k+1) = f^{(k)}(1)
    const double h1 = 1e-5;
    const double d1 = (f(1.0 + h1) - f(1.0 - h1)) / (2.0 * h1);
    if (order == 1) return d1;
    const double h2 = 1e-5;
    const double d2 = (f(1.0 + h2) - 2.0 * f(1.0) + f(1.0 - h2)) / (h2 * h2);
    if (order == 2) return d2 + d1;  // E tau^2 = E tau(tau-1) + E tau
    const double h3 = 1e-3;          // h=1e-5 would sink the third difference in rounding
    const double d3 = (f(1.0 + 2.0 * h3) - 2.0 * f(1.0 + h3) + 2.0 * f(1.0 - h3) -
                       f(1.0 - 2.0 * h3)) /
                      (2.0 * h3 * h3 * h3);
    // E tau^3 = E tau(tau-1)(tau-2) + 3 E tau^2 - 2 E tau
    return d3 + 3.0 * (d2 + d1) - 2.0 * d1;
}

double tv_convergence_bound(double delta, std::int64_t n) {
    if (!(delta > 0.0 && delta < 1.0))
        throw std::invalid_argument("tv bound: delta must lie in (0,1)");
    if (n < 1) throw std::invalid_argument("tv bound: n must be >= 1");
    return 2.0 * std::pow(1.0 + delta * delta, static_cast<double>(-n));
}

double exact_tv_to_stationary(double delta, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("exact tv: n must be >= 1");
    const Pmf law = constant_walk_law(delta, 2 * n);
    StationaryMeasure mu(delta);
    // TV = 1/2 sum over even sites |P - mu|; outside the walk's range P = 0
    double sum = 0.0, comp = 0.0;
    const auto add = [&sum, &comp](double term) {
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    };
    for (std::int64_t x = -2 * n; x <= 2 * n; x += 2)
        add(std::fabs(law.prob(x) - mu.prob(x)));
    add(2.0 * mu.tail_above(static_cast<double>(2 * n)));
    return 0.5 * sum;
}

}  // namespace occwalk
