#include "occwalk/exact_dp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace occwalk {

JointLaw::JointLaw(const DriftSequence& eps, std::int64_t horizon, std::int64_t horizon_cap) {
    if (horizon < 1) throw std::invalid_argument("joint_law: horizon must be >= 1");
    if (horizon > horizon_cap)
        throw std::length_error("joint_law: horizon " + std::to_string(horizon) +
                                " exceeds capacity cap " + std::to_string(horizon_cap) +
                                " (state space is O(n^2))");
    horizon_ = horizon;
    max_eta_ = horizon / 2 + 2;
    const std::size_t stride = static_cast<std::size_t>(max_eta_);
    const std::size_t size = static_cast<std::size_t>(horizon + 2) * stride;
    std::vector<double> cur(size, 0.0), next(size, 0.0);
    std::vector<double> p_to(static_cast<std::size_t>(max_eta_) + 1);
    for (std::int64_t m = 1; m <= max_eta_; ++m)
        p_to[static_cast<std::size_t>(m)] = 0.5 * (1.0 + eps(m));

    cur[0 * stride + 0] = 1.0;  // (x=0, eta=1) at t=0
    for (std::int64_t t = 0; t < horizon_; ++t) {
        const std::int64_t x_lo = (t % 2 == 0) ? 0 : 1;
        std::fill(next.begin(), next.end(), 0.0);
        for (std::int64_t x = x_lo; x <= t; x += 2) {
            const std::int64_t eta_hi = 1 + (t - x) / 2;
            double* row = &cur[static_cast<std::size_t>(x) * stride];
            if (x == 0) {
                // to +1 with prob 1/2 (the -1 side is the mirror image)
                double* out = &next[1 * stride];
                for (std::int64_t m = 1; m <= eta_hi; ++m)
                    out[m - 1] += 0.5 * row[m - 1];
            } else if (x == 1) {
                double* out0 = &next[0 * stride];
                double* out2 = &next[2 * stride];
                for (std::int64_t m = 1; m <= eta_hi; ++m) {
                    const double w = row[m - 1];
                    if (w == 0.0) continue;
                    const double p = p_to[static_cast<std::size_t>(m)];
                    out0[m] += 2.0 * p * w;  // both mirror sides land on 0; eta increments
                    out2[m - 1] += (1.0 - p) * w;
                }
            } else {
                double* outd = &next[static_cast<std::size_t>(x - 1) * stride];
                double* outu = &next[static_cast<std::size_t>(x + 1) * stride];
                for (std::int64_t m = 1; m <= eta_hi; ++m) {
                    const double w = row[m - 1];
                    if (w == 0.0) continue;
                    const double p = p_to[static_cast<std::size_t>(m)];
                    outd[m - 1] += p * w;
                    outu[m - 1] += (1.0 - p) * w;
                }
            }
        }
        cur.swap(next);
    }
    v_ = std::move(cur);
    v_.resize(static_cast<std::size_t>(horizon_ + 1) * stride);
}

double JointLaw::half(std::int64_t x_abs, std::int64_t eta) const {
    if (x_abs < 0 || x_abs > horizon_ || eta < 1 || eta > max_eta_) return 0.0;
    return v_[static_cast<std::size_t>(x_abs) * static_cast<std::size_t>(max_eta_) +
              static_cast<std::size_t>(eta - 1)];
}

double JointLaw::prob(std::int64_t x, std::int64_t eta) const {
    return half(x < 0 ? -x : x, eta);
}

double JointLaw::prob_x(std::int64_t x) const {
    const std::int64_t xa = x < 0 ? -x : x;
    if (xa > horizon_) return 0.0;
    double sum = 0.0, comp = 0.0;
    for (std::int64_t m = 1; m <= max_eta_; ++m) {
        const double y = half(xa, m) - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}

Pmf JointLaw::marginal_x() const {
    Pmf out;
    out.offset = -horizon_;
    out.step = 2;
    out.weights.resize(static_cast<std::size_t>(horizon_) + 1);
    for (std::int64_t x = -horizon_; x <= horizon_; x += 2)
        out.weights[static_cast<std::size_t>((x + horizon_) / 2)] = prob_x(x);
    return out;
}

Pmf JointLaw::marginal_eta() const {
    Pmf out;
    out.offset = 1;
    out.step = 1;
    out.weights.resize(static_cast<std::size_t>(horizon_ / 2) + 1);
    for (std::int64_t m = 1; m <= horizon_ / 2 + 1; ++m) {
        double sum = 0.0, comp = 0.0;
        // P(eta = m) = P(X=0, m) + 2 sum_{x>0} P(X=x, m)
        for (std::int64_t x = (horizon_ % 2 == 0) ? 0 : 1; x <= horizon_; x += 2) {
            const double w = half(x, m) * (x == 0 ? 1.0 : 2.0);
            const double y = w - comp;
            const double t = sum + y;
            comp = (t - sum) - y;
            sum = t;
        }
        out.weights[static_cast<std::size_t>(m - 1)] = sum;
    }
    return out;
}

JointLaw joint_law(const DriftSequence& eps, std::int64_t n, std::int64_t horizon_cap) {
    return JointLaw(eps, n, horizon_cap);
}

Pmf tau_pmf(double delta, std::int64_t max_half_support) {
    if (!(delta >= 0.0 && delta <= 1.0))
        throw std::invalid_argument("tau_pmf: drift must lie in [0,1]");
    if (max_half_support < 1) throw std::invalid_argument("tau_pmf: support cap must be >= 1");
    const std::int64_t K = max_half_support;
    const double p = 0.5 * (1.0 + delta);
    const double q = 1.0 - p;
    Pmf out;
    out.offset = 2;
    out.step = 2;
    out.weights.assign(static_cast<std::size_t>(K), 0.0);
    // f[m] = P(magnitude m after j steps, no return yet); after step 1, f[1] = 1
    std::vector<double> f(static_cast<std::size_t>(2 * K) + 2, 0.0), g(f.size(), 0.0);
    f[1] = 1.0;
    for (std::int64_t j = 2; j <= 2 * K; ++j) {
        const std::int64_t m_hi = j - 1;  // reachable magnitudes before this step
        std::fill(g.begin(), g.begin() + static_cast<std::size_t>(m_hi) + 2, 0.0);
        for (std::int64_t m = (j % 2 == 0) ? 1 : 2; m <= m_hi; m += 2) {
            const double w = f[static_cast<std::size_t>(m)];
            if (w == 0.0) continue;
            if (m == 1) {
                if (j % 2 == 0) out.weights[static_cast<std::size_t>(j / 2 - 1)] += p * w;
                g[2] += q * w;
            } else {
                g[static_cast<std::size_t>(m - 1)] += p * w;
                g[static_cast<std::size_t>(m + 1)] += q * w;
            }
        }
        f.swap(g);
    }
    const double total = out.total_weight();
    out.truncation_mass = total < 1.0 ? 1.0 - total : 0.0;
    return out;
}

Pmf t_n_pmf(const DriftSequence& eps, std::int64_t n_returns, std::int64_t support_cap,
            double trunc_bound, bool* flagged) {
    if (n_returns < 1) throw std::invalid_argument("t_n_pmf: need n >= 1");
    if (support_cap < 2 * n_returns)
        throw std::invalid_argument("t_n_pmf: support cap below minimal value 2n");
    const std::int64_t jcap = support_cap / 2;  // T/2 lives on {n, ..., jcap}
    // cur[j] = P(T_k / 2 = j)
    std::vector<double> cur(static_cast<std::size_t>(jcap) + 1, 0.0), next(cur.size(), 0.0);
    {
        const Pmf tau1 = tau_pmf(eps(1), jcap);
        for (std::size_t i = 0; i < tau1.weights.size(); ++i)
            cur[i + 1] = tau1.weights[i];
    }
    for (std::int64_t k = 2; k <= n_returns; ++k) {
        std::int64_t tau_cap = jcap - (k - 1);  // other excursions take >= 1 half-step each
        // P(tau > 2K) decays like (1-delta^2)^K; trim the component support
        // to where its own tail is below 1e-18
        const double d2 = eps(k) * eps(k);
        if (d2 > 0.0) {
            const std::int64_t k_geo =
                64 + static_cast<std::int64_t>(std::ceil(-41.5 / std::log1p(-std::min(d2, 0.999))));
            tau_cap = std::min(tau_cap, k_geo);
        }
        const Pmf tk = tau_pmf(eps(k), tau_cap);
        std::fill(next.begin(), next.end(), 0.0);
        for (std::int64_t j = k - 1; j <= jcap - 1; ++j) {
            const double w = cur[static_cast<std::size_t>(j)];
            if (w == 0.0) continue;
            const std::int64_t i_hi = std::min<std::int64_t>(tau_cap, jcap - j);
            for (std::int64_t i = 1; i <= i_hi; ++i)
                next[static_cast<std::size_t>(j + i)] +=
                    w * tk.weights[static_cast<std::size_t>(i - 1)];
        }
        cur.swap(next);
    }
    Pmf out;
    out.offset = 2 * n_returns;
    out.step = 2;
    out.weights.assign(cur.begin() + static_cast<std::ptrdiff_t>(n_returns), cur.end());
    const double total = out.total_weight();
    out.truncation_mass = total < 1.0 ? 1.0 - total : 0.0;
    if (flagged) *flagged = out.truncation_mass > trunc_bound;
    return out;
}

double stay_positive_prob(double delta, std::int64_t n) {
    if (!(delta >= 0.0 && delta <= 1.0))
        throw std::invalid_argument("stay_positive_prob: drift must lie in [0,1]");
    if (n < 1) throw std::invalid_argument("stay_positive_prob: need n >= 1");
    const double p = 0.5 * (1.0 + delta);  // toward 0 (down)
    const double q = 1.0 - p;
    std::vector<double> w(static_cast<std::size_t>(n) + 2, 0.0), w2(w.size(), 0.0);
    w[1] = 0.5;  // X_1 = +1
    for (std::int64_t j = 2; j <= n; ++j) {
        std::fill(w2.begin(), w2.begin() + static_cast<std::size_t>(j) + 1, 0.0);
        for (std::int64_t x = (j % 2 == 0) ? 2 : 1; x <= j; x += 2) {
            double acc = 0.0;
            if (x >= 2) acc += q * w[static_cast<std::size_t>(x - 1)];
            if (x + 1 <= j - 1) acc += p * w[static_cast<std::size_t>(x + 1)];
            w2[static_cast<std::size_t>(x)] = acc;
        }
        w.swap(w2);
    }
    double sum = 0.0, comp = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const double y = w[i] - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}

double excursion_max_reach_formula(double delta, std::int64_t level) {
    if (!(delta >= 0.0 && delta < 1.0))
        throw std::invalid_argument("excursion max: drift must lie in [0,1)");
    if (level < 1) throw std::invalid_argument("excursion max: level must be >= 1");
    if (delta == 0.0) return 1.0 / static_cast<double>(level);
    const double rho = 2.0 * delta / (1.0 - delta);
    return rho / std::expm1(static_cast<double>(level) * std::log1p(rho));
}

double excursion_max_reach_dp(double delta, std::int64_t level) {
    if (!(delta >= 0.0 && delta < 1.0))
        throw std::invalid_argument("excursion max: drift must lie in [0,1)");
    if (level < 1) throw std::invalid_argument("excursion max: level must be >= 1");
    if (level == 1) return 1.0;
    const double p = 0.5 * (1.0 + delta);
    const double q = 1.0 - p;
    // magnitude chain with absorption at 0 and at `level`, started from 1
    std::vector<double> f(static_cast<std::size_t>(level), 0.0), g(f.size(), 0.0);
    f[1] = 1.0;
    double reached = 0.0;
    double live = 1.0;
    while (live > 1e-18) {
        std::fill(g.begin(), g.end(), 0.0);
        reached += q * f[static_cast<std::size_t>(level - 1)];
        for (std::int64_t m = 1; m <= level - 1; ++m) {
            const double w = f[static_cast<std::size_t>(m)];
            if (w == 0.0) continue;
            if (m + 1 <= level - 1) g[static_cast<std::size_t>(m + 1)] += q * w;
            if (m - 1 >= 1) g[static_cast<std::size_t>(m - 1)] += p * w;
        }
        f.swap(g);
        live = 0.0;
        for (const double w : f) live += w;
    }
    return reached;
}

double excursion_max_cdf(double delta, std::int64_t x) {
    return 1.0 - excursion_max_reach_formula(delta, x);
}

Pmf excursion_max_pmf(double delta, std::int64_t cap) {
    if (cap < 1) throw std::invalid_argument("excursion max pmf: cap must be >= 1");
    Pmf out;
    out.offset = 1;
    out.step = 1;
    out.weights.resize(static_cast<std::size_t>(cap));
    double reach_m = excursion_max_reach_dp(delta, 1);  // = 1
    for (std::int64_t m = 1; m <= cap; ++m) {
        const double reach_next = excursion_max_reach_dp(delta, m + 1);
        out.weights[static_cast<std::size_t>(m - 1)] = reach_m - reach_next;
        reach_m = reach_next;
    }
    out.truncation_mass = reach_m;
    return out;
}

Pmf constant_walk_law(double delta, std::int64_t n) {
    if (!(delta >= 0.0 && delta < 1.0))
        throw std::invalid_argument("constant_walk_law: drift must lie in [0,1)");
    if (n < 0) throw std::invalid_argument("constant_walk_law: need n >= 0");
    const double p = 0.5 * (1.0 + delta);
    const double q = 1.0 - p;
    // half-lattice: v[0] = P(X=0), v[x] = P(X=+x) for x > 0
    std::vector<double> v(static_cast<std::size_t>(n) + 2, 0.0), v2(v.size(), 0.0);
    v[0] = 1.0;
    for (std::int64_t t = 0; t < n; ++t) {
        std::fill(v2.begin(), v2.begin() + static_cast<std::size_t>(t) + 2, 0.0);
        for (std::int64_t x = (t % 2 == 0) ? 0 : 1; x <= t; x += 2) {
            const double w = v[static_cast<std::size_t>(x)];
            if (w == 0.0) continue;
            if (x == 0) {
                v2[1] += 0.5 * w;
            } else if (x == 1) {
                v2[0] += 2.0 * p * w;  // both mirror copies feed the origin
                v2[2] += q * w;
            } else {
                v2[static_cast<std::size_t>(x - 1)] += p * w;
                v2[static_cast<std::size_t>(x + 1)] += q * w;
            }
        }
        v.swap(v2);
    }
    Pmf out;
    out.offset = -n;
    out.step = 2;
    out.weights.resize(static_cast<std::size_t>(n) + 1);
    for (std::int64_t x = -n; x <= n; x += 2) {
        const std::int64_t xa = x < 0 ? -x : x;
        out.weights[static_cast<std::size_t>((x + n) / 2)] = v[static_cast<std::size_t>(xa)];
    }
    return out;
}

}  // namespace occwalk
