#include "occwalk/walk.hpp"

#include <cassert>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

namespace occwalk {

namespace {

constexpr std::int64_t kMaxHorizon = std::int64_t{1} << 62;

// Inclusive threshold for "move toward 0": P(u <= thresh) = (1+e)/2 exactly,
// with e >= 1 collapsing to an always-true compare. One 64-bit draw per step
// everywhere, so step-by-step and bulk simulation replay identical paths.
inline std::uint64_t toward_threshold(double e) {
    if (e >= 1.0) return ~std::uint64_t{0};
    return probability_threshold(0.5 * (1.0 + e)) - 1;
}

void check_horizon(std::int64_t horizon) {
    if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
    if (horizon > kMaxHorizon) throw std::invalid_argument("horizon above 2^62 rejected");
}

struct NullRecorder {
    void operator()(std::int64_t, std::int64_t, std::int64_t) const {}
};

template <class Recorder>
PathSummary run_pair_chain(const DriftSequence& eps, std::int64_t horizon, Xoshiro256pp& rng,
                           Recorder&& rec) {
    PathSummary s;
    std::int64_t t = 0;
    std::int64_t eta = 1;
    while (t < horizon) {
        // new excursion: drift is constant (eps_eta) until the next return
        const std::uint64_t thresh = toward_threshold(eps(eta));
        const std::uint64_t u0 = rng();
        const int sign = (u0 >> 63) ? 1 : -1;
        ++t;
        rec(t, static_cast<std::int64_t>(sign), eta);
        std::int64_t m = 1;
        std::int64_t maxm = 1;
        while (m != 0 && t < horizon) {
            const std::uint64_t u = rng();
            m += (u <= thresh) ? -1 : 1;
            ++t;
            maxm = m > maxm ? m : maxm;
            assert(((m ^ t) & 1) == 0);  // parity: |X_t| == t (mod 2) from a zero start
            rec(t, sign * m, eta + (m == 0 ? 1 : 0));
        }
        if (maxm > s.max_abs_x) s.max_abs_x = maxm;
        if (sign > 0 && maxm > s.max_x) s.max_x = maxm;
        if (m == 0) {
            ++eta;
            s.last_zero_time = t;
            s.x_end = 0;
            s.at_zero = true;
        } else {
            s.x_end = sign * m;
            s.at_zero = false;
        }
    }
    s.eta_end = eta;
    return s;
}

}  // namespace

WalkState step(const WalkState& state, const DriftSequence& eps, Xoshiro256pp& rng) {
    const std::uint64_t u = rng();
    WalkState next;
    if (state.x == 0) {
        next.x = (u >> 63) ? 1 : -1;
    } else {
        const bool toward = u <= toward_threshold(eps(state.eta));
        const std::int64_t d = state.x > 0 ? -1 : 1;
        next.x = state.x + (toward ? d : -d);
    }
    next.t = state.t + 1;
    next.eta = state.eta + (next.x == 0 ? 1 : 0);
    return next;
}

PathSummary simulate_summary(const DriftSequence& eps, std::int64_t horizon, Xoshiro256pp& rng) {
    check_horizon(horizon);
    return run_pair_chain(eps, horizon, rng, NullRecorder{});
}

std::vector<StepRecord> simulate_trajectory(const DriftSequence& eps, std::int64_t horizon,
                                            Xoshiro256pp& rng, PathSummary* summary) {
    check_horizon(horizon);
    std::vector<StepRecord> steps;
    steps.reserve(static_cast<std::size_t>(horizon) + 1);
    steps.push_back({0, 0, 1});
    PathSummary s = run_pair_chain(eps, horizon, rng,
                                   [&steps](std::int64_t t, std::int64_t x, std::int64_t eta) {
                                       steps.push_back({t, x, eta});
                                   });
    if (summary) *summary = s;
    return steps;
}

std::vector<ExcursionRecord> simulate_excursions_count(const DriftSequence& eps,
                                                       std::int64_t count, Xoshiro256pp& rng) {
    if (count < 1) throw std::invalid_argument("excursion count must be >= 1");
    std::vector<ExcursionRecord> out;
    out.reserve(static_cast<std::size_t>(count));
    std::int64_t t = 0;
    for (std::int64_t k = 1; k <= count; ++k) {
        const std::uint64_t thresh = toward_threshold(eps(k));
        const std::uint64_t u0 = rng();
        const int sign = (u0 >> 63) ? 1 : -1;
        std::int64_t m = 1;
        std::int64_t maxm = 1;
        std::int64_t tau = 1;
        while (m != 0) {
            const std::uint64_t u = rng();
            m += (u <= thresh) ? -1 : 1;
            ++tau;
            maxm = m > maxm ? m : maxm;
        }
        t += tau;
        out.push_back({k, sign, tau, maxm, t, true});
    }
    return out;
}

std::vector<ExcursionRecord> simulate_excursions_budget(const DriftSequence& eps,
                                                        std::int64_t horizon, Xoshiro256pp& rng) {
    check_horizon(horizon);
    std::vector<ExcursionRecord> out;
    std::int64_t t = 0;
    std::int64_t k = 1;
    while (t < horizon) {
        const std::uint64_t thresh = toward_threshold(eps(k));
        const std::uint64_t u0 = rng();
        const int sign = (u0 >> 63) ? 1 : -1;
        ++t;
        std::int64_t m = 1;
        std::int64_t maxm = 1;
        std::int64_t tau = 1;
        while (m != 0 && t < horizon) {
            const std::uint64_t u = rng();
            m += (u <= thresh) ? -1 : 1;
            ++t;
            ++tau;
            maxm = m > maxm ? m : maxm;
        }
        out.push_back({k, sign, tau, maxm, t, m == 0});
        ++k;
    }
    return out;
}

CoupledPaths coupled_pair(const DriftSequence& eps1, const DriftSequence& eps2, std::int64_t x1,
                          std::int64_t x2, std::int64_t horizon, Xoshiro256pp& rng) {
    check_horizon(horizon);
    if (x1 < 0 || x2 < x1 || ((x2 - x1) & 1) != 0)
        throw std::invalid_argument("coupled_pair: need 0 <= x1 <= x2 with x2 - x1 even");
    // sup eps2 <= inf eps1 over every index reachable within the horizon
    const std::int64_t n_check = horizon / 2 + 2;
    double inf1 = 1.0, sup2 = 0.0;
    for (std::int64_t i = 1; i <= n_check; ++i) {
        const double e1 = eps1(i), e2 = eps2(i);
        if (!(e1 > 0.0 && e1 < 1.0) || !(e2 > 0.0 && e2 < 1.0))
            throw std::invalid_argument("coupled_pair: drifts must lie in (0,1)");
        if (e1 < inf1) inf1 = e1;
        if (e2 > sup2) sup2 = e2;
    }
    if (sup2 > inf1)
        throw std::invalid_argument("coupled_pair: requires sup eps2 <= inf eps1");

    CoupledPaths cp;
    cp.path1.reserve(static_cast<std::size_t>(horizon) + 1);
    cp.path2.reserve(static_cast<std::size_t>(horizon) + 1);
    std::int64_t y1 = x1, y2 = x2;
    std::int64_t eta1 = 1, eta2 = 1;
    cp.path1.push_back(y1);
    cp.path2.push_back(y2);
    const auto sign_of = [](std::int64_t v) { return v > 0 ? 1.0 : (v < 0 ? -1.0 : 0.0); };
    for (std::int64_t t = 0; t < horizon; ++t) {
        const double u = rng.uniform01();
        y1 += (u >= 0.5 * (1.0 + sign_of(y1) * eps1(eta1))) ? 1 : -1;
        y2 += (u >= 0.5 * (1.0 + sign_of(y2) * eps2(eta2))) ? 1 : -1;
        eta1 += (y1 == 0) ? 1 : 0;
        eta2 += (y2 == 0) ? 1 : 0;
        if (std::abs(y1) > std::abs(y2))
            throw std::logic_error("coupled_pair: dominance |Y1| <= |Y2| violated");
        cp.path1.push_back(y1);
        cp.path2.push_back(y2);
    }
    return cp;
}

void write_trajectory_csv(std::ostream& os, const std::vector<StepRecord>& steps) {
    os << "t,x,eta\n";
    for (const auto& r : steps) os << r.t << ',' << r.x << ',' << r.eta << '\n';
}

void write_excursions_csv(std::ostream& os, const std::vector<ExcursionRecord>& excursions) {
    os << "k,sign,tau,max_abs,end_time\n";
    for (const auto& e : excursions) {
        if (e.complete)
            os << e.index << ',' << e.sign << ',' << e.tau << ',' << e.max_abs << ','
               << e.end_time << '\n';
        else
            os << "# truncated k=" << e.index << " sign=" << e.sign << " tau=" << e.tau
               << " max_abs=" << e.max_abs << " end_time=" << e.end_time << '\n';
    }
}

}  // namespace occwalk
