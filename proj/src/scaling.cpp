#include "occwalk/scaling.hpp"

#include <cmath>
#include <stdexcept>

namespace occwalk {

namespace {
constexpr std::int64_t kBlock = std::int64_t{1} << 16;

inline void kahan_add(double term, double* sum, double* comp) {
    const double y = term - *comp;
    const double t = *sum + y;
    *comp = (t - *sum) - y;
    *sum = t;
}
}  // namespace

ScalingTable::ScalingTable(const DriftSequence& eps, std::int64_t max_n)
    : eps_(eps), max_n_(max_n) {
    if (max_n < 1) throw std::invalid_argument("scaling table horizon must be >= 1");
    checkpoints_.reserve(static_cast<std::size_t>(max_n / kBlock) + 2);
    Checkpoint cp{0.0, 0.0, 0.0, 0.0};
    checkpoints_.push_back(cp);  // state after index 0
    for (std::int64_t i = 1; i <= max_n; ++i) {
        const double e = eps_(i);
        if (e <= 0.0)
            throw std::domain_error("scaling undefined for vanishing drift (eps_" +
                                    std::to_string(i) + " = 0)");
        const double inv = 1.0 / e;
        kahan_add(inv, &cp.inv_sum, &cp.inv_comp);
        kahan_add(inv * inv * inv - inv, &cp.g2_sum, &cp.g2_comp);
        if (i % kBlock == 0) checkpoints_.push_back(cp);
    }
}

void ScalingTable::accumulate(std::int64_t from_block, std::int64_t n, double* inv_sum,
                              double* g2_sum) const {
    Checkpoint cp = checkpoints_[static_cast<std::size_t>(from_block)];
    for (std::int64_t i = from_block * kBlock + 1; i <= n; ++i) {
        const double inv = 1.0 / eps_(i);
        kahan_add(inv, &cp.inv_sum, &cp.inv_comp);
        kahan_add(inv * inv * inv - inv, &cp.g2_sum, &cp.g2_comp);
    }
    *inv_sum = cp.inv_sum;
    *g2_sum = cp.g2_sum;
}

double ScalingTable::a(std::int64_t n) const {
    if (n < 1 || n > max_n_) throw std::out_of_range("scaling query outside table horizon");
    double inv, g2;
    accumulate(n / kBlock, n, &inv, &g2);
    return static_cast<double>(n) + inv;
}

double ScalingTable::g(std::int64_t n) const {
    if (n < 1 || n > max_n_) throw std::out_of_range("scaling query outside table horizon");
    double inv, g2;
    accumulate(n / kBlock, n, &inv, &g2);
    return std::sqrt(g2);
}

std::int64_t ScalingTable::c(std::int64_t n) const {
    if (n < 1) throw std::out_of_range("scaling query outside table horizon");
    // a_i > 2i, so the minimizer is <= max(n/2, 1) and the table always covers it
    if (a(1) >= static_cast<double>(n)) return 1;
    if (a(max_n_) < static_cast<double>(n))
        throw std::out_of_range("c_n exceeds scaling table horizon");
    // bracket over checkpoints first (O(1) probes), then scan one block
    const auto a_at_block = [&](std::int64_t k) {
        return static_cast<double>(k * kBlock) + checkpoints_[static_cast<std::size_t>(k)].inv_sum;
    };
    std::int64_t lo_block = 0;  // invariant: a at end of lo_block < n
    std::int64_t hi_block = static_cast<std::int64_t>(checkpoints_.size()) - 1;
    if (a_at_block(hi_block) < static_cast<double>(n)) {
        lo_block = hi_block;  // answer lies in the trailing partial block
    } else {
        while (hi_block - lo_block > 1) {
            const std::int64_t mid = (lo_block + hi_block) / 2;
            if (a_at_block(mid) < static_cast<double>(n))
                lo_block = mid;
            else
                hi_block = mid;
        }
    }
    // linear scan from the last checkpoint below n
    Checkpoint cp = checkpoints_[static_cast<std::size_t>(lo_block)];
    for (std::int64_t i = lo_block * kBlock + 1; i <= max_n_; ++i) {
        const double inv = 1.0 / eps_(i);
        kahan_add(inv, &cp.inv_sum, &cp.inv_comp);
        if (static_cast<double>(i) + cp.inv_sum >= static_cast<double>(n)) return i;
    }
    throw std::out_of_range("c_n exceeds scaling table horizon");
}

ScalingBundle ScalingTable::bundle(std::int64_t n) const {
    ScalingBundle out;
    out.n = n;
    out.a_n = a(n);
    out.g_n = g(n);
    out.c_n = c(n);
    out.b_n = 1.0 / eps_(out.c_n);
    out.h_n = (static_cast<double>(out.c_n) > out.b_n)
                  ? 0.5 * out.b_n * std::log(static_cast<double>(out.c_n) / out.b_n)
                  : std::nan("");
    return out;
}

ScalingBundle scaling_bundle(const DriftSequence& eps, std::int64_t n) {
    return ScalingTable(eps, n).bundle(n);
}

}  // namespace occwalk
