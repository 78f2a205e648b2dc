#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace occwalk {

enum class DriftKind { constant, power_law, power_log, table, custom };

// Decay regime of the drift sequence. Subcritical: eps regularly varying
// with index -alpha, alpha in [0,1], n*eps_n -> infinity (plus the
// alpha-boundary side conditions). Supercritical: n*eps_n -> 0. The band
// in between (n*eps_n bounded away from 0 and infinity) is tagged critical
// and rejected by the experiment runners.
enum class Regime { subcritical, supercritical, critical, untagged };

struct SubcriticalCheckRow {
    std::int64_t n;
    double eps;
    double rv_ratio;      // eps_{2n}/eps_n, should approach 2^{-alpha}
    double side_value;    // alpha=0: eps_n (-> 0); alpha=1: n*eps_n/log n (-> inf); else n*eps_n
};

struct SubcriticalCheck {
    bool pass = false;
    double alpha = 0.0;
    std::vector<SubcriticalCheckRow> rows;
    std::string message;
};

// A drift sequence n -> eps_n in [0,1), n >= 1, with regime metadata.
//
// The lone boundary exception: the power families accept eps_1 == 1
// (coefficient 1), since eps_n = n^{-1/2} is the canonical subcritical
// example and every formula downstream degrades gracefully at eps = 1
// (the first excursion is the deterministic 0,+-1,0).
class DriftSequence {
public:
    static DriftSequence constant(double value);
    static DriftSequence power_law(double alpha, double coeff);
    // eps_n = coeff * log(n+e)^{log_exp} / n^{alpha}; log(n+e) keeps eps_1 > 0
    static DriftSequence power_log(double alpha, double log_exp, double coeff);
    static DriftSequence table(std::vector<double> values);
    static DriftSequence custom(std::function<double(std::int64_t)> fn, double alpha,
                                Regime regime, std::string label);

    // Text forms: "kind=power_law alpha=0.5 coeff=1.0" or the shorthand
    // "power_law:0.5:1". Table kind reads one eps per line from the path.
    static DriftSequence parse(const std::string& spec);

    double operator()(std::int64_t n) const;  // eps_n, n >= 1

    DriftKind kind() const { return kind_; }
    double alpha() const { return alpha_; }
    Regime regime() const { return regime_; }
    const std::string& spec_string() const { return spec_; }
    std::int64_t table_size() const { return static_cast<std::int64_t>(values_.size()); }

    // Checks Assumption-style admissibility on a logarithmic n-grid:
    // eps in RV(-alpha) via dyadic ratios, eps_n -> 0 when alpha = 0, and
    // monotone growth of n*eps_n/log n when alpha = 1.
    SubcriticalCheck check_subcritical(std::int64_t n_max = 1 << 20) const;

private:
    DriftSequence() = default;

    DriftKind kind_ = DriftKind::constant;
    double alpha_ = 0.0;
    double coeff_ = 0.0;
    double log_exp_ = 0.0;
    Regime regime_ = Regime::untagged;
    std::string spec_;
    std::vector<double> values_;                          // table kind
    std::shared_ptr<std::function<double(std::int64_t)>> fn_;  // custom kind
};

}  // namespace occwalk
