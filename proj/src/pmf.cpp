#include "occwalk/pmf.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace occwalk {

namespace {
double kahan_sum(const std::vector<double>& v, const std::vector<double>* mult = nullptr) {
    double sum = 0.0, comp = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double term = mult ? v[i] * (*mult)[i] : v[i];
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}
}  // namespace

double Pmf::prob(std::int64_t value) const {
    const std::int64_t d = value - offset;
    if (d < 0 || step == 0 || d % step != 0) return 0.0;
    const std::int64_t i = d / step;
    if (i >= static_cast<std::int64_t>(weights.size())) return 0.0;
    return weights[static_cast<std::size_t>(i)];
}

double Pmf::total_weight() const { return kahan_sum(weights); }

double Pmf::normalization_residual() const {
    return std::fabs(total_weight() + truncation_mass - 1.0);
}

double Pmf::mean() const {
    double sum = 0.0, comp = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        const double y = static_cast<double>(value_at(i)) * weights[i] - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}

double Pmf::cdf(std::int64_t value) const {
    double sum = 0.0, comp = 0.0;
    for (std::size_t i = 0; i < weights.size() && value_at(i) <= value; ++i) {
        const double y = weights[i] - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}

double Pmf::tail_above(std::int64_t value) const {
    double sum = truncation_mass, comp = 0.0;
    for (std::size_t i = weights.size(); i-- > 0;) {
        if (value_at(i) <= value) break;
        const double y = weights[i] - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}

void Pmf::write_csv(std::ostream& os) const {
    os << "value,probability\n";
    char buf[64];
    for (std::size_t i = 0; i < weights.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.17g", weights[i]);
        os << value_at(i) << ',' << buf << '\n';
    }
    std::snprintf(buf, sizeof(buf), "%.17g", truncation_mass);
    os << "# truncation_mass=" << buf << '\n';
}

}  // namespace occwalk
