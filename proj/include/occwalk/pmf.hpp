#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace occwalk {

// Finite probability mass function on the lattice {offset, offset+step, ...}
// with the discarded tail mass carried explicitly, so that
// sum(weights) + truncation_mass == 1 up to accumulated rounding.
class Pmf {
public:
    std::int64_t offset = 0;
    std::int64_t step = 1;
    std::vector<double> weights;
    double truncation_mass = 0.0;

    std::int64_t value_at(std::size_t i) const {
        return offset + static_cast<std::int64_t>(i) * step;
    }
    double prob(std::int64_t value) const;
    double total_weight() const;      // compensated sum of weights
    double normalization_residual() const;  // |total + truncation - 1|
    double mean() const;
    double cdf(std::int64_t value) const;        // P(V <= value), truncated tail excluded
    double tail_above(std::int64_t value) const;  // P(V > value), includes truncation mass

    // CSV: header "value,probability", one row per atom, then a trailing
    // comment line "# truncation_mass=<...>".
    void write_csv(std::ostream& os) const;
};

}  // namespace occwalk
