#include <cmath>
#include <stdexcept>

#include "occwalk/scaling.hpp"

namespace occwalk {

void RvReport::add(std::string name, std::int64_t n, double measured, double expected,
                   double tol) {
    RvCheck c;
    c.name = std::move(name);
    c.n = n;
    c.measured = measured;
    c.expected = expected;
    c.rel_err = expected != 0.0 ? std::fabs(measured / expected - 1.0)
                                : std::fabs(measured - expected);
    c.pass = c.rel_err <= tol;
    if (!c.pass) all_pass = false;
    checks.push_back(std::move(c));
}

RvReport rv_diagnostics(const std::function<double(std::int64_t)>& r, double rho_claimed,
                        const std::vector<std::int64_t>& n_grid, double rel_tol) {
    if (n_grid.empty()) throw std::invalid_argument("rv_diagnostics: empty grid");
    for (std::size_t i = 0; i < n_grid.size(); ++i) {
        if (n_grid[i] < 2) throw std::invalid_argument("rv_diagnostics: grid values must be >= 2");
        if (i > 0 && n_grid[i] <= n_grid[i - 1])
            throw std::invalid_argument("rv_diagnostics: grid must be increasing");
    }
    RvReport rep;
    // one pass of partial sums up to the largest grid point
    const std::int64_t n_top = n_grid.back();
    std::vector<double> partial(n_grid.size());
    {
        double sum = 0.0, comp = 0.0;
        std::size_t gi = 0;
        for (std::int64_t m = 1; m <= n_top; ++m) {
            const double y = r(m) - comp;
            const double t = sum + y;
            comp = (t - sum) - y;
            sum = t;
            while (gi < n_grid.size() && n_grid[gi] == m) partial[gi++] = sum;
        }
    }
    for (std::size_t i = 0; i < n_grid.size(); ++i) {
        const std::int64_t n = n_grid[i];
        const double rn = r(n);
        if (!(rn > 0.0))
            throw std::invalid_argument("rv_diagnostics: sequence must be positive");
        rep.add("ratio[2n]/r_n", n, r(2 * n) / rn, std::pow(2.0, rho_claimed), rel_tol);
        rep.add("ratio[n/2]/r_n", n, r(n / 2) / rn, std::pow(2.0, -rho_claimed), rel_tol);
        if (rho_claimed > -1.0)
            rep.add("karamata_sum_ratio", n, partial[i] / (static_cast<double>(n) * rn),
                    1.0 / (1.0 + rho_claimed), rel_tol);
    }
    return rep;
}

RvReport rv_diagnostics_for_drift(const DriftSequence& eps, double alpha,
                                  const std::vector<std::int64_t>& n_grid, double rel_tol) {
    RvReport rep = rv_diagnostics([&](std::int64_t n) { return eps(n); }, -alpha, n_grid, rel_tol);
    ScalingTable table(eps, 2 * n_grid.back());
    for (const std::int64_t n : n_grid) {
        const ScalingBundle sb = table.bundle(n);
        rep.add("a[c_n]/n", n, table.a(sb.c_n) / static_cast<double>(n), 1.0, rel_tol);
        rep.add("b_n*c_n/((1+alpha)n)", n,
                sb.b_n * static_cast<double>(sb.c_n) / ((1.0 + alpha) * static_cast<double>(n)),
                1.0, rel_tol);
    }
    // a itself is RV(1+alpha): dyadic ratio at the top grid point
    const std::int64_t n = n_grid.back();
    rep.add("a[2n]/a_n", n, table.a(2 * n) / table.a(n), std::pow(2.0, 1.0 + alpha), rel_tol);
    return rep;
}

}  // namespace occwalk
