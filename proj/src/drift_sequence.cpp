#include "occwalk/drift_sequence.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace occwalk {

namespace {

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

Regime classify_power(double alpha, double log_exp, double coeff) {
    if (coeff == 0.0) return Regime::supercritical;  // eps == 0, the simple walk
    if (alpha > 1.0) return Regime::supercritical;   // n*eps_n -> 0
    if (alpha == 1.0) {
        // n*eps_n = coeff * log(n+e)^{log_exp}: needs /log n -> inf
        if (log_exp > 1.0) return Regime::subcritical;
        return Regime::critical;
    }
    if (alpha == 0.0) {
        // RV(0): admissible only if eps_n -> 0
        if (log_exp < 0.0) return Regime::subcritical;
        return Regime::untagged;
    }
    return Regime::subcritical;  // alpha in (0,1)
}

}  // namespace

DriftSequence DriftSequence::constant(double value) {
    if (!(value >= 0.0 && value < 1.0))
        throw std::invalid_argument("constant drift must lie in [0,1), got " + fmt_double(value));
    DriftSequence s;
    s.kind_ = DriftKind::constant;
    s.coeff_ = value;
    s.alpha_ = 0.0;
    s.regime_ = value == 0.0 ? Regime::supercritical : Regime::untagged;
    s.spec_ = "kind=constant value=" + fmt_double(value);
    return s;
}

DriftSequence DriftSequence::power_law(double alpha, double coeff) {
    if (!(alpha >= 0.0)) throw std::invalid_argument("power_law: alpha must be >= 0");
    if (coeff < 0.0) throw std::invalid_argument("power_law: coefficient must be >= 0");
    if (alpha == 0.0) return constant(coeff);  // degenerate: constant sequence
    if (coeff > 1.0)
        throw std::invalid_argument("power_law: eps_1 = " + fmt_double(coeff) +
                                    " >= 1; coefficient must be <= 1 so all values lie in [0,1]");
    DriftSequence s;
    s.kind_ = DriftKind::power_law;
    s.alpha_ = alpha;
    s.coeff_ = coeff;
    s.regime_ = classify_power(alpha, 0.0, coeff);
    s.spec_ = "kind=power_law alpha=" + fmt_double(alpha) + " coeff=" + fmt_double(coeff);
    return s;
}

DriftSequence DriftSequence::power_log(double alpha, double log_exp, double coeff) {
    if (!(alpha >= 0.0)) throw std::invalid_argument("power_log: alpha must be >= 0");
    if (coeff < 0.0) throw std::invalid_argument("power_log: coefficient must be >= 0");
    DriftSequence s;
    s.kind_ = DriftKind::power_log;
    s.alpha_ = alpha;
    s.coeff_ = coeff;
    s.log_exp_ = log_exp;
    s.regime_ = classify_power(alpha, log_exp, coeff);
    s.spec_ = "kind=power_log alpha=" + fmt_double(alpha) + " logexp=" + fmt_double(log_exp) +
              " coeff=" + fmt_double(coeff);
    // values are not monotone in general; scan a prefix, then rely on eventual decay
    for (std::int64_t n = 1; n <= 4096; ++n) {
        const double e = s(n);
        if (!(e >= 0.0 && e <= 1.0) || (e == 1.0 && n > 1))
            throw std::invalid_argument("power_log: eps_" + std::to_string(n) + " = " +
                                        fmt_double(e) + " outside [0,1)");
    }
    return s;
}

DriftSequence DriftSequence::table(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("table drift sequence must be non-empty");
    for (std::size_t i = 0; i < values.size(); ++i)
        if (!(values[i] >= 0.0 && values[i] < 1.0))
            throw std::invalid_argument("table drift: eps_" + std::to_string(i + 1) + " = " +
                                        fmt_double(values[i]) + " outside [0,1)");
    DriftSequence s;
    s.kind_ = DriftKind::table;
    s.values_ = std::move(values);
    s.regime_ = Regime::untagged;
    s.spec_ = "kind=table size=" + std::to_string(s.values_.size());
    return s;
}

DriftSequence DriftSequence::custom(std::function<double(std::int64_t)> fn, double alpha,
                                    Regime regime, std::string label) {
    DriftSequence s;
    s.kind_ = DriftKind::custom;
    s.alpha_ = alpha;
    s.regime_ = regime;
    s.fn_ = std::make_shared<std::function<double(std::int64_t)>>(std::move(fn));
    s.spec_ = "kind=custom label=" + label;
    return s;
}

double DriftSequence::operator()(std::int64_t n) const {
    if (n < 1) throw std::invalid_argument("drift sequence index must be >= 1");
    switch (kind_) {
        case DriftKind::constant:
            return coeff_;
        case DriftKind::power_law:
            return coeff_ * std::pow(static_cast<double>(n), -alpha_);
        case DriftKind::power_log: {
            const double ln = std::log(static_cast<double>(n) + 2.718281828459045235);
            return coeff_ * std::pow(ln, log_exp_) * std::pow(static_cast<double>(n), -alpha_);
        }
        case DriftKind::table:
            if (n > static_cast<std::int64_t>(values_.size()))
                throw std::out_of_range("table drift sequence exhausted at n = " +
                                        std::to_string(n));
            return values_[static_cast<std::size_t>(n - 1)];
        case DriftKind::custom:
            return (*fn_)(n);
    }
    return 0.0;  // unreachable
}

SubcriticalCheck DriftSequence::check_subcritical(std::int64_t n_max) const {
    SubcriticalCheck out;
    out.alpha = alpha_;
    if (regime_ != Regime::subcritical) {
        out.message = "sequence is not tagged subcritical";
        return out;
    }
    const double tol = 0.05;
    bool ok = true;
    double prev_side = -1.0;
    for (std::int64_t n = 16; n <= n_max; n *= 4) {
        SubcriticalCheckRow row;
        row.n = n;
        row.eps = (*this)(n);
        row.rv_ratio = (*this)(2 * n) / row.eps;
        const double target = std::pow(2.0, -alpha_);
        if (std::fabs(row.rv_ratio - target) > tol * target) ok = false;
        if (alpha_ == 0.0) {
            row.side_value = row.eps;  // must head to 0
        } else if (alpha_ == 1.0) {
            row.side_value = static_cast<double>(n) * row.eps / std::log(static_cast<double>(n));
            if (prev_side >= 0.0 && row.side_value <= prev_side) ok = false;  // monotone growth
            prev_side = row.side_value;
        } else {
            row.side_value = static_cast<double>(n) * row.eps;
        }
        out.rows.push_back(row);
    }
    if (alpha_ == 0.0 && out.rows.size() >= 2 &&
        out.rows.back().side_value >= out.rows.front().side_value)
        ok = false;
    out.pass = ok;
    out.message = ok ? "admissible on sampled grid" : "admissibility check failed on sampled grid";
    return out;
}

DriftSequence DriftSequence::parse(const std::string& spec) {
    // shorthand: kind:arg1[:arg2[:arg3]]
    if (spec.find('=') == std::string::npos && spec.find(':') != std::string::npos) {
        std::vector<std::string> parts;
        std::stringstream ss(spec);
        std::string item;
        while (std::getline(ss, item, ':')) parts.push_back(item);
        const std::string& kind = parts[0];
        if (kind == "power_law" && parts.size() == 3)
            return power_law(std::stod(parts[1]), std::stod(parts[2]));
        if (kind == "power_log" && parts.size() == 4)
            return power_log(std::stod(parts[1]), std::stod(parts[2]), std::stod(parts[3]));
        if (kind == "constant" && parts.size() == 2) return constant(std::stod(parts[1]));
        if (kind == "table" && parts.size() == 2) {
            std::ifstream in(parts[1]);
            if (!in) throw std::invalid_argument("cannot open drift table file: " + parts[1]);
            std::vector<double> vals;
            double v;
            while (in >> v) vals.push_back(v);
            return table(std::move(vals));
        }
        throw std::invalid_argument("unrecognized drift spec: " + spec);
    }

    // key=value form
    std::string kind, path;
    double alpha = 0.0, coeff = 0.0, log_exp = 0.0, value = 0.0;
    bool has_alpha = false, has_coeff = false, has_value = false;
    std::stringstream ss(spec);
    std::string tok;
    while (ss >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("drift spec tokens must be key=value, got: " + tok);
        const std::string key = tok.substr(0, eq);
        const std::string val = tok.substr(eq + 1);
        if (key == "kind") kind = val;
        else if (key == "alpha") { alpha = std::stod(val); has_alpha = true; }
        else if (key == "coeff") { coeff = std::stod(val); has_coeff = true; }
        else if (key == "logexp") log_exp = std::stod(val);
        else if (key == "value") { value = std::stod(val); has_value = true; }
        else if (key == "path") path = val;
        else throw std::invalid_argument("unknown drift spec key: " + key);
    }
    if (kind == "power_law") {
        if (!has_alpha || !has_coeff)
            throw std::invalid_argument("power_law spec needs alpha= and coeff=");
        return power_law(alpha, coeff);
    }
    if (kind == "power_log") {
        if (!has_alpha || !has_coeff)
            throw std::invalid_argument("power_log spec needs alpha=, logexp=, coeff=");
        return power_log(alpha, log_exp, coeff);
    }
    if (kind == "constant") {
        if (!has_value && !has_coeff)
            throw std::invalid_argument("constant spec needs value=");
        return constant(has_value ? value : coeff);
    }
    if (kind == "table") {
        if (path.empty()) throw std::invalid_argument("table spec needs path=");
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot open drift table file: " + path);
        std::vector<double> vals;
        double v;
        while (in >> v) vals.push_back(v);
        return table(std::move(vals));
    }
    throw std::invalid_argument("unrecognized drift kind in spec: " + spec);
}

}  // namespace occwalk
