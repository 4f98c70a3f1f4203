#include "qftlab/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <json.hpp>

#include "qftlab/circuit.hpp"

namespace qftlab {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt_bound(double v) {
    if (std::isnan(v)) return "na";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

}  // namespace

double qft_baseline() {
    return 4.0 / (kPi * kPi);
}

double guarded_sin(double x) {
    if (std::abs(x) < 1e-8) return x * (1.0 - x * x / 6.0);
    return std::sin(x);
}

std::pair<double, double> cos_product_identity(double theta, int n) {
    if (n < 1) throw std::invalid_argument("identity needs at least one factor");
    if (theta == 0.0) return {1.0, 1.0};
    double lhs = 1.0;
    for (int p = 1; p <= n; ++p) {
        const double c = std::cos(theta * std::ldexp(1.0, -p));
        lhs *= c * c;
    }
    const double tiny = theta * std::ldexp(1.0, -n);
    const double ratio = std::sin(theta) / (std::ldexp(1.0, n) * guarded_sin(tiny));
    return {lhs, ratio * ratio};
}

double aqft_lower_bound(int n, int m) {
    if (n < 1) throw std::invalid_argument("register size must be positive");
    m = std::clamp(m, std::min(2, n), n);
    if (m >= n) return qft_baseline();
    const double c = std::cos(kPi * std::ldexp(1.0, -m));
    return qft_baseline() * std::pow(c * c, n - m);
}

double fixed_bound(int n) {
    if (n < 4)
        throw std::invalid_argument("fixed bound is only meaningful for n >= 4");
    return qft_baseline() - 1.0 / (4.0 * n);
}

double fixed_bound_constant() {
    return qft_baseline() - 1.0 / 16.0;
}

double barenco_bound(int n, int m) {
    return barenco_bound(n, static_cast<double>(m));
}

double barenco_bound(int n, double m) {
    if (n < 1) throw std::invalid_argument("register size must be positive");
    const double s = std::sin(kPi * m / (4.0 * n));
    return 8.0 / (kPi * kPi) * s * s;
}

BoundsReport bounds_report(int n, int m) {
    if (n < 1) throw std::invalid_argument("register size must be positive");
    m = std::clamp(m, std::min(2, n), n);
    BoundsReport r{};
    r.n = n;
    r.m = m;
    r.aqft_bound = aqft_lower_bound(n, m);
    r.barenco_bound = barenco_bound(n, m);
    r.qft_baseline = qft_baseline();
    r.fixed_applicable = n >= 4;
    r.meets_log_rule = m >= log_rule_threshold(n);
    if (r.fixed_applicable) {
        r.fixed_bound_n = fixed_bound(n);
        r.fixed_bound_const = fixed_bound_constant();
        r.chain_aqft_ge_fixed_n = r.aqft_bound >= r.fixed_bound_n;
        r.chain_fixed_ge_const = r.fixed_bound_n >= r.fixed_bound_const;
    } else {
        r.fixed_bound_n = std::numeric_limits<double>::quiet_NaN();
        r.fixed_bound_const = std::numeric_limits<double>::quiet_NaN();
        r.chain_aqft_ge_fixed_n = false;
        r.chain_fixed_ge_const = false;
    }
    return r;
}

std::string bounds_csv_header() {
    return "n,m,aqft_bound,fixed_n,fixed_const,barenco,baseline";
}

std::string bounds_csv_row(const BoundsReport& r) {
    return std::to_string(r.n) + "," + std::to_string(r.m) + "," + fmt_bound(r.aqft_bound) +
           "," + fmt_bound(r.fixed_bound_n) + "," + fmt_bound(r.fixed_bound_const) + "," +
           fmt_bound(r.barenco_bound) + "," + fmt_bound(r.qft_baseline);
}

std::string bounds_json(const BoundsReport& r) {
    nlohmann::json j{{"n", r.n},
                     {"m", r.m},
                     {"aqft_bound", r.aqft_bound},
                     {"barenco", r.barenco_bound},
                     {"baseline", r.qft_baseline},
                     {"fixed_applicable", r.fixed_applicable},
                     {"meets_log_rule", r.meets_log_rule}};
    if (r.fixed_applicable) {
        j["fixed_n"] = r.fixed_bound_n;
        j["fixed_const"] = r.fixed_bound_const;
        j["chain_aqft_ge_fixed_n"] = r.chain_aqft_ge_fixed_n;
        j["chain_fixed_ge_const"] = r.chain_fixed_ge_const;
    } else {
        j["fixed_n"] = nullptr;
        j["fixed_const"] = nullptr;
    }
    return j.dump();
}

}  // namespace qftlab
