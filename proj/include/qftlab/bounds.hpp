#pragma once

#include <string>
#include <utility>

namespace qftlab {

/// 4/pi^2, the success floor of the exact transform.
double qft_baseline();

/// sin with a series fallback below 1e-8 to avoid cancellation in
/// quotients of tiny angles.
double guarded_sin(double x);

/// Both sides of prod_{p=1..n} cos^2(theta/2^p) = (sin(theta) /
/// (2^n sin(theta/2^n)))^2. theta = 0 returns (1, 1) by the limit.
std::pair<double, double> cos_product_identity(double theta, int n);

/// 4/pi^2 * (cos^2(pi*2^-m))^(n-m); exactly the baseline at m = n.
double aqft_lower_bound(int n, int m);

/// 4/pi^2 - 1/(4n). Only meaningful for n >= 4; smaller n throws.
double fixed_bound(int n);

/// 4/pi^2 - 1/16.
double fixed_bound_constant();

/// 8/pi^2 * sin^2(pi*m/(4n)). The earlier lower bound this one is
/// compared against; real-valued m overload for plotting.
double barenco_bound(int n, int m);
double barenco_bound(int n, double m);

struct BoundsReport {
    int n;
    int m;
    double aqft_bound;
    double fixed_bound_n;      // NaN when not applicable (n < 4)
    double fixed_bound_const;  // NaN when not applicable (n < 4)
    double barenco_bound;
    double qft_baseline;
    bool fixed_applicable;       // n >= 4
    bool meets_log_rule;         // m >= ceil(log2 n) + 2 (clamped to n)
    bool chain_aqft_ge_fixed_n;  // evaluated only when both sides apply
    bool chain_fixed_ge_const;
};

/// Evaluates all bounds for one (n, m) pair, m clamped to [2, n].
BoundsReport bounds_report(int n, int m);

std::string bounds_csv_header();
std::string bounds_csv_row(const BoundsReport& r);
std::string bounds_json(const BoundsReport& r);

}  // namespace qftlab
