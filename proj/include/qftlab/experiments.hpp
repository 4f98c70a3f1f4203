#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qftlab/semiclassical.hpp"

namespace qftlab {

struct MRule {
    bool is_log_rule = true;
    int value = 2;  // offset for the log rule, otherwise the fixed m

    static MRule fixed(int m) { return {false, m}; }
    static MRule log_rule(int offset = 2) { return {true, offset}; }
    int resolve(int n) const;
};

/// Union of up to three phase-grid families, materialized per n. Dyadic
/// points are k * 2^-(n + scale_offset) so all arithmetic stays exact; the
/// worst-case family adds exact ties and one-ulp near-ties around a few
/// base strings, where the minima live.
struct PhiGrid {
    int dyadic_points = 0;
    int dyadic_scale_offset = 3;
    bool worst_case = false;
    std::vector<Phase> explicit_points;

    std::vector<Phase> points_for(int n) const;
};

struct SweepConfig {
    std::vector<int> n_values;
    MRule m_rule;
    PhiGrid grid;
    SuccessCriterion criterion = SuccessCriterion::Nearest;
    uint64_t seed = 0;
    int64_t samples = 0;  // Monte Carlo only
};

/// key=value lines; '#' starts a comment. Keys: n, m, log_rule, grid,
/// scale_offset, worst_case, explicit, criterion, seed, samples.
SweepConfig parse_sweep_config(std::istream& in);
SweepConfig parse_sweep_config_text(const std::string& text);

struct SweepRow {
    int n;
    int m;
    Phase phi;
    double exact_p;
    double aqft_bound;
    double fixed_n;      // NaN below n = 4
    double fixed_const;  // NaN below n = 4
    double barenco;
    double margin;  // exact_p - aqft_bound
};

struct SweepSummary {
    int64_t rows = 0;
    double min_exact_p = 1.0;
    int argmin_n = 0;
    int argmin_m = 0;
    Phase argmin_phi;
    int64_t violations = 0;  // rows with exact_p < aqft_bound
};

struct SweepResult {
    std::vector<SweepRow> rows;
    SweepSummary summary;
};

/// Exact success probability against every bound on the full grid.
SweepResult sweep_exact(const SweepConfig& config);

std::string sweep_csv(const SweepResult& result);
std::string sweep_json(const SweepResult& result);

struct MonteCarloResult {
    int64_t samples;
    int64_t successes;
    double p_hat;
    double standard_error;
    double exact_p;
};

/// Empirical success frequency over seeded trial chains. Per-sample draws
/// are derived counter-style from (seed, n, m, sample index), so the result
/// is identical for any worker count.
MonteCarloResult monte_carlo_estimate(const TrialSpec& spec, int64_t samples,
                                      uint64_t seed, int workers = 1);

/// The draws one sample consumes, for replaying individual trials.
std::vector<double> sample_draws(uint64_t seed, int n, int m, int64_t sample_index,
                                 int count);

struct FidelityRow {
    int m;
    double min_fidelity;
    double mean_fidelity;
};

/// min/mean over all basis inputs of the squared overlap between the exact
/// and the threshold-m transform outputs. n <= 10.
std::vector<FidelityRow> fidelity_sweep(int n, const std::vector<int>& m_list);

struct GateCountRow {
    int n;
    int m;
    int64_t qft_rotations;
    int64_t aqft_rotations;
    double ratio;
};

std::vector<GateCountRow> gate_count_table(const std::vector<int>& n_list,
                                           const MRule& m_rule);

std::string gate_count_csv(const std::vector<GateCountRow>& rows);
std::string gate_count_json(const std::vector<GateCountRow>& rows);

}  // namespace qftlab
