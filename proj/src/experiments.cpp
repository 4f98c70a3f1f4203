#include "qftlab/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "qftlab/bounds.hpp"
#include "qftlab/circuit.hpp"
#include "qftlab/rng.hpp"

namespace qftlab {

namespace {

std::string fmt_g(double v, int digits = 12) {
    if (std::isnan(v)) return "na";
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
    return buf;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    return parts;
}

nlohmann::json row_json(const SweepRow& row) {
    return nlohmann::json{
        {"n", row.n},
        {"m", row.m},
        {"phi", row.phi.to_double()},
        {"phi_dyadic", row.phi.dyadic_str()},
        {"exact_p", row.exact_p},
        {"aqft_bound", row.aqft_bound},
        {"fixed_n", std::isnan(row.fixed_n) ? nlohmann::json() : nlohmann::json(row.fixed_n)},
        {"fixed_const",
         std::isnan(row.fixed_const) ? nlohmann::json() : nlohmann::json(row.fixed_const)},
        {"barenco", row.barenco},
        {"margin", row.margin},
    };
}

}  // namespace

int MRule::resolve(int n) const {
    if (is_log_rule) return log_rule_threshold(n, value);
    return std::clamp(value, std::min(2, n), n);
}

std::vector<Phase> PhiGrid::points_for(int n) const {
    std::vector<Phase> points;
    const int precision = std::min(n + Phase::kGuardBits, Phase::kMaxPrecision);
    if (dyadic_points > 0) {
        const int scale = std::min(n + dyadic_scale_offset, precision - 1);
        const Phase step = Phase::from_numerator(1, scale).with_precision(precision);
        Phase phi = Phase::zero(precision);
        for (int k = 0; k < dyadic_points; ++k) {
            points.push_back(phi);
            phi = phi + step;
        }
    }
    if (worst_case) {
        u128 pattern = 0;
        for (int i = 0; i < n; i += 2) pattern |= u128{1} << (n - 1 - i);
        const std::vector<u128> bases = {0, 1, u128{1} << (n - 1), (u128{1} << n) - 1,
                                         pattern};
        const Phase tie = Phase::from_numerator(1, n + 1).with_precision(precision);
        const Phase ulp = Phase::from_numerator(1, precision);
        const std::vector<Phase> offsets = {
            Phase::zero(precision),
            tie,                                  // exact tie
            tie - ulp,                            // one ulp below the tie
            (Phase::zero(precision) - tie) + ulp, // one ulp above the tie from below
            tie.scaled_pow2(-1),                  // halfway into the cell
        };
        for (const u128 base : bases) {
            const Phase base_phi =
                phase_from_bits(BitString::from_index(base, n), precision);
            for (const Phase& off : offsets) points.push_back(base_phi + off);
        }
    }
    for (const Phase& p : explicit_points)
        points.push_back(p.precision() >= precision ? p : p.with_precision(precision));
    if (points.empty()) throw std::invalid_argument("phase grid is empty");
    return points;
}

SweepConfig parse_sweep_config(std::istream& in) {
    SweepConfig config;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        line = line.substr(first, last - first + 1);
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(line_no) +
                                        " is not key=value");
        const std::string key = line.substr(0, eq);
        const std::string value = line.substr(eq + 1);
        if (key == "n") {
            for (const auto& part : split(value, ','))
                config.n_values.push_back(std::stoi(part));
        } else if (key == "m") {
            config.m_rule = MRule::fixed(std::stoi(value));
        } else if (key == "log_rule") {
            config.m_rule = MRule::log_rule(std::stoi(value));
        } else if (key == "grid") {
            config.grid.dyadic_points = std::stoi(value);
        } else if (key == "scale_offset") {
            config.grid.dyadic_scale_offset = std::stoi(value);
        } else if (key == "worst_case") {
            config.grid.worst_case = value == "1" || value == "true";
        } else if (key == "explicit") {
            for (const auto& part : split(value, ','))
                config.grid.explicit_points.push_back(
                    parse_phase(part, Phase::kMaxPrecision).value);
        } else if (key == "criterion") {
            if (value == "nearest")
                config.criterion = SuccessCriterion::Nearest;
            else if (value == "two")
                config.criterion = SuccessCriterion::OneOfTwoNearest;
            else
                throw std::invalid_argument("unknown criterion: " + value);
        } else if (key == "seed") {
            config.seed = std::stoull(value);
        } else if (key == "samples") {
            config.samples = std::stoll(value);
        } else {
            throw std::invalid_argument("unknown config key: " + key);
        }
    }
    return config;
}

SweepConfig parse_sweep_config_text(const std::string& text) {
    std::istringstream in(text);
    return parse_sweep_config(in);
}

SweepResult sweep_exact(const SweepConfig& config) {
    if (config.n_values.empty())
        throw std::invalid_argument("sweep needs at least one register size");
    std::vector<int> n_values = config.n_values;
    std::sort(n_values.begin(), n_values.end());
    n_values.erase(std::unique(n_values.begin(), n_values.end()), n_values.end());

    SweepResult result;
    bool have_min = false;
    for (const int n : n_values) {
        const int m = config.m_rule.resolve(n);
        const BoundsReport bounds = bounds_report(n, m);
        std::vector<Phase> points = config.grid.points_for(n);
        std::sort(points.begin(), points.end(),
                  [](const Phase& a, const Phase& b) { return a < b; });
        points.erase(std::unique(points.begin(), points.end()), points.end());
        for (const Phase& phi : points) {
            const TrialSpec spec(n, m, phi, config.criterion);
            SweepRow row;
            row.n = n;
            row.m = m;
            row.phi = phi;
            row.exact_p = success_probability_exact(spec);
            row.aqft_bound = bounds.aqft_bound;
            row.fixed_n = bounds.fixed_bound_n;
            row.fixed_const = bounds.fixed_bound_const;
            row.barenco = bounds.barenco_bound;
            row.margin = row.exact_p - row.aqft_bound;
            if (row.exact_p < row.aqft_bound) ++result.summary.violations;
            if (!have_min || row.exact_p < result.summary.min_exact_p) {
                have_min = true;
                result.summary.min_exact_p = row.exact_p;
                result.summary.argmin_n = n;
                result.summary.argmin_m = m;
                result.summary.argmin_phi = phi;
            }
            result.rows.push_back(std::move(row));
        }
    }
    result.summary.rows = static_cast<int64_t>(result.rows.size());
    return result;
}

std::string sweep_csv(const SweepResult& result) {
    std::string out =
        "n,m,phi,phi_dyadic,exact_p,aqft_bound,fixed_n,fixed_const,barenco,margin\n";
    for (const SweepRow& row : result.rows) {
        out += std::to_string(row.n) + "," + std::to_string(row.m) + "," +
               fmt_g(row.phi.to_double(), 17) + "," + row.phi.dyadic_str() + "," +
               fmt_g(row.exact_p) + "," + fmt_g(row.aqft_bound) + "," +
               fmt_g(row.fixed_n) + "," + fmt_g(row.fixed_const) + "," +
               fmt_g(row.barenco) + "," + fmt_g(row.margin) + "\n";
    }
    const SweepSummary& s = result.summary;
    out += "# summary rows=" + std::to_string(s.rows) +
           " min_exact_p=" + fmt_g(s.min_exact_p) +
           " argmin_n=" + std::to_string(s.argmin_n) +
           " argmin_m=" + std::to_string(s.argmin_m) +
           " argmin_phi=" + s.argmin_phi.dyadic_str() +
           " violations=" + std::to_string(s.violations) + "\n";
    return out;
}

std::string sweep_json(const SweepResult& result) {
    nlohmann::json arr = nlohmann::json::array();
    for (const SweepRow& row : result.rows) arr.push_back(row_json(row));
    const SweepSummary& s = result.summary;
    arr.push_back(nlohmann::json{
        {"summary",
         {{"rows", s.rows},
          {"min_exact_p", s.min_exact_p},
          {"argmin_n", s.argmin_n},
          {"argmin_m", s.argmin_m},
          {"argmin_phi", s.argmin_phi.dyadic_str()},
          {"violations", s.violations}}}});
    return arr.dump();
}

std::vector<double> sample_draws(uint64_t seed, int n, int m, int64_t sample_index,
                                 int count) {
    uint64_t key = seed;
    key = mix_key(key, static_cast<uint64_t>(n));
    key = mix_key(key, static_cast<uint64_t>(m));
    key = mix_key(key, static_cast<uint64_t>(sample_index));
    Splitmix64 stream{key};
    std::vector<double> draws(static_cast<size_t>(count));
    for (double& d : draws) d = stream.next_unit();
    return draws;
}

MonteCarloResult monte_carlo_estimate(const TrialSpec& spec, int64_t samples,
                                      uint64_t seed, int workers) {
    if (samples < 100)
        throw std::invalid_argument("monte carlo needs at least 100 samples");
    if (workers < 1) throw std::invalid_argument("worker count must be positive");
    workers = static_cast<int>(std::min<int64_t>(workers, samples));

    std::vector<int64_t> successes(static_cast<size_t>(workers), 0);
    auto worker_body = [&](int w) {
        int64_t count = 0;
        for (int64_t i = w; i < samples; i += workers) {
            const std::vector<double> draws = sample_draws(seed, spec.n, spec.m, i, spec.n);
            if (sample_run(spec, draws).success) ++count;
        }
        successes[static_cast<size_t>(w)] = count;
    };
    if (workers == 1) {
        worker_body(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker_body, w);
        for (auto& t : pool) t.join();
    }

    MonteCarloResult result{};
    result.samples = samples;
    for (int64_t c : successes) result.successes += c;
    result.p_hat = static_cast<double>(result.successes) / static_cast<double>(samples);
    result.standard_error =
        std::sqrt(result.p_hat * (1.0 - result.p_hat) / static_cast<double>(samples));
    result.exact_p = success_probability_exact(spec);
    return result;
}

std::vector<FidelityRow> fidelity_sweep(int n, const std::vector<int>& m_list) {
    if (n < 1 || n > 10)
        throw std::invalid_argument("fidelity sweep limited to n <= 10");
    if (m_list.empty()) throw std::invalid_argument("fidelity sweep needs thresholds");

    const uint64_t dim = uint64_t{1} << n;
    const CircuitPlan qft = build_qft(n);
    std::vector<StateVector> exact;
    exact.reserve(dim);
    for (uint64_t x = 0; x < dim; ++x)
        exact.push_back(run(qft, StateVector::basis_state(n, x)));

    std::vector<FidelityRow> rows;
    rows.reserve(m_list.size());
    for (const int m : m_list) {
        const CircuitPlan aqft = build_aqft(n, m);
        double min_f = 1.0;
        double sum_f = 0.0;
        for (uint64_t x = 0; x < dim; ++x) {
            const double f = fidelity(exact[x], run(aqft, StateVector::basis_state(n, x)));
            min_f = std::min(min_f, f);
            sum_f += f;
        }
        rows.push_back(FidelityRow{m, min_f, sum_f / static_cast<double>(dim)});
    }
    return rows;
}

std::vector<GateCountRow> gate_count_table(const std::vector<int>& n_list,
                                           const MRule& m_rule) {
    std::vector<GateCountRow> rows;
    rows.reserve(n_list.size());
    for (const int n : n_list) {
        const int m = m_rule.resolve(n);
        GateCountRow row;
        row.n = n;
        row.m = m;
        row.qft_rotations = qft_rotation_count(n);
        row.aqft_rotations = aqft_rotation_count(n, m);
        row.ratio = row.aqft_rotations == 0
                        ? 1.0
                        : static_cast<double>(row.qft_rotations) /
                              static_cast<double>(row.aqft_rotations);
        rows.push_back(row);
    }
    return rows;
}

std::string gate_count_csv(const std::vector<GateCountRow>& rows) {
    std::string out = "n,m,qft_rotations,aqft_rotations,ratio\n";
    for (const GateCountRow& row : rows)
        out += std::to_string(row.n) + "," + std::to_string(row.m) + "," +
               std::to_string(row.qft_rotations) + "," + std::to_string(row.aqft_rotations) +
               "," + fmt_g(row.ratio) + "\n";
    return out;
}

std::string gate_count_json(const std::vector<GateCountRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const GateCountRow& row : rows)
        arr.push_back(nlohmann::json{{"n", row.n},
                                     {"m", row.m},
                                     {"qft_rotations", row.qft_rotations},
                                     {"aqft_rotations", row.aqft_rotations},
                                     {"ratio", row.ratio}});
    return arr.dump();
}

}  // namespace qftlab
