#include "qftlab/circuit.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace qftlab {

CircuitPlan build_qft(int n) {
    if (n < 1) throw std::invalid_argument("register size must be positive");
    CircuitPlan plan{n, {}, "qft"};
    plan.gates.reserve(static_cast<size_t>(n) + static_cast<size_t>(qft_rotation_count(n)));
    for (int j = 1; j <= n; ++j) {
        plan.gates.push_back({GateKind::Hadamard, j, 0, 0, false});
        for (int k = 2; k <= n - j + 1; ++k)
            plan.gates.push_back({GateKind::ControlledRk, j, j + k - 1, k, false});
    }
    return plan;
}

CircuitPlan build_aqft(int n, int m) {
    if (n < 1) throw std::invalid_argument("register size must be positive");
    m = std::clamp(m, std::min(2, n), n);
    CircuitPlan plan = build_qft(n);
    std::erase_if(plan.gates, [m](const Gate& g) {
        return g.kind == GateKind::ControlledRk && g.k > m;
    });
    plan.label = "aqft_m" + std::to_string(m);
    return plan;
}

CircuitPlan inverse(const CircuitPlan& plan) {
    CircuitPlan inv{plan.n, {plan.gates.rbegin(), plan.gates.rend()}, plan.label};
    for (Gate& g : inv.gates) g.inverted = !g.inverted;
    const std::string suffix = "_inv";
    if (inv.label.size() >= suffix.size() &&
        inv.label.compare(inv.label.size() - suffix.size(), suffix.size(), suffix) == 0)
        inv.label.erase(inv.label.size() - suffix.size());
    else
        inv.label += suffix;
    return inv;
}

StateVector run(const CircuitPlan& plan, StateVector s) {
    if (plan.n != s.qubit_count())
        throw std::invalid_argument("plan and state dimensions differ");
    for (const Gate& g : plan.gates) {
        if (g.kind == GateKind::Hadamard) {
            s = apply_hadamard(std::move(s), g.target);
        } else {
            const Phase angle = Phase::from_numerator(1, g.k);
            s = apply_controlled_rotation(std::move(s), g.control, g.target, angle,
                                          g.inverted ? -1 : +1);
        }
    }
    return s;
}

GateCount gate_count(const CircuitPlan& plan) {
    GateCount count{0, 0};
    for (const Gate& g : plan.gates)
        (g.kind == GateKind::Hadamard ? count.hadamards : count.rotations) += 1;
    return count;
}

int64_t qft_rotation_count(int n) {
    return static_cast<int64_t>(n) * (n - 1) / 2;
}

int64_t aqft_rotation_count(int n, int m) {
    m = std::clamp(m, std::min(2, n), n);
    const int64_t mm = m;
    return (mm - 1) * (n - m + 1) + (mm - 1) * (mm - 2) / 2;
}

int log_rule_threshold(int n, int offset) {
    if (n < 1) throw std::invalid_argument("register size must be positive");
    const int ceil_log2 = n == 1 ? 0 : std::bit_width(static_cast<unsigned>(n - 1));
    return std::clamp(ceil_log2 + offset, std::min(2, n), n);
}

std::string serialize_plan(const CircuitPlan& plan) {
    std::string out = "n=" + std::to_string(plan.n) + " label=" + plan.label + "\n";
    for (const Gate& g : plan.gates) {
        if (g.kind == GateKind::Hadamard)
            out += "H " + std::to_string(g.target);
        else
            out += "CR " + std::to_string(g.k) + " " + std::to_string(g.control) + " " +
                   std::to_string(g.target);
        if (g.inverted) out += " inv";
        out += "\n";
    }
    return out;
}

uint64_t bit_reverse_index(uint64_t index, int n) {
    uint64_t out = 0;
    for (int i = 0; i < n; ++i)
        out |= ((index >> i) & 1) << (n - 1 - i);
    return out;
}

}  // namespace qftlab
