#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qftlab/statevector.hpp"

namespace qftlab {

enum class GateKind { Hadamard, ControlledRk };

struct Gate {
    GateKind kind;
    int target;
    int control;   // ControlledRk only
    int k;         // rotation order, angle 2*pi / 2^k
    bool inverted;

    bool operator==(const Gate&) const = default;
};

struct CircuitPlan {
    int n;
    std::vector<Gate> gates;
    std::string label;
};

struct GateCount {
    int64_t hadamards;
    int64_t rotations;

    bool operator==(const GateCount&) const = default;
};

/// The textbook transform circuit: per wire j, a Hadamard followed by
/// controlled rotations of order k = 2 .. n-j+1 with control j+k-1.
CircuitPlan build_qft(int n);

/// build_qft with every controlled rotation of order k > m removed.
/// m is clamped to [2, n]; build_aqft(n, n) is build_qft(n) gate for gate.
CircuitPlan build_aqft(int n, int m);

/// Gates reversed, each inversion flag toggled.
CircuitPlan inverse(const CircuitPlan& plan);

StateVector run(const CircuitPlan& plan, StateVector s);

GateCount gate_count(const CircuitPlan& plan);

/// Closed forms for the rotation tallies: n(n-1)/2 for the full transform,
/// (m-1)(n-m+1) + (m-1)(m-2)/2 for threshold m.
int64_t qft_rotation_count(int n);
int64_t aqft_rotation_count(int n, int m);

/// m = ceil(log2 n) + offset, clamped to [2, n].
int log_rule_threshold(int n, int offset = 2);

/// Line format: header "n=<n> label=<label>", then "H <q>" or
/// "CR <k> <control> <target>", with a trailing " inv" on inverted gates.
std::string serialize_plan(const CircuitPlan& plan);

/// Basis-index bit reversal, reconciling circuit output order with the
/// direct transform definition.
uint64_t bit_reverse_index(uint64_t index, int n);

}  // namespace qftlab
