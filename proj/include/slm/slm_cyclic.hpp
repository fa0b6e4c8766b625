#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "slm/signal.hpp"
#include "slm/slm_conventional.hpp"
#include "slm/transform.hpp"

namespace slm {

enum class ShiftMethod { random, mj, external };

/// U rows of M cyclic shift values in [0, L-1]; row 0 is all zeros and
/// reproduces the unshifted signal.
struct ShiftTable {
    StageTap tap;
    std::vector<std::vector<int>> rows;
    ShiftMethod method;

    int u_count() const { return static_cast<int>(rows.size()); }
    void validate() const;  // throws std::invalid_argument
};

ShiftTable gen_random_shifts(int u_count, const StageTap& tap,
                             std::uint64_t seed);

/// Deterministic assignment a_m^j = (m*j) mod L. Satisfies the pairwise
/// shift condition whenever (M-1)(U-1) < L, and needs no stored table.
ShiftTable gen_mj_shifts(int u_count, const StageTap& tap);

struct GoodnessReport {
    struct Violation {
        int j, v;    // alternative pair, j < v
        int m1, m2;  // subblock pair, m1 < m2
    };
    bool satisfied = true;
    std::vector<Violation> violations;
};

/// True iff (a_m1^v - a_m1^j) - (a_m2^v - a_m2^j) != 0 mod L for all m1 != m2.
bool shift_pair_condition_ok(const StageTap& tap, std::span<const int> row_j,
                             std::span<const int> row_v);

/// Applies the pairwise condition to every alternative pair of the table.
GoodnessReport check_good_condition(const ShiftTable& table);

/// The unit-magnitude rotation vector that turns the cyclic-shift combine
/// into a conventional SLM alternative:
/// P(k) = W^{-(k - (k mod M)) * a_{k mod M}}.
PhaseRotationVector equivalent_phase_vector(const StageTap& tap,
                                            std::span<const int> shifts_row);

/// Proposed SLM: one partial IFFT shared by all alternatives, one cheap
/// combine per shift row, minimum-PAPR selection.
SlmResult run_cyclic_slm(const SymbolSequence& x, const ShiftTable& table);
SlmResult run_cyclic_slm(const SymbolSequence& x, const ShiftTable& table,
                         const TwiddleTable& tw);

/// Plain-text table form: one row per alternative, space-separated integers.
std::string format_shift_table(const ShiftTable& table);
ShiftTable parse_shift_table(const std::string& text, const StageTap& tap);

}  // namespace slm
