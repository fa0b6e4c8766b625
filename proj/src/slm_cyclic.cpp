#include "slm/slm_cyclic.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "slm/rng.hpp"

namespace slm {

void ShiftTable::validate() const {
    if (rows.empty())
        throw std::invalid_argument("ShiftTable: need at least one row");
    for (const auto& row : rows) {
        if (row.size() != static_cast<std::size_t>(tap.num_subblocks))
            throw std::invalid_argument("ShiftTable: row width must equal subblock count");
        for (int a : row) {
            if (a < 0 || static_cast<std::size_t>(a) >= tap.subblock_len)
                throw std::invalid_argument("ShiftTable: shift out of range [0, L-1]");
        }
    }
    for (int a : rows[0]) {
        if (a != 0)
            throw std::invalid_argument("ShiftTable: row 0 must be all zeros");
    }
}

ShiftTable gen_random_shifts(int u_count, const StageTap& tap,
                             std::uint64_t seed) {
    if (u_count < 1)
        throw std::invalid_argument("gen_random_shifts: U must be >= 1");
    ShiftTable table{tap, {}, ShiftMethod::random};
    table.rows.assign(u_count, std::vector<int>(tap.num_subblocks, 0));
    std::mt19937_64 eng(seed);
    const std::uint64_t mask = tap.subblock_len - 1;  // L is a power of two
    for (int j = 1; j < u_count; ++j)
        for (int m = 0; m < tap.num_subblocks; ++m)
            table.rows[j][m] = static_cast<int>(eng() & mask);
    return table;
}

ShiftTable gen_mj_shifts(int u_count, const StageTap& tap) {
    if (u_count < 1)
        throw std::invalid_argument("gen_mj_shifts: U must be >= 1");
    ShiftTable table{tap, {}, ShiftMethod::mj};
    table.rows.assign(u_count, std::vector<int>(tap.num_subblocks, 0));
    const int len = static_cast<int>(tap.subblock_len);
    for (int j = 0; j < u_count; ++j)
        for (int m = 0; m < tap.num_subblocks; ++m)
            table.rows[j][m] = (m * j) % len;
    return table;
}

bool shift_pair_condition_ok(const StageTap& tap, std::span<const int> row_j,
                             std::span<const int> row_v) {
    const int len = static_cast<int>(tap.subblock_len);
    const int m_count = tap.num_subblocks;
    for (int m1 = 0; m1 < m_count; ++m1) {
        for (int m2 = m1 + 1; m2 < m_count; ++m2) {
            const int diff = (row_v[m1] - row_j[m1]) - (row_v[m2] - row_j[m2]);
            if (((diff % len) + len) % len == 0) return false;
        }
    }
    return true;
}

GoodnessReport check_good_condition(const ShiftTable& table) {
    table.validate();
    const int len = static_cast<int>(table.tap.subblock_len);
    const int m_count = table.tap.num_subblocks;
    GoodnessReport report;
    for (int j = 0; j < table.u_count(); ++j) {
        for (int v = j + 1; v < table.u_count(); ++v) {
            for (int m1 = 0; m1 < m_count; ++m1) {
                for (int m2 = m1 + 1; m2 < m_count; ++m2) {
                    const int diff = (table.rows[v][m1] - table.rows[j][m1]) -
                                     (table.rows[v][m2] - table.rows[j][m2]);
                    if (((diff % len) + len) % len == 0)
                        report.violations.push_back({j, v, m1, m2});
                }
            }
        }
    }
    report.satisfied = report.violations.empty();
    return report;
}

PhaseRotationVector equivalent_phase_vector(const StageTap& tap,
                                            std::span<const int> shifts_row) {
    if (shifts_row.size() != static_cast<std::size_t>(tap.num_subblocks))
        throw std::invalid_argument("equivalent_phase_vector: one shift per subblock required");
    const TwiddleTable tw(tap.n_fft);
    const std::size_t m_mask = static_cast<std::size_t>(tap.num_subblocks) - 1;
    PhaseRotationVector pv(tap.n_fft);
    for (std::size_t k = 0; k < tap.n_fft; ++k) {
        const std::size_t m = k & m_mask;  // k mod M
        const std::size_t exponent = (k - m) * static_cast<std::size_t>(shifts_row[m]);
        pv[k] = tw.root_neg(exponent);  // W^{-(k - k mod M) a_m}
    }
    return pv;
}

SlmResult run_cyclic_slm(const SymbolSequence& x, const ShiftTable& table) {
    return run_cyclic_slm(x, table, TwiddleTable(x.size()));
}

SlmResult run_cyclic_slm(const SymbolSequence& x, const ShiftTable& table,
                         const TwiddleTable& tw) {
    require_symbol_sequence(x);
    table.validate();
    if (table.tap.n_fft != x.size())
        throw std::invalid_argument("run_cyclic_slm: table does not match sequence length");
    StageResult stage = ifft_to_stage(x, table.tap, tw);
    SlmResult res;
    res.selected_index = 0;
    res.op_count = stage.ops;
    res.papr_all.reserve(table.rows.size());
    for (std::size_t j = 0; j < table.rows.size(); ++j) {
        TransformResult alt = combine_with_shifts(stage.subblocks, table.rows[j], tw);
        res.op_count += alt.ops;
        res.papr_all.push_back(papr(alt.signal));
        if (j == 0 || res.papr_all[j].db < res.papr_all[res.selected_index].db) {
            res.selected_index = static_cast<int>(j);
            res.selected_signal = std::move(alt.signal);
        }
    }
    return res;
}

std::string format_shift_table(const ShiftTable& table) {
    std::ostringstream out;
    for (const auto& row : table.rows) {
        for (std::size_t m = 0; m < row.size(); ++m) {
            if (m > 0) out << ' ';
            out << row[m];
        }
        out << '\n';
    }
    return out.str();
}

ShiftTable parse_shift_table(const std::string& text, const StageTap& tap) {
    ShiftTable table{tap, {}, ShiftMethod::external};
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row_in(line);
        std::vector<int> row;
        int value = 0;
        while (row_in >> value) row.push_back(value);
        if (!row_in.eof())
            throw std::invalid_argument("parse_shift_table: non-integer token");
        table.rows.push_back(std::move(row));
    }
    table.validate();
    return table;
}

}  // namespace slm
