#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "slm/ccdf.hpp"
#include "slm/slm_conventional.hpp"
#include "slm/slm_cyclic.hpp"

namespace slm {

struct SimConfig {
    std::size_t n_fft = 64;
    int u_count = 4;
    int i_stages = 3;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
    bool run_conventional = true;
    bool run_proposed = true;
    ShiftMethod shift_method = ShiftMethod::random;
    std::string shift_file;             // loaded when method == external
    std::optional<std::uint64_t> phase_seed;  // default: derived from seed
    std::vector<double> thresholds_db;  // default: CcdfCurve::default_grid()
    int threads = 0;                    // 0 = hardware concurrency
    int oversampling = 1;               // reserved; only factor 1 is supported

    void validate() const;  // throws std::invalid_argument
    std::uint64_t effective_phase_seed() const;
    std::uint64_t shift_seed() const;
};

struct SchemeStats {
    CcdfCurve ccdf;
    double mean_selected_papr_db = 0.0;
    OpCount ops;
};

struct SimReport {
    SimConfig config;
    std::optional<SchemeStats> conventional;
    std::optional<SchemeStats> proposed;
    std::optional<ShiftTable> shift_table;  // the table the run used
    double wall_seconds = 0.0;
};

struct TrialResult {
    std::optional<PaprValue> conventional;
    std::optional<PaprValue> proposed;
    OpCount conventional_ops;
    OpCount proposed_ops;
};

/// Selected PAPR of trial `trial_index` under the given fixed side inputs.
/// Depends only on (config.seed, trial_index); execution order never matters.
TrialResult simulate_trial(const SimConfig& cfg,
                           const std::vector<PhaseRotationVector>& pvs,
                           const ShiftTable* table, const TwiddleTable& tw,
                           std::uint64_t trial_index);

/// Runs `cfg.trials` paired trials: both schemes see the same random 16-QAM
/// symbol sequence. Deterministic for a given seed regardless of thread
/// count.
SimReport run_simulation(const SimConfig& cfg);

/// CSV with `#`-prefixed config/stat comments, a papr_db header and one row
/// per threshold. Numeric fields use shortest round-trip formatting; output
/// is byte-stable for a given config.
void write_csv(const SimReport& report, std::ostream& out);

/// Rebuilds the result-defining fields of a SimConfig from the `# key=value`
/// comment lines of a CSV produced by write_csv.
SimConfig parse_config_echo(std::istream& in);

}  // namespace slm
