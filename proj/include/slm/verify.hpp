#pragma once

#include <cstdint>
#include <iosfwd>

namespace slm {

enum class FaultInjection { none, twiddle_sign };

struct VerifyOptions {
    std::size_t max_n = 256;
    int cases = 200;
    std::uint64_t seed = 1;
    FaultInjection fault = FaultInjection::none;
};

/// Property suites behind the `verify` subcommand: cyclic-shift alternatives
/// against phase-rotated full IFFTs, combine against the direct reference,
/// and instrumented op counts against the closed-form totals. Prints one
/// summary line per check; returns false (and the first counterexample) on
/// any failure.
bool run_verify_suite(const VerifyOptions& opts, std::ostream& out);

}  // namespace slm
