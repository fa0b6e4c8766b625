#pragma once

#include <cstdint>
#include <vector>

#include "slm/signal.hpp"
#include "slm/transform.hpp"

namespace slm {

struct SlmResult {
    int selected_index;            // argmin PAPR, smallest index on ties
    SignalSequence selected_signal;
    std::vector<PaprValue> papr_all;
    OpCount op_count;              // IFFT/combine work only
};

/// Vector 0 is all-ones; vectors 1..U-1 draw i.i.d. elements from
/// {1, -1, j, -j}. Deterministic for a given seed.
std::vector<PhaseRotationVector> gen_random_phase_vectors(int u_count,
                                                          std::size_t n_fft,
                                                          std::uint64_t seed);

/// Baseline SLM: one full IFFT per phase-rotated alternative, minimum-PAPR
/// selection. Op count covers the U IFFTs; the element-wise rotations are
/// not tallied.
SlmResult run_conventional_slm(const SymbolSequence& x,
                               const std::vector<PhaseRotationVector>& pvs);
SlmResult run_conventional_slm(const SymbolSequence& x,
                               const std::vector<PhaseRotationVector>& pvs,
                               const TwiddleTable& tw);

}  // namespace slm
