#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "slm/signal.hpp"

namespace slm {

/// Gray-coded 16-QAM with unit mean symbol energy.
/// A 4-bit label b3 b2 b1 b0 selects the I level from (b3,b2) and the
/// Q level from (b1,b0); each 2-bit Gray word maps 00 -> -3, 01 -> -1,
/// 11 -> +1, 10 -> +3, scaled by 1/sqrt(10).
struct QamMap16 {
    std::array<Cplx, 16> lookup;

    static const QamMap16& instance();
};

/// Maps bit groups of 4 (bits given MSB-first per group, values 0/1).
/// Bit count must be a multiple of 4 and produce a power-of-two symbol count.
SymbolSequence map_16qam(std::span<const std::uint8_t> bits);

/// Same mapping from ready-made 4-bit labels (values 0..15).
SymbolSequence map_16qam_labels(std::span<const std::uint8_t> labels);

}  // namespace slm
