#include "slm/qam.hpp"

#include <cmath>
#include <stdexcept>

namespace slm {

namespace {

QamMap16 build_map() {
    // 2-bit Gray word (g1 g0) -> level: 00 -> -3, 01 -> -1, 11 -> +1, 10 -> +3
    constexpr int kGrayLevel[4] = {-3, -1, +3, +1};
    const double scale = 1.0 / std::sqrt(10.0);
    QamMap16 m;
    for (int label = 0; label < 16; ++label) {
        const int i_word = (label >> 2) & 3;  // b3 b2
        const int q_word = label & 3;         // b1 b0
        m.lookup[label] = scale * Cplx(kGrayLevel[i_word], kGrayLevel[q_word]);
    }
    return m;
}

}  // namespace

const QamMap16& QamMap16::instance() {
    static const QamMap16 map = build_map();
    return map;
}

SymbolSequence map_16qam(std::span<const std::uint8_t> bits) {
    if (bits.size() % 4 != 0)
        throw std::invalid_argument("map_16qam: bit count must be a multiple of 4");
    std::vector<std::uint8_t> labels(bits.size() / 4);
    for (std::size_t s = 0; s < labels.size(); ++s) {
        std::uint8_t label = 0;
        for (int b = 0; b < 4; ++b) {
            const std::uint8_t bit = bits[4 * s + b];
            if (bit > 1) throw std::invalid_argument("map_16qam: bits must be 0 or 1");
            label = static_cast<std::uint8_t>((label << 1) | bit);
        }
        labels[s] = label;
    }
    return map_16qam_labels(labels);
}

SymbolSequence map_16qam_labels(std::span<const std::uint8_t> labels) {
    if (!is_pow2(labels.size()))
        throw std::invalid_argument("map_16qam: symbol count must be a power of two");
    const QamMap16& map = QamMap16::instance();
    SymbolSequence out(labels.size());
    for (std::size_t s = 0; s < labels.size(); ++s) {
        if (labels[s] > 15)
            throw std::invalid_argument("map_16qam: label out of range");
        out[s] = map.lookup[labels[s]];
    }
    return out;
}

}  // namespace slm
