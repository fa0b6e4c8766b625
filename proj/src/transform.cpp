#include "slm/transform.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace slm {

TwiddleTable::TwiddleTable(std::size_t n_fft) {
    if (!is_pow2(n_fft) || n_fft < 2)
        throw std::invalid_argument("TwiddleTable: size must be a power of two >= 2");
    roots_.resize(n_fft);
    const double step = 2.0 * std::numbers::pi / static_cast<double>(n_fft);
    for (std::size_t k = 0; k < n_fft; ++k)
        roots_[k] = std::polar(1.0, step * static_cast<double>(k));
}

StageTap::StageTap(std::size_t n_fft_, int i_) : n_fft(n_fft_), i(i_) {
    if (!is_pow2(n_fft) || n_fft < 4)
        throw std::invalid_argument("StageTap: N must be a power of two >= 4");
    n = log2_exact(n_fft);
    if (i < 1 || i > n - 1)
        throw std::invalid_argument("StageTap: need 1 <= i <= log2(N) - 1");
    num_subblocks = 1 << i;
    subblock_len = n_fft >> i;
}

namespace {

// Butterfly stages (first_stage, last_stage] of the N-point flowgraph.
// After stage s the state holds 2^{n-s} blocks of length 2^s; block r is the
// 2^s-point IFFT of the input residue class k = r (mod 2^{n-s}). Stage s
// merges blocks r and r + C (C = 2^{n-s}) with twiddles W^{-t N/2^s}:
//   out[t]     = even[t] + w*odd[t]
//   out[t + B] = even[t] - w*odd[t]
void run_stages(CVec& state, const TwiddleTable& tw, int first_stage,
                int last_stage, OpCount& ops) {
    const std::size_t n = state.size();
    CVec scratch(n);
    for (int s = first_stage + 1; s <= last_stage; ++s) {
        const std::size_t block_len = std::size_t{1} << (s - 1);
        const std::size_t block_count = n >> s;
        const std::size_t stride = n >> s;  // twiddle index step: N / 2^s
        for (std::size_t r = 0; r < block_count; ++r) {
            const Cplx* even = state.data() + r * block_len;
            const Cplx* odd = state.data() + (r + block_count) * block_len;
            Cplx* out = scratch.data() + 2 * r * block_len;
            for (std::size_t t = 0; t < block_len; ++t) {
                const Cplx wo = tw.root_neg(t * stride) * odd[t];
                out[t] = even[t] + wo;
                out[t + block_len] = even[t] - wo;
            }
        }
        ops.cmul += n / 2;
        ops.cadd += n;
        state.swap(scratch);
    }
}

void require_table(const TwiddleTable& tw, std::size_t n) {
    if (tw.n_fft() != n)
        throw std::invalid_argument("twiddle table size does not match sequence length");
}

void require_shifts(const SubblockSet& sb, std::span<const int> shifts) {
    if (shifts.size() != static_cast<std::size_t>(sb.tap.num_subblocks))
        throw std::invalid_argument("combine: one shift per subblock required");
    for (int a : shifts) {
        if (a < 0 || static_cast<std::size_t>(a) >= sb.tap.subblock_len)
            throw std::invalid_argument("combine: shift out of range [0, L-1]");
    }
    if (sb.data.size() != sb.tap.n_fft)
        throw std::invalid_argument("combine: subblock data size mismatch");
}

}  // namespace

TransformResult ifft(const SymbolSequence& x) {
    return ifft(x, TwiddleTable(x.size()));
}

TransformResult ifft(const SymbolSequence& x, const TwiddleTable& tw) {
    require_symbol_sequence(x);
    require_table(tw, x.size());
    TransformResult res{x, {}};
    run_stages(res.signal, tw, 0, log2_exact(x.size()), res.ops);
    return res;
}

TransformResult ifft_normalized(const SymbolSequence& x) {
    TransformResult res = ifft(x);
    const double inv_n = 1.0 / static_cast<double>(x.size());
    for (Cplx& s : res.signal) s *= inv_n;
    return res;
}

StageResult ifft_to_stage(const SymbolSequence& x, const StageTap& tap) {
    return ifft_to_stage(x, tap, TwiddleTable(x.size()));
}

StageResult ifft_to_stage(const SymbolSequence& x, const StageTap& tap,
                          const TwiddleTable& tw) {
    require_symbol_sequence(x);
    require_table(tw, x.size());
    if (tap.n_fft != x.size())
        throw std::invalid_argument("ifft_to_stage: tap does not match sequence length");
    StageResult res{{tap, x}, {}};
    run_stages(res.subblocks.data, tw, 0, tap.n - tap.i, res.ops);
    return res;
}

TransformResult combine_with_shifts(const SubblockSet& sb,
                                     std::span<const int> shifts) {
    return combine_with_shifts(sb, shifts, TwiddleTable(sb.tap.n_fft));
}

TransformResult combine_with_shifts(const SubblockSet& sb,
                                     std::span<const int> shifts,
                                     const TwiddleTable& tw) {
    require_shifts(sb, shifts);
    require_table(tw, sb.tap.n_fft);
    const std::size_t len = sb.tap.subblock_len;
    TransformResult res{CVec(sb.tap.n_fft), {}};
    // Shift is a rewiring, not arithmetic: no ops tallied here.
    for (int m = 0; m < sb.tap.num_subblocks; ++m) {
        const Cplx* src = sb.data.data() + static_cast<std::size_t>(m) * len;
        Cplx* dst = res.signal.data() + static_cast<std::size_t>(m) * len;
        const std::size_t a = static_cast<std::size_t>(shifts[m]);
        for (std::size_t t = 0; t < len; ++t) dst[t] = src[(t + a) % len];
    }
    run_stages(res.signal, tw, sb.tap.n - sb.tap.i, sb.tap.n, res.ops);
    return res;
}

SignalSequence direct_combine(const SubblockSet& sb,
                              std::span<const int> shifts) {
    require_shifts(sb, shifts);
    const std::size_t n_fft = sb.tap.n_fft;
    const std::size_t len = sb.tap.subblock_len;
    const TwiddleTable tw(n_fft);
    SignalSequence out(n_fft);
    for (std::size_t t = 0; t < n_fft; ++t) {
        Cplx acc = 0.0;
        for (int m = 0; m < sb.tap.num_subblocks; ++m) {
            const Cplx* block = sb.data.data() + static_cast<std::size_t>(m) * len;
            const std::size_t pos = (t + static_cast<std::size_t>(shifts[m])) % len;
            acc += block[pos] * tw.root_neg(static_cast<std::size_t>(m) * t);
        }
        out[t] = acc;
    }
    return out;
}

}  // namespace slm
