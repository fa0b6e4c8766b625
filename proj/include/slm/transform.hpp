#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "slm/signal.hpp"

namespace slm {

/// Exact complex-operation tally. Every butterfly twiddle multiplication is
/// counted, including multiplications by +1/-1/+j/-j.
struct OpCount {
    std::uint64_t cmul = 0;
    std::uint64_t cadd = 0;

    OpCount& operator+=(const OpCount& o) {
        cmul += o.cmul;
        cadd += o.cadd;
        return *this;
    }
    friend OpCount operator+(OpCount a, const OpCount& b) { return a += b; }
    friend bool operator==(const OpCount&, const OpCount&) = default;
};

/// Precomputed roots W^{-k} = e^{+j 2 pi k / N} for W = e^{-j 2 pi / N}.
class TwiddleTable {
  public:
    explicit TwiddleTable(std::size_t n_fft);

    std::size_t n_fft() const { return roots_.size(); }
    /// W^{-k}; k is reduced mod N.
    Cplx root_neg(std::size_t k) const { return roots_[k % roots_.size()]; }
    /// W^{+k}; k is reduced mod N.
    Cplx root_pos(std::size_t k) const { return std::conj(root_neg(k)); }

  private:
    std::vector<Cplx> roots_;
};

/// Where the flowgraph is tapped: i butterfly stages remain after the tap,
/// leaving M = 2^i subblocks of length L = N / M.
struct StageTap {
    std::size_t n_fft;        // N
    int n;                    // log2 N
    int i;                    // remaining stages, 1 <= i <= n-1
    int num_subblocks;        // M = 2^i
    std::size_t subblock_len; // L = N / M

    StageTap(std::size_t n_fft, int i);
};

/// The M subblocks at stage (n-i): subblock m is the L-point IFFT of the
/// decimated input X(M*l + m), stored in natural time order.
struct SubblockSet {
    StageTap tap;
    CVec data;  // flat, subblock m occupies [m*L, (m+1)*L)

    std::span<const Cplx> subblock(int m) const {
        return {data.data() + static_cast<std::size_t>(m) * tap.subblock_len,
                tap.subblock_len};
    }
};

struct TransformResult {
    SignalSequence signal;
    OpCount ops;
};

struct StageResult {
    SubblockSet subblocks;
    OpCount ops;
};

/// Unnormalized radix-2 IFFT, x(n) = sum_k X(k) W^{-kn}.
TransformResult ifft(const SymbolSequence& x);
TransformResult ifft(const SymbolSequence& x, const TwiddleTable& tw);

/// Same flowgraph with a 1/N output scaling, for consumers that want the
/// normalized convention. PAPR does not see the difference; the scaling is
/// outside the op model.
TransformResult ifft_normalized(const SymbolSequence& x);

/// Runs the flowgraph up to stage (n-i) and exposes the subblocks.
StageResult ifft_to_stage(const SymbolSequence& x, const StageTap& tap);
StageResult ifft_to_stage(const SymbolSequence& x, const StageTap& tap,
                          const TwiddleTable& tw);

/// Cyclically shifts subblock m upward by shifts[m] (output index t reads
/// position (t + shifts[m]) mod L) and completes the remaining i stages.
TransformResult combine_with_shifts(const SubblockSet& sb,
                                    std::span<const int> shifts);
TransformResult combine_with_shifts(const SubblockSet& sb,
                                    std::span<const int> shifts,
                                    const TwiddleTable& tw);

/// O(N*M) reference combine: x(n) = sum_m sb_m((n + shifts[m]) mod L) W^{-mn}.
SignalSequence direct_combine(const SubblockSet& sb, std::span<const int> shifts);

}  // namespace slm
