#include "slm/slm_conventional.hpp"

#include <cmath>
#include <stdexcept>

#include "slm/rng.hpp"

namespace slm {

std::vector<PhaseRotationVector> gen_random_phase_vectors(int u_count,
                                                          std::size_t n_fft,
                                                          std::uint64_t seed) {
    if (u_count < 1)
        throw std::invalid_argument("gen_random_phase_vectors: U must be >= 1");
    static const Cplx kQuad[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    std::vector<PhaseRotationVector> pvs(u_count);
    pvs[0].assign(n_fft, Cplx(1.0, 0.0));
    std::mt19937_64 eng(seed);
    for (int u = 1; u < u_count; ++u) {
        pvs[u].resize(n_fft);
        for (std::size_t k = 0; k < n_fft; ++k)
            pvs[u][k] = kQuad[eng() & 3];
    }
    return pvs;
}

namespace {

void require_phase_vectors(const SymbolSequence& x,
                           const std::vector<PhaseRotationVector>& pvs) {
    if (pvs.empty())
        throw std::invalid_argument("run_conventional_slm: need at least one phase vector");
    for (const auto& pv : pvs) {
        if (pv.size() != x.size())
            throw std::invalid_argument("run_conventional_slm: phase vector length mismatch");
        for (const Cplx& p : pv) {
            if (std::abs(std::abs(p) - 1.0) > 1e-12)
                throw std::invalid_argument("run_conventional_slm: non-unit-magnitude element");
        }
    }
    for (const Cplx& p : pvs[0]) {
        if (std::abs(p - Cplx(1.0, 0.0)) > 1e-12)
            throw std::invalid_argument("run_conventional_slm: vector 0 must be all-ones");
    }
}

}  // namespace

SlmResult run_conventional_slm(const SymbolSequence& x,
                               const std::vector<PhaseRotationVector>& pvs) {
    return run_conventional_slm(x, pvs, TwiddleTable(x.size()));
}

SlmResult run_conventional_slm(const SymbolSequence& x,
                               const std::vector<PhaseRotationVector>& pvs,
                               const TwiddleTable& tw) {
    require_symbol_sequence(x);
    require_phase_vectors(x, pvs);
    SlmResult res;
    res.selected_index = 0;
    res.papr_all.reserve(pvs.size());
    for (std::size_t u = 0; u < pvs.size(); ++u) {
        // The element-wise rotation is not part of the tallied IFFT work.
        TransformResult alt = ifft(elementwise_mul(x, pvs[u]), tw);
        res.op_count += alt.ops;
        res.papr_all.push_back(papr(alt.signal));
        if (u == 0 || res.papr_all[u].db < res.papr_all[res.selected_index].db) {
            res.selected_index = static_cast<int>(u);
            res.selected_signal = std::move(alt.signal);
        }
    }
    return res;
}

}  // namespace slm
