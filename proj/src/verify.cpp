#include "slm/verify.hpp"

#include <ostream>
#include <vector>

#include "slm/analysis.hpp"
#include "slm/rng.hpp"
#include "slm/slm_conventional.hpp"
#include "slm/slm_cyclic.hpp"
#include "slm/transform.hpp"

namespace slm {

namespace {

SymbolSequence random_symbols(std::mt19937_64& eng, std::size_t n_fft) {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    SymbolSequence x(n_fft);
    for (auto& s : x) s = Cplx(unit(eng), unit(eng));
    return x;
}

struct CaseParams {
    std::size_t n_fft;
    int i;
    int u;
};

CaseParams draw_case(std::mt19937_64& eng, std::size_t max_n) {
    std::vector<std::size_t> sizes;
    for (std::size_t n = 8; n <= max_n; n *= 2) sizes.push_back(n);
    const std::size_t n_fft = sizes[eng() % sizes.size()];
    const int n = log2_exact(n_fft);
    const int i = 1 + static_cast<int>(eng() % static_cast<std::uint64_t>(n - 1));
    constexpr int kU[3] = {2, 4, 8};
    return {n_fft, i, kU[eng() % 3]};
}

}  // namespace

bool run_verify_suite(const VerifyOptions& opts, std::ostream& out) {
    std::mt19937_64 eng(opts.seed);
    const bool flip = opts.fault == FaultInjection::twiddle_sign;

    // Check 1: every cyclic-shift alternative equals the full IFFT of the
    // phase-rotated input, for random sizes, taps and shift tables.
    double worst_equiv = 0.0;
    for (int c = 0; c < opts.cases; ++c) {
        const CaseParams p = draw_case(eng, opts.max_n);
        const StageTap tap(p.n_fft, p.i);
        const TwiddleTable tw(p.n_fft);
        const SymbolSequence x = random_symbols(eng, p.n_fft);
        const ShiftTable table = gen_random_shifts(p.u, tap, eng());
        const StageResult stage = ifft_to_stage(x, tap, tw);
        for (int j = 0; j < table.u_count(); ++j) {
            const TransformResult via_shift =
                combine_with_shifts(stage.subblocks, table.rows[j], tw);
            PhaseRotationVector pv = equivalent_phase_vector(tap, table.rows[j]);
            if (flip)
                for (auto& e : pv) e = std::conj(e);
            const TransformResult via_rotation = ifft(elementwise_mul(x, pv), tw);
            const double err = rel_linf(via_shift.signal, via_rotation.signal);
            worst_equiv = std::max(worst_equiv, err);
            if (err > 1e-9) {
                out << "FAIL scheme-equivalence: N=" << p.n_fft << " i=" << p.i
                    << " U=" << p.u << " row=" << j << " rel_err=" << err << "\n";
                out << "     shifts:";
                for (int a : table.rows[j]) out << ' ' << a;
                out << "\n";
                return false;
            }
        }
    }
    out << "ok scheme-equivalence: " << opts.cases
        << " cases, max rel err " << worst_equiv << "\n";

    // Check 2: staged combine against the direct reference combine.
    double worst_combine = 0.0;
    for (int c = 0; c < opts.cases; ++c) {
        const CaseParams p = draw_case(eng, opts.max_n);
        const StageTap tap(p.n_fft, p.i);
        const TwiddleTable tw(p.n_fft);
        const SymbolSequence x = random_symbols(eng, p.n_fft);
        const ShiftTable table = gen_random_shifts(2, tap, eng());
        const StageResult stage = ifft_to_stage(x, tap, tw);
        const TransformResult fast =
            combine_with_shifts(stage.subblocks, table.rows[1], tw);
        const SignalSequence ref = direct_combine(stage.subblocks, table.rows[1]);
        const double err = rel_linf(fast.signal, ref);
        worst_combine = std::max(worst_combine, err);
        if (err > 1e-9) {
            out << "FAIL combine-vs-direct: N=" << p.n_fft << " i=" << p.i
                << " rel_err=" << err << "\n";
            return false;
        }
    }
    out << "ok combine-vs-direct: " << opts.cases
        << " cases, max rel err " << worst_combine << "\n";

    // Check 3: instrumented op counts against the closed-form totals.
    for (std::size_t n_fft = 8; n_fft <= opts.max_n; n_fft *= 2) {
        const int n = log2_exact(n_fft);
        const TwiddleTable tw(n_fft);
        const SymbolSequence x = random_symbols(eng, n_fft);
        for (int u : {1, 2, 4, 8}) {
            const auto pvs = gen_random_phase_vectors(u, n_fft, eng());
            const SlmResult conv = run_conventional_slm(x, pvs, tw);
            const ComplexityModel cm =
                complexity_model(Scheme::conventional, n, 1, u);
            if (conv.op_count.cmul != cm.cmul_total ||
                conv.op_count.cadd != cm.cadd_total) {
                out << "FAIL op-count conventional: N=" << n_fft << " U=" << u
                    << " got (" << conv.op_count.cmul << "," << conv.op_count.cadd
                    << ") want (" << cm.cmul_total << "," << cm.cadd_total << ")\n";
                return false;
            }
            for (int i = 1; i <= n - 1; ++i) {
                const StageTap tap(n_fft, i);
                const ShiftTable table = gen_random_shifts(u, tap, eng());
                const SlmResult prop = run_cyclic_slm(x, table, tw);
                const ComplexityModel pm =
                    complexity_model(Scheme::proposed, n, i, u);
                if (prop.op_count.cmul != pm.cmul_total ||
                    prop.op_count.cadd != pm.cadd_total) {
                    out << "FAIL op-count proposed: N=" << n_fft << " i=" << i
                        << " U=" << u << " got (" << prop.op_count.cmul << ","
                        << prop.op_count.cadd << ") want (" << pm.cmul_total
                        << "," << pm.cadd_total << ")\n";
                    return false;
                }
            }
        }
        out << "ok op-count: N=" << n_fft
            << " matches closed forms (conventional U(N/2)log2N, proposed "
               "(N/2)log2N+(U-1)i(N/2))\n";
    }

    return true;
}

}  // namespace slm
