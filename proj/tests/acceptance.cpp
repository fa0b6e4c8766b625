// Acceptance suite: runs every release criterion at its stated tolerance and
// prints one pass/fail line per criterion. Exit code 0 only if all pass.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <vector>

#include "slm/analysis.hpp"
#include "slm/ccdf.hpp"
#include "slm/cli.hpp"
#include "slm/mc_sim.hpp"
#include "slm/slm_conventional.hpp"
#include "slm/slm_cyclic.hpp"
#include "slm/transform.hpp"
#include "oracle.hpp"

using namespace slm;

namespace {

bool g_all_ok = true;

void report(int id, bool ok, const std::string& detail) {
    std::printf("[%s] %d. %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
    std::fflush(stdout);
    g_all_ok = g_all_ok && ok;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

std::string fmt(const char* format, ...) {
    char buf[512];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buf, sizeof buf, format, args);
    va_end(args);
    return buf;
}

// ---- criterion 1: every cyclic-shift alternative equals the IFFT of the
// phase-rotated input, 500 random cases, 1e-9 relative L-inf, < 30 s.
void criterion_scheme_equivalence() {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 eng(101);
    constexpr std::size_t kSizes[6] = {8, 16, 32, 64, 128, 256};
    constexpr int kU[3] = {2, 4, 8};
    double worst = 0.0;
    int cases = 0;
    for (; cases < 500; ++cases) {
        const std::size_t n = kSizes[eng() % 6];
        const int lg = log2_exact(n);
        const int i = 1 + static_cast<int>(eng() % static_cast<std::uint64_t>(lg - 1));
        const int u = kU[eng() % 3];
        const StageTap tap(n, i);
        const TwiddleTable tw(n);
        const SymbolSequence x = oracle::random_complex(eng, n);
        const ShiftTable table = gen_random_shifts(u, tap, eng());
        const StageResult stage = ifft_to_stage(x, tap, tw);
        for (int j = 0; j < u; ++j) {
            const auto via_shift =
                combine_with_shifts(stage.subblocks, table.rows[j], tw);
            const auto pv = equivalent_phase_vector(tap, table.rows[j]);
            const auto via_rotation = ifft(elementwise_mul(x, pv), tw);
            worst = std::max(worst, rel_linf(via_shift.signal, via_rotation.signal));
        }
        if (worst > 1e-9) break;
    }
    const double elapsed = seconds_since(t0);
    const bool ok = worst <= 1e-9 && cases == 500 && elapsed < 30.0;
    report(1, ok,
           fmt("scheme equivalence: %d/500 cases within 1e-9 (max rel err "
               "%.2e, %.1f s)",
               cases, worst, elapsed));
}

// ---- criterion 2: the 36 reduction-ratio entries match the reference table
// exactly at one-decimal rounding.
void criterion_ccrr_table() {
    static const double kExpected[4][9] = {
        {62.5, 72.9, 78.1, 65.6, 76.6, 82.0, 67.5, 78.8, 84.4},
        {50.0, 58.3, 62.5, 56.3, 65.6, 70.3, 60.0, 70.0, 75.0},
        {37.5, 43.8, 46.9, 46.9, 54.7, 58.6, 52.5, 61.3, 65.6},
        {25.0, 29.2, 31.3, 37.5, 43.8, 46.9, 45.0, 52.5, 56.3},
    };
    const CcrrTable table = ccrr_table();
    const std::size_t n_groups[3] = {64, 256, 1024};
    const int u_cols[3] = {4, 8, 16};
    int matched = 0;
    for (int i = 1; i <= 4; ++i)
        for (int g = 0; g < 3; ++g)
            for (int c = 0; c < 3; ++c) {
                const double got = table.at(n_groups[g], u_cols[c], i);
                if (std::abs(got - kExpected[i - 1][3 * g + c]) < 1e-9) ++matched;
            }
    report(2, matched == 36,
           fmt("CCRR table: %d/36 entries match at 1-decimal rounding", matched));
}

// ---- criterion 3: instrumented op counts equal the closed forms exactly for
// every n <= 11, i <= 4, U <= 16.
void criterion_op_counts() {
    std::mt19937_64 eng(103);
    int checked = 0, failed = 0;
    for (int n = 2; n <= 11; ++n) {
        const std::size_t n_fft = std::size_t{1} << n;
        const TwiddleTable tw(n_fft);
        const SymbolSequence x = oracle::random_complex(eng, n_fft);
        for (int u = 1; u <= 16; ++u) {
            const auto pvs = gen_random_phase_vectors(u, n_fft, eng());
            const SlmResult conv = run_conventional_slm(x, pvs, tw);
            const ComplexityModel cmod = complexity_model(Scheme::conventional, n, 1, u);
            ++checked;
            if (conv.op_count.cmul != cmod.cmul_total ||
                conv.op_count.cadd != cmod.cadd_total)
                ++failed;
            for (int i = 1; i <= std::min(4, n - 1); ++i) {
                const ShiftTable table =
                    gen_random_shifts(u, StageTap(n_fft, i), eng());
                const SlmResult prop = run_cyclic_slm(x, table, tw);
                const ComplexityModel pmod = complexity_model(Scheme::proposed, n, i, u);
                ++checked;
                if (prop.op_count.cmul != pmod.cmul_total ||
                    prop.op_count.cadd != pmod.cadd_total)
                    ++failed;
            }
        }
    }
    report(3, failed == 0,
           fmt("op-count model: %d configurations, %d mismatches", checked, failed));
}

// ---- criterion 4: good pairs peak exactly at L^2/N^2; constructed
// violations exceed it; rho vanishes off the predicted tau sets.
void criterion_correlation_bound() {
    std::mt19937_64 eng(104);
    int good_checked = 0;
    double worst_bound_err = 0.0;
    double worst_off = 0.0;
    bool ok = true;
    while (good_checked < 210) {
        const std::size_t n = std::size_t{16} << (eng() % 3);
        const int i = 1 + static_cast<int>(eng() % 3);
        const StageTap tap(n, i);
        std::vector<int> row_j(tap.num_subblocks), row_v(tap.num_subblocks);
        for (auto& a : row_j) a = static_cast<int>(eng() % tap.subblock_len);
        for (auto& a : row_v) a = static_cast<int>(eng() % tap.subblock_len);
        if (!shift_pair_condition_ok(tap, row_j, row_v)) continue;
        const RhoProfile profile =
            rho_profile(equivalent_phase_vector(tap, row_j),
                        equivalent_phase_vector(tap, row_v));
        const double bound = std::pow(static_cast<double>(tap.subblock_len) /
                                          static_cast<double>(n), 2.0);
        worst_bound_err = std::max(worst_bound_err,
                                   std::abs(profile.max_value - bound));
        std::vector<bool> predicted(n, false);
        for (const auto& set : predicted_nonzero_taus(tap, row_j, row_v))
            for (int tau : set) predicted[static_cast<std::size_t>(tau)] = true;
        for (std::size_t tau = 0; tau < n; ++tau)
            if (!predicted[tau])
                worst_off = std::max(worst_off, profile.values[tau]);
        ++good_checked;
    }
    ok = ok && worst_bound_err <= 1e-12 && worst_off < 1e-20;

    // duplicated difference d at two subblocks, distinct everywhere else
    int violations_checked = 0;
    bool violations_exceed = true;
    for (std::size_t n : {16, 32, 64}) {
        const int lg = log2_exact(n);
        for (int i = 1; i <= lg / 2; ++i) {
            const StageTap tap(n, i);
            if (tap.num_subblocks > static_cast<int>(tap.subblock_len)) continue;
            std::vector<int> row_j(tap.num_subblocks, 0);
            std::vector<int> row_v(tap.num_subblocks);
            row_v[0] = 1;
            row_v[1] = 1;
            for (int m = 2; m < tap.num_subblocks; ++m) row_v[m] = m;
            const double bound = std::pow(static_cast<double>(tap.subblock_len) /
                                              static_cast<double>(n), 2.0);
            const RhoProfile profile =
                rho_profile(equivalent_phase_vector(tap, row_j),
                            equivalent_phase_vector(tap, row_v));
            violations_exceed = violations_exceed && profile.max_value > bound;
            ++violations_checked;
        }
    }
    ok = ok && violations_exceed && violations_checked > 0;
    report(4, ok,
           fmt("correlation bound: %d good pairs (max |rho_max - L^2/N^2| = "
               "%.2e, off-set max %.2e), %d violating pairs all exceed the bound",
               good_checked, worst_bound_err, worst_off, violations_checked));
}

// ---- criterion 5: the mj rule satisfies the condition for every
// (n <= 12, i <= 4, U <= 16) inside (2^i - 1)(U - 1) < 2^{n-i}, and a
// documented configuration outside the bound fails.
void criterion_mj_guarantee() {
    int inside = 0, inside_ok = 0;
    for (int n = 2; n <= 12; ++n) {
        for (int i = 1; i <= std::min(4, n - 1); ++i) {
            const StageTap tap(std::size_t{1} << n, i);
            for (int u = 1; u <= 16; ++u) {
                const long bound = static_cast<long>(tap.num_subblocks - 1) *
                                   static_cast<long>(u - 1);
                if (bound >= static_cast<long>(tap.subblock_len)) continue;
                ++inside;
                if (check_good_condition(gen_mj_shifts(u, tap)).satisfied)
                    ++inside_ok;
            }
        }
    }
    // outside the bound: N=8, i=2 (M=4, L=2), U=3 -> (M-1)(U-1)=6 >= 2
    const GoodnessReport outside =
        check_good_condition(gen_mj_shifts(3, StageTap(8, 2)));
    const bool ok = inside == inside_ok && inside > 0 && !outside.satisfied;
    report(5, ok,
           fmt("mj-method guarantee: %d/%d in-bound configurations satisfied; "
               "N=8,i=2,U=3 outside the bound reports %zu violations",
               inside_ok, inside, outside.violations.size()));
}

// ---- criterion 6: desk-scale CCDF behavior.
void criterion_ccdf_behavior() {
    const auto t0 = std::chrono::steady_clock::now();

    SimConfig base;
    base.n_fft = 64;
    base.u_count = 4;
    base.trials = 100000;
    base.seed = 2026;
    base.shift_method = ShiftMethod::random;

    SimConfig cfg3 = base;
    cfg3.i_stages = 3;  // conventional + proposed(i=3), paired
    const SimReport rep3 = run_simulation(cfg3);

    SimConfig cfg1 = base;
    cfg1.run_conventional = false;
    cfg1.i_stages = 1;
    const SimReport rep1 = run_simulation(cfg1);

    SimConfig cfg2 = base;
    cfg2.run_conventional = false;
    cfg2.i_stages = 2;
    const SimReport rep2 = run_simulation(cfg2);

    const double conv = ccdf_at(rep3.conventional->ccdf, 1e-2);
    const double p3 = ccdf_at(rep3.proposed->ccdf, 1e-2);
    const double p2 = ccdf_at(rep2.proposed->ccdf, 1e-2);
    const double p1 = ccdf_at(rep1.proposed->ccdf, 1e-2);

    const bool close = std::abs(p3 - conv) <= 0.3;
    const bool ordered = p1 >= p2 - 0.1 && p2 >= p3 - 0.1 && p3 >= conv - 0.1;

    SimConfig mj_cfg;
    mj_cfg.n_fft = 1024;
    mj_cfg.u_count = 4;
    mj_cfg.i_stages = 3;
    mj_cfg.trials = 10000;
    mj_cfg.seed = 2026;
    mj_cfg.run_conventional = false;
    mj_cfg.shift_method = ShiftMethod::mj;
    const SimReport rep_mj = run_simulation(mj_cfg);
    SimConfig rnd_cfg = mj_cfg;
    rnd_cfg.shift_method = ShiftMethod::random;
    const SimReport rep_rnd = run_simulation(rnd_cfg);
    const double mj_db = ccdf_at(rep_mj.proposed->ccdf, 1e-2);
    const double rnd_db = ccdf_at(rep_rnd.proposed->ccdf, 1e-2);
    const bool methods_close = std::abs(mj_db - rnd_db) <= 0.2;

    const double elapsed = seconds_since(t0);
    const bool ok = close && ordered && methods_close && elapsed < 300.0;
    report(6, ok,
           fmt("ccdf behavior at 1e-2: conv %.3f dB, i=3 %.3f, i=2 %.3f, i=1 "
               "%.3f; mj %.3f vs random %.3f at N=1024 (%.1f s)",
               conv, p3, p2, p1, mj_db, rnd_db, elapsed));
}

// ---- criterion 7: transform conformance against direct summation.
void criterion_transform_conformance() {
    std::mt19937_64 eng(107);
    double worst_ifft = 0.0;
    for (std::size_t n = 8; n <= 2048; n *= 2) {
        for (int rep = 0; rep < 100; ++rep) {
            const SymbolSequence x = oracle::random_complex(eng, n);
            worst_ifft =
                std::max(worst_ifft, rel_linf(ifft(x).signal, oracle::naive_ifft(x)));
        }
    }
    double worst_combine = 0.0;
    for (int rep = 0; rep < 1000; ++rep) {
        const std::size_t n = std::size_t{8} << (eng() % 4);
        const int lg = log2_exact(n);
        const int i = 1 + static_cast<int>(eng() % std::min(3, lg - 1));
        const StageTap tap(n, i);
        const SymbolSequence x = oracle::random_complex(eng, n);
        std::vector<int> shifts(tap.num_subblocks);
        for (auto& a : shifts) a = static_cast<int>(eng() % tap.subblock_len);
        const auto stage = ifft_to_stage(x, tap);
        worst_combine = std::max(
            worst_combine,
            rel_linf(combine_with_shifts(stage.subblocks, shifts).signal,
                     direct_combine(stage.subblocks, shifts)));
    }
    const bool ok = worst_ifft <= 1e-9 && worst_combine <= 1e-9;
    report(7, ok,
           fmt("transform conformance: ifft max rel err %.2e (N up to 2048), "
               "combine vs direct max rel err %.2e (1000 cases)",
               worst_ifft, worst_combine));
}

// ---- criterion 8: a fixed CLI invocation produces byte-identical CSV across
// runs and thread counts.
void criterion_determinism() {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path();
    auto run_once = [&](const std::string& name, const std::string& threads) {
        const fs::path out = dir / name;
        std::ostringstream so, se;
        std::vector<std::string> args{
            "ccdf", "--n", "64", "--u", "4", "--i", "2", "--trials", "5000",
            "--seed", "11", "--scheme", "both", "--shift-method", "random",
            "--out", out.string()};
        if (!threads.empty()) {
            args.push_back("--threads");
            args.push_back(threads);
        }
        const int code = run_cli(args, so, se);
        std::ifstream in(out, std::ios::binary);
        std::ostringstream content;
        content << in.rdbuf();
        fs::remove(out);
        fs::remove(out.string() + ".shifts");
        return std::make_pair(code, content.str());
    };
    const auto a = run_once("slm_acc_a.csv", "");
    const auto b = run_once("slm_acc_b.csv", "");
    const auto c = run_once("slm_acc_c.csv", "1");
    const auto d = run_once("slm_acc_d.csv", "3");
    const bool ok = a.first == 0 && b.first == 0 && c.first == 0 &&
                    d.first == 0 && a.second == b.second &&
                    a.second == c.second && a.second == d.second &&
                    !a.second.empty();
    report(8, ok,
           fmt("determinism: %zu-byte CSV identical across repeat runs and "
               "--threads {default,1,3}",
               a.second.size()));
}

}  // namespace

int main() {
    criterion_scheme_equivalence();
    criterion_ccrr_table();
    criterion_op_counts();
    criterion_correlation_bound();
    criterion_mj_guarantee();
    criterion_ccdf_behavior();
    criterion_transform_conformance();
    criterion_determinism();
    std::printf("%s\n", g_all_ok ? "acceptance: ALL PASS" : "acceptance: FAILURES");
    return g_all_ok ? 0 : 1;
}
