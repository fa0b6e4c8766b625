#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "slm/signal.hpp"
#include "slm/transform.hpp"

namespace slm {

/// Correlation profile between two phase rotation vectors,
/// rho(tau) = |sum_k Pj(k) conj(Pv(k)) W^{k tau}|^2 / N^2, tau = 0..N-1.
struct RhoProfile {
    std::vector<double> values;
    double max_value = 0.0;
    std::vector<int> argmax;  // every tau within 1e-12 of the maximum
};

RhoProfile rho_profile(const PhaseRotationVector& pj,
                       const PhaseRotationVector& pv);

/// For each subblock m, the M values of tau (mod N) where the shift pair
/// (row_j, row_v) leaves a nonzero correlation term: tau = -(a_m^v - a_m^j)
/// mod L, stepped by L.
std::vector<std::vector<int>> predicted_nonzero_taus(const StageTap& tap,
                                                     std::span<const int> row_j,
                                                     std::span<const int> row_v);

/// Computational complexity reduction ratio of the cyclic-shift scheme over
/// conventional SLM, (n-i)(U-1)/(nU) * 100, rounded half-up to one decimal.
double ccrr(int n, int i, int u);

enum class Scheme { conventional, proposed };

struct ComplexityModel {
    Scheme scheme;
    int n, i, u;  // i unused for the conventional scheme
    std::uint64_t cmul_total;
    std::uint64_t cadd_total;
};

/// Closed-form operation totals for generating the U alternatives.
/// Conventional: U (N/2) log2 N muls and U N log2 N adds. Proposed:
/// (N/2) log2 N + (U-1) i (N/2) muls and the analogous additions.
ComplexityModel complexity_model(Scheme scheme, int n, int i, int u);

struct CcrrTable {
    struct Entry {
        std::size_t n_fft;
        int u;
        int i;
        double value;  // percent, one decimal
    };
    std::vector<Entry> entries;  // N in {64,256,1024} x U in {4,8,16} x i in 1..4

    double at(std::size_t n_fft, int u, int i) const;
};

CcrrTable ccrr_table();

std::string format_ccrr_table_text(const CcrrTable& table);
/// Long form: header n,i,u,ccrr then one data row per entry.
std::string format_ccrr_table_csv(const CcrrTable& table);

}  // namespace slm
