#include "slm/analysis.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace slm {

RhoProfile rho_profile(const PhaseRotationVector& pj,
                       const PhaseRotationVector& pv) {
    if (pj.size() != pv.size())
        throw std::invalid_argument("rho_profile: length mismatch");
    const std::size_t n_fft = pj.size();
    if (n_fft == 0) throw std::invalid_argument("rho_profile: empty vectors");
    const TwiddleTable tw(n_fft);
    // product term Pj(k) * conj(Pv(k)) is tau-independent
    CVec prod(n_fft);
    for (std::size_t k = 0; k < n_fft; ++k) prod[k] = pj[k] * std::conj(pv[k]);

    RhoProfile profile;
    profile.values.resize(n_fft);
    const double norm = static_cast<double>(n_fft) * static_cast<double>(n_fft);
    for (std::size_t tau = 0; tau < n_fft; ++tau) {
        Cplx acc = 0.0;
        for (std::size_t k = 0; k < n_fft; ++k)
            acc += prod[k] * tw.root_pos(k * tau);  // W^{k tau}
        profile.values[tau] = std::norm(acc) / norm;
        profile.max_value = std::max(profile.max_value, profile.values[tau]);
    }
    for (std::size_t tau = 0; tau < n_fft; ++tau) {
        if (profile.values[tau] >= profile.max_value - 1e-12)
            profile.argmax.push_back(static_cast<int>(tau));
    }
    return profile;
}

std::vector<std::vector<int>> predicted_nonzero_taus(const StageTap& tap,
                                                     std::span<const int> row_j,
                                                     std::span<const int> row_v) {
    if (row_j.size() != static_cast<std::size_t>(tap.num_subblocks) ||
        row_v.size() != static_cast<std::size_t>(tap.num_subblocks))
        throw std::invalid_argument("predicted_nonzero_taus: row width mismatch");
    const int len = static_cast<int>(tap.subblock_len);
    std::vector<std::vector<int>> taus(tap.num_subblocks);
    for (int m = 0; m < tap.num_subblocks; ++m) {
        const int d = row_v[m] - row_j[m];
        // tau == -d (mod L); M such values in [0, N-1]
        const int tau0 = ((-d) % len + len) % len;
        taus[m].reserve(tap.num_subblocks);
        for (int c = 0; c < tap.num_subblocks; ++c)
            taus[m].push_back(tau0 + c * len);
    }
    return taus;
}

namespace {

// Tenths of a percent, rounded half-up; exact in integer arithmetic.
std::uint64_t ccrr_tenths(int n, int i, int u) {
    const std::uint64_t num =
        1000ull * static_cast<std::uint64_t>(n - i) * static_cast<std::uint64_t>(u - 1);
    const std::uint64_t den = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(u);
    return (2 * num + den) / (2 * den);
}

}  // namespace

double ccrr(int n, int i, int u) {
    if (n < 2 || i < 1 || i > n - 1 || u < 1)
        throw std::invalid_argument("ccrr: need n >= 2, 1 <= i <= n-1, U >= 1");
    return static_cast<double>(ccrr_tenths(n, i, u)) / 10.0;
}

ComplexityModel complexity_model(Scheme scheme, int n, int i, int u) {
    if (n < 2 || u < 1)
        throw std::invalid_argument("complexity_model: need n >= 2 and U >= 1");
    const std::uint64_t n_fft = 1ull << n;
    const std::uint64_t half_log = (n_fft / 2) * static_cast<std::uint64_t>(n);
    const std::uint64_t full_log = n_fft * static_cast<std::uint64_t>(n);
    ComplexityModel model{scheme, n, i, u, 0, 0};
    switch (scheme) {
        case Scheme::conventional:
            model.cmul_total = static_cast<std::uint64_t>(u) * half_log;
            model.cadd_total = static_cast<std::uint64_t>(u) * full_log;
            break;
        case Scheme::proposed:
            if (i < 1 || i > n - 1)
                throw std::invalid_argument("complexity_model: need 1 <= i <= n-1");
            model.cmul_total = half_log + static_cast<std::uint64_t>(u - 1) *
                                              static_cast<std::uint64_t>(i) * (n_fft / 2);
            model.cadd_total = full_log + static_cast<std::uint64_t>(u - 1) *
                                              static_cast<std::uint64_t>(i) * n_fft;
            break;
        default:
            throw std::invalid_argument("complexity_model: unknown scheme");
    }
    return model;
}

CcrrTable ccrr_table() {
    CcrrTable table;
    for (std::size_t n_fft : {64, 256, 1024}) {
        const int n = log2_exact(n_fft);
        for (int u : {4, 8, 16})
            for (int i = 1; i <= 4; ++i)
                table.entries.push_back({n_fft, u, i, ccrr(n, i, u)});
    }
    return table;
}

double CcrrTable::at(std::size_t n_fft, int u, int i) const {
    for (const Entry& e : entries) {
        if (e.n_fft == n_fft && e.u == u && e.i == i) return e.value;
    }
    throw std::invalid_argument("CcrrTable: no such entry");
}

std::string format_ccrr_table_text(const CcrrTable& table) {
    std::ostringstream out;
    char buf[32];
    out << "  N  ";
    for (std::size_t n_fft : {64, 256, 1024}) {
        std::snprintf(buf, sizeof buf, "%17zu ", n_fft);
        out << buf;
    }
    out << "\n  U  ";
    for (int rep = 0; rep < 3; ++rep)
        for (int u : {4, 8, 16}) {
            std::snprintf(buf, sizeof buf, "%5d ", u);
            out << buf;
        }
    out << '\n';
    for (int i = 1; i <= 4; ++i) {
        std::snprintf(buf, sizeof buf, "i=%d  ", i);
        out << buf;
        for (std::size_t n_fft : {64, 256, 1024})
            for (int u : {4, 8, 16}) {
                std::snprintf(buf, sizeof buf, "%5.1f ", table.at(n_fft, u, i));
                out << buf;
            }
        out << '\n';
    }
    return out.str();
}

std::string format_ccrr_table_csv(const CcrrTable& table) {
    std::ostringstream out;
    out << "n,i,u,ccrr\n";
    char buf[64];
    for (const auto& e : table.entries) {
        std::snprintf(buf, sizeof buf, "%d,%d,%d,%.1f\n", log2_exact(e.n_fft), e.i,
                      e.u, e.value);
        out << buf;
    }
    return out.str();
}

}  // namespace slm
