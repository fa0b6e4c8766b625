#include "slm/signal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace slm {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

int log2_exact(std::size_t n) {
    if (!is_pow2(n)) throw std::invalid_argument("length is not a power of two");
    int l = 0;
    while ((std::size_t{1} << l) < n) ++l;
    return l;
}

void require_finite(const CVec& v, const char* what) {
    for (const Cplx& z : v) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw std::invalid_argument(std::string(what) + ": non-finite sample");
    }
}

void require_symbol_sequence(const CVec& v) {
    if (v.size() < 4 || !is_pow2(v.size()))
        throw std::invalid_argument("symbol sequence length must be a power of two, N >= 4");
    require_finite(v, "symbol sequence");
}

PaprValue papr(const SignalSequence& x) {
    if (x.empty()) throw std::invalid_argument("papr: empty sequence");
    require_finite(x, "papr");
    double peak = 0.0;
    double sum = 0.0;
    for (const Cplx& z : x) {
        const double p = std::norm(z);
        peak = std::max(peak, p);
        sum += p;
    }
    if (sum == 0.0) throw std::invalid_argument("papr: all-zero sequence");
    const double ratio = peak / (sum / static_cast<double>(x.size()));
    return {ratio, 10.0 * std::log10(ratio)};
}

double rel_linf(const CVec& a, const CVec& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("rel_linf: length mismatch");
    double diff = 0.0;
    double ref = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        diff = std::max(diff, std::abs(a[k] - b[k]));
        ref = std::max(ref, std::abs(b[k]));
    }
    if (ref == 0.0) return diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return diff / ref;
}

CVec elementwise_mul(const CVec& a, const CVec& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("elementwise_mul: length mismatch");
    CVec out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] * b[k];
    return out;
}

SymbolSequence zero_pad_spectrum(const SymbolSequence& x, int factor) {
    if (factor < 1)
        throw std::invalid_argument("zero_pad_spectrum: factor must be >= 1");
    if (factor == 1) return x;
    require_symbol_sequence(x);
    const std::size_t n = x.size();
    SymbolSequence padded(n * static_cast<std::size_t>(factor), Cplx(0.0, 0.0));
    for (std::size_t k = 0; k < n / 2; ++k) padded[k] = x[k];
    for (std::size_t k = n / 2; k < n; ++k)
        padded[padded.size() - n + k] = x[k];
    return padded;
}

}  // namespace slm
