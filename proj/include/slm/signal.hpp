#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace slm {

using Cplx = std::complex<double>;
using CVec = std::vector<Cplx>;

/// Frequency-domain input symbols X(0..N-1).
using SymbolSequence = CVec;
/// Time-domain signal samples x(0..N-1).
using SignalSequence = CVec;

/// Per-element unit-magnitude rotation applied to a SymbolSequence.
using PhaseRotationVector = CVec;

struct PaprValue {
    double linear_ratio;  // max sample power over mean sample power, >= 1
    double db;            // 10*log10(linear_ratio)
};

bool is_pow2(std::size_t n);
int log2_exact(std::size_t n);  // n must be a power of two

/// Throws std::invalid_argument unless every element is finite.
void require_finite(const CVec& v, const char* what);

/// Throws unless the sequence is a finite power-of-two-length vector, N >= 4.
void require_symbol_sequence(const CVec& v);

/// Peak-to-average power ratio of a nonzero finite sequence.
/// The average is the sample mean over the sequence itself.
PaprValue papr(const SignalSequence& x);

/// max_n |a(n) - b(n)| / max_n |b(n)|; sequences must have equal length.
double rel_linf(const CVec& a, const CVec& b);

/// Element-wise product, equal lengths required.
CVec elementwise_mul(const CVec& a, const CVec& b);

/// Frequency-domain zero padding for time-domain oversampling by `factor`:
/// the upper half of the spectrum moves to the tail of the widened vector,
/// (factor-1)*N zeros in between. factor 1 returns the input unchanged.
SymbolSequence zero_pad_spectrum(const SymbolSequence& x, int factor);

}  // namespace slm
