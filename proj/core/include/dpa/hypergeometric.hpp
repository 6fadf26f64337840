#pragma once

#include <complex>
#include <optional>

namespace dpa {

// Terminating series sum_{k=0}^{K} t_k with t_0 = 1 and
//   t_{k+1} / t_k = (a + k)(b + k) / ((c + k)(k + 1)) * z     (2F1)
//   t_{k+1} / t_k = (a + k)(b + k) / (k + 1) * z              (2F0, when c is empty)
// a, b, c must be exactly representable (integers or half-integers here).
struct TerminatingSeries {
    double a, b;
    std::optional<double> c;
    std::complex<double> z;
    int K;
};

// Returns exp(log_prefactor + i phase) * sum. The sum is accumulated in double
// precision when the estimated cancellation error stays below ~1e-17 absolute
// on the scaled result; otherwise it is accumulated with MPFR at a working
// precision chosen from the largest term.
std::complex<double> scaled_series(const TerminatingSeries& s, double log_prefactor, double phase);

// Working precision (bits) the evaluator would use; 53 means plain double.
int series_precision_bits(const TerminatingSeries& s, double log_prefactor);

// Plain double-precision evaluation of the unscaled sum, for comparison.
std::complex<double> series_double(const TerminatingSeries& s);

}  // namespace dpa
