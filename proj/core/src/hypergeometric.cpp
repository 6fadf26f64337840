#include "dpa/hypergeometric.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <limits>

namespace dpa {

namespace {

using cplx = std::complex<double>;

constexpr double kTargetAbs = 1e-17;
constexpr double kEps = std::numeric_limits<double>::epsilon();

double rational(const TerminatingSeries& s, int k) {
    const double num = (s.a + k) * (s.b + k);
    const double den = (s.c ? (*s.c + k) : 1.0) * (k + 1.0);
    return num / den;
}

struct Scan {
    double lmax;  // log of the largest |t_k|
    int last;     // index of the last nonzero term
};

Scan scan(const TerminatingSeries& s) {
    Scan out{0.0, 0};
    if (s.z == 0.0) return out;
    const double lz = std::log(std::abs(s.z));
    double L = 0.0;
    for (int k = 0; k < s.K; ++k) {
        const double r = rational(s, k);
        if (r == 0.0) break;
        L += std::log(std::abs(r)) + lz;
        out.lmax = std::max(out.lmax, L);
        out.last = k + 1;
    }
    return out;
}

int required_bits(const Scan& sc, double log_prefactor) {
    const double log_err = log_prefactor + sc.lmax + std::log(sc.last + 1.0);
    if (log_err + std::log(kEps) < std::log(kTargetAbs) && sc.lmax < 600.0) return 53;
    const double bits = (log_err - std::log(kTargetAbs * 0.1)) / std::log(2.0);
    return std::max(64, static_cast<int>(std::ceil(bits)) + 8);
}

cplx combine(double log_prefactor, double phase, double log_abs_sum, double arg_sum) {
    return std::polar(std::exp(log_prefactor + log_abs_sum), phase + arg_sum);
}

cplx sum_double(const TerminatingSeries& s, int last) {
    cplx term(1.0, 0.0), sum(1.0, 0.0);
    for (int k = 0; k < last; ++k) {
        term *= rational(s, k) * s.z;
        sum += term;
    }
    return sum;
}

class MpComplexSum {
public:
    explicit MpComplexSum(int bits) {
        for (mpfr_ptr v : {tr_, ti_, sr_, si_, zr_, zi_, a_, b_, r_})
            mpfr_init2(v, bits);
    }
    ~MpComplexSum() {
        for (mpfr_ptr v : {tr_, ti_, sr_, si_, zr_, zi_, a_, b_, r_})
            mpfr_clear(v);
    }
    MpComplexSum(const MpComplexSum&) = delete;
    MpComplexSum& operator=(const MpComplexSum&) = delete;

    // Returns (log|sum|, arg sum); log|sum| = -inf for an exact zero.
    std::pair<double, double> run(const TerminatingSeries& s, int last) {
        mpfr_set_d(tr_, 1.0, MPFR_RNDN);
        mpfr_set_d(ti_, 0.0, MPFR_RNDN);
        mpfr_set_d(sr_, 1.0, MPFR_RNDN);
        mpfr_set_d(si_, 0.0, MPFR_RNDN);
        mpfr_set_d(zr_, s.z.real(), MPFR_RNDN);
        mpfr_set_d(zi_, s.z.imag(), MPFR_RNDN);
        for (int k = 0; k < last; ++k) {
            mpfr_set_d(r_, (s.a + k) * (s.b + k), MPFR_RNDN);
            mpfr_div_d(r_, r_, (s.c ? (*s.c + k) : 1.0) * (k + 1.0), MPFR_RNDN);
            mpfr_mul(tr_, tr_, r_, MPFR_RNDN);
            mpfr_mul(ti_, ti_, r_, MPFR_RNDN);
            // (tr + i ti)(zr + i zi)
            mpfr_mul(a_, tr_, zr_, MPFR_RNDN);
            mpfr_mul(b_, ti_, zi_, MPFR_RNDN);
            mpfr_sub(a_, a_, b_, MPFR_RNDN);
            mpfr_mul(b_, tr_, zi_, MPFR_RNDN);
            mpfr_mul(r_, ti_, zr_, MPFR_RNDN);
            mpfr_add(ti_, b_, r_, MPFR_RNDN);
            mpfr_set(tr_, a_, MPFR_RNDN);
            mpfr_add(sr_, sr_, tr_, MPFR_RNDN);
            mpfr_add(si_, si_, ti_, MPFR_RNDN);
        }
        mpfr_hypot(a_, sr_, si_, MPFR_RNDN);
        if (mpfr_zero_p(a_)) return {-std::numeric_limits<double>::infinity(), 0.0};
        mpfr_log(a_, a_, MPFR_RNDN);
        mpfr_atan2(b_, si_, sr_, MPFR_RNDN);
        return {mpfr_get_d(a_, MPFR_RNDN), mpfr_get_d(b_, MPFR_RNDN)};
    }

private:
    mpfr_t tr_, ti_, sr_, si_, zr_, zi_, a_, b_, r_;
};

}  // namespace

int series_precision_bits(const TerminatingSeries& s, double log_prefactor) {
    return required_bits(scan(s), log_prefactor);
}

std::complex<double> series_double(const TerminatingSeries& s) {
    return sum_double(s, scan(s).last);
}

std::complex<double> scaled_series(const TerminatingSeries& s, double log_prefactor, double phase) {
    if (!std::isfinite(log_prefactor)) return {0.0, 0.0};
    const Scan sc = scan(s);
    const int bits = required_bits(sc, log_prefactor);
    if (bits == 53) {
        const cplx sum = sum_double(s, sc.last);
        if (sum == 0.0) return {0.0, 0.0};
        return combine(log_prefactor, phase, std::log(std::abs(sum)), std::arg(sum));
    }
    MpComplexSum acc(bits);
    const auto [log_abs, arg] = acc.run(s, sc.last);
    if (!std::isfinite(log_abs)) return {0.0, 0.0};
    return combine(log_prefactor, phase, log_abs, arg);
}

}  // namespace dpa
