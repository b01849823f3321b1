// Bernoulli numbers, rationalized even zeta values, and the closed form
// for the leading L-polynomial coefficients h_n.
#pragma once

#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "genuslab/interval.hpp"
#include "genuslab/rational.hpp"

namespace genuslab {

inline BigInt factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned k = 2; k <= n; ++k) f *= k;
    return f;
}

inline BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt b = 1;
    for (unsigned i = 0; i < k; ++i) {
        b *= n - i;
        b /= i + 1;
    }
    return b;
}

inline BigInt pow2(unsigned e) {
    return BigInt(1) << e;
}

/// Modern-convention Bernoulli number B_n (B_0 = 1, B_1 = -1/2, B_3 = 0, ...),
/// computed by the defining recurrence sum_{k=0..n} C(n+1,k) B_k = 0 and
/// memoized for the lifetime of the process. Safe for concurrent callers.
inline ExactRational bernoulli(unsigned n) {
    static std::vector<ExactRational> table{ExactRational(1)};
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    while (table.size() <= n) {
        const unsigned m = static_cast<unsigned>(table.size());
        ExactRational acc(0);
        for (unsigned k = 0; k < m; ++k)
            acc += ExactRational(binomial(m + 1, k)) * table[k];
        table.push_back(-acc / ExactRational(BigInt(m) + 1));
    }
    return table[n];
}

/// Unsigned even-index Bernoulli numbers, index shifted so that
/// hirzebruch_B(1) = 1/6, hirzebruch_B(2) = 1/30, hirzebruch_B(3) = 1/42, ...
/// Equals |bernoulli(2n)|.
inline ExactRational hirzebruch_B(unsigned n) {
    if (n == 0)
        throw std::invalid_argument("hirzebruch_B: n must be >= 1");
    return bernoulli(2 * n).abs();
}

/// The exact rational r with zeta(2n) = r * pi^(2n), from Euler's formula
/// zeta(2n) = (-1)^(n+1) B_{2n} (2 pi)^{2n} / (2 (2n)!). Always positive.
inline ExactRational zeta_even_rational(unsigned n) {
    if (n == 0)
        throw std::invalid_argument("zeta_even_rational: n must be >= 1");
    return ExactRational(pow2(2 * n - 1), factorial(2 * n)) * hirzebruch_B(n);
}

/// h_n = 2^{2n} (2^{2n-1} - 1) B_n / (2n)!  (B_n unsigned convention),
/// the coefficient of p_n in the degree-4n L-polynomial. Also equals
/// zeta_even_rational(n) * (2^{2n} - 2).
inline ExactRational h_closed_form(unsigned n) {
    if (n == 0)
        throw std::invalid_argument("h_closed_form: n must be >= 1");
    return ExactRational(pow2(2 * n) * (pow2(2 * n - 1) - 1), factorial(2 * n)) *
           hirzebruch_B(n);
}

namespace detail {
// First 61 significant decimal digits of pi; pi lies strictly between
// PI_DIGITS/10^60 and (PI_DIGITS+1)/10^60.
inline const char* pi_digits() {
    return "3141592653589793238462643383279502884197169399375105820974944";
}
}  // namespace detail

/// Interval of width < 10^-digits containing pi, cut from a stored decimal
/// expansion. Supports digits in [1, 55].
inline RationalInterval pi_enclosure(unsigned digits) {
    if (digits == 0)
        throw std::invalid_argument("pi_enclosure: digits must be >= 1");
    if (digits > 55)
        throw std::invalid_argument("pi_enclosure: at most 55 digits stored");
    const std::string all = detail::pi_digits();  // 61 digits = 1 + 60 fractional
    const unsigned keep = digits + 2;             // fractional digits retained
    const BigInt truncated(all.substr(0, 1 + keep));
    const BigInt scale = [&] {
        BigInt s = 1;
        for (unsigned i = 0; i < keep; ++i) s *= 10;
        return s;
    }();
    return {ExactRational(truncated, scale), ExactRational(truncated + 1, scale)};
}

/// Enclosure of zeta(s) - 1 for an integer s >= 2: lower bound from the
/// partial sum over m = 2..terms, upper bound adds the integral tail
/// (terms - 1)^{1-s} / (s - 1), which dominates sum_{m > terms} m^{-s}.
inline RationalInterval zeta_minus_one_interval(unsigned s, unsigned terms = 20) {
    if (s < 2)
        throw std::invalid_argument("zeta_minus_one_interval: s must be >= 2");
    if (terms < 2)
        throw std::invalid_argument("zeta_minus_one_interval: need terms >= 2");
    ExactRational partial(0);
    for (unsigned m = 2; m <= terms; ++m)
        partial += ExactRational(BigInt(1), BigInt(m)).pow(s);
    const ExactRational tail =
        ExactRational(BigInt(1), BigInt(terms - 1)).pow(s - 1) *
        ExactRational(BigInt(1), BigInt(s - 1));
    return {partial, partial + tail};
}

}  // namespace genuslab
