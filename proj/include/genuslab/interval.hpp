// Outward-directed interval arithmetic over exact rationals.
#pragma once

#include <algorithm>
#include <initializer_list>
#include <stdexcept>

#include "genuslab/rational.hpp"

namespace genuslab {

/// Closed interval [lo, hi] with exact rational endpoints. Arithmetic is
/// outward-directed: the result contains every pointwise result of the
/// operands. With exact endpoints no rounding occurs, so the enclosures
/// are in fact tight.
struct RationalInterval {
    ExactRational lo;
    ExactRational hi;

    RationalInterval() = default;
    RationalInterval(ExactRational l, ExactRational h) : lo(std::move(l)), hi(std::move(h)) {
        if (hi < lo)
            throw std::invalid_argument("RationalInterval: lo > hi");
    }

    static RationalInterval point(const ExactRational& r) { return {r, r}; }

    bool contains(const ExactRational& r) const { return lo <= r && r <= hi; }
    ExactRational width() const { return hi - lo; }

    RationalInterval operator-() const { return {-hi, -lo}; }

    friend RationalInterval operator+(const RationalInterval& a, const RationalInterval& b) {
        return {a.lo + b.lo, a.hi + b.hi};
    }
    friend RationalInterval operator-(const RationalInterval& a, const RationalInterval& b) {
        return {a.lo - b.hi, a.hi - b.lo};
    }
    friend RationalInterval operator*(const RationalInterval& a, const RationalInterval& b) {
        const ExactRational c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
        return {std::min({c[0], c[1], c[2], c[3]}), std::max({c[0], c[1], c[2], c[3]})};
    }
    friend RationalInterval operator+(const RationalInterval& a, const ExactRational& b) {
        return {a.lo + b, a.hi + b};
    }
    friend RationalInterval operator+(const ExactRational& a, const RationalInterval& b) {
        return b + a;
    }
    friend RationalInterval operator-(const ExactRational& a, const RationalInterval& b) {
        return RationalInterval::point(a) - b;
    }
    friend RationalInterval operator-(const RationalInterval& a, const ExactRational& b) {
        return {a.lo - b, a.hi - b};
    }
    friend RationalInterval operator*(const ExactRational& a, const RationalInterval& b) {
        return RationalInterval::point(a) * b;
    }
    friend RationalInterval operator*(const RationalInterval& a, const ExactRational& b) {
        return b * a;
    }

    RationalInterval pow(unsigned e) const {
        RationalInterval acc = point(ExactRational(1));
        for (unsigned t = 0; t < e; ++t) acc = acc * *this;
        return acc;
    }
};

/// Three-valued verdict for interval comparisons.
enum class Verdict { True, False, Indeterminate };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::True: return "true";
        case Verdict::False: return "false";
        default: return "indeterminate";
    }
}

/// Certified a < b over the true (unknown) values enclosed by the intervals.
inline Verdict certified_less(const RationalInterval& a, const RationalInterval& b) {
    if (a.hi < b.lo) return Verdict::True;
    if (a.lo >= b.hi) return Verdict::False;
    return Verdict::Indeterminate;
}

inline Verdict certified_less(const RationalInterval& a, const ExactRational& b) {
    return certified_less(a, RationalInterval::point(b));
}

inline Verdict certified_negative(const RationalInterval& a) {
    if (a.hi < ExactRational(0)) return Verdict::True;
    if (a.lo >= ExactRational(0)) return Verdict::False;
    return Verdict::Indeterminate;
}

inline Verdict certified_positive(const RationalInterval& a) {
    if (a.lo > ExactRational(0)) return Verdict::True;
    if (a.hi <= ExactRational(0)) return Verdict::False;
    return Verdict::Indeterminate;
}

/// Certified a >= 0 in the weak sense used for chain orderings.
inline Verdict certified_nonnegative(const RationalInterval& a) {
    if (a.lo >= ExactRational(0)) return Verdict::True;
    if (a.hi < ExactRational(0)) return Verdict::False;
    return Verdict::Indeterminate;
}

}  // namespace genuslab
