// Exact rational scalar type: arbitrary-precision, always in lowest terms.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>

namespace genuslab {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational in lowest terms with positive denominator.
/// All arithmetic is exact and closed; values are immutable in spirit
/// (operations return new values).
class ExactRational {
public:
    ExactRational() : v_(0) {}
    ExactRational(long long n) : v_(n) {}
    ExactRational(const BigInt& n) : v_(n) {}
    ExactRational(const BigInt& num, const BigInt& den) {
        if (den == 0)
            throw std::invalid_argument("ExactRational: zero denominator");
        v_ = boost::multiprecision::cpp_rational(num);
        v_ /= boost::multiprecision::cpp_rational(den);
    }
    ExactRational(long long num, long long den)
        : ExactRational(BigInt(num), BigInt(den)) {}

    static ExactRational from_decimal_strings(const std::string& num,
                                              const std::string& den) {
        return ExactRational(BigInt(num), BigInt(den));
    }

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    int sign() const { return v_.sign(); }
    bool is_zero() const { return v_.is_zero(); }

    ExactRational operator-() const { return ExactRational(-v_); }
    ExactRational abs() const { return v_ < 0 ? ExactRational(-v_) : *this; }

    ExactRational& operator+=(const ExactRational& o) { v_ += o.v_; return *this; }
    ExactRational& operator-=(const ExactRational& o) { v_ -= o.v_; return *this; }
    ExactRational& operator*=(const ExactRational& o) { v_ *= o.v_; return *this; }
    ExactRational& operator/=(const ExactRational& o) {
        if (o.is_zero())
            throw std::domain_error("ExactRational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
    friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
    friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
    friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }

    friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const ExactRational& a, const ExactRational& b) { return a.v_ != b.v_; }
    friend bool operator<(const ExactRational& a, const ExactRational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const ExactRational& a, const ExactRational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const ExactRational& a, const ExactRational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const ExactRational& a, const ExactRational& b) { return a.v_ >= b.v_; }

    ExactRational pow(unsigned e) const {
        ExactRational acc(1);
        ExactRational base = *this;
        while (e) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    std::string to_string() const {
        std::string s = numerator().str();
        if (denominator() != 1) {
            s += '/';
            s += denominator().str();
        }
        return s;
    }

private:
    explicit ExactRational(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}
    boost::multiprecision::cpp_rational v_;
};

inline ExactRational rat(long long num, long long den = 1) {
    return ExactRational(num, den);
}

}  // namespace genuslab
