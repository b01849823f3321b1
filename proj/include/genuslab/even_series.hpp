// Formal even power series 1 + sum a_k x^{2k} (or sum a_k x^{2k}),
// exact through a fixed order.
#pragma once

#include <stdexcept>
#include <vector>

#include "genuslab/rational.hpp"

namespace genuslab {

/// Truncated even series with exact rational coefficients a_1..a_order for
/// x^2, x^4, ..., x^{2*order}. The constant term is 1 when unit_constant is
/// set and 0 otherwise; it is stored implicitly.
class EvenPowerSeries {
public:
    EvenPowerSeries(unsigned order, bool unit_constant,
                    std::vector<ExactRational> coeffs)
        : order_(order), unit_(unit_constant), a_(std::move(coeffs)) {
        if (order_ == 0) throw std::invalid_argument("EvenPowerSeries: order >= 1");
        if (a_.size() != order_)
            throw std::invalid_argument("EvenPowerSeries: coefficient count != order");
    }

    static EvenPowerSeries zero(unsigned order, bool unit_constant = false) {
        return EvenPowerSeries(order, unit_constant,
                               std::vector<ExactRational>(order, ExactRational(0)));
    }

    unsigned order() const { return order_; }
    bool has_unit_constant() const { return unit_; }

    /// 1-based: coeff(k) is the coefficient of x^{2k}.
    const ExactRational& coeff(unsigned k) const {
        if (k == 0 || k > order_)
            throw std::out_of_range("EvenPowerSeries::coeff: index out of range");
        return a_[k - 1];
    }

    friend EvenPowerSeries operator*(const EvenPowerSeries& f, const EvenPowerSeries& g) {
        if (f.order_ != g.order_)
            throw std::invalid_argument("EvenPowerSeries: order mismatch");
        EvenPowerSeries out = zero(f.order_, f.unit_ && g.unit_);
        for (unsigned k = 1; k <= f.order_; ++k) {
            ExactRational c(0);
            if (g.unit_) c += f.a_[k - 1];
            if (f.unit_) c += g.a_[k - 1];
            for (unsigned i = 1; i < k; ++i) c += f.a_[i - 1] * g.a_[k - i - 1];
            out.a_[k - 1] = c;
        }
        return out;
    }

    /// log of a unit series; result has zero constant term.
    /// From G'F = F': g_k = f_k - (1/k) sum_{j<k} j g_j f_{k-j}.
    EvenPowerSeries log() const {
        if (!unit_) throw std::domain_error("EvenPowerSeries::log: needs constant term 1");
        EvenPowerSeries g = zero(order_, false);
        for (unsigned k = 1; k <= order_; ++k) {
            ExactRational acc(0);
            for (unsigned j = 1; j < k; ++j)
                acc += ExactRational(j) * g.a_[j - 1] * a_[k - j - 1];
            g.a_[k - 1] = a_[k - 1] - acc / ExactRational(k);
        }
        return g;
    }

    /// exp of a zero-constant series; result is a unit series.
    /// From E' = U'E: k e_k = sum_{j<=k} j u_j e_{k-j}, with e_0 = 1.
    EvenPowerSeries exp() const {
        if (unit_) throw std::domain_error("EvenPowerSeries::exp: needs constant term 0");
        EvenPowerSeries e = zero(order_, true);
        for (unsigned k = 1; k <= order_; ++k) {
            ExactRational acc = ExactRational(k) * a_[k - 1];  // j = k term, e_0 = 1
            for (unsigned j = 1; j < k; ++j)
                acc += ExactRational(j) * a_[j - 1] * e.a_[k - j - 1];
            e.a_[k - 1] = acc / ExactRational(k);
        }
        return e;
    }

    /// Multiplicative inverse of a unit series.
    EvenPowerSeries reciprocal() const {
        if (!unit_)
            throw std::domain_error("EvenPowerSeries::reciprocal: needs constant term 1");
        EvenPowerSeries r = zero(order_, true);
        for (unsigned k = 1; k <= order_; ++k) {
            ExactRational acc = a_[k - 1];  // j = k term, r_0 = 1
            for (unsigned j = 1; j < k; ++j) acc += a_[j - 1] * r.a_[k - j - 1];
            r.a_[k - 1] = -acc;
        }
        return r;
    }

private:
    unsigned order_;
    bool unit_;
    std::vector<ExactRational> a_;
};

}  // namespace genuslab
