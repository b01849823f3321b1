// Signature oracle on products of complex projective spaces: Pontryagin
// classes via the Cartan formula, L-numbers by pairing with the fundamental
// class, signatures by multiplicativity.
#pragma once

#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "genuslab/genus.hpp"
#include "genuslab/numbers.hpp"
#include "genuslab/rational.hpp"

namespace genuslab {

/// CP^{n_1} x ... x CP^{n_t}, real dimension 2 * sum n_i.
struct ProjectiveProduct {
    std::vector<unsigned> factors;

    explicit ProjectiveProduct(std::vector<unsigned> f) : factors(std::move(f)) {
        if (factors.empty())
            throw std::invalid_argument("ProjectiveProduct: needs at least one factor");
        for (unsigned n : factors)
            if (n == 0) throw std::invalid_argument("ProjectiveProduct: factors must be >= 1");
    }
    ProjectiveProduct(std::initializer_list<unsigned> f)
        : ProjectiveProduct(std::vector<unsigned>(f)) {}

    unsigned complex_dimension() const {
        return std::accumulate(factors.begin(), factors.end(), 0u);
    }
    unsigned real_dimension() const { return 2 * complex_dimension(); }
};

/// Element of H*(prod CP^{n_i}; Q) = Q[x_1..x_t]/(x_i^{n_i+1}), stored
/// densely by exponent vector. x_i has cohomological degree 2.
class TruncatedCohomology {
public:
    explicit TruncatedCohomology(std::vector<unsigned> bounds)
        : bounds_(std::move(bounds)), coef_(total_size(bounds_), ExactRational(0)) {}

    static TruncatedCohomology one(std::vector<unsigned> bounds) {
        TruncatedCohomology c(std::move(bounds));
        c.coef_[0] = ExactRational(1);
        return c;
    }

    const std::vector<unsigned>& bounds() const { return bounds_; }
    bool is_zero() const {
        for (const auto& c : coef_)
            if (!c.is_zero()) return false;
        return true;
    }

    ExactRational& at(const std::vector<unsigned>& exps) { return coef_[index(exps)]; }
    const ExactRational& at(const std::vector<unsigned>& exps) const {
        return coef_[index(exps)];
    }

    /// Coefficient of the top monomial x_1^{n_1} ... x_t^{n_t}: the pairing
    /// with the fundamental class in the standard complex orientation.
    const ExactRational& top_coefficient() const { return coef_.back(); }

    friend TruncatedCohomology operator*(const TruncatedCohomology& a,
                                         const TruncatedCohomology& b) {
        if (a.bounds_ != b.bounds_)
            throw std::invalid_argument("TruncatedCohomology: ring mismatch");
        TruncatedCohomology out(a.bounds_);
        const std::size_t t = a.bounds_.size();
        std::vector<unsigned> ea(t), eb(t);
        for (std::size_t i = 0; i < a.coef_.size(); ++i) {
            if (a.coef_[i].is_zero()) continue;
            a.unindex(i, ea);
            for (std::size_t j = 0; j < b.coef_.size(); ++j) {
                if (b.coef_[j].is_zero()) continue;
                b.unindex(j, eb);
                bool fits = true;
                std::vector<unsigned> e(t);
                for (std::size_t f = 0; f < t; ++f) {
                    e[f] = ea[f] + eb[f];
                    if (e[f] > a.bounds_[f]) {
                        fits = false;
                        break;
                    }
                }
                if (fits) out.coef_[out.index(e)] += a.coef_[i] * b.coef_[j];
            }
        }
        return out;
    }

    TruncatedCohomology& operator+=(const TruncatedCohomology& o) {
        if (bounds_ != o.bounds_)
            throw std::invalid_argument("TruncatedCohomology: ring mismatch");
        for (std::size_t i = 0; i < coef_.size(); ++i) coef_[i] += o.coef_[i];
        return *this;
    }

    TruncatedCohomology scaled(const ExactRational& r) const {
        TruncatedCohomology out(bounds_);
        for (std::size_t i = 0; i < coef_.size(); ++i) out.coef_[i] = coef_[i] * r;
        return out;
    }

private:
    static std::size_t total_size(const std::vector<unsigned>& bounds) {
        std::size_t s = 1;
        for (unsigned b : bounds) s *= b + 1;
        return s;
    }
    std::size_t index(const std::vector<unsigned>& exps) const {
        std::size_t idx = 0;
        for (std::size_t f = 0; f < bounds_.size(); ++f) {
            if (exps[f] > bounds_[f])
                throw std::out_of_range("TruncatedCohomology: exponent beyond truncation");
            idx = idx * (bounds_[f] + 1) + exps[f];
        }
        return idx;
    }
    void unindex(std::size_t idx, std::vector<unsigned>& exps) const {
        for (std::size_t f = bounds_.size(); f-- > 0;) {
            exps[f] = static_cast<unsigned>(idx % (bounds_[f] + 1));
            idx /= bounds_[f] + 1;
        }
    }

    std::vector<unsigned> bounds_;
    std::vector<ExactRational> coef_;
};

/// Pontryagin classes p_1..p_max_weight of the product, from the Cartan
/// formula: the total class is prod_i (1 + x_i^2)^{n_i + 1}; p_k is its
/// piece of cohomological degree 4k. Classes beyond the dimension are zero.
inline std::vector<TruncatedCohomology> pontryagin_classes(const ProjectiveProduct& m,
                                                           unsigned max_weight) {
    const std::vector<unsigned>& n = m.factors;
    TruncatedCohomology total = TruncatedCohomology::one(n);
    for (std::size_t f = 0; f < n.size(); ++f) {
        TruncatedCohomology factor(n);
        std::vector<unsigned> e(n.size(), 0);
        for (unsigned k = 0; 2 * k <= n[f]; ++k) {
            e[f] = 2 * k;
            factor.at(e) = ExactRational(binomial(n[f] + 1, k));
        }
        total = total * factor;
    }
    std::vector<TruncatedCohomology> p;
    p.reserve(max_weight);
    for (unsigned k = 1; k <= max_weight; ++k) p.emplace_back(n);
    // split by total exponent degree: p_k collects monomials with sum e_i = 2k
    std::vector<unsigned> e(n.size(), 0);
    const std::function<void(std::size_t)> walk = [&](std::size_t f) {
        if (f == n.size()) {
            unsigned deg = 0;
            for (unsigned ei : e) deg += ei;
            if (deg == 0 || deg % 2 != 0) return;
            const unsigned k = deg / 2;
            if (k >= 1 && k <= max_weight) p[k - 1].at(e) = total.at(e);
            return;
        }
        for (e[f] = 0; e[f] <= n[f]; ++e[f]) walk(f + 1);
        e[f] = 0;
    };
    walk(0);
    return p;
}

/// sigma(CP^{even}) = 1, sigma(CP^{odd}) = 0, multiplicative over products.
inline int signature(const ProjectiveProduct& m) {
    int s = 1;
    for (unsigned n : m.factors) s *= (n % 2 == 0) ? 1 : 0;
    return s;
}

/// <L_m(p), [M]> for M of real dimension 4m: substitute the Pontryagin
/// classes into the weight-m L-polynomial and read off the top coefficient.
inline ExactRational l_number(const ProjectiveProduct& m) {
    if (m.real_dimension() % 4 != 0)
        throw std::invalid_argument("l_number: dimension must be divisible by 4");
    const unsigned w = m.real_dimension() / 4;
    const GradedPolynomial lw = genus_polynomial(Genus::L, w);
    const std::vector<TruncatedCohomology> p = pontryagin_classes(m, w);
    TruncatedCohomology acc(m.factors);
    for (const auto& [mono, c] : lw.terms()) {
        TruncatedCohomology prod = TruncatedCohomology::one(m.factors);
        for (unsigned part : mono.parts()) prod = prod * p[part - 1];
        acc += prod.scaled(c);
    }
    return acc.top_coefficient();
}

/// The Hirzebruch signature identity on this product, checked exactly.
inline bool hirzebruch_check(const ProjectiveProduct& m) {
    return l_number(m) == ExactRational(signature(m));
}

}  // namespace genuslab
