// Sparse graded polynomials in the Pontryagin symbols p_1, p_2, ...,
// truncated at a fixed total weight.
#pragma once

#include <map>
#include <stdexcept>

#include "genuslab/partition.hpp"
#include "genuslab/rational.hpp"

namespace genuslab {

/// Element of Q[p_1, p_2, ...] with deg p_j = j, truncated at
/// truncation_weight: ring products drop any term of higher weight.
/// Zero coefficients are never stored.
class GradedPolynomial {
public:
    using TermMap = std::map<Partition, ExactRational>;

    explicit GradedPolynomial(unsigned truncation_weight)
        : truncation_(truncation_weight) {}

    static GradedPolynomial one(unsigned truncation_weight) {
        GradedPolynomial p(truncation_weight);
        p.add_term(Partition{}, ExactRational(1));
        return p;
    }

    unsigned truncation_weight() const { return truncation_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    ExactRational coefficient(const Partition& monomial) const {
        auto it = terms_.find(monomial);
        return it == terms_.end() ? ExactRational(0) : it->second;
    }

    void add_term(const Partition& monomial, const ExactRational& coeff) {
        if (monomial.weight() > truncation_) return;
        if (coeff.is_zero()) return;
        auto [it, inserted] = terms_.emplace(monomial, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    GradedPolynomial& operator+=(const GradedPolynomial& o) {
        for (const auto& [mono, c] : o.terms_) add_term(mono, c);
        return *this;
    }
    friend GradedPolynomial operator+(GradedPolynomial a, const GradedPolynomial& b) {
        return a += b;
    }

    GradedPolynomial scaled(const ExactRational& r) const {
        GradedPolynomial out(truncation_);
        if (r.is_zero()) return out;
        for (const auto& [mono, c] : terms_) out.terms_.emplace(mono, c * r);
        return out;
    }

    /// Product by a single monomial, cheaper than a full ring product.
    GradedPolynomial monomial_product(const Partition& monomial,
                                      const ExactRational& coeff) const {
        GradedPolynomial out(truncation_);
        if (coeff.is_zero()) return out;
        for (const auto& [mono, c] : terms_)
            out.add_term(Partition::merge(mono, monomial), c * coeff);
        return out;
    }

    friend GradedPolynomial operator*(const GradedPolynomial& a, const GradedPolynomial& b) {
        GradedPolynomial out(a.truncation_);
        for (const auto& [ma, ca] : a.terms_) {
            if (ma.weight() > out.truncation_) continue;
            for (const auto& [mb, cb] : b.terms_) {
                if (ma.weight() + mb.weight() > out.truncation_) continue;
                out.add_term(Partition::merge(ma, mb), ca * cb);
            }
        }
        return out;
    }

    bool is_homogeneous(unsigned weight) const {
        for (const auto& [mono, c] : terms_)
            if (mono.weight() != weight) return false;
        return true;
    }

    friend bool operator==(const GradedPolynomial& a, const GradedPolynomial& b) {
        return a.terms_ == b.terms_;
    }

private:
    unsigned truncation_;
    TermMap terms_;
};

}  // namespace genuslab
