// Multiplicative-sequence polynomials (L-genus, A-hat-genus) built from
// their characteristic series via Newton power sums and a graded exp.
#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "genuslab/even_series.hpp"
#include "genuslab/graded_poly.hpp"
#include "genuslab/numbers.hpp"
#include "genuslab/partition.hpp"

namespace genuslab {

enum class Genus { L, AHat };

inline std::string to_string(Genus g) { return g == Genus::L ? "L" : "A-hat"; }

inline Genus parse_genus(const std::string& s) {
    if (s == "L" || s == "l") return Genus::L;
    if (s == "A-hat" || s == "a-hat" || s == "ahat" || s == "Ahat") return Genus::AHat;
    throw std::invalid_argument("unknown genus: " + s);
}

/// Characteristic series Q(x) of the genus through x^{2*order}, with
/// coefficients derived from the Bernoulli generating identities:
///   L:     Q(x) = x/tanh(x)        = sum 2^{2k} B_{2k} x^{2k} / (2k)!
///   A-hat: Q(x) = (x/2)/sinh(x/2)  = sum (2^{1-2k} - 1) B_{2k} x^{2k} / (2k)!
inline EvenPowerSeries characteristic_series(Genus genus, unsigned order) {
    std::vector<ExactRational> q;
    q.reserve(order);
    for (unsigned k = 1; k <= order; ++k) {
        const ExactRational common = bernoulli(2 * k) / ExactRational(factorial(2 * k));
        if (genus == Genus::L) {
            q.push_back(ExactRational(pow2(2 * k)) * common);
        } else {
            q.push_back((ExactRational(2, 1) / ExactRational(pow2(2 * k)) - ExactRational(1)) *
                        common);
        }
    }
    return EvenPowerSeries(order, true, std::move(q));
}

/// Coefficients a_1..a_order of log Q(x) = sum a_k x^{2k}.
inline EvenPowerSeries characteristic_log_series(Genus genus, unsigned order) {
    if (order == 0)
        throw std::invalid_argument("characteristic_log_series: order >= 1");
    return characteristic_series(genus, order).log();
}

/// Power sum s_k = sum_i (x_i^2)^k expressed in the p_j = e_j(x^2) via
/// Newton's identity s_k = p_1 s_{k-1} - p_2 s_{k-2} + ... + (-1)^{k-1} k p_k.
/// Homogeneous of weight k.
inline GradedPolynomial newton_power_sum(unsigned k, unsigned truncation) {
    if (k == 0 || k > truncation)
        throw std::invalid_argument("newton_power_sum: need 1 <= k <= truncation");
    std::vector<GradedPolynomial> s;
    s.reserve(k);
    for (unsigned m = 1; m <= k; ++m) {
        GradedPolynomial sm(truncation);
        int sgn = 1;
        for (unsigned i = 1; i < m; ++i) {
            const GradedPolynomial term =
                s[m - i - 1].monomial_product(Partition{i}, ExactRational(sgn));
            sm += term;
            sgn = -sgn;
        }
        sm.add_term(Partition{m}, ExactRational(sgn) * ExactRational(m));
        s.push_back(std::move(sm));
    }
    return s[k - 1];
}

namespace detail {

/// Tower of homogeneous components K_0, K_1, ..., K_w of the total genus
/// class exp(sum_k a_k s_k), grown on demand and cached per genus. Shared
/// pointers keep handed-out components stable while the tower grows.
class GenusTower {
public:
    static const GradedPolynomial& component(Genus genus, unsigned weight) {
        std::lock_guard<std::mutex> lock(mutex());
        auto& tower = towers()[genus];
        extend(genus, tower, weight);
        return *tower[weight];
    }

    /// Install a precomputed component (e.g. from the on-disk cache).
    /// Accepted only as the next contiguous weight and only when homogeneous;
    /// anything else is ignored and will be recomputed.
    static bool seed(Genus genus, unsigned weight, const GradedPolynomial& poly) {
        std::lock_guard<std::mutex> lock(mutex());
        auto& tower = towers()[genus];
        if (tower.empty())
            tower.push_back(std::make_shared<GradedPolynomial>(GradedPolynomial::one(0)));
        if (tower.size() != weight || poly.is_zero() || !poly.is_homogeneous(weight))
            return false;
        tower.push_back(std::make_shared<GradedPolynomial>(poly));
        return true;
    }

private:
    using Tower = std::vector<std::shared_ptr<const GradedPolynomial>>;

    static std::mutex& mutex() {
        static std::mutex m;
        return m;
    }
    static std::map<Genus, Tower>& towers() {
        static std::map<Genus, Tower> t;
        return t;
    }

    // K_0 = 1 and m K_m = sum_{k=1..m} k a_k s_k K_{m-k}: the weight-graded
    // form of D(exp U) = D(U) exp(U) for the Euler derivation D.
    static void extend(Genus genus, Tower& tower, unsigned weight) {
        if (tower.empty())
            tower.push_back(std::make_shared<GradedPolynomial>(GradedPolynomial::one(0)));
        if (tower.size() > weight) return;
        const EvenPowerSeries a = characteristic_log_series(genus, weight);
        std::vector<GradedPolynomial> s;
        s.reserve(weight);
        for (unsigned k = 1; k <= weight; ++k) s.push_back(newton_power_sum(k, weight));
        for (unsigned m = static_cast<unsigned>(tower.size()); m <= weight; ++m) {
            GradedPolynomial km(m);
            for (unsigned k = 1; k <= m; ++k) {
                const ExactRational factor = ExactRational(k) * a.coeff(k);
                if (factor.is_zero()) continue;
                km += (s[k - 1] * *tower[m - k]).scaled(factor);
            }
            km = km.scaled(ExactRational(1, static_cast<long long>(m)));
            tower.push_back(std::make_shared<GradedPolynomial>(std::move(km)));
        }
    }
};

}  // namespace detail

/// The weight-m polynomial of the multiplicative sequence (L_m or A-hat_m),
/// homogeneous of weight m. Components are cached per process.
inline GradedPolynomial genus_polynomial(Genus genus, unsigned m) {
    if (m == 0)
        throw std::invalid_argument("genus_polynomial: m must be >= 1");
    return detail::GenusTower::component(genus, m);
}

/// Coefficient h_{j1,...,jr} of p_{j1}...p_{jr} in the weight-|lambda|
/// polynomial of the sequence. Order of parts does not matter.
inline ExactRational coefficient(Genus genus, const Partition& lambda) {
    if (lambda.empty())
        throw std::invalid_argument("coefficient: partition must be nonempty");
    return detail::GenusTower::component(genus, lambda.weight()).coefficient(lambda);
}

/// Cache seeding hook used by the CLI's on-disk cache.
inline bool seed_genus_component(Genus genus, unsigned weight, const GradedPolynomial& poly) {
    return detail::GenusTower::seed(genus, weight, poly);
}

}  // namespace genuslab
