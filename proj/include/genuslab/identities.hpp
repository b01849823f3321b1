// Coefficient identities and sign scans for the multiplicative-sequence
// coefficients h_{j1,...,jr}, plus the certified inequality chain that
// bounds pi^{2i+2j} (h_i h_j - h_{i+j}) from above.
#pragma once

#include <optional>
#include <vector>

#include "genuslab/genus.hpp"
#include "genuslab/interval.hpp"
#include "genuslab/numbers.hpp"

namespace genuslab {

struct SignReport {
    Partition partition;
    ExactRational value;
    int expected_sign = 0;  // +1 or -1
    bool conforms = false;  // sign(value) == expected_sign, value != 0
};

inline SignReport make_sign_report(Partition lambda, ExactRational value, int expected) {
    SignReport r;
    r.conforms = value.sign() == expected && !value.is_zero();
    r.partition = std::move(lambda);
    r.value = std::move(value);
    r.expected_sign = expected;
    return r;
}

/// The two-index identity: h_{i,j} + h_{i+j} = h_i h_j for i != j, and
/// 2 h_{i,i} + h_{2i} = h_i^2. Coefficients read from the constructed
/// L-polynomials, single-index values from the closed form.
inline bool verify_pair_identity(unsigned i, unsigned j) {
    if (i == 0 || j == 0)
        throw std::invalid_argument("verify_pair_identity: indices must be >= 1");
    const ExactRational hij = coefficient(Genus::L, Partition{i, j});
    const ExactRational lhs =
        (i == j ? ExactRational(2) : ExactRational(1)) * hij + h_closed_form(i + j);
    return lhs == h_closed_form(i) * h_closed_form(j);
}

/// Closed form for the three-index coefficient:
///   h_{i,j,k} = (2 h_{i+j+k} + h_i h_j h_k
///                - h_{i+j} h_k - h_{i+k} h_j - h_{j+k} h_i) / d
/// where d is the number of permutations fixing the multiset {i,j,k}
/// (1, 2 or 6 for three, two or one distinct values).
inline ExactRational h_triple_closed_form(unsigned i, unsigned j, unsigned k) {
    if (i == 0 || j == 0 || k == 0)
        throw std::invalid_argument("h_triple_closed_form: indices must be >= 1");
    const ExactRational numerator =
        ExactRational(2) * h_closed_form(i + j + k) +
        h_closed_form(i) * h_closed_form(j) * h_closed_form(k) -
        h_closed_form(i + j) * h_closed_form(k) -
        h_closed_form(i + k) * h_closed_form(j) -
        h_closed_form(j + k) * h_closed_form(i);
    unsigned distinct = 1 + (j != i) + (k != i && k != j);
    const unsigned divisor = distinct == 3 ? 1 : (distinct == 2 ? 2 : 6);
    return numerator / ExactRational(divisor);
}

/// One report per pair i <= j with i + j <= max_weight; h_{i,j} is expected
/// to be strictly negative.
inline std::vector<SignReport> pair_sign_scan(unsigned max_weight) {
    if (max_weight < 2)
        throw std::invalid_argument("pair_sign_scan: max_weight >= 2");
    std::vector<SignReport> out;
    for (unsigned w = 2; w <= max_weight; ++w)
        for (unsigned i = 1; 2 * i <= w; ++i)
            out.push_back(make_sign_report(Partition{w - i, i},
                                           coefficient(Genus::L, Partition{w - i, i}), -1));
    return out;
}

/// One report per multiset {i,j,k} with i+j+k <= max_weight; h_{i,j,k} is
/// expected to be strictly positive.
inline std::vector<SignReport> triple_sign_scan(unsigned max_weight) {
    if (max_weight < 3)
        throw std::invalid_argument("triple_sign_scan: max_weight >= 3");
    std::vector<SignReport> out;
    for (unsigned w = 3; w <= max_weight; ++w)
        for (unsigned i = 1; 3 * i <= w; ++i)
            for (unsigned j = i; i + 2 * j <= w; ++j) {
                const unsigned k = w - i - j;
                out.push_back(make_sign_report(
                    Partition{k, j, i}, coefficient(Genus::L, Partition{k, j, i}), +1));
            }
    return out;
}

/// Sign-pattern scan: for every partition of weight <= max_weight with at
/// most max_parts parts, check the alternating pattern. For L the expected
/// sign of h_lambda is (-1)^(r-1); the A-hat coefficients show the opposite
/// pattern (-1)^r, reported here as exploratory evidence.
inline std::vector<SignReport> sign_pattern_scan(
    Genus genus, unsigned max_weight,
    std::optional<unsigned> max_parts = std::nullopt) {
    if (max_weight == 0)
        throw std::invalid_argument("sign_pattern_scan: max_weight >= 1");
    std::vector<SignReport> out;
    for (unsigned w = 1; w <= max_weight; ++w)
        for (const Partition& lambda : partitions_of(w, max_parts.value_or(~0u))) {
            const int base = lambda.size() % 2 == 1 ? +1 : -1;  // (-1)^(r-1)
            const int expected = genus == Genus::L ? base : -base;
            out.push_back(make_sign_report(lambda, coefficient(genus, lambda), expected));
        }
    return out;
}

// ---------------------------------------------------------------------------
// Upper-bound estimate zeta(s) < 1 + 2^-s + (5/2) 3^-s, checked at even s.

struct ZetaBoundRow {
    unsigned n = 0;               // checks s = 2n
    RationalInterval lhs;         // encloses zeta(2n)
    ExactRational rhs;            // 1 + 2^-2n + (5/2) 3^-2n
    Verdict below = Verdict::Indeterminate;
};

struct ZetaBoundReport {
    std::vector<ZetaBoundRow> rows;
    Verdict all_below = Verdict::Indeterminate;
};

/// Single-exponent check at s = 2n. The enclosure of zeta(2n) is the exact
/// rational zeta(2n)/pi^(2n) times a power of the pi enclosure.
inline ZetaBoundRow zeta_bound_at(unsigned n, unsigned digits) {
    if (n == 0) throw std::invalid_argument("zeta_bound_at: n >= 1");
    ZetaBoundRow row;
    row.n = n;
    row.lhs = zeta_even_rational(n) * pi_enclosure(digits).pow(2 * n);
    row.rhs = ExactRational(1) + ExactRational(1, 2).pow(2 * n) +
              ExactRational(5, 2) * ExactRational(1, 3).pow(2 * n);
    row.below = certified_less(row.lhs, row.rhs);
    return row;
}

/// Checks the estimate for every n in 1..max_n. The aggregate verdict is
/// False as soon as one exponent certifiably violates the bound (s = 2
/// does), Indeterminate if undecided rows remain, else True.
inline ZetaBoundReport zeta_bound_scan(unsigned max_n, unsigned digits) {
    if (max_n == 0) throw std::invalid_argument("zeta_bound_scan: max_n >= 1");
    ZetaBoundReport rep;
    bool any_indet = false;
    bool any_false = false;
    for (unsigned n = 1; n <= max_n; ++n) {
        rep.rows.push_back(zeta_bound_at(n, digits));
        if (rep.rows.back().below == Verdict::False) any_false = true;
        if (rep.rows.back().below == Verdict::Indeterminate) any_indet = true;
    }
    rep.all_below = any_false ? Verdict::False
                              : (any_indet ? Verdict::Indeterminate : Verdict::True);
    return rep;
}

// ---------------------------------------------------------------------------
// Certified chain of upper bounds for pi^{2i+2j} (h_i h_j - h_{i+j}).
//
// With x = zeta(2i)-1, y = zeta(2j)-1, z = zeta(2i+2j)-1, the quantity
// equals Q1 below; Q2 uses x,y,z > 0, Q3 uses x,y,z < 1, and Q4 uses the
// zeta upper-bound estimate. Two variants of Q4 are evaluated: a `loose`
// variant with the growing ratio (3/2)^{2i}, always a valid upper bound,
// and a `sharp` variant with the decaying ratio (2/3)^{2i}, which is the
// tight form and goes negative once the indices grow.

struct PairChainReport {
    unsigned i = 0, j = 0;
    RationalInterval x, y, z;
    RationalInterval q1, q2, q3, q4_loose, q4_sharp;
    Verdict le_12 = Verdict::Indeterminate;        // Q1 <= Q2
    Verdict le_23 = Verdict::Indeterminate;        // Q2 <= Q3
    Verdict le_34_loose = Verdict::Indeterminate;  // Q3 <= Q4 (loose)
    Verdict le_34_sharp = Verdict::Indeterminate;  // Q3 <= Q4 (sharp)
    Verdict q4_loose_negative = Verdict::Indeterminate;
    Verdict q4_sharp_negative = Verdict::Indeterminate;
    int exact_sign = 0;  // sign of h_i h_j - h_{i+j}, computed exactly
    bool exact_conforms = false;

    bool chain_holds() const {
        return le_12 == Verdict::True && le_23 == Verdict::True &&
               le_34_loose == Verdict::True;
    }
};

inline PairChainReport pair_chain_report(unsigned i, unsigned j, unsigned digits = 20) {
    if (i == 0 || j == 0)
        throw std::invalid_argument("pair_chain_report: indices must be >= 1");
    const unsigned terms = std::max(20u, digits);
    PairChainReport rep;
    rep.i = i;
    rep.j = j;
    rep.x = zeta_minus_one_interval(2 * i, terms);
    rep.y = zeta_minus_one_interval(2 * j, terms);
    rep.z = zeta_minus_one_interval(2 * i + 2 * j, terms);

    const ExactRational p2i(pow2(2 * i)), p2j(pow2(2 * j));
    const ExactRational p2ij = p2i * p2j;
    const ExactRational doubles = ExactRational(2) * p2i + ExactRational(2) * p2j;
    const RationalInterval mix = rep.x + rep.y + rep.x * rep.y;

    rep.q1 = (ExactRational(6) - doubles) + (p2ij - doubles + ExactRational(4)) * mix +
             (ExactRational(2) - p2ij) * rep.z;
    rep.q2 = (ExactRational(6) - doubles) + (p2ij + ExactRational(4)) * mix +
             ExactRational(2) * rep.z;
    rep.q3 = (ExactRational(20) - doubles) + p2ij * mix;

    const auto q4 = [&](const ExactRational& ratio) {
        const ExactRational ci = ExactRational(5, 2) * ratio.pow(2 * i);
        const ExactRational cj = ExactRational(5, 2) * ratio.pow(2 * j);
        return RationalInterval::point(ExactRational(27) + (cj - ExactRational(1)) * p2i +
                                       (ci - ExactRational(1)) * p2j);
    };
    rep.q4_loose = q4(ExactRational(3, 2));
    rep.q4_sharp = q4(ExactRational(2, 3));

    // Step verdicts come from the algebraic differences, which the interval
    // evaluation separates from zero far better than the raw quantities.
    const RationalInterval d21 = doubles * mix + p2ij * rep.z;
    const RationalInterval d32 =
        ExactRational(14) - ExactRational(4) * mix - ExactRational(2) * rep.z;
    const auto diff43 = [&](const ExactRational& ratio) {
        const ExactRational ci = ExactRational(5, 2) * ratio.pow(2 * i);
        const ExactRational cj = ExactRational(5, 2) * ratio.pow(2 * j);
        return ExactRational(7) + (cj + ExactRational(1)) * p2i +
               (ci + ExactRational(1)) * p2j - p2ij * mix;
    };
    rep.le_12 = certified_nonnegative(d21);
    rep.le_23 = certified_nonnegative(d32);
    rep.le_34_loose = certified_nonnegative(diff43(ExactRational(3, 2)));
    rep.le_34_sharp = certified_nonnegative(diff43(ExactRational(2, 3)));
    rep.q4_loose_negative = certified_negative(rep.q4_loose);
    rep.q4_sharp_negative = certified_negative(rep.q4_sharp);

    rep.exact_sign =
        (h_closed_form(i) * h_closed_form(j) - h_closed_form(i + j)).sign();
    rep.exact_conforms = rep.exact_sign < 0;
    return rep;
}

}  // namespace genuslab
