// Dimension-set calculus: the T_{2n} sets, generated additive submonoids,
// dissonance feasibility of (n, s), and the derived obstruction constants.
#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "genuslab/apset.hpp"
#include "genuslab/rational.hpp"

namespace genuslab {

// --- Predefined set expressions -------------------------------------------
// Dimension sets of the configuration-space tower stages; n is half the
// ambient dimension, ell the configuration cardinality bound.

/// Dimensions carrying rational homotopy of an ordered configuration space
/// of R^{2n}: A[2n-1 : 2n-2 : inf].
inline SetExpr conf_dims(unsigned n) {
    return ap_inf(2LL * n - 1, 2LL * n - 2);
}

/// Stage (ii): conf_dims(n) - A[0:1:ell-3].
inline SetExpr multi_conf_dims(unsigned n, unsigned ell) {
    return diff_expr(conf_dims(n), ap(0, 1, static_cast<long long>(ell) - 3));
}

/// Stage (iii): conf_dims(n) - A[0:1:ell-2].
inline SetExpr hofiber_dims(unsigned n, unsigned ell) {
    return diff_expr(conf_dims(n), ap(0, 1, static_cast<long long>(ell) - 2));
}

/// Stage (iv): A[ell-2 : 2n-1 : 2n(ell-1)-1].
inline SetExpr cofiber_dims(unsigned n, unsigned ell) {
    return ap(static_cast<long long>(ell) - 2, 2LL * n - 1,
              2LL * n * (ell - 1) - 1);
}

/// Stage (v): A[0 : 2n-1 : (ell-1)(2n-1)] + A[0 : ell-3 : ell-3].
inline SetExpr total_space_dims(unsigned n, unsigned ell) {
    return sum_expr(ap(0, 2LL * n - 1, static_cast<long long>(ell - 1) * (2LL * n - 1)),
                    ap(0, static_cast<long long>(ell) - 3, static_cast<long long>(ell) - 3));
}

/// Stage (vi): dimensions of the solution space,
/// (hofiber - cofiber) u (multi_conf - total_space - {2}).
inline SetExpr solution_dims(unsigned n, unsigned ell) {
    return union_expr(diff_expr(hofiber_dims(n, ell), cofiber_dims(n, ell)),
                      diff_expr(diff_expr(multi_conf_dims(n, ell), total_space_dims(n, ell)),
                                singleton(2)));
}

/// Stage (viii), reduced form: (conf_dims(n) - A[0:1:3(ell-2)+1]) n N.
inline SetExpr selfmap_dims(unsigned n, unsigned ell) {
    return nat_expr(diff_expr(conf_dims(n), ap(0, 1, 3LL * (ell - 2) + 1)));
}

/// Stage (viii), unreduced form:
/// (conf_dims(n) - A[0:1:2(ell-2)] - A[0:2n-1:(ell-1)(2n-1)]) n N.
inline SetExpr selfmap_dims_raw(unsigned n, unsigned ell) {
    return nat_expr(
        diff_expr(diff_expr(conf_dims(n), ap(0, 1, 2LL * (ell - 2))),
                  ap(0, 2LL * n - 1, static_cast<long long>(ell - 1) * (2LL * n - 1))));
}

/// T_{2n} = (A[2n-1 : 2n-2 : inf] - A[0 : 1 : cluster_len-1]) n N, the
/// dimension set of the n-connected cover at cardinality bound 8. The
/// default cluster_len = 20 subtracts {0..19}; cluster_len = 19 is the
/// alternative convention that the feasibility scan can toggle.
inline SetExpr t_set_expr(unsigned n, unsigned cluster_len = 20) {
    return nat_expr(diff_expr(conf_dims(n), ap(0, 1, cluster_len - 1)));
}

/// The finite part of T_{2n} that matters for the nullhomotopy argument:
/// (A[2n-1 : 2n-2 : 8n-7] - A[0 : 1 : cluster_len-1]) n N.
inline SetExpr relevant_expr(unsigned n, unsigned cluster_len = 20) {
    return nat_expr(diff_expr(ap(2LL * n - 1, 2LL * n - 2, 8LL * n - 7),
                              ap(0, 1, cluster_len - 1)));
}

// --- Windowed realizations --------------------------------------------------

inline WindowSet t_set(unsigned n, long long bound, unsigned cluster_len = 20) {
    if (n == 0) throw std::invalid_argument("t_set: n >= 1");
    if (cluster_len == 0) throw std::invalid_argument("t_set: cluster_len >= 1");
    return eval_window(t_set_expr(n, cluster_len), 0, bound);
}

inline WindowSet relevant_window(unsigned n, unsigned cluster_len = 20) {
    if (n == 0) throw std::invalid_argument("relevant_window: n >= 1");
    return eval_window(relevant_expr(n, cluster_len), 0, 8LL * n - 7);
}

/// All elements of the additive monoid generated by `generators` that lie
/// in [0, bound]. Generators are non-negative, so truncating the generator
/// set at `bound` loses nothing. Classic coin-style reachability.
inline WindowSet monoid_window(const WindowSet& generators, long long bound) {
    std::vector<char> reach(static_cast<std::size_t>(bound) + 1, 0);
    reach[0] = 1;
    for (long long g : generators.elems) {
        if (g <= 0 || g > bound) continue;
        for (long long v = g; v <= bound; ++v)
            if (reach[static_cast<std::size_t>(v - g)]) reach[static_cast<std::size_t>(v)] = 1;
    }
    std::vector<long long> elems;
    for (long long v = 0; v <= bound; ++v)
        if (reach[static_cast<std::size_t>(v)]) elems.push_back(v);
    return make_window(0, bound, std::move(elems));
}

/// One decomposition of `target` as a sum of generators, if it is in the
/// monoid. Returned parts are sorted weakly decreasing.
inline std::optional<std::vector<long long>> monoid_decompose(const WindowSet& generators,
                                                              long long target) {
    if (target < 0) return std::nullopt;
    std::vector<long long> via(static_cast<std::size_t>(target) + 1, -1);
    std::vector<char> reach(static_cast<std::size_t>(target) + 1, 0);
    reach[0] = 1;
    for (long long g : generators.elems) {
        if (g <= 0 || g > target) continue;
        for (long long v = g; v <= target; ++v)
            if (reach[static_cast<std::size_t>(v - g)] && !reach[static_cast<std::size_t>(v)]) {
                reach[static_cast<std::size_t>(v)] = 1;
                via[static_cast<std::size_t>(v)] = g;
            }
    }
    if (!reach[static_cast<std::size_t>(target)]) return std::nullopt;
    std::vector<long long> parts;
    for (long long v = target; v > 0; v -= via[static_cast<std::size_t>(v)])
        parts.push_back(via[static_cast<std::size_t>(v)]);
    std::sort(parts.begin(), parts.end(), std::greater<long long>());
    return parts;
}

// --- Feasibility -------------------------------------------------------------

struct Feasibility {
    unsigned n = 0;
    unsigned s = 0;
    bool feasible = false;
    std::optional<long long> witness;      // monoid element hitting the window
    std::vector<long long> decomposition;  // witness as a sum of generators
};

/// True iff the monoid generated by T_{2n-s} misses the finite window of
/// T_{2n} below 8n-7. Infeasible verdicts carry the smallest witness and
/// its decomposition into generators.
inline Feasibility dissonance_feasible(unsigned n, unsigned s, unsigned cluster_len = 20) {
    if (s % 2 != 0) throw std::invalid_argument("dissonance_feasible: s must be even");
    if (s < 1 || s + 1 > 2 * n)
        throw std::invalid_argument("dissonance_feasible: need 1 <= s <= 2n-1");
    const long long bound = 8LL * n - 7;
    const WindowSet generators = t_set(n - s / 2, bound, cluster_len);
    const WindowSet monoid = monoid_window(generators, bound);
    const WindowSet window = relevant_window(n, cluster_len);
    const WindowSet hits = intersect(monoid, window);
    Feasibility f;
    f.n = n;
    f.s = s;
    f.feasible = hits.empty();
    if (!f.feasible) {
        f.witness = hits.elems.front();
        if (auto parts = monoid_decompose(generators, *f.witness)) f.decomposition = *parts;
    }
    return f;
}

// --- Constraint scan ---------------------------------------------------------

struct ConstraintRow {
    unsigned s = 0;
    std::optional<unsigned> scan_min_n;   // smallest feasible n up to n_max
    std::optional<unsigned> stated_min_n;  // from 2n > 5s+88 and s > 19
    std::optional<unsigned> sharp_min_n;  // from 5(2n-s-20) > 8n-7 and s > 19
    bool matches_stated = false;
    bool matches_sharp = false;
    std::optional<long long> witness_at_stated_n;  // evidence when they differ
};

/// For every even s <= s_max, the smallest n <= n_max with
/// dissonance_feasible(n, s), compared against two closed-form predictions:
/// the stated constraint 2n > 5s + 88 and the sharper constraint
/// 5(2n - s - cluster_len) > 8n - 7 from the smallest generator of the
/// first cluster. With cluster_len = 19 the two predictions coincide.
inline std::vector<ConstraintRow> derive_constraints(unsigned s_max, unsigned n_max,
                                                     unsigned cluster_len = 20) {
    if (s_max == 0 || n_max == 0)
        throw std::invalid_argument("derive_constraints: positive arguments required");
    std::vector<ConstraintRow> rows;
    for (unsigned s = 2; s <= s_max; s += 2) {
        ConstraintRow row;
        row.s = s;
        for (unsigned n = s / 2 + 1; n <= n_max; ++n) {
            if (dissonance_feasible(n, s, cluster_len).feasible) {
                row.scan_min_n = n;
                break;
            }
        }
        if (s > 19) {
            row.stated_min_n = (5 * s + 90) / 2;
            row.sharp_min_n = (5 * s + 5 * cluster_len - 7) / 2 + 1;
        }
        row.matches_stated = row.scan_min_n && row.stated_min_n &&
                             *row.scan_min_n == *row.stated_min_n;
        row.matches_sharp = row.scan_min_n && row.sharp_min_n &&
                            *row.scan_min_n == *row.sharp_min_n;
        if (row.stated_min_n && !row.matches_stated && *row.stated_min_n <= n_max &&
            2 * *row.stated_min_n > s) {
            const Feasibility f = dissonance_feasible(*row.stated_min_n, s, cluster_len);
            if (!f.feasible) row.witness_at_stated_n = f.witness;
        }
        rows.push_back(row);
    }
    return rows;
}

// --- Obstruction-degree bookkeeping ------------------------------------------

struct ObstructionConstants {
    unsigned n = 0;
    unsigned s = 0;
    long long b = 0;                  // n - s/2 - 1
    long long c2 = 0;                 // s/2 + 1
    long long first_obstruction = 0;  // 4b + 2n = 6n - 4 c2
    long long kill_threshold = 0;     // 8n - 26 = (8n - 7) - 19
    long long target_kill = 0;        // kill_threshold - n
    long long stated_range = 0;       // 4b + 3n
    long long second_part = 0;        // 4b + n
    ExactRational k_bound;            // k < 5n/4 - c2
};

inline ObstructionConstants proof_constants(unsigned n, unsigned s) {
    if (s % 2 != 0) throw std::invalid_argument("proof_constants: s must be even");
    if (s >= 2 * n) throw std::invalid_argument("proof_constants: need s < 2n");
    ObstructionConstants c;
    c.n = n;
    c.s = s;
    c.b = static_cast<long long>(n) - s / 2 - 1;
    c.c2 = s / 2 + 1;
    c.first_obstruction = 4 * c.b + 2LL * n;
    c.kill_threshold = 8LL * n - 26;
    c.target_kill = c.kill_threshold - n;
    c.stated_range = 4 * c.b + 3LL * n;
    c.second_part = 4 * c.b + n;
    c.k_bound = ExactRational(5LL * n, 4) - ExactRational(c.c2);
    return c;
}

// --- Stage (vi) chain verification -------------------------------------------

struct ProgressionChainReport {
    unsigned n = 0;
    unsigned ell = 0;
    long long bound = 0;
    WindowSet prelim, line1, line2, line3, line4;
    bool eq_01 = false, eq_12 = false, eq_23 = false, subset_34 = false;

    bool all_hold() const { return eq_01 && eq_12 && eq_23 && subset_34; }
};

/// Evaluates the four displayed forms of the stage-(vi) dimension set over
/// [-bound, bound] and confirms the stated relations (=, =, =, subset).
inline ProgressionChainReport verify_item_vi(unsigned n, unsigned ell, long long bound) {
    if (n < 2 || ell < 2 || bound < 1)
        throw std::invalid_argument("verify_item_vi: need n >= 2, ell >= 2, bound >= 1");
    const long long L = ell;
    const SetExpr s_inf = conf_dims(n);
    const SetExpr tower_step = ap(0, 2LL * n - 1, (L - 1) * (2LL * n - 1));

    const SetExpr prelim = solution_dims(n, ell);
    const SetExpr first_comp = diff_expr(hofiber_dims(n, ell), cofiber_dims(n, ell));
    const SetExpr line1 = union_expr(
        first_comp,
        diff_expr(diff_expr(diff_expr(s_inf, ap(2, 1, L - 1)), tower_step),
                  ap(0, L - 3, L - 3)));
    const SetExpr line2 = union_expr(
        first_comp, diff_expr(diff_expr(s_inf, ap(2, 1, 2 * (L - 2))), tower_step));
    const SetExpr line3 = union_expr(
        diff_expr(diff_expr(s_inf, ap(L - 2, 1, 2 * (L - 2))), tower_step),
        diff_expr(diff_expr(s_inf, ap(2, 1, 2 * (L - 2))), tower_step));
    const SetExpr line4 = diff_expr(diff_expr(s_inf, ap(0, 1, 2 * (L - 2))), tower_step);

    ProgressionChainReport rep;
    rep.n = n;
    rep.ell = ell;
    rep.bound = bound;
    rep.prelim = eval_window(prelim, -bound, bound);
    rep.line1 = eval_window(line1, -bound, bound);
    rep.line2 = eval_window(line2, -bound, bound);
    rep.line3 = eval_window(line3, -bound, bound);
    rep.line4 = eval_window(line4, -bound, bound);
    rep.eq_01 = rep.prelim.elems == rep.line1.elems;
    rep.eq_12 = rep.line1.elems == rep.line2.elems;
    rep.eq_23 = rep.line2.elems == rep.line3.elems;
    rep.subset_34 = std::includes(rep.line4.elems.begin(), rep.line4.elems.end(),
                                  rep.line3.elems.begin(), rep.line3.elems.end());
    return rep;
}

}  // namespace genuslab
