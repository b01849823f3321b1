// Acceptance suite: one line per criterion, exact checks throughout.
// Exits nonzero if any criterion fails or exceeds its time budget.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "genuslab/cli.hpp"
#include "genuslab/dissonance.hpp"
#include "genuslab/identities.hpp"
#include "genuslab/numbers.hpp"
#include "genuslab/projective.hpp"

using namespace genuslab;

namespace {

struct Criterion {
    std::string name;
    double limit_seconds;
    std::function<bool(std::string&)> check;
};

// --- independent oracles -----------------------------------------------------

// Brute-force dissonance oracle built from first principles: clusters are
// enumerated directly, the monoid by breadth-first search over a std::set.
struct BruteDissonance {
    static std::vector<long long> clusters(long long first, long long step,
                                           long long bound) {
        std::vector<long long> out;
        for (long long top = first;; top += step) {
            for (long long x = top - 19; x <= top; ++x)
                if (x >= 0 && x <= bound) out.push_back(x);
            if (top - 19 > bound) break;
            if (step == 0) break;
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    static bool feasible(unsigned n, unsigned s, long long* witness = nullptr) {
        const long long bound = 8LL * n - 7;
        const unsigned m = n - s / 2;
        const std::vector<long long> gens =
            clusters(2LL * m - 1, 2LL * m - 2, bound);
        std::set<long long> reach{0};
        std::vector<long long> frontier{0};
        while (!frontier.empty()) {
            std::vector<long long> next;
            for (long long v : frontier)
                for (long long g : gens) {
                    if (g <= 0) continue;
                    const long long w = v + g;
                    if (w <= bound && reach.insert(w).second) next.push_back(w);
                }
            frontier = std::move(next);
        }
        std::vector<long long> window;
        for (int t = 0; t < 4; ++t) {
            const long long top = 2LL * n - 1 + t * (2LL * n - 2);
            for (long long x = top - 19; x <= top; ++x)
                if (x >= 0 && x <= bound) window.push_back(x);
        }
        std::sort(window.begin(), window.end());
        for (long long x : window)
            if (reach.count(x)) {
                if (witness) *witness = x;
                return false;
            }
        return true;
    }
};

std::set<long long> brute_leaf(const APSet& s, long long lo, long long hi) {
    std::set<long long> out;
    if (s.empty) return out;
    if (s.step == 0) {
        if (lo <= s.first && s.first <= hi) out.insert(s.first);
        return out;
    }
    for (long long x = s.first; !s.last || x <= *s.last; x += s.step) {
        if (x > hi) break;
        if (x >= lo) out.insert(x);
    }
    return out;
}

std::set<long long> brute_eval(const SetExpr& e, long long lo, long long hi) {
    using Kind = SetExpr::Kind;
    const long long pad = 4000;
    switch (e.kind()) {
        case Kind::Leaf:
            return brute_leaf(e.ap(), lo, hi);
        case Kind::Union: {
            auto a = brute_eval(e.child(0), lo, hi);
            const auto b = brute_eval(e.child(1), lo, hi);
            a.insert(b.begin(), b.end());
            return a;
        }
        case Kind::InterNat:
            return brute_eval(e.child(0), std::max(lo, 0LL), hi);
        case Kind::Sum: {
            const auto a = brute_eval(e.child(0), lo - pad, hi + pad);
            const auto b = brute_eval(e.child(1), lo - pad, hi + pad);
            std::set<long long> out;
            for (long long s : a)
                for (long long t : b)
                    if (s + t >= lo && s + t <= hi) out.insert(s + t);
            return out;
        }
        case Kind::Diff: {
            const auto a = brute_eval(e.child(0), lo - pad, hi + pad);
            const auto b = brute_eval(e.child(1), lo - pad, hi + pad);
            std::set<long long> out;
            for (long long s : a)
                for (long long t : b)
                    if (s - t >= lo && s - t <= hi) out.insert(s - t);
            return out;
        }
    }
    return {};
}

// --- criteria ----------------------------------------------------------------

bool closed_form_agreement(std::string& detail) {
    for (unsigned n = 1; n <= 25; ++n) {
        const ExactRational direct =
            ExactRational(pow2(2 * n) * (pow2(2 * n - 1) - 1), factorial(2 * n)) *
            hirzebruch_B(n);
        if (coefficient(Genus::L, Partition{n}) != direct) {
            detail = "mismatch at n=" + std::to_string(n);
            return false;
        }
    }
    return true;
}

bool pair_identities(std::string& detail) {
    for (unsigned i = 1; i <= 15; ++i)
        for (unsigned j = i; i + j <= 30; ++j)
            if (!verify_pair_identity(i, j)) {
                detail = "fails at (" + std::to_string(i) + "," + std::to_string(j) + ")";
                return false;
            }
    return true;
}

bool pair_signs(std::string& detail) {
    for (const SignReport& r : pair_sign_scan(30))
        if (!r.conforms) {
            detail = "nonconforming at " + r.partition.to_string();
            return false;
        }
    for (unsigned i = 1; i <= 15; ++i)
        for (unsigned j = i; i + j <= 30; ++j)
            if (!(h_closed_form(i + j) > h_closed_form(i) * h_closed_form(j))) {
                detail = "product form fails at (" + std::to_string(i) + "," +
                         std::to_string(j) + ")";
                return false;
            }
    return true;
}

bool triple_signs(std::string& detail) {
    for (const SignReport& r : triple_sign_scan(20))
        if (!r.conforms) {
            detail = "nonconforming at " + r.partition.to_string();
            return false;
        }
    return true;
}

bool triple_closed_form(std::string& detail) {
    for (unsigned i = 1; i <= 6; ++i)
        for (unsigned j = i; i + 2 * j <= 20; ++j)
            for (unsigned k = j; i + j + k <= 20; ++k)
                if (h_triple_closed_form(i, j, k) !=
                    coefficient(Genus::L, Partition{k, j, i})) {
                    detail = "mismatch at (" + std::to_string(i) + "," +
                             std::to_string(j) + "," + std::to_string(k) + ")";
                    return false;
                }
    return true;
}

bool conjecture_scan_13(std::string& detail) {
    for (const SignReport& r : sign_pattern_scan(Genus::L, 13))
        if (!r.conforms) {
            detail = "nonconforming at " + r.partition.to_string();
            return false;
        }
    return true;
}

bool signature_oracle(std::string& detail) {
    for (unsigned m = 1; m <= 5; ++m)
        if (!hirzebruch_check(ProjectiveProduct{2 * m})) {
            detail = "fails at CP^" + std::to_string(2 * m);
            return false;
        }
    for (unsigned a = 1; a <= 5; ++a)
        for (unsigned b = a; a + b <= 10; ++b)
            if (!hirzebruch_check(ProjectiveProduct{2 * a, 2 * b})) {
                detail = "fails at CP^" + std::to_string(2 * a) + " x CP^" +
                         std::to_string(2 * b);
                return false;
            }
    return true;
}

bool dissonance_necessity(std::string& detail) {
    for (unsigned s = 2; s <= 18; s += 2)
        for (unsigned n = 50; n <= 150; ++n)
            if (dissonance_feasible(n, s).feasible) {
                detail = "unexpectedly feasible at (n=" + std::to_string(n) +
                         ", s=" + std::to_string(s) + ")";
                return false;
            }
    return true;
}

bool dissonance_scan_s20(std::string& detail) {
    // independent oracle first
    unsigned oracle_min = 0;
    for (unsigned n = 50; n <= 120; ++n)
        if (BruteDissonance::feasible(n, 20)) {
            oracle_min = n;
            break;
        }
    if (oracle_min != 97) {
        detail = "oracle minimal n = " + std::to_string(oracle_min);
        return false;
    }
    long long oracle_witness = 0;
    if (BruteDissonance::feasible(95, 20, &oracle_witness) || oracle_witness != 750) {
        detail = "oracle witness at n=95 is " + std::to_string(oracle_witness);
        return false;
    }

    const auto rows = derive_constraints(20, 120);
    const ConstraintRow& s20 = rows.back();
    if (s20.s != 20 || !s20.scan_min_n || *s20.scan_min_n != oracle_min) {
        detail = "scan minimal n disagrees with oracle";
        return false;
    }
    if (!s20.stated_min_n || *s20.stated_min_n != 95 || s20.matches_stated) {
        detail = "stated-constraint comparison not flagged";
        return false;
    }
    if (!s20.witness_at_stated_n || *s20.witness_at_stated_n != 750) {
        detail = "witness at n=95 missing or wrong";
        return false;
    }
    const Feasibility f95 = dissonance_feasible(95, 20);
    if (f95.feasible || !f95.witness || *f95.witness != 750 ||
        f95.decomposition != std::vector<long long>(5, 150)) {
        detail = "library witness decomposition at (95,20) is not 5 x 150";
        return false;
    }
    // uniqueness of the minimum: nothing below 97 is feasible
    for (unsigned n = 50; n < 97; ++n)
        if (dissonance_feasible(n, 20).feasible) {
            detail = "feasible below the minimum at n=" + std::to_string(n);
            return false;
        }
    return true;
}

bool item_vi_grid(std::string& detail) {
    for (unsigned n = 3; n <= 12; ++n)
        for (unsigned ell = 2; ell <= 8; ++ell) {
            const ProgressionChainReport rep = verify_item_vi(n, ell, 1000);
            if (!rep.all_hold()) {
                detail = "fails at (n=" + std::to_string(n) +
                         ", ell=" + std::to_string(ell) + ")";
                return false;
            }
        }
    return true;
}

bool von_staudt_clausen(std::string& detail) {
    const auto is_prime = [](unsigned p) {
        if (p < 2) return false;
        for (unsigned d = 2; d * d <= p; ++d)
            if (p % d == 0) return false;
        return true;
    };
    for (unsigned n = 1; n <= 30; ++n) {
        BigInt expected = 1;
        for (unsigned p = 2; p <= 2 * n + 1; ++p)
            if (is_prime(p) && (2 * n) % (p - 1) == 0) expected *= p;
        if (bernoulli(2 * n).denominator() != expected) {
            detail = "denominator mismatch at 2n=" + std::to_string(2 * n);
            return false;
        }
    }
    return true;
}

bool window_property(std::string& detail) {
    std::mt19937 rng(73014444);
    std::uniform_int_distribution<long long> u_dist(-40, 40);
    std::uniform_int_distribution<long long> v_dist(1, 7);
    std::uniform_int_distribution<int> len_dist(0, 9);
    std::uniform_int_distribution<int> kind_dist(0, 5);
    std::uniform_int_distribution<long long> win_dist(-80, 80);
    const auto random_leaf = [&]() {
        const long long u = u_dist(rng);
        const long long v = v_dist(rng);
        const int len = len_dist(rng);
        if (len == 0) return singleton(u);
        return ap(u, v, u + v * len);
    };
    for (int trial = 0; trial < 1000; ++trial) {
        SetExpr e = random_leaf();
        switch (kind_dist(rng)) {
            case 0: break;
            case 1: e = sum_expr(e, random_leaf()); break;
            case 2: e = diff_expr(e, random_leaf()); break;
            case 3: e = union_expr(sum_expr(e, random_leaf()), random_leaf()); break;
            case 4: e = diff_expr(sum_expr(e, random_leaf()), random_leaf()); break;
            default: e = nat_expr(diff_expr(e, random_leaf())); break;
        }
        long long lo = win_dist(rng), hi = win_dist(rng);
        if (hi < lo) std::swap(lo, hi);
        const auto got = eval_window(e, lo, hi).elems;
        const auto expect = brute_eval(e, lo, hi);
        if (got != std::vector<long long>(expect.begin(), expect.end())) {
            detail = "divergence at trial " + std::to_string(trial);
            return false;
        }
    }
    return true;
}

bool monoid_property(std::string& detail) {
    std::mt19937 rng(52521875);
    std::uniform_int_distribution<long long> g_dist(1, 90);
    std::uniform_int_distribution<int> count_dist(0, 14);
    std::uniform_int_distribution<long long> bound_dist(0, 600);
    for (int trial = 0; trial < 200; ++trial) {
        std::set<long long> gset;
        const int count = count_dist(rng);
        for (int i = 0; i < count; ++i) gset.insert(g_dist(rng));
        const long long bound = bound_dist(rng);
        std::vector<long long> gens;
        for (long long g : gset)
            if (g <= bound) gens.push_back(g);
        // breadth-first oracle
        std::set<long long> reach{0};
        std::vector<long long> frontier{0};
        while (!frontier.empty()) {
            std::vector<long long> next;
            for (long long v : frontier)
                for (long long g : gens)
                    if (v + g <= bound && reach.insert(v + g).second) next.push_back(v + g);
            frontier = std::move(next);
        }
        const auto got = monoid_window(make_window(0, bound, gens), bound).elems;
        if (got != std::vector<long long>(reach.begin(), reach.end())) {
            detail = "divergence at trial " + std::to_string(trial);
            return false;
        }
    }
    return true;
}

bool cli_determinism(std::string& detail) {
    const std::filesystem::path dir =
        std::filesystem::temp_directory_path() /
        ("genuslab-acceptance-" + std::to_string(::getpid()));
    std::filesystem::remove_all(dir);
    ::setenv("GENUSLAB_CACHE_DIR", dir.c_str(), 1);
    const std::vector<std::vector<std::string>> invocations = {
        {"lpoly", "--weight", "8", "--format", "json"},
        {"verify", "pair", "--max-weight", "10", "--format", "csv"},
        {"scan", "conjecture", "--max-weight", "8", "--format", "json"},
        {"dissonance", "scan", "--s", "20", "--n-max", "100", "--format", "csv"},
    };
    bool ok = true;
    for (const auto& args : invocations) {
        std::ostringstream out1, out2, err1, err2;
        const int c1 = cli::run(args, out1, err1);
        const int c2 = cli::run(args, out2, err2);
        if (c1 != c2 || out1.str() != out2.str()) {
            detail = "divergent output for " + args[0];
            ok = false;
            break;
        }
    }
    ::unsetenv("GENUSLAB_CACHE_DIR");
    std::error_code ec;
    std::filesystem::remove_all(dir, ec);
    return ok;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"closed-form agreement for h_n, n <= 25", 60, closed_form_agreement},
        {"pair identities, i+j <= 30", 120, pair_identities},
        {"pair coefficients negative, i+j <= 30", 120, pair_signs},
        {"triple coefficients positive, i+j+k <= 20", 300, triple_signs},
        {"triple closed form equals extraction, i+j+k <= 20", 300, triple_closed_form},
        {"alternating sign pattern, weight <= 13", 300, conjecture_scan_13},
        {"signature oracle: CP^{2m} (m <= 5) and even two-factor products, dim <= 40", 60,
         signature_oracle},
        {"dissonance necessity: infeasible for even s <= 18, 50 <= n <= 150", 300,
         dissonance_necessity},
        {"dissonance scan at s = 20 matches the brute-force oracle (min n = 97)", 60,
         dissonance_scan_s20},
        {"stage-(vi) chains hold for 3 <= n <= 12, 2 <= ell <= 8, bound 1000", 300,
         item_vi_grid},
        {"property: von Staudt-Clausen denominators, n <= 30", 60, von_staudt_clausen},
        {"property: window arithmetic equals brute force, 1000 cases", 120, window_property},
        {"property: monoid reachability equals BFS oracle, 200 cases", 120, monoid_property},
        {"property: CLI byte-determinism on repeated runs", 120, cli_determinism},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.check(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.limit_seconds) {
            ok = false;
            detail += (detail.empty() ? "" : "; ") + std::string("exceeded ") +
                      std::to_string(c.limit_seconds) + "s budget";
        }
        std::cout << (ok ? "PASS" : "FAIL") << "  [" << std::fixed << std::setprecision(2)
                  << std::setw(7) << secs << "s]  " << c.name;
        if (!ok && !detail.empty()) std::cout << "  -- " << detail;
        std::cout << '\n';
        if (!ok) ++failures;
    }
    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "CRITERIA FAILED") << " ("
              << criteria.size() - failures << "/" << criteria.size() << ")\n";
    return failures == 0 ? 0 : 1;
}
