// Arithmetic progressions A[u:v:w] and exact window evaluation of
// elementwise set expressions (S+T, S-T, unions, intersection with N).
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace genuslab {

/// A[u:v:w] = {u, u+v, u+2v, ..., w}; w may be absent (unbounded above).
/// Normal form: step >= 0; step = 0 only for singletons; a progression with
/// last < first denotes the empty set. Negative steps are normalized by
/// reversing the enumeration order.
struct APSet {
    bool empty = true;
    long long first = 0;
    long long step = 0;
    std::optional<long long> last;  // nullopt = unbounded above

    static APSet make(long long u, long long v, std::optional<long long> w) {
        APSet s;
        if (v < 0) {
            if (!w)
                throw std::invalid_argument("APSet: negative step with no endpoint");
            return make(*w, -v, u);
        }
        if (v == 0) {  // singleton convention, any endpoint collapses to {u}
            s.empty = false;
            s.first = u;
            s.step = 0;
            s.last = u;
            return s;
        }
        if (w && *w < u) return s;  // empty range
        if (w && (*w - u) % v != 0)
            throw std::invalid_argument("APSet: endpoint not on the progression");
        s.empty = false;
        s.first = u;
        s.step = v;
        s.last = w;
        return s;
    }

    std::string to_string() const {
        if (empty) return "A[empty]";
        return "A[" + std::to_string(first) + ":" + std::to_string(step) + ":" +
               (last ? std::to_string(*last) : std::string("inf")) + "]";
    }
};

/// Finite, exact realization of a set expression within [lo, hi].
struct WindowSet {
    long long lo = 0;
    long long hi = -1;
    std::vector<long long> elems;  // sorted, duplicate-free, within [lo, hi]

    bool contains(long long x) const {
        return std::binary_search(elems.begin(), elems.end(), x);
    }
    std::size_t size() const { return elems.size(); }
    bool empty() const { return elems.empty(); }
};

inline WindowSet make_window(long long lo, long long hi, std::vector<long long> elems) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    WindowSet w;
    w.lo = lo;
    w.hi = hi;
    w.elems = std::move(elems);
    return w;
}

inline WindowSet intersect(const WindowSet& a, const WindowSet& b) {
    std::vector<long long> out;
    std::set_intersection(a.elems.begin(), a.elems.end(), b.elems.begin(), b.elems.end(),
                          std::back_inserter(out));
    return make_window(std::max(a.lo, b.lo), std::min(a.hi, b.hi), std::move(out));
}

/// Expression tree over APSet leaves. SUM and DIFF are the elementwise
/// {s+t} and {s-t}, not union or set difference.
class SetExpr {
public:
    enum class Kind { Leaf, Sum, Diff, Union, InterNat };

    static SetExpr leaf(APSet ap) {
        SetExpr e;
        e.kind_ = Kind::Leaf;
        e.leaf_ = ap;
        return e;
    }
    static SetExpr node(Kind k, SetExpr a, SetExpr b) {
        SetExpr e;
        e.kind_ = k;
        e.kids_.push_back(std::move(a));
        e.kids_.push_back(std::move(b));
        return e;
    }
    static SetExpr inter_nat(SetExpr a) {
        SetExpr e;
        e.kind_ = Kind::InterNat;
        e.kids_.push_back(std::move(a));
        return e;
    }

    Kind kind() const { return kind_; }
    const APSet& ap() const { return leaf_; }
    const SetExpr& child(std::size_t i) const { return kids_[i]; }

private:
    Kind kind_ = Kind::Leaf;
    APSet leaf_;
    std::vector<SetExpr> kids_;
};

inline SetExpr ap(long long u, long long v, long long w) {
    return SetExpr::leaf(APSet::make(u, v, w));
}
inline SetExpr ap_inf(long long u, long long v) {
    return SetExpr::leaf(APSet::make(u, v, std::nullopt));
}
inline SetExpr singleton(long long x) { return ap(x, 0, x); }
inline SetExpr sum_expr(SetExpr a, SetExpr b) {
    return SetExpr::node(SetExpr::Kind::Sum, std::move(a), std::move(b));
}
inline SetExpr diff_expr(SetExpr a, SetExpr b) {
    return SetExpr::node(SetExpr::Kind::Diff, std::move(a), std::move(b));
}
inline SetExpr union_expr(SetExpr a, SetExpr b) {
    return SetExpr::node(SetExpr::Kind::Union, std::move(a), std::move(b));
}
inline SetExpr nat_expr(SetExpr a) { return SetExpr::inter_nat(std::move(a)); }

namespace detail {

// Conservative bounds on the full (un-windowed) value of an expression.
// maybe_empty tracks definite emptiness only for pruning; bounds of a
// possibly-empty expression are still safe for window extension.
struct ExprBounds {
    bool definitely_empty = false;
    long long lb = 0;
    std::optional<long long> ub;  // nullopt = unbounded above
};

inline ExprBounds bounds_of(const SetExpr& e) {
    using Kind = SetExpr::Kind;
    switch (e.kind()) {
        case Kind::Leaf: {
            const APSet& s = e.ap();
            return {s.empty, s.empty ? 0 : s.first, s.empty ? std::optional<long long>(0) : s.last};
        }
        case Kind::Sum: {
            const ExprBounds a = bounds_of(e.child(0)), b = bounds_of(e.child(1));
            if (a.definitely_empty || b.definitely_empty) return {true, 0, 0};
            return {false, a.lb + b.lb,
                    a.ub && b.ub ? std::optional<long long>(*a.ub + *b.ub) : std::nullopt};
        }
        case Kind::Diff: {
            const ExprBounds a = bounds_of(e.child(0)), b = bounds_of(e.child(1));
            if (a.definitely_empty || b.definitely_empty) return {true, 0, 0};
            if (!b.ub)
                throw std::domain_error(
                    "eval_window: difference by a set unbounded above has no finite window");
            return {false, a.lb - *b.ub,
                    a.ub ? std::optional<long long>(*a.ub - b.lb) : std::nullopt};
        }
        case Kind::Union: {
            const ExprBounds a = bounds_of(e.child(0)), b = bounds_of(e.child(1));
            if (a.definitely_empty) return b;
            if (b.definitely_empty) return a;
            return {false, std::min(a.lb, b.lb),
                    a.ub && b.ub ? std::optional<long long>(std::max(*a.ub, *b.ub))
                                 : std::nullopt};
        }
        case Kind::InterNat: {
            ExprBounds a = bounds_of(e.child(0));
            a.lb = std::max(a.lb, 0LL);
            if (a.ub && *a.ub < 0) a.definitely_empty = true;
            return a;
        }
    }
    return {true, 0, 0};
}

inline std::vector<long long> enumerate_leaf(const APSet& s, long long lo, long long hi) {
    std::vector<long long> out;
    if (s.empty || lo > hi) return out;
    if (s.step == 0) {
        if (lo <= s.first && s.first <= hi) out.push_back(s.first);
        return out;
    }
    long long t0 = 0;
    if (lo > s.first) {
        const long long d = lo - s.first;
        t0 = d / s.step + (d % s.step != 0 ? 1 : 0);
    }
    const long long top = s.last ? std::min(*s.last, hi) : hi;
    for (long long x = s.first + t0 * s.step; x <= top; x += s.step) out.push_back(x);
    return out;
}

}  // namespace detail

/// Exact realization of expr within [lo, hi]: every member of the true set
/// that lies in the window appears, and nothing else. Operand windows are
/// extended per the expression bounds so SUM/DIFF results are complete.
inline WindowSet eval_window(const SetExpr& e, long long lo, long long hi) {
    using Kind = SetExpr::Kind;
    if (lo > hi) return make_window(lo, hi, {});
    switch (e.kind()) {
        case Kind::Leaf:
            return make_window(lo, hi, detail::enumerate_leaf(e.ap(), lo, hi));
        case Kind::Union: {
            const WindowSet a = eval_window(e.child(0), lo, hi);
            const WindowSet b = eval_window(e.child(1), lo, hi);
            std::vector<long long> out;
            std::set_union(a.elems.begin(), a.elems.end(), b.elems.begin(), b.elems.end(),
                           std::back_inserter(out));
            return make_window(lo, hi, std::move(out));
        }
        case Kind::InterNat: {
            WindowSet w = eval_window(e.child(0), std::max(lo, 0LL), hi);
            w.lo = lo;  // report the requested window
            return w;
        }
        case Kind::Sum: {
            const detail::ExprBounds ba = detail::bounds_of(e.child(0));
            const detail::ExprBounds bb = detail::bounds_of(e.child(1));
            if (ba.definitely_empty || bb.definitely_empty) return make_window(lo, hi, {});
            const long long alo = bb.ub ? std::max(ba.lb, lo - *bb.ub) : ba.lb;
            const long long ahi = hi - bb.lb;
            const long long blo = ba.ub ? std::max(bb.lb, lo - *ba.ub) : bb.lb;
            const long long bhi = hi - ba.lb;
            const WindowSet a = eval_window(e.child(0), alo, ahi);
            const WindowSet b = eval_window(e.child(1), blo, bhi);
            std::set<long long> out;
            for (long long s : a.elems)
                for (long long t : b.elems)
                    if (const long long v = s + t; lo <= v && v <= hi) out.insert(v);
            return make_window(lo, hi, {out.begin(), out.end()});
        }
        case Kind::Diff: {
            const detail::ExprBounds ba = detail::bounds_of(e.child(0));
            const detail::ExprBounds bb = detail::bounds_of(e.child(1));
            if (ba.definitely_empty || bb.definitely_empty) return make_window(lo, hi, {});
            if (!bb.ub)
                throw std::domain_error(
                    "eval_window: difference by a set unbounded above has no finite window");
            const WindowSet b = eval_window(e.child(1), bb.lb, *bb.ub);
            if (b.empty()) return make_window(lo, hi, {});
            const long long alo = std::max(ba.lb, lo + b.elems.front());
            const long long ahi = hi + b.elems.back();
            const WindowSet a = eval_window(e.child(0), alo, ahi);
            std::set<long long> out;
            for (long long s : a.elems)
                for (long long t : b.elems)
                    if (const long long v = s - t; lo <= v && v <= hi) out.insert(v);
            return make_window(lo, hi, {out.begin(), out.end()});
        }
    }
    return make_window(lo, hi, {});
}

}  // namespace genuslab
