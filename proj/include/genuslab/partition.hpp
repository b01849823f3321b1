// Integer partitions indexing monomials p_{j1} p_{j2} ... p_{jr}.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace genuslab {

/// Weakly decreasing list of positive integers. The empty partition
/// (weight 0) stands for the constant monomial.
///
/// Canonical total order: by weight, then lexicographically with larger
/// parts first, so that within one weight [n] precedes [n-1,1] precedes
/// ... precedes [1,...,1]. This is the order used for serialization.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
        for (unsigned p : parts_)
            if (p == 0) throw std::invalid_argument("Partition: parts must be positive");
        std::sort(parts_.begin(), parts_.end(), std::greater<unsigned>());
        for (unsigned p : parts_) weight_ += p;
    }
    Partition(std::initializer_list<unsigned> parts)
        : Partition(std::vector<unsigned>(parts)) {}

    const std::vector<unsigned>& parts() const { return parts_; }
    unsigned weight() const { return weight_; }
    std::size_t size() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }

    /// Multiset union, the exponent bookkeeping of a monomial product.
    static Partition merge(const Partition& a, const Partition& b) {
        Partition out;
        out.parts_.resize(a.parts_.size() + b.parts_.size());
        std::merge(a.parts_.begin(), a.parts_.end(), b.parts_.begin(), b.parts_.end(),
                   out.parts_.begin(), std::greater<unsigned>());
        out.weight_ = a.weight_ + b.weight_;
        return out;
    }

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.parts_ == b.parts_;
    }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b) {
        if (a.weight_ != b.weight_) return a.weight_ < b.weight_;
        return std::lexicographical_compare(b.parts_.begin(), b.parts_.end(),
                                            a.parts_.begin(), a.parts_.end());
    }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        return s + "]";
    }

private:
    std::vector<unsigned> parts_;
    unsigned weight_ = 0;
};

/// All partitions of `weight` with at most `max_parts` parts, in canonical
/// order. weight = 0 yields the empty partition.
inline std::vector<Partition> partitions_of(unsigned weight,
                                            unsigned max_parts = ~0u) {
    std::vector<Partition> out;
    std::vector<unsigned> cur;
    std::function<void(unsigned, unsigned)> rec = [&](unsigned rest, unsigned maxpart) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        if (cur.size() >= max_parts) return;
        for (unsigned p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(weight, weight == 0 ? 1 : weight);
    return out;
}

}  // namespace genuslab
