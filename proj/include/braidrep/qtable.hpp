#pragma once

#include <map>
#include <set>
#include <utility>

#include "braidrep/errors.hpp"
#include "braidrep/orbit.hpp"
#include "braidrep/scalar.hpp"

namespace braidrep {

/// Assignment (a,b) -> q_{a,b} of a nonzero scalar to each ordered pair of
/// seed values. The generator action only ever reads q at the value pair
/// sitting in the two swapped places.
class QTable {
public:
    using Map = std::map<std::pair<int, int>, Scalar>;

    QTable() = default;

    void set(int a, int b, Scalar value) {
        if (value.is_zero()) throw ZeroQEntry(a, b);
        entries_[{a, b}] = std::move(value);
    }

    const Scalar& get(int a, int b) const {
        auto it = entries_.find({a, b});
        if (it == entries_.end()) throw MissingQEntry(a, b);
        return it->second;
    }

    bool contains(int a, int b) const { return entries_.count({a, b}) != 0; }
    const Map& entries() const { return entries_; }
    bool operator==(const QTable& other) const { return entries_ == other.entries_; }

    /// Checks totality on every ordered pair of values occurring in the seed,
    /// equal pairs included. Throws MissingQEntry on the first gap.
    void require_total_for(const ValueTuple& seed) const {
        std::set<int> values(seed.begin(), seed.end());
        for (int a : values)
            for (int b : values) (void)get(a, b);
    }

    /// True when every stored entry is the same scalar.
    bool all_entries_equal() const {
        if (entries_.empty()) return true;
        const Scalar& first = entries_.begin()->second;
        for (const auto& [key, value] : entries_)
            if (value != first) return false;
        return true;
    }

private:
    Map entries_;
};

/// q(a,b) = 1 if a == b else t — the phi_m family pattern on values {0,1}.
inline QTable make_phi_q() {
    QTable q;
    for (int a : {0, 1})
        for (int b : {0, 1}) q.set(a, b, a == b ? Scalar::one() : Scalar::t());
    return q;
}

/// q(a,b) = 1 + (t-1)*b on values {0,1} — the standard-representation pattern.
inline QTable make_standard_q() {
    QTable q;
    for (int a : {0, 1})
        for (int b : {0, 1})
            q.set(a, b, b == 1 ? Scalar::t() : Scalar::one());
    return q;
}

}  // namespace braidrep
