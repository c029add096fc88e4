#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "braidrep/errors.hpp"
#include "braidrep/rational.hpp"

namespace braidrep {

/// A point of the orbit X: an n-tuple of small non-negative integer symbols.
using ValueTuple = std::vector<int>;

struct TupleHash {
    std::size_t operator()(const ValueTuple& v) const {
        std::size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

/// Renders as "(0,1,1,0,1)" — the exact form used in JSON exports and CLI output.
inline std::string tuple_to_string(const ValueTuple& x) {
    std::string s = "(";
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(x[i]);
    }
    return s + ")";
}

/// Accepts "1,0,0" or "(1,0,0)".
inline ValueTuple parse_tuple(std::string_view text) {
    std::string_view body = text;
    if (!body.empty() && body.front() == '(') {
        if (body.back() != ')') throw ParseError("unbalanced parentheses in tuple", text.size());
        body = body.substr(1, body.size() - 2);
    }
    ValueTuple out;
    std::size_t pos = 0;
    while (pos <= body.size()) {
        std::size_t comma = body.find(',', pos);
        std::string_view tok = body.substr(pos, comma == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : comma - pos);
        if (tok.empty()) throw ParseError("empty tuple entry", pos);
        int value = 0;
        for (char ch : tok) {
            if (ch < '0' || ch > '9') throw ParseError("tuple entries must be non-negative integers", pos);
            value = value * 10 + (ch - '0');
            if (value > 1'000'000) throw ParseError("tuple entry too large", pos);
        }
        out.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

/// The orbit X of all distinct permutations of a seed tuple, sorted ascending
/// lexicographically, with a rank map back from tuple to basis index.
struct OrbitIndex {
    std::vector<ValueTuple> basis;
    std::unordered_map<ValueTuple, std::size_t, TupleHash> rank_of;

    std::size_t size() const { return basis.size(); }
    std::size_t n() const { return basis.empty() ? 0 : basis.front().size(); }

    std::size_t rank(const ValueTuple& x) const {
        auto it = rank_of.find(x);
        if (it == rank_of.end())
            throw IndexOutOfRange("tuple " + tuple_to_string(x) + " is not in the orbit");
        return it->second;
    }
    bool contains(const ValueTuple& x) const { return rank_of.count(x) != 0; }
};

/// Swaps entries k and k+1 (k is 1-based, 1 <= k <= n-1). An involution.
inline ValueTuple sigma_k(const ValueTuple& x, int k) {
    if (k < 1 || static_cast<std::size_t>(k) >= x.size())
        throw IndexOutOfRange("sigma_" + std::to_string(k) + " undefined for n=" +
                              std::to_string(x.size()));
    ValueTuple y = x;
    std::swap(y[k - 1], y[k]);
    return y;
}

/// Flips 0 <-> 1; defined only on binary tuples.
inline ValueTuple complement_tuple(const ValueTuple& x) {
    ValueTuple y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] != 0 && x[i] != 1) throw NotBinaryTuple();
        y[i] = 1 - x[i];
    }
    return y;
}

/// Enumerates the orbit by next-permutation in lex order from the sorted seed:
/// O(|X| * n), deterministic ascending order, duplicates collapse for free.
inline OrbitIndex orbit_generate(const ValueTuple& seed) {
    if (seed.size() < 2) throw TupleTooShort(seed.size());
    OrbitIndex orbit;
    ValueTuple cur = seed;
    std::sort(cur.begin(), cur.end());
    do {
        orbit.rank_of.emplace(cur, orbit.basis.size());
        orbit.basis.push_back(cur);
    } while (std::next_permutation(cur.begin(), cur.end()));
    return orbit;
}

/// Multinomial count n! / (c_1! ... c_r!) over the value multiplicities.
inline std::uint64_t orbit_cardinality(const ValueTuple& seed) {
    if (seed.size() < 2) throw TupleTooShort(seed.size());
    std::unordered_map<int, unsigned> mult;
    for (int v : seed) ++mult[v];
    BigInt num = 1;
    for (std::size_t i = 2; i <= seed.size(); ++i) num *= i;
    for (const auto& [value, count] : mult) {
        (void)value;
        for (std::size_t i = 2; i <= count; ++i) num /= i;
    }
    if (num > BigInt(UINT64_MAX)) throw BadRange("orbit cardinality exceeds 2^64");
    return num.convert_to<std::uint64_t>();
}

}  // namespace braidrep
