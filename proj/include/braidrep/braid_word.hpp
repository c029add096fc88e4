#pragma once

#include <cstdlib>
#include <string>
#include <string_view>
#include <vector>

#include "braidrep/errors.hpp"
#include "braidrep/monomial.hpp"
#include "braidrep/representation.hpp"

namespace braidrep {

/// A braid word as signed generator letters: +k = tau_k, -k = tau_k^-1.
struct BraidWord {
    std::vector<int> letters;

    bool operator==(const BraidWord& other) const { return letters == other.letters; }

    /// The inverse word: reversed order, every letter negated.
    BraidWord inverse() const {
        BraidWord w;
        w.letters.reserve(letters.size());
        for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.letters.push_back(-*it);
        return w;
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < letters.size(); ++i) {
            if (i) s += " ";
            s += std::to_string(letters[i]);
        }
        return s;
    }
};

/// Grammar: whitespace-separated signed integers, each optionally followed by
/// ^<integer>; "k^p" expands to |p| copies of k with the sign multiplied by
/// sign(p). "2^-2" means [-2, -2]; exponent 0 expands to nothing.
inline BraidWord parse_braid_word(std::string_view text) {
    BraidWord word;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n'))
            ++pos;
    };
    auto parse_int = [&]() -> long long {
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
        std::size_t digits = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            ++pos;
            ++digits;
        }
        if (digits == 0) throw ParseError("expected integer", start);
        if (digits > 9) throw ParseError("integer too large", start);
        return std::atoll(std::string(text.substr(start, pos - start)).c_str());
    };

    skip_ws();
    while (pos < text.size()) {
        std::size_t token_start = pos;
        long long letter = parse_int();
        long long power = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            power = parse_int();
        }
        if (pos < text.size() && text[pos] != ' ' && text[pos] != '\t' && text[pos] != '\n')
            throw ParseError("unexpected character in braid word", pos);
        if (letter == 0) throw ZeroGenerator(token_start);
        int signed_letter = static_cast<int>(power < 0 ? -letter : letter);
        long long count = power < 0 ? -power : power;
        for (long long i = 0; i < count; ++i) word.letters.push_back(signed_letter);
        skip_ws();
    }
    return word;
}

/// Left-to-right product: the word "a b" is the matrix phi(tau_a) * phi(tau_b)
/// acting on column vectors. Negative letters use the inverse generator.
inline MonomialMatrix evaluate_word(const Representation& rep, const BraidWord& word) {
    MonomialMatrix acc = MonomialMatrix::identity(rep.dim());
    for (int letter : word.letters) {
        int k = letter < 0 ? -letter : letter;
        if (k < 1 || k > rep.n - 1) throw GeneratorOutOfRange(letter, rep.n);
        const MonomialMatrix& g = rep.generator(k);
        acc = mm_compose(acc, letter < 0 ? mm_inverse(g) : g);
    }
    return acc;
}

}  // namespace braidrep
