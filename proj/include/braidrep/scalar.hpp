#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "braidrep/errors.hpp"
#include "braidrep/gaussian.hpp"

namespace braidrep {

namespace detail {
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) throw ExponentOverflow();
    return r;
}
inline std::int64_t checked_neg(std::int64_t a) {
    if (a == INT64_MIN) throw ExponentOverflow();
    return -a;
}
}  // namespace detail

/// Laurent polynomial in one variable t with Gaussian-rational coefficients.
///
/// Canonical form: the coefficient map never stores a zero, so equality is
/// plain map equality. The variable t is treated as a real parameter, so
/// conjugation acts on coefficients only.
class Scalar {
public:
    using CoeffMap = std::map<std::int64_t, GaussianRational>;

    Scalar() = default;

    /// Single term c * t^e (drops to zero if c == 0).
    static Scalar term(GaussianRational c, std::int64_t e) {
        Scalar s;
        if (!c.is_zero()) s.coeffs_.emplace(e, std::move(c));
        return s;
    }
    static Scalar zero() { return Scalar(); }
    static Scalar one() { return term(GaussianRational::one(), 0); }
    static Scalar t() { return term(GaussianRational::one(), 1); }
    static Scalar t_pow(std::int64_t e) { return term(GaussianRational::one(), e); }
    static Scalar constant(GaussianRational c) { return term(std::move(c), 0); }
    static Scalar constant(Rational r) { return term(GaussianRational(std::move(r)), 0); }
    static Scalar constant(int v) { return term(GaussianRational(v), 0); }
    static Scalar i() { return term(GaussianRational::i(), 0); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_.begin()->first == 0 &&
                                 coeffs_.begin()->second.is_one(); }
    std::size_t num_terms() const { return coeffs_.size(); }

    /// A Laurent polynomial is a unit iff it is a single term c * t^e.
    bool is_unit() const { return coeffs_.size() == 1; }

    Scalar unit_inverse() const {
        if (!is_unit()) throw DivisionByZero("not a unit of the Laurent ring");
        const auto& [e, c] = *coeffs_.begin();
        return term(c.inverse(), detail::checked_neg(e));
    }

    std::int64_t min_exp() const { return coeffs_.begin()->first; }    // pre: !is_zero()
    std::int64_t max_exp() const { return coeffs_.rbegin()->first; }   // pre: !is_zero()

    GaussianRational coeff(std::int64_t e) const {
        auto it = coeffs_.find(e);
        return it == coeffs_.end() ? GaussianRational::zero() : it->second;
    }
    const CoeffMap& coeffs() const { return coeffs_; }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        Scalar r = a;
        for (const auto& [e, c] : b.coeffs_) r.add_term(e, c);
        return r;
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        Scalar r = a;
        for (const auto& [e, c] : b.coeffs_) r.add_term(e, -c);
        return r;
    }
    friend Scalar operator-(const Scalar& a) {
        Scalar r;
        for (const auto& [e, c] : a.coeffs_) r.coeffs_.emplace(e, -c);
        return r;
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        Scalar r;
        for (const auto& [ea, ca] : a.coeffs_)
            for (const auto& [eb, cb] : b.coeffs_)
                r.add_term(detail::checked_add(ea, eb), ca * cb);
        return r;
    }
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Coefficient-wise conjugation; t itself is fixed (real parameter).
    Scalar conj() const {
        Scalar r;
        for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e, c.conj());
        return r;
    }

    /// a * conj(a); fixed by conj.
    Scalar abs_sq() const { return *this * conj(); }

    /// Exact substitution t := p. Negative exponents require p != 0.
    GaussianRational eval(const GaussianRational& p) const {
        GaussianRational acc = GaussianRational::zero();
        for (const auto& [e, c] : coeffs_) {
            if (e < 0 && p.is_zero()) throw EvalAtZero();
            acc = acc + c * pow_at(p, e);
        }
        return acc;
    }

    std::string to_string() const;
    static Scalar parse(std::string_view text);

private:
    void add_term(std::int64_t e, const GaussianRational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = coeffs_.try_emplace(e, c);
        if (!inserted) {
            it->second = it->second + c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    static GaussianRational pow_at(const GaussianRational& p, std::int64_t e) {
        if (e == 0) return GaussianRational::one();
        GaussianRational base = e < 0 ? p.inverse() : p;
        std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1
                                : static_cast<std::uint64_t>(e);
        GaussianRational acc = GaussianRational::one();
        while (n > 0) {
            if (n & 1) acc = acc * base;
            base = base * base;
            n >>= 1;
        }
        return acc;
    }

    CoeffMap coeffs_;
};

inline Scalar conj(const Scalar& a) { return a.conj(); }
inline Scalar abs_sq(const Scalar& a) { return a.abs_sq(); }

// ---------------------------------------------------------------------------
// Canonical text form
//
// Terms ascend by exponent and are joined with " + ". A coefficient is
// rendered bare when it is a plain positive integer (or any rational in the
// constant term); otherwise it is parenthesized: `(3/2)*t^-1 + 1 + (0+1i)*t^2`.
// ---------------------------------------------------------------------------

inline std::string Scalar::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        if (!first) out += " + ";
        first = false;
        if (e == 0) {
            // negative constants go in parentheses so mid-sum terms reparse
            if (c.is_real() && c.re >= 0) out += rational_to_string(c.re);
            else out += "(" + gaussian_to_string(c) + ")";
            continue;
        }
        std::string tp = (e == 1) ? "t" : "t^" + std::to_string(e);
        if (c.is_one()) {
            out += tp;
            continue;
        }
        bool bare = c.is_real() && c.re > 0 && denominator(c.re) == 1;
        out += bare ? gaussian_to_string(c) : "(" + gaussian_to_string(c) + ")";
        out += "*" + tp;
    }
    return out;
}

namespace detail {

/// Recursive-descent parser for the canonical scalar grammar (and a slightly
/// forgiving superset: '-' as a term separator, "2i", bare "i", "2t" without
/// the '*').
class ScalarParser {
public:
    explicit ScalarParser(std::string_view text) : text_(text) {}

    Scalar parse() {
        skip_ws();
        if (eof()) throw ParseError("empty scalar", 0);
        Scalar acc = Scalar::zero();
        bool negate = false;
        if (peek() == '+' || peek() == '-') negate = (take() == '-');
        for (;;) {
            Scalar term = parse_term();
            acc = negate ? acc - term : acc + term;
            skip_ws();
            if (eof()) break;
            char sep = take();
            if (sep == '+') negate = false;
            else if (sep == '-') negate = true;
            else throw ParseError(std::string("expected '+' or '-', got '") + sep + "'", pos_ - 1);
            skip_ws();
            if (eof()) throw ParseError("dangling sign", pos_);
        }
        return acc;
    }

private:
    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    char take() { return text_[pos_++]; }
    void skip_ws() { while (!eof() && (peek() == ' ' || peek() == '\t')) ++pos_; }

    bool at_digit() const { return !eof() && peek() >= '0' && peek() <= '9'; }

    std::int64_t parse_signed_int() {
        std::size_t start = pos_;
        if (!eof() && (peek() == '+' || peek() == '-')) ++pos_;
        if (!at_digit()) throw ParseError("expected integer", pos_);
        while (at_digit()) ++pos_;
        try {
            return std::stoll(std::string(text_.substr(start, pos_ - start)));
        } catch (const std::out_of_range&) {
            throw ParseError("integer out of range", start);
        }
    }

    Rational parse_rational_tok(bool allow_sign) {
        std::size_t start = pos_;
        if (allow_sign && !eof() && (peek() == '+' || peek() == '-')) ++pos_;
        if (!at_digit()) throw ParseError("expected number", pos_);
        while (at_digit()) ++pos_;
        if (!eof() && peek() == '/') {
            ++pos_;
            if (!at_digit()) throw ParseError("expected denominator", pos_);
            while (at_digit()) ++pos_;
        }
        return parse_rational(text_.substr(start, pos_ - start), start);
    }

    /// Parses t or t^e; returns the exponent.
    std::int64_t parse_tpow() {
        if (eof() || peek() != 't') throw ParseError("expected 't'", pos_);
        ++pos_;
        if (!eof() && peek() == '^') {
            ++pos_;
            return parse_signed_int();
        }
        return 1;
    }

    /// number ['i'] | number '+'/'-' [number] 'i' — the inside of parentheses,
    /// also used bare.
    GaussianRational parse_complex_body() {
        skip_ws();
        if (!eof() && peek() == 'i') {  // bare imaginary unit
            ++pos_;
            return GaussianRational::i();
        }
        Rational first = parse_rational_tok(true);
        skip_ws();
        if (!eof() && peek() == 'i') {
            ++pos_;
            return {Rational(0), first};
        }
        if (!eof() && (peek() == '+' || peek() == '-')) {
            std::size_t mark = pos_;
            bool neg = (take() == '-');
            skip_ws();
            Rational mag(1);
            if (at_digit()) mag = parse_rational_tok(false);
            skip_ws();
            if (!eof() && peek() == 'i') {
                ++pos_;
                return {first, neg ? Rational(-mag) : mag};
            }
            pos_ = mark;  // not a complex tail; let caller treat +/- as separator
        }
        return {first, Rational(0)};
    }

    Scalar parse_term() {
        skip_ws();
        if (eof()) throw ParseError("expected term", pos_);
        if (peek() == 't') return Scalar::t_pow(parse_tpow());
        GaussianRational coeff;
        if (peek() == '(') {
            ++pos_;
            coeff = parse_complex_body();
            skip_ws();
            if (eof() || take() != ')') throw ParseError("expected ')'", pos_ - (eof() ? 0 : 1));
        } else if (peek() == 'i') {
            ++pos_;
            coeff = GaussianRational::i();
        } else {
            Rational r = parse_rational_tok(false);
            if (!eof() && peek() == 'i') {
                ++pos_;
                coeff = GaussianRational(Rational(0), r);
            } else {
                coeff = GaussianRational(r);
            }
        }
        skip_ws();
        if (!eof() && (peek() == '*' || peek() == 't')) {
            if (peek() == '*') {
                ++pos_;
                skip_ws();
            }
            return Scalar::term(coeff, parse_tpow());
        }
        return Scalar::constant(coeff);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Scalar Scalar::parse(std::string_view text) {
    return detail::ScalarParser(text).parse();
}

// ---------------------------------------------------------------------------
// Exact division in the Laurent ring (used by fraction-free elimination,
// where divisibility is guaranteed). Throws DivisionByZero if b == 0 and
// Error if the division is not exact.
// ---------------------------------------------------------------------------

inline Scalar exact_div(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw DivisionByZero("Laurent division by zero");
    if (a.is_zero()) return Scalar::zero();
    if (b.is_unit()) return a * b.unit_inverse();

    const std::int64_t sa = a.min_exp(), sb = b.min_exp();
    auto to_vec = [](const Scalar& s, std::int64_t shift) {
        std::vector<GaussianRational> v(
            static_cast<std::size_t>(s.max_exp() - shift) + 1, GaussianRational::zero());
        for (const auto& [e, c] : s.coeffs()) v[static_cast<std::size_t>(e - shift)] = c;
        return v;
    };
    std::vector<GaussianRational> num = to_vec(a, sa);
    std::vector<GaussianRational> den = to_vec(b, sb);

    if (num.size() < den.size()) throw Error("Laurent division is not exact");
    std::vector<GaussianRational> quot(num.size() - den.size() + 1, GaussianRational::zero());
    const GaussianRational lead = den.back().inverse();
    for (std::size_t qi = quot.size(); qi-- > 0;) {
        GaussianRational q = num[qi + den.size() - 1] * lead;
        quot[qi] = q;
        if (q.is_zero()) continue;
        for (std::size_t j = 0; j < den.size(); ++j) {
            std::size_t k = qi + j;
            num[k] = num[k] - q * den[j];
        }
    }
    for (const auto& c : num)
        if (!c.is_zero()) throw Error("Laurent division is not exact");

    Scalar result;
    const std::int64_t shift = sa - sb;
    for (std::size_t k = 0; k < quot.size(); ++k)
        result += Scalar::term(quot[k], detail::checked_add(static_cast<std::int64_t>(k), shift));
    return result;
}

}  // namespace braidrep
