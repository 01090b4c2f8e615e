#pragma once

// Integer polynomials in one variable t: parsing from text, exact expansion,
// evaluation mod p, and the perfect-square predicate f = g^2 over Z[t].
// Coefficients are exact 128-bit integers; overflow throws rather than wraps.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "simroots/arith.hpp"
#include "simroots/rational.hpp"

namespace simroots {

namespace detail {

inline i128 checked_add(i128 a, i128 b) {
    i128 r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("polynomial coefficient overflow");
    return r;
}

inline i128 checked_mul(i128 a, i128 b) {
    i128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("polynomial coefficient overflow");
    return r;
}

}  // namespace detail

inline constexpr int max_poly_degree = 1 << 16;

// Coefficients in ascending degree order; the zero polynomial is the empty
// coefficient list. No trailing zero coefficients otherwise.
class IntPolynomial {
  public:
    IntPolynomial() = default;

    explicit IntPolynomial(std::vector<i128> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    IntPolynomial(std::initializer_list<i64> coeffs) {
        coeffs_.assign(coeffs.begin(), coeffs.end());
        normalize();
    }

    static IntPolynomial zero() { return IntPolynomial{}; }
    static IntPolynomial constant(i128 c) { return IntPolynomial(std::vector<i128>{c}); }
    static IntPolynomial variable() { return IntPolynomial(std::vector<i128>{0, 1}); }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    const std::vector<i128>& coeffs() const { return coeffs_; }

    i128 coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[static_cast<std::size_t>(i)] : 0;
    }
    i128 leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }

    bool operator==(const IntPolynomial&) const = default;

    IntPolynomial operator-() const {
        std::vector<i128> c(coeffs_);
        for (auto& v : c) v = detail::checked_mul(v, -1);
        return IntPolynomial(std::move(c));
    }

    IntPolynomial operator+(const IntPolynomial& o) const {
        std::vector<i128> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] = detail::checked_add(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
        return IntPolynomial(std::move(c));
    }

    IntPolynomial operator-(const IntPolynomial& o) const { return *this + (-o); }

    IntPolynomial operator*(const IntPolynomial& o) const {
        if (is_zero() || o.is_zero()) return zero();
        if (degree() + o.degree() > max_poly_degree)
            throw std::overflow_error("polynomial degree too large");
        std::vector<i128> c(coeffs_.size() + o.coeffs_.size() - 1, 0);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
                c[i + j] = detail::checked_add(c[i + j], detail::checked_mul(coeffs_[i], o.coeffs_[j]));
        }
        return IntPolynomial(std::move(c));
    }

    IntPolynomial pow(u64 e) const {
        IntPolynomial r = constant(1);
        IntPolynomial base = *this;
        while (e != 0) {
            if (e & 1) r = r * base;
            e >>= 1;
            if (e != 0) base = base * base;
        }
        return r;
    }

  private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<i128> coeffs_;
};

// Horner evaluation with every step reduced mod p; coefficients are reduced
// into [0, p) first (negatives included).
inline u64 eval_mod(const IntPolynomial& f, u64 z, u64 p) {
    if (p == 0) throw std::domain_error("eval_mod: modulus is zero");
    z %= p;
    u64 acc = 0;
    const auto& c = f.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        i128 red = c[i] % static_cast<i128>(p);
        if (red < 0) red += p;
        acc = add_mod(mul_mod(acc, z, p), static_cast<u64>(red), p);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Parser. Grammar (whitespace ignored, no implicit multiplication):
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' nonneg_int)?
//   base   := 't' | int_literal | '(' expr ')'
// ---------------------------------------------------------------------------

class PolyParseError : public std::runtime_error {
  public:
    PolyParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

  private:
    std::size_t position_;
};

namespace detail {

class PolyParser {
  public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    IntPolynomial parse() {
        IntPolynomial result = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return result;
    }

  private:
    [[noreturn]] void fail(const std::string& msg) const { throw PolyParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    IntPolynomial parse_expr() {
        bool negate = accept('-');
        IntPolynomial acc = parse_term();
        if (negate) acc = -acc;
        for (;;) {
            if (accept('+'))
                acc = acc + parse_term();
            else if (accept('-'))
                acc = acc - parse_term();
            else
                return acc;
        }
    }

    IntPolynomial parse_term() {
        IntPolynomial acc = parse_factor();
        while (accept('*')) acc = acc * parse_factor();
        return acc;
    }

    IntPolynomial parse_factor() {
        IntPolynomial base = parse_base();
        if (accept('^')) {
            skip_ws();
            if (pos_ >= text_.size() || !is_digit(text_[pos_]))
                fail("exponent must be a nonnegative integer literal");
            u64 e = parse_uint();
            return base.pow(e);
        }
        return base;
    }

    IntPolynomial parse_base() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == 't') {
            ++pos_;
            return IntPolynomial::variable();
        }
        if (is_digit(c)) return IntPolynomial::constant(parse_int_literal());
        if (c == '(') {
            ++pos_;
            IntPolynomial inner = parse_expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        fail(std::string("expected 't', an integer, or '(', got '") + c + "'");
    }

    static bool is_digit(char c) { return c >= '0' && c <= '9'; }

    u64 parse_uint() {
        u64 v = 0;
        std::size_t start = pos_;
        while (pos_ < text_.size() && is_digit(text_[pos_])) {
            u64 digit = static_cast<u64>(text_[pos_] - '0');
            if (v > (UINT64_MAX - digit) / 10) fail("exponent literal too large");
            v = v * 10 + digit;
            ++pos_;
        }
        if (pos_ == start) fail("expected an integer");
        return v;
    }

    i128 parse_int_literal() {
        i128 v = 0;
        std::size_t start = pos_;
        while (pos_ < text_.size() && is_digit(text_[pos_])) {
            v = checked_mul(v, 10);
            v = checked_add(v, text_[pos_] - '0');
            ++pos_;
        }
        if (pos_ == start) fail("expected an integer");
        return v;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline IntPolynomial parse_poly(std::string_view text) { return detail::PolyParser(text).parse(); }

// Canonical text, descending degree, explicit '*', re-parseable by
// parse_poly: e.g. [2,5,4,1] -> "t^3+4*t^2+5*t+2".
inline std::string to_string(const IntPolynomial& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (int i = f.degree(); i >= 0; --i) {
        i128 c = f.coeff(i);
        if (c == 0) continue;
        bool neg = c < 0;
        i128 mag = neg ? -c : c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? "-" : "+";
        const bool unit = (mag == 1);
        if (i == 0) {
            out += detail::i128_to_string(mag);
        } else {
            if (!unit) {
                out += detail::i128_to_string(mag);
                out += "*";
            }
            out += (i == 1) ? "t" : "t^" + std::to_string(i);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Exact polynomial arithmetic over Z[t] supporting the square predicate.
// ---------------------------------------------------------------------------

inline IntPolynomial poly_derivative(const IntPolynomial& f) {
    if (f.degree() <= 0) return IntPolynomial::zero();
    std::vector<i128> c(static_cast<std::size_t>(f.degree()), 0);
    for (int i = 1; i <= f.degree(); ++i)
        c[static_cast<std::size_t>(i - 1)] = detail::checked_mul(f.coeff(i), i);
    return IntPolynomial(std::move(c));
}

// gcd of the coefficients, sign matching the leading coefficient.
// Zero polynomial has content 0.
inline i128 poly_content(const IntPolynomial& f) {
    i128 g = 0;
    for (i128 c : f.coeffs()) g = detail::gcd128(g, c);
    if (f.leading() < 0) g = -g;
    return g;
}

namespace detail {

inline IntPolynomial poly_scale(const IntPolynomial& f, i128 s) {
    std::vector<i128> c(f.coeffs());
    for (auto& v : c) v = checked_mul(v, s);
    return IntPolynomial(std::move(c));
}

// Divides every coefficient by d; requires exact divisibility.
inline IntPolynomial poly_divide_scalar(const IntPolynomial& f, i128 d) {
    if (d == 0) throw std::domain_error("poly_divide_scalar: zero divisor");
    std::vector<i128> c(f.coeffs());
    for (auto& v : c) {
        if (v % d != 0) throw std::logic_error("poly_divide_scalar: inexact division");
        v /= d;
    }
    return IntPolynomial(std::move(c));
}

inline IntPolynomial primitive_part(const IntPolynomial& f) {
    if (f.is_zero()) return f;
    return poly_divide_scalar(f, poly_content(f));
}

// Long division f / g when the quotient is known to lie in Z[t]; throws
// std::logic_error otherwise.
inline IntPolynomial poly_divide_exact(const IntPolynomial& f, const IntPolynomial& g) {
    if (g.is_zero()) throw std::domain_error("poly_divide_exact: division by zero polynomial");
    if (f.is_zero()) return IntPolynomial::zero();
    if (f.degree() < g.degree()) throw std::logic_error("poly_divide_exact: inexact division");
    std::vector<i128> rem(f.coeffs());
    std::vector<i128> quot(static_cast<std::size_t>(f.degree() - g.degree()) + 1, 0);
    const i128 lead = g.leading();
    for (int k = f.degree() - g.degree(); k >= 0; --k) {
        i128 top = rem[static_cast<std::size_t>(k + g.degree())];
        if (top % lead != 0) throw std::logic_error("poly_divide_exact: inexact division");
        i128 q = top / lead;
        quot[static_cast<std::size_t>(k)] = q;
        if (q != 0)
            for (int i = 0; i <= g.degree(); ++i)
                rem[static_cast<std::size_t>(k + i)] =
                    checked_add(rem[static_cast<std::size_t>(k + i)], checked_mul(-q, g.coeff(i)));
    }
    for (i128 c : rem)
        if (c != 0) throw std::logic_error("poly_divide_exact: nonzero remainder");
    return IntPolynomial(std::move(quot));
}

// Pseudo-remainder of lead(g)^(deg f - deg g + 1) * f by g (fraction-free).
inline IntPolynomial poly_pseudo_rem(IntPolynomial f, const IntPolynomial& g) {
    const i128 lead = g.leading();
    while (!f.is_zero() && f.degree() >= g.degree()) {
        int shift = f.degree() - g.degree();
        i128 fl = f.leading();
        IntPolynomial shifted = g;
        if (shift > 0) {
            std::vector<i128> c(static_cast<std::size_t>(shift), 0);
            c.insert(c.end(), g.coeffs().begin(), g.coeffs().end());
            shifted = IntPolynomial(std::move(c));
        }
        f = poly_scale(f, lead) - poly_scale(shifted, fl);
    }
    return f;
}

}  // namespace detail

// Primitive gcd over the rationals, positive leading coefficient. Uses the
// primitive pseudo-remainder sequence to keep coefficients small.
inline IntPolynomial poly_gcd_rational(IntPolynomial f, IntPolynomial g) {
    if (f.is_zero() && g.is_zero())
        throw std::domain_error("poly_gcd_rational: gcd of two zero polynomials");
    if (f.is_zero()) std::swap(f, g);
    if (g.is_zero()) {
        IntPolynomial r = detail::primitive_part(f);
        return r.leading() < 0 ? -r : r;
    }
    f = detail::primitive_part(f);
    g = detail::primitive_part(g);
    if (f.degree() < g.degree()) std::swap(f, g);
    while (!g.is_zero()) {
        IntPolynomial r = detail::poly_pseudo_rem(f, g);
        if (!r.is_zero()) r = detail::primitive_part(r);
        f = std::move(g);
        g = std::move(r);
    }
    return f.leading() < 0 ? -f : f;
}

namespace detail {

inline bool is_square_u128(u128 n, u128* root_out) {
    if (n == 0) {
        if (root_out) *root_out = 0;
        return true;
    }
    u128 r = static_cast<u128>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    if (root_out) *root_out = r;
    return r * r == n;
}

// Yun squarefree decomposition of a primitive polynomial with positive
// leading coefficient: u = prod a_i^i with the a_i primitive, squarefree and
// pairwise coprime. Returned as the list [a_1, a_2, ...].
inline std::vector<IntPolynomial> squarefree_decomposition(const IntPolynomial& u) {
    std::vector<IntPolynomial> parts;
    if (u.degree() <= 0) return parts;
    const IntPolynomial du = poly_derivative(u);
    const IntPolynomial g = poly_gcd_rational(u, du);
    if (g.degree() == 0) {
        parts.push_back(u);
        return parts;
    }
    IntPolynomial c = poly_divide_exact(u, g);
    IntPolynomial d = poly_divide_exact(du, g) - poly_derivative(c);
    int guard = u.degree() + 2;
    while (c.degree() > 0 && guard-- > 0) {
        IntPolynomial a = poly_gcd_rational(c, d);  // gcd(c, 0) = primitive(c)
        parts.push_back(a);
        c = poly_divide_exact(c, a);
        d = poly_divide_exact(d, a) - poly_derivative(c);
    }
    if (c.degree() > 0) throw std::logic_error("squarefree_decomposition: did not terminate");
    return parts;
}

}  // namespace detail

// True iff f = g^2 for some g in Z[t]. Decided by squarefree decomposition
// (all multiplicities even, square content) and confirmed by squaring the
// reassembled candidate.
inline bool is_perfect_square(const IntPolynomial& f) {
    if (f.is_zero()) throw std::domain_error("is_perfect_square: zero polynomial");
    if (f.degree() % 2 != 0) return false;
    if (f.leading() < 0) return false;
    const i128 content = poly_content(f);  // positive here
    u128 content_root = 0;
    if (!detail::is_square_u128(static_cast<u128>(content), &content_root)) return false;
    if (f.degree() == 0) return true;
    const IntPolynomial u = detail::poly_divide_scalar(f, content);
    const std::vector<IntPolynomial> parts = detail::squarefree_decomposition(u);
    IntPolynomial candidate = IntPolynomial::constant(static_cast<i128>(content_root));
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const std::size_t mult = i + 1;
        if (parts[i].degree() == 0) continue;
        if (mult % 2 != 0) return false;
        candidate = candidate * parts[i].pow(mult / 2);
    }
    return candidate * candidate == f;
}

// Base admissibility for the integer argument: z must not be 1, -1, or a
// perfect square (0 included).
inline bool is_admissible_base(i64 z) {
    if (z == 1 || z == -1) return false;
    if (z < 0) return true;
    return !detail::is_square_u128(static_cast<u128>(z), nullptr);
}

}  // namespace simroots
