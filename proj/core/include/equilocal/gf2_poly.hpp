#ifndef EQUILOCAL_GF2_POLY_HPP
#define EQUILOCAL_GF2_POLY_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "equilocal/errors.hpp"
#include "equilocal/gf2_matrix.hpp"

namespace equilocal {

// Rank cap: characters pack into one machine word.
inline constexpr std::size_t kMaxRank = 16;
// Per-variable exponent cap with overflow detection.
inline constexpr std::uint32_t kMaxExponent = 0xFFFFu;

// Exponent vector of one monomial in a_1..a_k; the coefficient is 1.
class Monomial {
public:
    // The constant monomial 1 over k variables.
    explicit Monomial(std::size_t k);

    // exps[i] is the exponent of a_{i+1}.
    static Monomial from_exponents(std::vector<std::uint32_t> exps);

    std::size_t k() const { return exps_.size(); }
    std::uint32_t exponent(std::size_t i) const { return exps_[i]; }
    std::uint32_t degree() const;
    bool is_one() const;

    Monomial times(const Monomial& o) const;
    // Multiplies every exponent by factor (Frobenius powers).
    Monomial scaled(std::uint32_t factor) const;
    // Componentwise difference; nullopt when some exponent would go negative.
    std::optional<Monomial> divided_by(const Monomial& o) const;
    Monomial with_exponent(std::size_t i, std::uint32_t e) const;

    // Graded lexicographic, a1 > a2 > ... > ak.  Total order; equality
    // coincides with equality of exponent vectors.
    std::strong_ordering operator<=>(const Monomial& o) const;
    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }

    std::string to_string() const;

private:
    std::vector<std::uint16_t> exps_;
};

// Element of Hom((Z2)^k, Z2) as a k-bit vector.  Bit i is set iff the
// homomorphism sends the generator t_{i+1} to -1.  The zero vector is the
// trivial homomorphism; the 2^k - 1 nonzero characters correspond to the
// degree-one forms of Z2[a1..ak].
class Character {
public:
    Character(std::size_t k, std::uint32_t bits);
    static Character zero(std::size_t k) { return Character(k, 0); }

    // Leftmost character of the string = generator t_1.
    static Character from_bitstring(std::string_view s);
    static std::vector<Character> all_nonzero(std::size_t k);

    std::size_t k() const { return k_; }
    std::uint32_t bits() const { return bits_; }
    bool is_zero() const { return bits_ == 0; }

    // Group law of Hom(G, Z2): bitwise xor.
    Character operator*(const Character& o) const;

    std::string bitstring() const;

    std::strong_ordering operator<=>(const Character& o) const;
    bool operator==(const Character& o) const = default;

private:
    std::uint32_t k_;
    std::uint32_t bits_;
};

// Sparse polynomial over GF(2) in a_1..a_k: a set of monomials (presence =
// coefficient 1, so set semantics realizes mod-2 arithmetic).  Terms are
// kept in descending graded-lex order; that order is also the canonical
// print order.
class PolyGF2 {
public:
    // The zero polynomial over k variables.
    explicit PolyGF2(std::size_t k);

    static PolyGF2 zero(std::size_t k) { return PolyGF2(k); }
    static PolyGF2 one(std::size_t k);
    // a_{i+1} for 0 <= i < k.
    static PolyGF2 variable(std::size_t k, std::size_t i);
    static PolyGF2 from_monomial(Monomial m);
    // Sorts and cancels duplicate monomials mod 2.
    static PolyGF2 from_monomials(std::size_t k, std::vector<Monomial> ms);

    std::size_t k() const { return k_; }
    const std::vector<Monomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    // Degree of the zero polynomial is reported as -1.
    long degree() const;
    const Monomial& leading_term() const;

    PolyGF2 operator+(const PolyGF2& o) const;
    PolyGF2 operator*(const PolyGF2& o) const;
    PolyGF2 pow(std::uint64_t e) const;
    // p^(2^s): term-wise exponent scaling by 2^s.
    PolyGF2 frobenius(std::uint32_t s) const;

    // Applies the ring automorphism a_i -> row i of m.  Throws DomainError
    // when m is singular.
    PolyGF2 substituted(const GF2Matrix& m) const;

    bool operator==(const PolyGF2& o) const { return k_ == o.k_ && terms_ == o.terms_; }

    // Canonical text: terms joined by " + ", factors joined by "*", "^1"
    // omitted; "1" for the constant, "0" for zero.
    std::string to_string() const;
    static PolyGF2 parse(std::string_view text, std::size_t k);

private:
    std::size_t k_;
    std::vector<Monomial> terms_; // strictly descending graded-lex
};

// The degree-one form alpha_rho attached to a character: the sum of a_i
// over the set bits; the trivial character maps to 0.
PolyGF2 linear_form(const Character& chi);

// If chi is nonzero and p is exactly a linear form alpha_chi for some
// character, returns that character; nullopt otherwise.
std::optional<Character> as_linear_form(const PolyGF2& p);

// Exact division in the integral domain Z2[a1..ak]: returns q with
// q*d == p when such q exists, nullopt otherwise.  Throws DomainError when
// d is zero.  Linear divisors use a substitution remainder test followed
// by synthetic division; general divisors use long division under the
// graded-lex order.
std::optional<PolyGF2> divide_exact(const PolyGF2& p, const PolyGF2& d);

} // namespace equilocal

#endif
