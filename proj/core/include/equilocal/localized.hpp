#ifndef EQUILOCAL_LOCALIZED_HPP
#define EQUILOCAL_LOCALIZED_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "equilocal/gf2_poly.hpp"

namespace equilocal {

// Multiset of nonzero characters: a denominator ∏ alpha_rho^m drawn from
// the multiplicative set S generated by the nonzero degree-one forms.
class DenomMultiset {
public:
    explicit DenomMultiset(std::size_t k) : k_(k) {}

    std::size_t k() const { return k_; }
    bool empty() const { return factors_.empty(); }

    // Throws DomainError for the zero character (alpha_{rho_0} = 0 is never
    // a denominator factor), DimensionError on rank mismatch.
    void insert(const Character& chi, std::uint32_t multiplicity = 1);
    std::uint32_t multiplicity(const Character& chi) const;

    // (character, multiplicity) pairs, characters ascending.
    std::vector<std::pair<Character, std::uint32_t>> factors() const;

    // Sum of multiplicities = total degree of the denominator polynomial.
    std::uint64_t total_degree() const;

    // Per-character maximum: the least common multiple (distinct degree-one
    // forms over GF(2) are pairwise coprime).
    static DenomMultiset lcm(const DenomMultiset& a, const DenomMultiset& b);
    // Multiset sum (denominator of a product).
    static DenomMultiset sum(const DenomMultiset& a, const DenomMultiset& b);
    // Multiset difference; requires b <= a characterwise.
    static DenomMultiset difference(const DenomMultiset& a, const DenomMultiset& b);

    PolyGF2 as_poly() const;

    bool operator==(const DenomMultiset& o) const = default;
    std::strong_ordering operator<=>(const DenomMultiset& o) const = default;

    // "(a1)*(a2)^2*(a1 + a2)" with "^1" omitted; "1" when empty.
    std::string to_string() const;

private:
    std::size_t k_;
    std::map<std::uint32_t, std::uint32_t> factors_; // character bits -> multiplicity > 0
};

// Element of the localization S^{-1}Z2[a1..ak], kept in reduced form: no
// denominator factor divides the numerator exactly, and zero is uniquely
// (0, empty).  Values are immutable; operations are pure.
class LocalizedElem {
public:
    explicit LocalizedElem(std::size_t k);

    // Reduces: repeatedly cancels denominator factors that divide the
    // numerator exactly; a zero numerator collapses to the zero element.
    static LocalizedElem make(PolyGF2 num, DenomMultiset den);
    static LocalizedElem from_poly(PolyGF2 p);
    static LocalizedElem zero(std::size_t k) { return LocalizedElem(k); }
    static LocalizedElem one(std::size_t k);
    // 1 / ∏ alpha^m for a denominator multiset.
    static LocalizedElem reciprocal(const DenomMultiset& den);

    std::size_t k() const { return num_.k(); }
    const PolyGF2& num() const { return num_; }
    const DenomMultiset& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.empty(); }

    LocalizedElem operator+(const LocalizedElem& o) const;
    LocalizedElem operator*(const LocalizedElem& o) const;
    LocalizedElem squared() const { return (*this) * (*this); }

    bool operator==(const LocalizedElem& o) const = default;

    // "<poly> / <den>" with " / 1" omitted.
    std::string to_string() const;
    static LocalizedElem parse(std::string_view text, std::size_t k);

private:
    PolyGF2 num_;
    DenomMultiset den_;
};

} // namespace equilocal

#endif
