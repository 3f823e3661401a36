#ifndef EQUILOCAL_INDEPENDENCE_HPP
#define EQUILOCAL_INDEPENDENCE_HPP

#include <cstdint>
#include <vector>

#include "equilocal/fixed_data.hpp"
#include "equilocal/localized.hpp"

namespace equilocal {

// Result of a linear-independence test over GF(2).  For a dependent
// family the witness is a nonzero coefficient vector with
// sum_i witness[i] * xs[i] = 0 in the quotient field.
struct IndependenceVerdict {
    bool independent = true;
    std::vector<std::uint8_t> witness; // empty when independent
};

// Clears denominators by the per-character maximum multiplicity, packs the
// scaled numerators into a bit matrix over the occurring monomials
// (columns in graded-lex order) and runs Gaussian elimination with
// first-nonzero pivoting.  Dependent verdicts return the combination that
// produced the first zero row.  A zero element makes the family dependent
// with a unit witness on it.
IndependenceVerdict independence_check(const std::vector<LocalizedElem>& xs);

// Oracle: enumerates all nonzero GF(2) combinations through localized
// addition (Gray-code order).  Limited to 20 elements.
IndependenceVerdict brute_force_independence(const std::vector<LocalizedElem>& xs);

// Evaluates sum_i w[i]*xs[i] and reports whether it is the zero element.
bool witness_annihilates(const std::vector<LocalizedElem>& xs,
                         const std::vector<std::uint8_t>& w);

// Property (*) for the p-dimensional part: independence of the reciprocals
// of the restricted Euler monomials of all dim-p components.  An empty
// p-part counts as independent.
IndependenceVerdict property_star(const FixedData& fd, std::uint32_t p);

// Parity of the binomial coefficient C(n, r) via the Lucas bit criterion.
bool binomial_odd(std::uint64_t n, std::uint64_t r);

// Parity of the multinomial coefficient (ell; parts): odd iff the parts'
// binary digit sets are pairwise disjoint.  Requires sum(parts) == ell.
bool multinomial_odd(std::uint64_t ell, const std::vector<std::uint64_t>& parts);

// ell = 2^{s_1}+...+2^{s_u}, s_1 < ... < s_u, has the gap property when
// u = 1 or every consecutive difference exceeds 1.  ell = 0 is undefined.
bool gap_property(std::uint64_t ell);

// B_r: reciprocals 1/(a1^{r1+2r2+r3} a2^{r1+r2+2r3} (a1+a2)^{2r1+r2+r3})
// over triples r1+r2+r3 = ell-r with odd multinomial; requires C(ell, r)
// odd.  Always over k = 2.
std::vector<LocalizedElem> gen_B_r(std::uint32_t ell, std::uint32_t r);

// D_r^{ell-r}: polynomials a1^{r1+r3} a2^{r1+r2} (a1+a2)^{r2+r3} over the
// same index set.
std::vector<PolyGF2> gen_D_r(std::uint32_t ell, std::uint32_t r);

// Consistency check: independence of B_r coincides with independence of
// D_r^{ell-r}; expected to hold for every admissible (ell, r).
bool claim1_check(std::uint32_t ell, std::uint32_t r);

// Consistency check: [all D_r^{ell-r} independent for every r with
// C(ell,r) odd] agrees with gap_property(ell); expected to hold always.
bool claim2_check(std::uint32_t ell);

} // namespace equilocal

#endif
