#include "verify_paper.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>

#include "equilocal/catalog.hpp"
#include "equilocal/independence.hpp"
#include "equilocal/ks.hpp"

namespace equilocal::detail {

namespace {

PolyGF2 P(const char* text) { return PolyGF2::parse(text, 2); }
LocalizedElem L(const char* text) { return LocalizedElem::parse(text, 2); }

// a1^e1 * a2^e2 * (a1+a2)^e12, expanded.
PolyGF2 cls(std::uint32_t e1, std::uint32_t e2, std::uint32_t e12) {
    return P("a1").pow(e1) * P("a2").pow(e2) * P("a1 + a2").pow(e12);
}

// The dependence relation of the nine-class computation:
// a1^2 a2^3 (a1+a2) + a1^3 a2^2 (a1+a2) + a1^3 a2 (a1+a2)^2 + a1^2 a2 (a1+a2)^3.
PolyGF2 claim2_relation() {
    return cls(2, 3, 1) + cls(3, 2, 1) + cls(3, 1, 2) + cls(2, 1, 3);
}

std::vector<LocalizedElem> three_reciprocals() {
    return {L("1 / (a1)*(a2)*(a1 + a2)^2"),
            L("1 / (a1)^2*(a2)*(a1 + a2)"),
            L("1 / (a1)*(a2)^2*(a1 + a2)")};
}

std::vector<LocalizedElem> four_fractions() {
    return {L("1 / (a1)^4*(a2)^3*(a1 + a2)^5"),
            L("1 / (a1)^3*(a2)^4*(a1 + a2)^5"),
            L("1 / (a1)^3*(a2)^5*(a1 + a2)^4"),
            L("1 / (a1)^4*(a2)^5*(a1 + a2)^3")};
}

using PolySet = std::multiset<std::string>;

PolySet euler_strings_of_dim(const FixedData& fd, std::uint32_t p) {
    PolySet out;
    for (const Component& c : fd.components)
        if (c.dim == p)
            out.insert(euler_monomial(c).as_poly().to_string());
    return out;
}

} // namespace

const std::vector<PaperCheck>& paper_checks() {
    static const std::vector<PaperCheck> checks = {
        {"poly.dependence-relation",
         "the four-term numerator relation sums to zero",
         [] { return claim2_relation().is_zero(); }},

        {"poly.dependence-relation-squared",
         "the relation stays zero under the Frobenius square",
         [] { return claim2_relation().pow(2).is_zero(); }},

        {"char.linear-form-a1",
         "character 10 maps to the form a1",
         [] { return linear_form(Character::from_bitstring("10")) == P("a1"); }},

        {"char.linear-form-a1a2",
         "character 11 maps to the form a1 + a2",
         [] { return linear_form(Character::from_bitstring("11")) == P("a1 + a2"); }},

        {"char.linear-form-trivial",
         "the trivial character maps to 0",
         [] { return linear_form(Character::zero(2)).is_zero(); }},

        {"loc.three-reciprocal-sum",
         "1/e1 + 1/e2 + 1/e3 over the RP^4 points equals the recorded fraction",
         [] {
             const auto xs = three_reciprocals();
             const LocalizedElem sum = xs[0] + xs[1] + xs[2];
             return sum == L("a1^2 + a1*a2 + a2^2 / (a1)^2*(a2)^2*(a1 + a2)^2");
         }},

        {"loc.four-reciprocal-sum-zero",
         "the four nine-point reciprocals sum to zero",
         [] {
             const auto xs = four_fractions();
             return (xs[0] + xs[1] + xs[2] + xs[3]).is_zero();
         }},

        {"euler.psi0-points",
         "Euler classes of the three RP^4 points",
         [] {
             const FixedData fd = psi0_rp4();
             std::vector<std::string> got;
             for (const Component& c : fd.components)
                 if (c.dim == 0)
                     got.push_back(euler_monomial(c).to_string());
             return got == std::vector<std::string>{"(a1)*(a2)*(a1 + a2)^2",
                                                    "(a1)^2*(a2)*(a1 + a2)",
                                                    "(a1)*(a2)^2*(a1 + a2)"};
         }},

        {"euler.psi0-normal-reps",
         "normal representations rho1 rho2 rho3^2, rho1^2 rho2 rho3, rho1 rho2^2 rho3",
         [] {
             const FixedData fd = psi0_rp4();
             const Character r1 = Character::from_bitstring("10");
             const Character r2 = Character::from_bitstring("01");
             const Character r3 = Character::from_bitstring("11");
             const std::vector<std::array<std::uint32_t, 3>> expected = {
                 {1, 1, 2}, {2, 1, 1}, {1, 2, 1}};
             std::size_t i = 0;
             for (const Component& c : fd.components) {
                 if (c.dim != 0)
                     continue;
                 if (i >= expected.size())
                     return false;
                 if (c.normal.at(r1) != expected[i][0] || c.normal.at(r2) != expected[i][1] ||
                     c.normal.at(r3) != expected[i][2])
                     return false;
                 ++i;
             }
             return i == expected.size();
         }},

        {"euler.psi0-cube-point",
         "the cube of the first point carries a1^3 a2^3 (a1+a2)^6",
         [] {
             return euler_strings_of_dim(psi2(3), 0).count(cls(3, 3, 6).to_string()) == 1;
         }},

        {"normalize.pair-cancellation",
         "two identical isolated points cancel",
         [] {
             const FixedData one = phi0_rp2();
             const FixedData two = normalize(disjoint_union(one, one));
             return two.components.empty();
         }},

        {"psi2.nine-classes",
         "the 0-part of the triple product consists of the nine recorded classes",
         [] {
             PolySet expected;
             for (const auto& [e1, e2, e12] :
                  std::vector<std::array<std::uint32_t, 3>>{{3, 3, 6},
                                                            {6, 3, 3},
                                                            {3, 6, 3},
                                                            {4, 3, 5},
                                                            {3, 4, 5},
                                                            {5, 3, 4},
                                                            {5, 4, 3},
                                                            {3, 5, 4},
                                                            {4, 5, 3}})
                 expected.insert(cls(e1, e2, e12).to_string());
             return euler_strings_of_dim(normalize(psi2(3)), 0) == expected;
         }},

        {"catalog.involution-rp2",
         "the RP^2 involution fixes a point and an RP^1",
         [] {
             const FixedData fd = involution_rp2();
             return is_valid(fd) && dim_fixed_set(fd) == 1u && fd.components.size() == 2;
         }},

        {"catalog.phi0-three-points",
         "the standard rank-2 action on RP^2 fixes three isolated points",
         [] {
             const FixedData fd = phi0_rp2();
             if (!is_valid(fd) || fd.components.size() != 3)
                 return false;
             return std::all_of(fd.components.begin(), fd.components.end(),
                                [](const Component& c) { return c.dim == 0; });
         }},

        {"catalog.psi0-star",
         "both parts of the RP^4 fixed set satisfy property (*)",
         [] {
             const FixedData fd = psi0_rp4();
             return property_star(fd, 0).independent && property_star(fd, 1).independent;
         }},

        {"catalog.tower-binomial-census",
         "the tower's nonempty parts follow the binomial parity",
         [] {
             const FixedData fd = tower_example1(2, 1);
             std::set<std::uint32_t> dims;
             for (const Component& c : fd.components)
                 dims.insert(c.dim);
             return dims == std::set<std::uint32_t>{0, 2};
         }},

        {"catalog.tower-dimension",
         "the rank-2 tower over ell = 1 lives on n = 4 with dim F = 1",
         [] {
             const FixedData fd = tower_example1(1, 2);
             return fd.n == 4 && dim_fixed_set(fd) == 1u;
         }},

        {"catalog.tower-star-connected",
         "every tower part is connected, so property (*) is automatic",
         [] {
             const FixedData fd = tower_example1(3, 2);
             std::map<std::uint32_t, int> count;
             for (const Component& c : fd.components)
                 ++count[c.dim];
             for (const auto& [p, n] : count)
                 if (n != 1 || !property_star(fd, p).independent)
                     return false;
             return true;
         }},

        {"catalog.psi2-restricted-euler",
         "the point part of each product component matches the recorded exponents",
         [] {
             const FixedData fd = psi2(2);
             const PolyGF2 a1 = P("a1"), a2 = P("a2"), a12 = P("a1 + a2");
             for (std::uint32_t r = 0; r <= 2; ++r) {
                 for (std::uint32_t r1 = 0; r1 + r <= 2; ++r1) {
                     for (std::uint32_t r2 = 0; r1 + r2 + r <= 2; ++r2) {
                         const std::uint32_t r3 = 2 - r - r1 - r2;
                         if (!multinomial_odd(2, {r1, r2, r3, r}))
                             continue;
                         const PolyGF2 expected = a1.pow(r1 + 2 * r2 + r3) *
                                                  a2.pow(r1 + r2 + 2 * r3) *
                                                  a12.pow(2 * r1 + r2 + r3) *
                                                  (a1 * a2 * a12).pow(r);
                         if (euler_strings_of_dim(fd, r).count(expected.to_string()) == 0)
                             return false;
                     }
                 }
             }
             return true;
         }},

        {"catalog.example2-star-fails",
         "the composite action violates the independence property",
         [] {
             const FixedData fd = normalize(example2_composite(1, 1, 2));
             return !property_star(fd, 0).independent;
         }},

        {"catalog.example2-dimension-slack",
         "the composite satisfies n > 2^k dim F",
         [] {
             const FixedData fd = example2_composite(1, 1, 2);
             const auto d = dim_fixed_set(fd);
             return d && fd.n > (1u << fd.k) * *d;
         }},

        {"indep.three-reciprocals",
         "the three reciprocal Euler classes are independent",
         [] { return independence_check(three_reciprocals()).independent; }},

        {"indep.four-fractions-witness",
         "the four nine-point fractions are dependent with the all-ones witness",
         [] {
             const auto v = independence_check(four_fractions());
             return !v.independent && v.witness == std::vector<std::uint8_t>{1, 1, 1, 1};
         }},

        {"indep.oracle-agrees",
         "the brute-force oracle agrees on both recorded families",
         [] {
             const auto a = brute_force_independence(three_reciprocals());
             const auto b = brute_force_independence(four_fractions());
             return a.independent && !b.independent &&
                    witness_annihilates(four_fractions(), b.witness);
         }},

        {"indep.psi2-star-fails",
         "the nine-point part of the triple product is dependent",
         [] { return !property_star(psi2(3), 0).independent; }},

        {"gap.powers-of-two",
         "every power of two has the gap property",
         [] {
             for (int s = 0; s <= 6; ++s)
                 if (!gap_property(1ull << s))
                     return false;
             return true;
         }},

        {"gap.three",
         "3 does not have the gap property",
         [] { return !gap_property(3); }},

        {"bsets.ell1",
         "B_0 over ell = 1 lists the three reciprocals in the recorded order",
         [] { return gen_B_r(1, 0) == three_reciprocals(); }},

        {"bsets.nine",
         "B_0 over ell = 3 has nine elements",
         [] { return gen_B_r(3, 0).size() == 9; }},

        {"dsets.quadratics",
         "D with one factor is {a1 a2, a1(a1+a2), a2(a1+a2)}",
         [] {
             PolySet got;
             for (const PolyGF2& p : gen_D_r(1, 0))
                 got.insert(p.to_string());
             return got == PolySet{P("a1*a2").to_string(), P("a1^2 + a1*a2").to_string(),
                                   P("a1*a2 + a2^2").to_string()};
         }},

        {"dsets.singleton-one",
         "D with no factors contains only 1",
         [] {
             const auto ds = gen_D_r(1, 1);
             return ds.size() == 1 && ds[0].is_one();
         }},

        {"dsets.nine-terms",
         "D with three factors contains the nine terms",
         [] { return gen_D_r(3, 0).size() == 9; }},

        {"claim1.ell3",
         "B_0 and D_0 agree (both dependent) at ell = 3",
         [] {
             return claim1_check(3, 0) && !independence_check(gen_B_r(3, 0)).independent;
         }},

        {"claim1.ell1",
         "B_0 and D_0 agree (both independent) at ell = 1",
         [] {
             return claim1_check(1, 0) && independence_check(gen_B_r(1, 0)).independent;
         }},

        {"claim2.ell3",
         "the gap criterion matches the rank computation at ell = 3",
         [] { return claim2_check(3); }},

        {"verdict.tower-nonbounding",
         "the tower carries a surviving nonzero obstruction",
         [] {
             const auto report = theorem_verdict(tower_example1(2, 2));
             return report.verdict == Verdict::Nonbounding && !report.hypothesis;
         }},

        {"verdict.example2-independence-fails",
         "the composite action fails property (*) at dimension 0",
         [] {
             const auto report = theorem_verdict(example2_composite(1, 1, 2));
             return report.verdict == Verdict::IndependenceFails && report.failing_dim == 0u;
         }},

        {"verdict.bounds",
         "vanishing numbers under the dimension hypothesis bound",
         [] {
             FixedData fd{1, 4, {}};
             Component c(1);
             c.dim = 1;
             c.normal.set(Character(1, 1), 3);
             c.char_numbers = CharNumberTable(1);
             fd.components.push_back(std::move(c));
             return theorem_verdict(fd).verdict == Verdict::Bounds;
         }},

        {"classify.rp2-power",
         "the involution tower classifies as the RP^2 power",
         [] {
             return involution_classifier(tower_example1(2, 1)) == InvolutionClass::Rp2Power;
         }},
    };
    return checks;
}

} // namespace equilocal::detail
