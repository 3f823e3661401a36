#ifndef EQUILOCAL_CATALOG_HPP
#define EQUILOCAL_CATALOG_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "equilocal/fixed_data.hpp"

namespace equilocal {

// Built-in fixed data for the reference action families, reproducible by
// name.  Every entry validates; the generators built through normalize
// are emitted already normalized.

// The involution [x0,x1,x2] -> [-x0,x1,x2] on RP^2: a point with a
// 2-dimensional normal rep and an RP^1 whose normal line bundle is the
// nontrivial one (s_(1) number 1).
FixedData involution_rp2();

// The standard (Z2)^2-action [x0,x1,x2] -> [x0,g1x1,g2x2] on RP^2: three
// isolated points with Euler monomials a1a2, a1(a1+a2), a2(a1+a2).
FixedData phi0_rp2();

// The (Z2)^2-action on RP^4 generated by sign changes on (x0,x1) and
// (x0,x2): three isolated points with normal reps rho1 rho2 rho3^2,
// rho1^2 rho2 rho3, rho1 rho2^2 rho3, and one RP^1 with q = 1 on each
// nonzero character.  Each normal line over the RP^1 is isomorphic to the
// tautological bundle, so the natural s_(1) numbers are all 1; they are
// configurable here and default to 0.
FixedData psi0_rp4(const std::array<bool, 3>& rp1_s_numbers = {false, false, false});

// The ell-fold power of involution_rp2, normalized and reduced to its
// cobordism census (F^p present exactly when C(ell,p) is odd, carrying
// the s_(1,..,1) number 1), then doubled to rank k.  n = 2^k * ell.
FixedData tower_example1(std::uint32_t ell, std::uint32_t k);

// The ell-fold power of psi0_rp4, normalized and reduced to its census:
// one component per (r1,r2,r3,r) with r1+r2+r3+r = ell and odd
// multinomial; dimension r.
FixedData psi2(std::uint32_t ell);

// psi2 doubled to rank k >= 2.
FixedData psik(std::uint32_t ell, std::uint32_t k);

// Product of the 2*ell'-fold power of phi0_rp2 (doubled to rank k) with
// tower_example1(ell, k): 3^(2 ell') copies of the tower's fixed set,
// not normalized.  ell' = 0 degenerates to the tower itself.
FixedData example2_composite(std::uint32_t ell, std::uint32_t ell_prime, std::uint32_t k);

// Name-driven construction for the CLI.
struct CatalogParamSpec {
    std::string name;
    bool required = true;
};
struct CatalogEntryInfo {
    std::string name;
    std::vector<CatalogParamSpec> params;
};
std::vector<CatalogEntryInfo> catalog_entries();
FixedData catalog_build(const std::string& name,
                        const std::map<std::string, std::uint64_t>& params);

} // namespace equilocal

#endif
