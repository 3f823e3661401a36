#include "equilocal/catalog.hpp"

#include <algorithm>

#include "equilocal/independence.hpp"

namespace equilocal {

namespace {

const Character kRho1(2, 0b01); // "10": -1 on t1, maps to a1
const Character kRho2(2, 0b10); // "01": -1 on t2, maps to a2
const Character kRho3(2, 0b11); // "11": -1 on both, maps to a1+a2

Component point(std::size_t k, std::initializer_list<std::pair<Character, std::uint32_t>> q) {
    Component c(k);
    for (const auto& [rho, v] : q)
        c.normal.set(rho, v);
    c.char_numbers = CharNumberTable::point(k);
    return c;
}

} // namespace

FixedData involution_rp2() {
    const Character rho(1, 1);
    FixedData fd{1, 2, {}};
    fd.components.push_back(point(1, {{rho, 2}}));

    Component circle(1);
    circle.dim = 1;
    circle.normal.set(rho, 1);
    // The normal line bundle of RP^1 in RP^2 is the nontrivial one:
    // s_(1) = w_1 evaluates to 1.
    CharNumberTable t(1);
    PartitionTuple omega(1);
    omega.set(rho, {1});
    t.set(omega, true);
    circle.char_numbers = std::move(t);
    fd.components.push_back(std::move(circle));
    return fd;
}

FixedData phi0_rp2() {
    FixedData fd{2, 2, {}};
    fd.components.push_back(point(2, {{kRho1, 1}, {kRho2, 1}}));
    fd.components.push_back(point(2, {{kRho1, 1}, {kRho3, 1}}));
    fd.components.push_back(point(2, {{kRho2, 1}, {kRho3, 1}}));
    return fd;
}

FixedData psi0_rp4(const std::array<bool, 3>& rp1_s_numbers) {
    FixedData fd{2, 4, {}};
    fd.components.push_back(point(2, {{kRho1, 1}, {kRho2, 1}, {kRho3, 2}}));
    fd.components.push_back(point(2, {{kRho1, 2}, {kRho2, 1}, {kRho3, 1}}));
    fd.components.push_back(point(2, {{kRho1, 1}, {kRho2, 2}, {kRho3, 1}}));

    // The RP^1 = {x3, x4 != 0} locus: the coordinate lines x1, x2, x0 carry
    // rho1, rho2, rho3, each summand isomorphic to the tautological line
    // bundle.  The natural s_(1) numbers are therefore all 1; callers pick
    // the values, defaulting to all zero.
    Component circle(2);
    circle.dim = 1;
    circle.normal.set(kRho1, 1);
    circle.normal.set(kRho2, 1);
    circle.normal.set(kRho3, 1);
    CharNumberTable t(2);
    const Character rhos[3] = {kRho1, kRho2, kRho3};
    for (std::size_t i = 0; i < 3; ++i) {
        if (rp1_s_numbers[i]) {
            PartitionTuple omega(2);
            omega.set(rhos[i], {1});
            t.set(omega, true);
        }
    }
    circle.char_numbers = std::move(t);
    fd.components.push_back(std::move(circle));
    return fd;
}

FixedData tower_example1(std::uint32_t ell, std::uint32_t k) {
    if (ell < 1)
        throw DomainError("tower_example1 needs ell >= 1");
    if (k < 1 || k > kMaxRank)
        throw DomainError("tower_example1 needs 1 <= k <= 16");
    // Census of the normalized ell-fold power of involution_rp2: the parts
    // with even C(ell, p) carry vanishing characteristic numbers and cancel
    // cobordantly; each surviving F^p = (RP^1)^p has normal bundle
    // xi_1 + ... + xi_p + trivial, so the only nonzero s-number sits at the
    // all-ones partition.
    const Character rho(1, 1);
    FixedData fd{1, 2 * ell, {}};
    for (std::uint32_t p = 0; p <= ell; ++p) {
        if (!binomial_odd(ell, p))
            continue;
        Component c(1);
        c.dim = p;
        c.normal.set(rho, 2 * ell - p);
        CharNumberTable t(1);
        PartitionTuple omega(1);
        if (p > 0)
            omega.set(rho, std::vector<std::uint32_t>(p, 1));
        t.set(omega, true);
        c.char_numbers = std::move(t);
        fd.components.push_back(std::move(c));
    }
    for (std::uint32_t i = 1; i < k; ++i)
        fd = doubled(fd);
    return fd;
}

FixedData psi2(std::uint32_t ell) {
    if (ell < 1)
        throw DomainError("psi2 needs ell >= 1");
    // Census of the normalized ell-fold power of psi0_rp4: one component
    // p1^{r1} p2^{r2} p3^{r3} (RP^1)^r per index with odd multinomial.
    // The RP^1 parts inherit the default all-zero s-numbers of psi0_rp4.
    FixedData fd{2, 4 * ell, {}};
    for (std::uint32_t r = 0; r <= ell; ++r) {
        for (std::uint32_t r1 = 0; r1 + r <= ell; ++r1) {
            for (std::uint32_t r2 = 0; r1 + r2 + r <= ell; ++r2) {
                const std::uint32_t r3 = ell - r - r1 - r2;
                if (!multinomial_odd(ell, {r1, r2, r3, r}))
                    continue;
                Component c(2);
                c.dim = r;
                c.normal.set(kRho1, r1 + 2 * r2 + r3 + r);
                c.normal.set(kRho2, r1 + r2 + 2 * r3 + r);
                c.normal.set(kRho3, 2 * r1 + r2 + r3 + r);
                c.char_numbers = r == 0 ? CharNumberTable::point(2) : CharNumberTable(2);
                fd.components.push_back(std::move(c));
            }
        }
    }
    std::sort(fd.components.begin(), fd.components.end(), component_order_less);
    return fd;
}

FixedData psik(std::uint32_t ell, std::uint32_t k) {
    if (k < 2)
        throw DomainError("psik needs k >= 2");
    FixedData fd = psi2(ell);
    for (std::uint32_t i = 2; i < k; ++i)
        fd = doubled(fd);
    return fd;
}

FixedData example2_composite(std::uint32_t ell, std::uint32_t ell_prime, std::uint32_t k) {
    if (ell < 1)
        throw DomainError("example2_composite needs ell >= 1");
    if (k < 2)
        throw DomainError("example2_composite needs k >= 2");
    FixedData tower = tower_example1(ell, k);
    if (ell_prime == 0)
        return tower;
    // 2*ell'-fold power of the three-point action, doubled up to rank k.
    FixedData points = phi0_rp2();
    FixedData power = points;
    for (std::uint32_t i = 1; i < 2 * ell_prime; ++i)
        power = product(power, points);
    for (std::uint32_t i = 2; i < k; ++i)
        power = doubled(power);
    return product(power, tower);
}

std::vector<CatalogEntryInfo> catalog_entries() {
    return {
        {"involution_rp2", {}},
        {"phi0_rp2", {}},
        {"psi0_rp4", {}},
        {"tower_example1", {{"l"}, {"k"}}},
        {"psi2", {{"l"}}},
        {"psik", {{"l"}, {"k"}}},
        {"example2_composite", {{"l"}, {"lprime"}, {"k"}}},
    };
}

FixedData catalog_build(const std::string& name,
                        const std::map<std::string, std::uint64_t>& params) {
    auto get = [&](const char* key) -> std::uint32_t {
        auto it = params.find(key);
        if (it == params.end())
            throw DomainError("catalog entry \"" + name + "\" needs parameter --" + key);
        if (it->second > 0xFFFFFFFFull)
            throw DomainError("parameter --" + std::string(key) + " out of range");
        return static_cast<std::uint32_t>(it->second);
    };
    if (name == "involution_rp2")
        return involution_rp2();
    if (name == "phi0_rp2")
        return phi0_rp2();
    if (name == "psi0_rp4")
        return psi0_rp4();
    if (name == "tower_example1")
        return tower_example1(get("l"), get("k"));
    if (name == "psi2")
        return psi2(get("l"));
    if (name == "psik")
        return psik(get("l"), get("k"));
    if (name == "example2_composite")
        return example2_composite(get("l"), get("lprime"), get("k"));
    throw DomainError("unknown catalog entry \"" + name + "\"");
}

} // namespace equilocal
