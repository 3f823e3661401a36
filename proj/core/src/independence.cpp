#include "equilocal/independence.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>

namespace equilocal {

namespace {

// Rows packed into 64-bit blocks.
struct BitRow {
    std::vector<std::uint64_t> bits;

    explicit BitRow(std::size_t ncols) : bits((ncols + 63) / 64, 0) {}
    void set(std::size_t i) { bits[i / 64] |= std::uint64_t(1) << (i % 64); }
    bool test(std::size_t i) const { return (bits[i / 64] >> (i % 64)) & 1; }
    void operator^=(const BitRow& o) {
        for (std::size_t b = 0; b < bits.size(); ++b)
            bits[b] ^= o.bits[b];
    }
    // Index of the first set bit, or npos.
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t first_set() const {
        for (std::size_t b = 0; b < bits.size(); ++b)
            if (bits[b])
                return b * 64 + std::countr_zero(bits[b]);
        return npos;
    }
};

} // namespace

IndependenceVerdict independence_check(const std::vector<LocalizedElem>& xs) {
    if (xs.empty())
        throw DomainError("independence check over an empty family");
    const std::size_t k = xs.front().k();
    for (const LocalizedElem& x : xs)
        if (x.k() != k)
            throw DimensionError("independence check over different ranks");

    const std::size_t m = xs.size();
    for (std::size_t i = 0; i < m; ++i) {
        if (xs[i].is_zero()) {
            IndependenceVerdict v;
            v.independent = false;
            v.witness.assign(m, 0);
            v.witness[i] = 1;
            return v;
        }
    }

    // Clear denominators by the per-character maximum multiplicity.
    DenomMultiset common(k);
    for (const LocalizedElem& x : xs)
        common = DenomMultiset::lcm(common, x.den());
    std::vector<PolyGF2> cleared;
    cleared.reserve(m);
    for (const LocalizedElem& x : xs)
        cleared.push_back(x.num() * DenomMultiset::difference(common, x.den()).as_poly());

    // Columns: the occurring monomials in descending graded-lex order.
    std::map<Monomial, std::size_t, std::greater<Monomial>> columns;
    for (const PolyGF2& p : cleared)
        for (const Monomial& t : p.terms())
            columns.emplace(t, 0);
    std::size_t idx = 0;
    for (auto& [mono, col] : columns)
        col = idx++;
    const std::size_t ncols = columns.size();

    // Gaussian elimination with first-nonzero pivoting; each row carries
    // the combination of inputs that produced it, so the first row that
    // reduces to zero yields the dependency witness.
    std::vector<std::pair<std::size_t, std::size_t>> pivots; // (column, row index)
    std::vector<BitRow> rows;
    std::vector<BitRow> combos;
    rows.reserve(m);
    combos.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        BitRow row(ncols);
        for (const Monomial& t : cleared[i].terms())
            row.set(columns.at(t));
        BitRow combo(m);
        combo.set(i);
        for (const auto& [col, r] : pivots) {
            if (row.test(col)) {
                row ^= rows[r];
                combo ^= combos[r];
            }
        }
        const std::size_t lead = row.first_set();
        if (lead == BitRow::npos) {
            IndependenceVerdict v;
            v.independent = false;
            v.witness.assign(m, 0);
            for (std::size_t j = 0; j < m; ++j)
                if (combo.test(j))
                    v.witness[j] = 1;
            return v;
        }
        pivots.emplace_back(lead, rows.size());
        rows.push_back(std::move(row));
        combos.push_back(std::move(combo));
    }
    return IndependenceVerdict{};
}

IndependenceVerdict brute_force_independence(const std::vector<LocalizedElem>& xs) {
    if (xs.empty())
        throw DomainError("independence check over an empty family");
    if (xs.size() > 20)
        throw DomainError("brute-force independence is limited to 20 elements");
    const std::size_t k = xs.front().k();
    for (const LocalizedElem& x : xs)
        if (x.k() != k)
            throw DimensionError("independence check over different ranks");

    // Walk all nonzero combinations in Gray-code order so each step is a
    // single localized addition.
    const std::uint32_t total = 1u << xs.size();
    LocalizedElem sum = LocalizedElem::zero(k);
    std::uint32_t gray = 0;
    for (std::uint32_t c = 1; c < total; ++c) {
        const std::uint32_t next = c ^ (c >> 1);
        const std::uint32_t flipped = gray ^ next;
        sum = sum + xs[std::countr_zero(flipped)];
        gray = next;
        if (sum.is_zero()) {
            IndependenceVerdict v;
            v.independent = false;
            v.witness.assign(xs.size(), 0);
            for (std::size_t j = 0; j < xs.size(); ++j)
                if ((gray >> j) & 1)
                    v.witness[j] = 1;
            return v;
        }
    }
    return IndependenceVerdict{};
}

bool witness_annihilates(const std::vector<LocalizedElem>& xs,
                         const std::vector<std::uint8_t>& w) {
    if (xs.empty() || w.size() != xs.size())
        return false;
    LocalizedElem sum = LocalizedElem::zero(xs.front().k());
    bool nonzero = false;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (w[i]) {
            sum = sum + xs[i];
            nonzero = true;
        }
    }
    return nonzero && sum.is_zero();
}

IndependenceVerdict property_star(const FixedData& fd, std::uint32_t p) {
    std::vector<LocalizedElem> xs;
    for (const Component& c : fd.components)
        if (c.dim == p)
            xs.push_back(LocalizedElem::reciprocal(euler_monomial(c)));
    if (xs.empty())
        return IndependenceVerdict{}; // an empty part satisfies (*)
    return independence_check(xs);
}

bool binomial_odd(std::uint64_t n, std::uint64_t r) {
    if (r > n)
        return false;
    return (r & (n - r)) == 0;
}

bool multinomial_odd(std::uint64_t ell, const std::vector<std::uint64_t>& parts) {
    std::uint64_t sum = 0;
    for (std::uint64_t p : parts)
        sum += p;
    if (sum != ell)
        throw DomainError("multinomial parts must sum to ell");
    // No-carry criterion: odd iff the parts' binary digits are disjoint.
    std::uint64_t seen = 0;
    for (std::uint64_t p : parts) {
        if (seen & p)
            return false;
        seen |= p;
    }
    return true;
}

bool gap_property(std::uint64_t ell) {
    if (ell == 0)
        throw DomainError("the gap property is undefined for 0");
    int prev = -1;
    for (int s = 0; s < 64; ++s) {
        if (!((ell >> s) & 1))
            continue;
        if (prev >= 0 && s - prev <= 1)
            return false;
        prev = s;
    }
    return true;
}

namespace {

// Admissible exponent triples for B_r / D_r^{ell-r}: r1+r2+r3 = ell-r with
// odd multinomial, in descending lexicographic order.
std::vector<std::array<std::uint32_t, 3>> admissible_triples(std::uint32_t ell,
                                                             std::uint32_t r) {
    if (r > ell)
        throw DomainError("r must satisfy 0 <= r <= ell");
    if (!binomial_odd(ell, r))
        throw DomainError("C(ell, r) must be odd");
    const std::uint32_t m = ell - r;
    std::vector<std::array<std::uint32_t, 3>> out;
    for (std::uint32_t r1 = m + 1; r1-- > 0;) {
        for (std::uint32_t r2 = m - r1 + 1; r2-- > 0;) {
            const std::uint32_t r3 = m - r1 - r2;
            if (multinomial_odd(m, {r1, r2, r3}))
                out.push_back({r1, r2, r3});
        }
    }
    return out;
}

} // namespace

std::vector<LocalizedElem> gen_B_r(std::uint32_t ell, std::uint32_t r) {
    std::vector<LocalizedElem> out;
    for (const auto& [r1, r2, r3] : admissible_triples(ell, r)) {
        DenomMultiset den(2);
        den.insert(Character(2, 0b01), r1 + 2 * r2 + r3);
        den.insert(Character(2, 0b10), r1 + r2 + 2 * r3);
        den.insert(Character(2, 0b11), 2 * r1 + r2 + r3);
        out.push_back(LocalizedElem::reciprocal(den));
    }
    return out;
}

std::vector<PolyGF2> gen_D_r(std::uint32_t ell, std::uint32_t r) {
    const PolyGF2 a1 = PolyGF2::variable(2, 0);
    const PolyGF2 a2 = PolyGF2::variable(2, 1);
    const PolyGF2 a12 = a1 + a2;
    std::vector<PolyGF2> out;
    for (const auto& [r1, r2, r3] : admissible_triples(ell, r))
        out.push_back(a1.pow(r1 + r3) * a2.pow(r1 + r2) * a12.pow(r2 + r3));
    return out;
}

bool claim1_check(std::uint32_t ell, std::uint32_t r) {
    const bool b = independence_check(gen_B_r(ell, r)).independent;
    std::vector<LocalizedElem> ds;
    for (PolyGF2& p : gen_D_r(ell, r))
        ds.push_back(LocalizedElem::from_poly(std::move(p)));
    const bool d = independence_check(ds).independent;
    return b == d;
}

bool claim2_check(std::uint32_t ell) {
    if (ell == 0)
        throw DomainError("claim2_check needs ell >= 1");
    bool all_independent = true;
    for (std::uint32_t r = 0; r <= ell && all_independent; ++r) {
        if (!binomial_odd(ell, r))
            continue;
        std::vector<LocalizedElem> ds;
        for (PolyGF2& p : gen_D_r(ell, r))
            ds.push_back(LocalizedElem::from_poly(std::move(p)));
        all_independent = independence_check(ds).independent;
    }
    return all_independent == gap_property(ell);
}

} // namespace equilocal
