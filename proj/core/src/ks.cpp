#include "equilocal/ks.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace equilocal {

SymFuncExpr::SymFuncExpr(std::vector<std::uint32_t> sigmas, Monomial mon)
    : sigma_indices(std::move(sigmas)), a_monomial(std::move(mon)) {
    for (std::uint32_t j : sigma_indices)
        if (j == 0)
            throw DomainError("sigma indices must be positive");
    std::sort(sigma_indices.begin(), sigma_indices.end(), std::greater<>());
}

std::uint64_t SymFuncExpr::total_degree() const {
    std::uint64_t d = a_monomial.degree();
    for (std::uint32_t j : sigma_indices)
        d += j;
    return d;
}

std::string SymFuncExpr::to_string() const {
    if (sigma_indices.empty() && a_monomial.is_one())
        return "1";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < sigma_indices.size();) {
        std::size_t j = i;
        while (j < sigma_indices.size() && sigma_indices[j] == sigma_indices[i])
            ++j;
        if (!first)
            out << '*';
        first = false;
        out << "sigma" << sigma_indices[i];
        if (j - i > 1)
            out << '^' << (j - i);
        i = j;
    }
    if (!a_monomial.is_one()) {
        if (!first)
            out << '*';
        out << a_monomial.to_string();
    }
    return out.str();
}

namespace {

// Elementary symmetric polynomials e_0..e_max of the multiset of linear
// forms {alpha_rho with multiplicity q}: coefficients of
// prod_rho (1 + alpha_rho t)^{q_rho}, using C(q, i) mod 2 for each factor.
std::vector<PolyGF2> elementary_symmetric(const Component& c, std::size_t k,
                                          std::uint32_t max_index) {
    std::vector<PolyGF2> e(max_index + 1, PolyGF2::zero(k));
    e[0] = PolyGF2::one(k);
    for (const auto& [rho, q] : c.normal.entries()) {
        const PolyGF2 alpha = linear_form(rho);
        std::vector<PolyGF2> powers(std::min(q, max_index) + 1, PolyGF2::one(k));
        for (std::uint32_t i = 1; i < powers.size(); ++i)
            powers[i] = powers[i - 1] * alpha;
        std::vector<PolyGF2> next(max_index + 1, PolyGF2::zero(k));
        for (std::uint32_t j = 0; j <= max_index; ++j) {
            for (std::uint32_t i = 0; i <= std::min(q, j); ++i) {
                if (!binomial_odd(q, i))
                    continue;
                next[j] = next[j] + e[j - i] * powers[i];
            }
        }
        e = std::move(next);
    }
    return e;
}

} // namespace

LocalizedElem ks_point_sum(const SymFuncExpr& f, const FixedData& fd) {
    for (const Component& c : fd.components)
        if (c.dim > 0)
            throw DataError("the point sum needs isolated fixed data");
    if (f.total_degree() > fd.n)
        throw DomainError("test class degree exceeds n");

    std::uint32_t max_sigma = 0;
    for (std::uint32_t j : f.sigma_indices)
        max_sigma = std::max(max_sigma, j);

    LocalizedElem acc = LocalizedElem::zero(fd.k);
    for (const Component& c : fd.components) {
        const std::vector<PolyGF2> e = elementary_symmetric(c, fd.k, max_sigma);
        PolyGF2 num = PolyGF2::from_monomial(f.a_monomial);
        for (std::uint32_t j : f.sigma_indices)
            num = num * e[j];
        acc = acc + LocalizedElem::make(std::move(num), euler_monomial(c));
    }
    return acc;
}

namespace {

// Multisets of positive integers <= max_part summing to s, first part
// largest, enumerated in descending lexicographic order.
void enumerate_partitions(std::uint32_t s, std::uint32_t max_part,
                          std::vector<std::uint32_t>& current,
                          const std::function<bool(const std::vector<std::uint32_t>&)>& visit,
                          bool& stop) {
    if (stop)
        return;
    if (s == 0) {
        stop = !visit(current);
        return;
    }
    for (std::uint32_t part = std::min(s, max_part); part >= 1 && !stop; --part) {
        current.push_back(part);
        enumerate_partitions(s - part, part, current, visit, stop);
        current.pop_back();
    }
}

// Monomials of the given degree over k variables, graded-lex descending.
void enumerate_monomials(std::size_t k, std::uint32_t degree, std::size_t var,
                         std::vector<std::uint32_t>& exps,
                         const std::function<bool(const Monomial&)>& visit, bool& stop) {
    if (stop)
        return;
    if (var + 1 == k) {
        exps[var] = degree;
        stop = !visit(Monomial::from_exponents(exps));
        exps[var] = 0;
        return;
    }
    for (std::uint32_t e = degree + 1; e-- > 0 && !stop;) {
        exps[var] = e;
        enumerate_monomials(k, degree - e, var + 1, exps, visit, stop);
        exps[var] = 0;
    }
}

} // namespace

std::optional<IntegralityCounterexample> integrality_check(const FixedData& fd,
                                                           std::uint64_t max_degree) {
    const std::uint64_t limit = std::min<std::uint64_t>(max_degree, fd.n);
    std::optional<IntegralityCounterexample> found;

    // Fixed enumeration order: sigma degree ascending, partitions of it in
    // descending lex, then the a-monomial degree ascending in graded-lex.
    for (std::uint64_t s = 0; s <= limit && !found; ++s) {
        bool stop = false;
        std::vector<std::uint32_t> parts;
        auto visit_partition = [&](const std::vector<std::uint32_t>& sigma) {
            for (std::uint64_t d = 0; d + s <= limit; ++d) {
                bool mono_stop = false;
                std::vector<std::uint32_t> exps(fd.k, 0);
                auto visit_monomial = [&](const Monomial& mon) {
                    SymFuncExpr f(sigma, mon);
                    LocalizedElem value = ks_point_sum(f, fd);
                    if (!value.is_polynomial()) {
                        found = IntegralityCounterexample{std::move(f), std::move(value)};
                        return false;
                    }
                    return true;
                };
                enumerate_monomials(fd.k, static_cast<std::uint32_t>(d), 0, exps,
                                    visit_monomial, mono_stop);
                if (found)
                    return false;
            }
            return true;
        };
        if (s == 0) {
            visit_partition({});
        } else {
            enumerate_partitions(static_cast<std::uint32_t>(s),
                                 static_cast<std::uint32_t>(std::min<std::uint64_t>(s, fd.n)),
                                 parts, visit_partition, stop);
        }
    }
    return found;
}

LocalizedElem obstruction_sum(const FixedData& fd, std::uint32_t p,
                              const PartitionTuple& omega) {
    if (omega.weight() != p)
        throw DomainError("obstruction tuple weight must equal the dimension");
    LocalizedElem acc = LocalizedElem::zero(fd.k);
    for (const Component& c : fd.components) {
        if (c.dim != p)
            continue;
        bool value;
        if (c.char_numbers) {
            value = c.char_numbers->value(omega);
        } else if (c.dim == 0) {
            value = omega.empty(); // the forced point table
        } else {
            throw DataError("a positive-dimensional component is missing its table");
        }
        if (value)
            acc = acc + LocalizedElem::reciprocal(euler_monomial(c));
    }
    return acc;
}

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::Bounds: return "BOUNDS";
    case Verdict::Nonbounding: return "NONBOUNDING";
    case Verdict::NotRealizable: return "NOT_REALIZABLE";
    case Verdict::IndependenceFails: return "INDEPENDENCE_FAILS";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

std::string to_string(InvolutionClass c) {
    switch (c) {
    case InvolutionClass::Bounds: return "BOUNDS";
    case InvolutionClass::Rp2Power: return "RP2_POWER";
    case InvolutionClass::OutOfScope: return "OUT_OF_SCOPE";
    }
    return "?";
}

ObstructionReport theorem_verdict(const FixedData& fd) {
    if (auto violations = validate(fd); !violations.empty())
        throw DataError("invalid fixed data: " + violations.front());
    const FixedData nfd = normalize(fd);

    ObstructionReport report;
    report.k = nfd.k;
    report.n = nfd.n;
    report.dim_f = dim_fixed_set(nfd);
    if (!report.dim_f) {
        // No fixed points: the action bounds.
        report.verdict = Verdict::Bounds;
        report.hypothesis = true;
        return report;
    }
    report.hypothesis = std::uint64_t(nfd.n) > (std::uint64_t(1) << nfd.k) * *report.dim_f;

    std::vector<std::uint32_t> dims;
    for (const Component& c : nfd.components)
        dims.push_back(c.dim);
    std::sort(dims.begin(), dims.end());
    dims.erase(std::unique(dims.begin(), dims.end()), dims.end());

    for (std::uint32_t p : dims) {
        DimensionReport dr;
        dr.star = property_star(nfd, p);
        if (!dr.star.independent && !report.failing_dim)
            report.failing_dim = p;
        report.dims.emplace(p, std::move(dr));
    }
    if (report.failing_dim) {
        // The bounding theorem is silent without property (*).
        report.verdict = Verdict::IndependenceFails;
        return report;
    }

    bool all_zero = true;
    for (std::uint32_t p : dims) {
        DimensionReport& dr = report.dims.at(p);
        // Tuples to test: the union of the table supports at this
        // dimension (for points, the empty tuple).
        std::set<PartitionTuple> keys;
        if (p == 0)
            keys.insert(PartitionTuple(nfd.k));
        for (const Component& c : nfd.components) {
            if (c.dim != p)
                continue;
            if (!c.char_numbers && p > 0)
                throw DataError("a positive-dimensional component is missing its table");
            if (c.char_numbers)
                for (const PartitionTuple& omega : c.char_numbers->support())
                    keys.insert(omega);
        }
        for (const PartitionTuple& omega : keys) {
            LocalizedElem value = obstruction_sum(nfd, p, omega);
            if (!value.is_zero())
                all_zero = false;
            dr.obstructions.emplace(omega, std::move(value));
        }
    }

    if (report.hypothesis)
        report.verdict = all_zero ? Verdict::Bounds : Verdict::NotRealizable;
    else
        report.verdict = all_zero ? Verdict::Inconclusive : Verdict::Nonbounding;
    return report;
}

InvolutionClass involution_classifier(const FixedData& fd) {
    if (fd.k != 1)
        throw DataError("the involution classifier needs k = 1");
    const FixedData nfd = normalize(fd);
    const auto dim_f = dim_fixed_set(nfd);
    if (!dim_f)
        return InvolutionClass::Bounds; // empty fixed set bounds
    if (nfd.n != 2 * *dim_f)
        throw DataError("the involution classifier needs n = 2 dim F");

    const Character rho(1, 1);
    const std::uint32_t top = *dim_f;

    // An absent table on an isolated point reads as the forced point table.
    auto table_of = [&](const Component& c) -> CharNumberTable {
        if (c.char_numbers)
            return *c.char_numbers;
        if (c.dim == 0)
            return CharNumberTable::point(1);
        throw DataError("the involution classifier needs tables on "
                        "positive-dimensional components");
    };

    // Top s_(1,...,1) number: nonzero marks the RP^2-power class.
    PartitionTuple top_tuple(1);
    if (top > 0)
        top_tuple.set(rho, std::vector<std::uint32_t>(top, 1));
    bool top_value = false;
    for (const Component& c : nfd.components)
        if (c.dim == top && table_of(c).value(top_tuple))
            top_value = !top_value;
    if (top_value)
        return InvolutionClass::Rp2Power;

    // Everything else must vanish: all lower numbers and, for the 0-part,
    // the stored point values (pair-cancelled or zeroed points read 0).
    for (const Component& c : nfd.components) {
        CharNumberTable t = table_of(c);
        if (c.dim == top)
            t.set(top_tuple, false);
        if (!t.all_zero())
            return InvolutionClass::OutOfScope;
    }
    return InvolutionClass::Bounds;
}

} // namespace equilocal
