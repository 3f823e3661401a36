#ifndef EQUILOCAL_KS_HPP
#define EQUILOCAL_KS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "equilocal/fixed_data.hpp"
#include "equilocal/independence.hpp"
#include "equilocal/localized.hpp"

namespace equilocal {

// Test class f = (prod_j sigma_{j}(x)) * a-monomial, where sigma_j is the
// j-th elementary symmetric function of the ambient variables x_1..x_n.
struct SymFuncExpr {
    std::vector<std::uint32_t> sigma_indices; // non-increasing multiset
    Monomial a_monomial;

    explicit SymFuncExpr(std::size_t k) : a_monomial(k) {}
    SymFuncExpr(std::vector<std::uint32_t> sigmas, Monomial mon);

    std::uint64_t total_degree() const;
    // "sigma2^2*sigma1*a1^3"; "1" for the trivial class.
    std::string to_string() const;

    bool operator==(const SymFuncExpr& o) const = default;
};

// Localization sum over isolated fixed points: at each point the n
// ambient roots specialize to the linear forms alpha_rho with multiplicity
// q_{C,rho}, sigma_j evaluates to the j-th elementary symmetric polynomial
// of those forms, and the contribution is divided by the point's Euler
// monomial.  For genuine fixed data of a closed action the sum lies in
// Z2[a1..ak].  Requires deg f <= n and isolated data.
LocalizedElem ks_point_sum(const SymFuncExpr& f, const FixedData& fd);

struct IntegralityCounterexample {
    SymFuncExpr f;
    LocalizedElem value;
};

// Enumerates every test class of total degree <= min(max_degree, n)
// (sigma indices bounded by n) in a fixed order and reports the first one
// whose point sum fails to be a polynomial; nullopt when all pass.
std::optional<IntegralityCounterexample>
integrality_check(const FixedData& fd, std::uint64_t max_degree);

// Sum over dim-p components of (table value at omega) / euler_monomial.
// omega must have weight p.  A positive-dimensional component without a
// table raises DataError; an absent table on an isolated point is read as
// the forced point table (empty tuple -> 1).
LocalizedElem obstruction_sum(const FixedData& fd, std::uint32_t p,
                              const PartitionTuple& omega);

enum class Verdict {
    Bounds,
    Nonbounding,
    NotRealizable,
    IndependenceFails,
    Inconclusive,
};
std::string to_string(Verdict v);

struct DimensionReport {
    IndependenceVerdict star;
    std::map<PartitionTuple, LocalizedElem> obstructions;
};

// Per-dimension property (*) verdicts and obstruction sums, plus the
// decision: under dim M > 2^k dim F with property (*) everywhere, all
// obstructions must vanish and the 0-part must pair-cancel (BOUNDS);
// a nonzero obstruction there contradicts the bounding theorem and the
// data is NOT_REALIZABLE.  Outside the hypothesis a surviving nonzero
// obstruction is NONBOUNDING, otherwise INCONCLUSIVE.  A failure of
// property (*) is reported as INDEPENDENCE_FAILS with the smallest
// failing dimension.
struct ObstructionReport {
    Verdict verdict = Verdict::Inconclusive;
    std::uint32_t k = 1;
    std::uint32_t n = 0;
    std::optional<std::uint32_t> dim_f;   // nullopt: empty fixed set
    bool hypothesis = false;              // n > 2^k dim F
    std::map<std::uint32_t, DimensionReport> dims;
    std::optional<std::uint32_t> failing_dim;
};

ObstructionReport theorem_verdict(const FixedData& fd);

// k = 1, n = 2 dim F classification: a nonzero top s_(1,...,1) number
// marks the class of the dim F-fold power of the RP^2 involution; all
// numbers zero (including a cancelled 0-part) bounds; data the dichotomy
// does not reach is OUT_OF_SCOPE.
enum class InvolutionClass {
    Bounds,
    Rp2Power,
    OutOfScope,
};
std::string to_string(InvolutionClass c);

InvolutionClass involution_classifier(const FixedData& fd);

} // namespace equilocal

#endif
