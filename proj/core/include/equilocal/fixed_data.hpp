#ifndef EQUILOCAL_FIXED_DATA_HPP
#define EQUILOCAL_FIXED_DATA_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "equilocal/gf2_matrix.hpp"
#include "equilocal/localized.hpp"

namespace equilocal {

// The normal dimensional sequence {q_{C,rho}} of a fixed component:
// fiber dimension of the normal summand on which the group acts via rho.
// Entries with q = 0 are omitted; the trivial character never appears.
class NormalSequence {
public:
    explicit NormalSequence(std::size_t k) : k_(k) {}

    std::size_t k() const { return k_; }
    // q = 0 erases the entry.  Throws DomainError for the zero character.
    void set(const Character& rho, std::uint32_t q);
    void add(const Character& rho, std::uint32_t q);
    std::uint32_t at(const Character& rho) const;
    std::uint64_t total() const;
    bool empty() const { return q_.empty(); }

    std::vector<std::pair<Character, std::uint32_t>> entries() const;
    const std::map<std::uint32_t, std::uint32_t>& raw() const { return q_; }

    // Characterwise sum (normal data of a product component).
    static NormalSequence sum(const NormalSequence& a, const NormalSequence& b);

    DenomMultiset to_denom() const;
    NormalSequence relabeled(const GF2Matrix& m) const;

    bool operator==(const NormalSequence& o) const = default;
    std::strong_ordering operator<=>(const NormalSequence& o) const = default;

private:
    std::size_t k_;
    std::map<std::uint32_t, std::uint32_t> q_; // character bits -> q > 0
};

// A tuple of partitions omega_rho indexed by nonzero characters; omitted
// characters carry the empty partition.  Parts are positive, stored
// non-increasing; the weight is the sum of all parts.
class PartitionTuple {
public:
    explicit PartitionTuple(std::size_t k) : k_(k) {}

    std::size_t k() const { return k_; }
    // Sorts the parts non-increasing; an empty list erases the entry.
    // Throws DomainError on a zero part or the zero character.
    void set(const Character& rho, std::vector<std::uint32_t> parts);
    const std::vector<std::uint32_t>& parts(const Character& rho) const;
    std::uint64_t weight() const;
    bool empty() const { return parts_.empty(); }

    std::vector<std::pair<Character, std::vector<std::uint32_t>>> entries() const;
    const std::map<std::uint32_t, std::vector<std::uint32_t>>& raw() const { return parts_; }

    PartitionTuple relabeled(const GF2Matrix& m) const;

    // "{10:(1,1); 11:(2)}", "{}" when empty.
    std::string to_string() const;

    bool operator==(const PartitionTuple& o) const = default;
    std::strong_ordering operator<=>(const PartitionTuple& o) const = default;

private:
    std::size_t k_;
    std::map<std::uint32_t, std::vector<std::uint32_t>> parts_;
};

// GF(2)-valued characteristic numbers of the normal bundle, indexed by
// partition tuples; absent tuples mean value 0, so only the support is
// stored.
class CharNumberTable {
public:
    explicit CharNumberTable(std::size_t k) : k_(k) {}

    // The forced table of an isolated point: empty tuple -> 1.
    static CharNumberTable point(std::size_t k);

    std::size_t k() const { return k_; }
    void set(const PartitionTuple& omega, bool value);
    bool value(const PartitionTuple& omega) const;
    bool all_zero() const { return support_.empty(); }
    const std::set<PartitionTuple>& support() const { return support_; }

    // Mod-2 addition of tables (connected-sum convention).
    void xor_with(const CharNumberTable& o);

    CharNumberTable relabeled(const GF2Matrix& m) const;

    bool operator==(const CharNumberTable& o) const = default;

private:
    std::size_t k_;
    std::set<PartitionTuple> support_;
};

// One connected component of the fixed set: a closed dim-manifold with
// w(C) = 1 (standing assumption, never verified), its normal dimensional
// sequence, and optionally the characteristic-number table of its normal
// bundle.  An absent table means the numbers are not known, not that they
// vanish; an empty table means they all vanish.
struct Component {
    std::uint32_t dim = 0;
    NormalSequence normal;
    std::optional<CharNumberTable> char_numbers;

    explicit Component(std::size_t k) : normal(k) {}
    Component(std::uint32_t d, NormalSequence n,
              std::optional<CharNumberTable> t = std::nullopt)
        : dim(d), normal(std::move(n)), char_numbers(std::move(t)) {}

    bool operator==(const Component& o) const = default;
};

// Fixed data of a (Z2)^k-action on a closed n-manifold.  An empty
// component list is legal and means the action bounds trivially.
struct FixedData {
    std::uint32_t k = 1;
    std::uint32_t n = 0;
    std::vector<Component> components;

    bool operator==(const FixedData& o) const = default;
};

// The multiset {rho -> q_{C,rho}}; as a polynomial this is the full
// equivariant Euler class when dim = 0 and the restricted class used by
// property (*) when dim > 0.
DenomMultiset euler_monomial(const Component& c);

// Checks every data invariant and returns all violations (empty = ok).
std::vector<std::string> validate(const FixedData& fd);
inline bool is_valid(const FixedData& fd) { return validate(fd).empty(); }

// Merges positive-dimensional components with equal (dim, sequence) into
// one (tables added mod 2; any absent table makes the merge absent) and
// cancels pairs of identical isolated points.  Output components are
// sorted by dimension, then by sequence.  Idempotent.
FixedData normalize(const FixedData& fd);

// Concatenated component lists; requires equal k and n.
FixedData disjoint_union(const FixedData& a, const FixedData& b);

// Pairwise products: dims add, sequences add characterwise.  A point
// factor propagates the other factor's table; two positive-dimensional
// table-carrying factors are rejected with DataError (s-number propagation
// through such products requires symmetric-function coproducts and is out
// of scope).
FixedData product(const FixedData& a, const FixedData& b);

// The rank-(k+1) doubling: diagonal action plus twist on M x M.  Each
// component keeps its dimension; every old summand appears once extended
// trivially on the new generator and once twisted, and the twisted
// extension of the trivial character receives q = dim.  Tables carry over
// with keys on the trivially-extended characters.
FixedData doubled(const FixedData& fd);

// Relabels every character key (in sequences and partition tuples) by the
// transpose action of an invertible matrix; dimensions and values are
// unchanged.
FixedData apply_automorphism(const FixedData& fd, const GF2Matrix& m);

// Utility transforms used by checks: drop all tables / set all tables to
// the all-zero (but present) table.
FixedData strip_tables(const FixedData& fd);
FixedData zero_tables(const FixedData& fd);

// Largest component dimension; nullopt for an empty fixed set.
std::optional<std::uint32_t> dim_fixed_set(const FixedData& fd);

// Fixed component order: by dimension, then by sequence.
bool component_order_less(const Component& a, const Component& b);

} // namespace equilocal

#endif
