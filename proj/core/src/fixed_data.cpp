#include "equilocal/fixed_data.hpp"

#include <algorithm>
#include <sstream>

namespace equilocal {

// ---------------------------------------------------------- NormalSequence

void NormalSequence::set(const Character& rho, std::uint32_t q) {
    if (rho.k() != k_)
        throw DimensionError("normal sequence entry over a different rank");
    if (rho.is_zero())
        throw DomainError("the trivial character has no normal summand");
    if (q == 0)
        q_.erase(rho.bits());
    else
        q_[rho.bits()] = q;
}

void NormalSequence::add(const Character& rho, std::uint32_t q) {
    set(rho, at(rho) + q);
}

std::uint32_t NormalSequence::at(const Character& rho) const {
    if (rho.k() != k_)
        throw DimensionError("normal sequence lookup over a different rank");
    auto it = q_.find(rho.bits());
    return it == q_.end() ? 0 : it->second;
}

std::uint64_t NormalSequence::total() const {
    std::uint64_t t = 0;
    for (const auto& [bits, q] : q_)
        t += q;
    return t;
}

std::vector<std::pair<Character, std::uint32_t>> NormalSequence::entries() const {
    std::vector<std::pair<Character, std::uint32_t>> out;
    out.reserve(q_.size());
    for (const auto& [bits, q] : q_)
        out.emplace_back(Character(k_, bits), q);
    return out;
}

NormalSequence NormalSequence::sum(const NormalSequence& a, const NormalSequence& b) {
    if (a.k_ != b.k_)
        throw DimensionError("normal sequence sum over different ranks");
    NormalSequence out = a;
    for (const auto& [bits, q] : b.q_)
        out.q_[bits] += q;
    return out;
}

DenomMultiset NormalSequence::to_denom() const {
    DenomMultiset d(k_);
    for (const auto& [bits, q] : q_)
        d.insert(Character(k_, bits), q);
    return d;
}

NormalSequence NormalSequence::relabeled(const GF2Matrix& m) const {
    NormalSequence out(k_);
    for (const auto& [bits, q] : q_)
        out.q_[m.map_mask(bits)] = q;
    return out;
}

// ---------------------------------------------------------- PartitionTuple

void PartitionTuple::set(const Character& rho, std::vector<std::uint32_t> parts) {
    if (rho.k() != k_)
        throw DimensionError("partition tuple entry over a different rank");
    if (rho.is_zero())
        throw DomainError("partition tuples are indexed by nonzero characters");
    for (std::uint32_t p : parts)
        if (p == 0)
            throw DomainError("partition parts must be positive");
    if (parts.empty()) {
        parts_.erase(rho.bits());
        return;
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    parts_[rho.bits()] = std::move(parts);
}

const std::vector<std::uint32_t>& PartitionTuple::parts(const Character& rho) const {
    static const std::vector<std::uint32_t> kEmpty;
    if (rho.k() != k_)
        throw DimensionError("partition tuple lookup over a different rank");
    auto it = parts_.find(rho.bits());
    return it == parts_.end() ? kEmpty : it->second;
}

std::uint64_t PartitionTuple::weight() const {
    std::uint64_t w = 0;
    for (const auto& [bits, parts] : parts_)
        for (std::uint32_t p : parts)
            w += p;
    return w;
}

std::vector<std::pair<Character, std::vector<std::uint32_t>>> PartitionTuple::entries() const {
    std::vector<std::pair<Character, std::vector<std::uint32_t>>> out;
    out.reserve(parts_.size());
    for (const auto& [bits, parts] : parts_)
        out.emplace_back(Character(k_, bits), parts);
    return out;
}

PartitionTuple PartitionTuple::relabeled(const GF2Matrix& m) const {
    PartitionTuple out(k_);
    for (const auto& [bits, parts] : parts_)
        out.parts_[m.map_mask(bits)] = parts;
    return out;
}

std::string PartitionTuple::to_string() const {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (const auto& [bits, parts] : parts_) {
        if (!first)
            out << "; ";
        first = false;
        out << Character(k_, bits).bitstring() << ":(";
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i)
                out << ',';
            out << parts[i];
        }
        out << ')';
    }
    out << '}';
    return out.str();
}

// --------------------------------------------------------- CharNumberTable

CharNumberTable CharNumberTable::point(std::size_t k) {
    CharNumberTable t(k);
    t.support_.insert(PartitionTuple(k));
    return t;
}

void CharNumberTable::set(const PartitionTuple& omega, bool value) {
    if (omega.k() != k_)
        throw DimensionError("table entry over a different rank");
    if (value)
        support_.insert(omega);
    else
        support_.erase(omega);
}

bool CharNumberTable::value(const PartitionTuple& omega) const {
    if (omega.k() != k_)
        throw DimensionError("table lookup over a different rank");
    return support_.count(omega) > 0;
}

void CharNumberTable::xor_with(const CharNumberTable& o) {
    if (o.k_ != k_)
        throw DimensionError("table merge over different ranks");
    for (const PartitionTuple& t : o.support_) {
        auto it = support_.find(t);
        if (it == support_.end())
            support_.insert(t);
        else
            support_.erase(it);
    }
}

CharNumberTable CharNumberTable::relabeled(const GF2Matrix& m) const {
    CharNumberTable out(k_);
    for (const PartitionTuple& t : support_)
        out.support_.insert(t.relabeled(m));
    return out;
}

// --------------------------------------------------------------- FixedData

DenomMultiset euler_monomial(const Component& c) {
    return c.normal.to_denom();
}

std::vector<std::string> validate(const FixedData& fd) {
    std::vector<std::string> out;
    if (fd.k < 1 || fd.k > kMaxRank) {
        out.push_back("k must be between 1 and 16");
        return out;
    }
    for (std::size_t i = 0; i < fd.components.size(); ++i) {
        const Component& c = fd.components[i];
        const std::string tag = "component " + std::to_string(i) + ": ";
        if (c.normal.k() != fd.k) {
            out.push_back(tag + "normal sequence rank differs from k");
            continue;
        }
        if (std::uint64_t(c.dim) + c.normal.total() != fd.n)
            out.push_back(tag + "dim + normal total != n");
        if (!c.char_numbers)
            continue;
        const CharNumberTable& t = *c.char_numbers;
        if (t.k() != fd.k) {
            out.push_back(tag + "table rank differs from k");
            continue;
        }
        if (c.dim == 0) {
            if (!(t == CharNumberTable::point(fd.k)))
                out.push_back(tag + "a point's table must be the single empty tuple with value 1");
            continue;
        }
        for (const PartitionTuple& omega : t.support()) {
            if (omega.weight() != c.dim)
                out.push_back(tag + "table key " + omega.to_string() + " has weight != dim");
            for (const auto& [rho, parts] : omega.entries())
                if (parts.size() > c.normal.at(rho))
                    out.push_back(tag + "partition for " + rho.bitstring() +
                                  " is longer than q");
        }
    }
    return out;
}

bool component_order_less(const Component& a, const Component& b) {
    if (a.dim != b.dim)
        return a.dim < b.dim;
    return a.normal < b.normal;
}

FixedData normalize(const FixedData& fd) {
    // Group by (dim, sequence), preserving first-seen order inside a group.
    std::map<std::pair<std::uint32_t, NormalSequence>, std::vector<const Component*>> groups;
    for (const Component& c : fd.components)
        groups[{c.dim, c.normal}].push_back(&c);

    FixedData out{fd.k, fd.n, {}};
    for (const auto& [key, members] : groups) {
        if (key.first == 0) {
            // Isolated points cancel in pairs.
            if (members.size() % 2 == 1)
                out.components.push_back(*members.front());
            continue;
        }
        // Connected sum: one component, tables added mod 2; an unknown
        // table anywhere makes the merged table unknown.
        Component merged = *members.front();
        for (std::size_t i = 1; i < members.size(); ++i) {
            if (!merged.char_numbers || !members[i]->char_numbers)
                merged.char_numbers.reset();
            else
                merged.char_numbers->xor_with(*members[i]->char_numbers);
        }
        out.components.push_back(std::move(merged));
    }
    std::sort(out.components.begin(), out.components.end(), component_order_less);
    return out;
}

FixedData disjoint_union(const FixedData& a, const FixedData& b) {
    if (a.k != b.k)
        throw DimensionError("disjoint union over different ranks");
    if (a.n != b.n)
        throw DimensionError("disjoint union of actions on different dimensions");
    FixedData out = a;
    out.components.insert(out.components.end(), b.components.begin(), b.components.end());
    return out;
}

namespace {

std::optional<CharNumberTable> product_table(const Component& a, const Component& b,
                                             std::size_t k) {
    // A point factor scales every product number by its empty-tuple value
    // (1 when the forced table is absent).
    if (a.dim == 0 || b.dim == 0) {
        const Component& pt = a.dim == 0 ? a : b;
        const Component& other = a.dim == 0 ? b : a;
        const bool scale = !pt.char_numbers || pt.char_numbers->value(PartitionTuple(k));
        if (!scale)
            return CharNumberTable(k); // all numbers vanish
        return other.char_numbers;
    }
    if (a.char_numbers && b.char_numbers)
        throw DataError("table propagation through a product of two "
                        "positive-dimensional components is unsupported");
    return std::nullopt;
}

} // namespace

FixedData product(const FixedData& a, const FixedData& b) {
    if (a.k != b.k)
        throw DimensionError("product over different ranks");
    FixedData out{a.k, a.n + b.n, {}};
    out.components.reserve(a.components.size() * b.components.size());
    for (const Component& ca : a.components)
        for (const Component& cb : b.components)
            out.components.emplace_back(ca.dim + cb.dim,
                                        NormalSequence::sum(ca.normal, cb.normal),
                                        product_table(ca, cb, a.k));
    std::stable_sort(out.components.begin(), out.components.end(), component_order_less);
    return out;
}

FixedData doubled(const FixedData& fd) {
    const std::size_t k2 = fd.k + 1;
    if (k2 > kMaxRank)
        throw OverflowError("doubling would exceed the rank cap");
    const std::uint32_t twist = 1u << fd.k;

    FixedData out{static_cast<std::uint32_t>(k2), 2 * fd.n, {}};
    for (const Component& c : fd.components) {
        NormalSequence seq(k2);
        for (const auto& [rho, q] : c.normal.entries()) {
            seq.add(Character(k2, rho.bits()), q);         // extension trivial on t_{k+1}
            seq.add(Character(k2, rho.bits() | twist), q); // twisted extension
        }
        if (c.dim > 0)
            seq.add(Character(k2, twist), c.dim); // twisted extension of rho_0: the tangent copy
        std::optional<CharNumberTable> table;
        if (c.char_numbers) {
            table.emplace(k2);
            for (const PartitionTuple& omega : c.char_numbers->support()) {
                PartitionTuple lifted(k2);
                for (const auto& [rho, parts] : omega.entries())
                    lifted.set(Character(k2, rho.bits()), parts);
                table->set(lifted, true);
            }
        }
        out.components.emplace_back(c.dim, std::move(seq), std::move(table));
    }
    return out;
}

FixedData apply_automorphism(const FixedData& fd, const GF2Matrix& m) {
    if (m.n() != fd.k)
        throw DimensionError("automorphism matrix size does not match k");
    if (!m.is_invertible())
        throw DomainError("automorphism matrix must be invertible");
    FixedData out{fd.k, fd.n, {}};
    out.components.reserve(fd.components.size());
    for (const Component& c : fd.components) {
        std::optional<CharNumberTable> table;
        if (c.char_numbers)
            table = c.char_numbers->relabeled(m);
        out.components.emplace_back(c.dim, c.normal.relabeled(m), std::move(table));
    }
    return out;
}

FixedData strip_tables(const FixedData& fd) {
    FixedData out = fd;
    for (Component& c : out.components)
        c.char_numbers.reset();
    return out;
}

FixedData zero_tables(const FixedData& fd) {
    FixedData out = fd;
    for (Component& c : out.components)
        c.char_numbers = CharNumberTable(fd.k);
    return out;
}

std::optional<std::uint32_t> dim_fixed_set(const FixedData& fd) {
    std::optional<std::uint32_t> d;
    for (const Component& c : fd.components)
        if (!d || c.dim > *d)
            d = c.dim;
    return d;
}

} // namespace equilocal
