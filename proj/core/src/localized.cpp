#include "equilocal/localized.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace equilocal {

// ----------------------------------------------------------- DenomMultiset

void DenomMultiset::insert(const Character& chi, std::uint32_t multiplicity) {
    if (chi.k() != k_)
        throw DimensionError("denominator factor over a different rank");
    if (chi.is_zero())
        throw DomainError("the zero character cannot be a denominator factor");
    if (multiplicity == 0)
        return;
    factors_[chi.bits()] += multiplicity;
}

std::uint32_t DenomMultiset::multiplicity(const Character& chi) const {
    if (chi.k() != k_)
        throw DimensionError("denominator lookup over a different rank");
    auto it = factors_.find(chi.bits());
    return it == factors_.end() ? 0 : it->second;
}

std::vector<std::pair<Character, std::uint32_t>> DenomMultiset::factors() const {
    std::vector<std::pair<Character, std::uint32_t>> out;
    out.reserve(factors_.size());
    for (const auto& [bits, mult] : factors_)
        out.emplace_back(Character(k_, bits), mult);
    return out;
}

std::uint64_t DenomMultiset::total_degree() const {
    std::uint64_t d = 0;
    for (const auto& [bits, mult] : factors_)
        d += mult;
    return d;
}

DenomMultiset DenomMultiset::lcm(const DenomMultiset& a, const DenomMultiset& b) {
    if (a.k_ != b.k_)
        throw DimensionError("denominator lcm over different ranks");
    DenomMultiset out = a;
    for (const auto& [bits, mult] : b.factors_) {
        auto& m = out.factors_[bits];
        m = std::max(m, mult);
    }
    return out;
}

DenomMultiset DenomMultiset::sum(const DenomMultiset& a, const DenomMultiset& b) {
    if (a.k_ != b.k_)
        throw DimensionError("denominator sum over different ranks");
    DenomMultiset out = a;
    for (const auto& [bits, mult] : b.factors_)
        out.factors_[bits] += mult;
    return out;
}

DenomMultiset DenomMultiset::difference(const DenomMultiset& a, const DenomMultiset& b) {
    if (a.k_ != b.k_)
        throw DimensionError("denominator difference over different ranks");
    DenomMultiset out = a;
    for (const auto& [bits, mult] : b.factors_) {
        auto it = out.factors_.find(bits);
        if (it == out.factors_.end() || it->second < mult)
            throw DomainError("denominator difference would be negative");
        it->second -= mult;
        if (it->second == 0)
            out.factors_.erase(it);
    }
    return out;
}

PolyGF2 DenomMultiset::as_poly() const {
    PolyGF2 out = PolyGF2::one(k_);
    for (const auto& [bits, mult] : factors_)
        out = out * linear_form(Character(k_, bits)).pow(mult);
    return out;
}

std::string DenomMultiset::to_string() const {
    if (factors_.empty())
        return "1";
    std::ostringstream out;
    bool first = true;
    for (const auto& [bits, mult] : factors_) {
        if (!first)
            out << '*';
        first = false;
        out << '(' << linear_form(Character(k_, bits)).to_string() << ')';
        if (mult > 1)
            out << '^' << mult;
    }
    return out.str();
}

// ----------------------------------------------------------- LocalizedElem

LocalizedElem::LocalizedElem(std::size_t k) : num_(k), den_(k) {}

LocalizedElem LocalizedElem::make(PolyGF2 num, DenomMultiset den) {
    if (num.k() != den.k())
        throw DimensionError("numerator and denominator over different ranks");
    LocalizedElem out(num.k());
    if (num.is_zero())
        return out; // zero is uniquely (0, empty)
    // The linear forms are primes of the UFD Z2[a1..ak], so cancelling each
    // factor up to its multiplicity in the numerator needs no revisiting.
    for (const auto& [chi, mult] : den.factors()) {
        const PolyGF2 alpha = linear_form(chi);
        std::uint32_t remaining = mult;
        while (remaining > 0) {
            auto q = divide_exact(num, alpha);
            if (!q)
                break;
            num = std::move(*q);
            --remaining;
        }
        if (remaining > 0)
            out.den_.insert(chi, remaining);
    }
    out.num_ = std::move(num);
    return out;
}

LocalizedElem LocalizedElem::from_poly(PolyGF2 p) {
    LocalizedElem out(p.k());
    out.num_ = std::move(p);
    return out;
}

LocalizedElem LocalizedElem::one(std::size_t k) {
    return from_poly(PolyGF2::one(k));
}

LocalizedElem LocalizedElem::reciprocal(const DenomMultiset& den) {
    // 1 is not divisible by any linear form; already reduced.
    LocalizedElem out(den.k());
    out.num_ = PolyGF2::one(den.k());
    out.den_ = den;
    return out;
}

LocalizedElem LocalizedElem::operator+(const LocalizedElem& o) const {
    if (k() != o.k())
        throw DimensionError("localized sum over different ranks");
    const DenomMultiset common = DenomMultiset::lcm(den_, o.den_);
    const PolyGF2 left = num_ * DenomMultiset::difference(common, den_).as_poly();
    const PolyGF2 right = o.num_ * DenomMultiset::difference(common, o.den_).as_poly();
    return make(left + right, common);
}

LocalizedElem LocalizedElem::operator*(const LocalizedElem& o) const {
    if (k() != o.k())
        throw DimensionError("localized product over different ranks");
    if (is_zero() || o.is_zero())
        return zero(k());
    // One factor's numerator may be divisible by the other's denominator,
    // so the raw product still needs reduction.
    return make(num_ * o.num_, DenomMultiset::sum(den_, o.den_));
}

std::string LocalizedElem::to_string() const {
    if (den_.empty())
        return num_.to_string();
    return num_.to_string() + " / " + den_.to_string();
}

LocalizedElem LocalizedElem::parse(std::string_view text, std::size_t k) {
    const std::size_t slash = text.find('/');
    if (slash == std::string_view::npos)
        return from_poly(PolyGF2::parse(text, k));
    const PolyGF2 num = PolyGF2::parse(text.substr(0, slash), k);
    std::string_view rest = text.substr(slash + 1);

    DenomMultiset den(k);
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < rest.size() && (rest[pos] == ' ' || rest[pos] == '\t'))
            ++pos;
    };
    skip_ws();
    if (pos < rest.size() && rest[pos] == '1' && pos + 1 == rest.size())
        return make(num, den); // explicit "/ 1"
    for (;;) {
        skip_ws();
        if (pos >= rest.size() || rest[pos] != '(')
            throw ParseError("expected a parenthesized linear form in the denominator");
        const std::size_t close = rest.find(')', pos);
        if (close == std::string_view::npos)
            throw ParseError("unbalanced parenthesis in the denominator");
        const PolyGF2 form = PolyGF2::parse(rest.substr(pos + 1, close - pos - 1), k);
        auto chi = as_linear_form(form);
        if (!chi)
            throw ParseError("denominator factors must be nonzero linear forms");
        pos = close + 1;
        std::uint64_t mult = 1;
        skip_ws();
        if (pos < rest.size() && rest[pos] == '^') {
            ++pos;
            skip_ws();
            if (pos >= rest.size() || !std::isdigit(static_cast<unsigned char>(rest[pos])))
                throw ParseError("expected a multiplicity after ^");
            mult = 0;
            while (pos < rest.size() && std::isdigit(static_cast<unsigned char>(rest[pos]))) {
                mult = mult * 10 + (rest[pos] - '0');
                if (mult > 0xFFFFFFFFull)
                    throw ParseError("multiplicity out of range");
                ++pos;
            }
            if (mult == 0)
                throw ParseError("denominator multiplicities must be positive");
        }
        den.insert(*chi, static_cast<std::uint32_t>(mult));
        skip_ws();
        if (pos >= rest.size())
            break;
        if (rest[pos] != '*')
            throw ParseError("expected * between denominator factors");
        ++pos;
    }
    return make(num, den);
}

} // namespace equilocal
