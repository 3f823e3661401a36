#include "equilocal/gf2_poly.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>

namespace equilocal {

namespace {

void check_rank(std::size_t k) {
    if (k < 1 || k > kMaxRank)
        throw OverflowError("rank k must be between 1 and 16");
}

void check_same_k(std::size_t a, std::size_t b, const char* what) {
    if (a != b)
        throw DimensionError(std::string(what) + ": operands over different ranks");
}

std::uint16_t checked_exponent(std::uint64_t e) {
    if (e > kMaxExponent)
        throw OverflowError("exponent exceeds the 2^16 cap");
    return static_cast<std::uint16_t>(e);
}

} // namespace

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::size_t k) {
    check_rank(k);
    exps_.assign(k, 0);
}

Monomial Monomial::from_exponents(std::vector<std::uint32_t> exps) {
    Monomial m(exps.size());
    for (std::size_t i = 0; i < exps.size(); ++i)
        m.exps_[i] = checked_exponent(exps[i]);
    return m;
}

std::uint32_t Monomial::degree() const {
    std::uint32_t d = 0;
    for (std::uint16_t e : exps_)
        d += e;
    return d;
}

bool Monomial::is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](std::uint16_t e) { return e == 0; });
}

Monomial Monomial::times(const Monomial& o) const {
    check_same_k(k(), o.k(), "monomial product");
    Monomial out(k());
    for (std::size_t i = 0; i < exps_.size(); ++i)
        out.exps_[i] = checked_exponent(std::uint64_t(exps_[i]) + o.exps_[i]);
    return out;
}

Monomial Monomial::scaled(std::uint32_t factor) const {
    Monomial out(k());
    for (std::size_t i = 0; i < exps_.size(); ++i)
        out.exps_[i] = checked_exponent(std::uint64_t(exps_[i]) * factor);
    return out;
}

std::optional<Monomial> Monomial::divided_by(const Monomial& o) const {
    check_same_k(k(), o.k(), "monomial quotient");
    Monomial out(k());
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] < o.exps_[i])
            return std::nullopt;
        out.exps_[i] = static_cast<std::uint16_t>(exps_[i] - o.exps_[i]);
    }
    return out;
}

Monomial Monomial::with_exponent(std::size_t i, std::uint32_t e) const {
    Monomial out = *this;
    out.exps_[i] = checked_exponent(e);
    return out;
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
    if (auto c = degree() <=> o.degree(); c != 0)
        return c;
    // Same degree: lexicographic with a1 > a2 > ..., i.e. the monomial with
    // the larger exponent at the first differing variable is larger.
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (auto c = exps_[i] <=> o.exps_[i]; c != 0)
            return c;
    return std::strong_ordering::equal;
}

std::string Monomial::to_string() const {
    if (is_one())
        return "1";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] == 0)
            continue;
        if (!first)
            out << '*';
        first = false;
        out << 'a' << (i + 1);
        if (exps_[i] > 1)
            out << '^' << exps_[i];
    }
    return out.str();
}

// --------------------------------------------------------------- Character

Character::Character(std::size_t k, std::uint32_t bits)
    : k_(static_cast<std::uint32_t>(k)), bits_(bits) {
    check_rank(k);
    if (bits >> k)
        throw DomainError("character bits exceed the rank");
}

Character Character::from_bitstring(std::string_view s) {
    check_rank(s.size());
    std::uint32_t bits = 0;
    for (std::size_t j = 0; j < s.size(); ++j) {
        if (s[j] == '1')
            bits |= 1u << j;
        else if (s[j] != '0')
            throw ParseError("character bitstring must consist of 0s and 1s");
    }
    return Character(s.size(), bits);
}

std::vector<Character> Character::all_nonzero(std::size_t k) {
    check_rank(k);
    std::vector<Character> out;
    out.reserve((std::size_t(1) << k) - 1);
    for (std::uint32_t b = 1; b < (1u << k); ++b)
        out.emplace_back(k, b);
    return out;
}

Character Character::operator*(const Character& o) const {
    check_same_k(k_, o.k_, "character product");
    return Character(k_, bits_ ^ o.bits_);
}

std::string Character::bitstring() const {
    std::string s(k_, '0');
    for (std::size_t j = 0; j < k_; ++j)
        if ((bits_ >> j) & 1u)
            s[j] = '1';
    return s;
}

std::strong_ordering Character::operator<=>(const Character& o) const {
    if (auto c = k_ <=> o.k_; c != 0)
        return c;
    return bits_ <=> o.bits_;
}

// ----------------------------------------------------------------- PolyGF2

PolyGF2::PolyGF2(std::size_t k) : k_(k) {
    check_rank(k);
}

PolyGF2 PolyGF2::one(std::size_t k) {
    PolyGF2 p(k);
    p.terms_.emplace_back(k);
    return p;
}

PolyGF2 PolyGF2::variable(std::size_t k, std::size_t i) {
    check_rank(k);
    if (i >= k)
        throw DomainError("variable index out of range");
    return from_monomial(Monomial(k).with_exponent(i, 1));
}

PolyGF2 PolyGF2::from_monomial(Monomial m) {
    PolyGF2 p(m.k());
    p.terms_.push_back(std::move(m));
    return p;
}

PolyGF2 PolyGF2::from_monomials(std::size_t k, std::vector<Monomial> ms) {
    PolyGF2 p(k);
    for (const Monomial& m : ms)
        check_same_k(k, m.k(), "polynomial construction");
    std::sort(ms.begin(), ms.end(), [](const Monomial& a, const Monomial& b) { return a > b; });
    // Mod 2: runs of equal monomials survive only with odd length.
    for (std::size_t i = 0; i < ms.size();) {
        std::size_t j = i;
        while (j < ms.size() && ms[j] == ms[i])
            ++j;
        if ((j - i) % 2 == 1)
            p.terms_.push_back(ms[i]);
        i = j;
    }
    return p;
}

bool PolyGF2::is_one() const {
    return terms_.size() == 1 && terms_[0].is_one();
}

long PolyGF2::degree() const {
    if (terms_.empty())
        return -1;
    return static_cast<long>(terms_.front().degree());
}

const Monomial& PolyGF2::leading_term() const {
    if (terms_.empty())
        throw DomainError("the zero polynomial has no leading term");
    return terms_.front();
}

PolyGF2 PolyGF2::operator+(const PolyGF2& o) const {
    check_same_k(k_, o.k_, "polynomial sum");
    PolyGF2 out(k_);
    out.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        const auto c = terms_[i] <=> o.terms_[j];
        if (c == std::strong_ordering::greater)
            out.terms_.push_back(terms_[i++]);
        else if (c == std::strong_ordering::less)
            out.terms_.push_back(o.terms_[j++]);
        else {
            ++i;
            ++j; // equal monomials cancel mod 2
        }
    }
    out.terms_.insert(out.terms_.end(), terms_.begin() + i, terms_.end());
    out.terms_.insert(out.terms_.end(), o.terms_.begin() + j, o.terms_.end());
    return out;
}

PolyGF2 PolyGF2::operator*(const PolyGF2& o) const {
    check_same_k(k_, o.k_, "polynomial product");
    std::vector<Monomial> prods;
    prods.reserve(terms_.size() * o.terms_.size());
    for (const Monomial& a : terms_)
        for (const Monomial& b : o.terms_)
            prods.push_back(a.times(b));
    return from_monomials(k_, std::move(prods));
}

PolyGF2 PolyGF2::frobenius(std::uint32_t s) const {
    // (sum m_i)^(2^s) = sum m_i^(2^s): cross terms carry even coefficients.
    if (s >= 32)
        throw OverflowError("Frobenius power too large");
    PolyGF2 out(k_);
    out.terms_.reserve(terms_.size());
    const std::uint32_t factor = 1u << s;
    for (const Monomial& m : terms_)
        out.terms_.push_back(m.scaled(factor));
    return out; // scaling by a constant preserves the graded-lex order
}

PolyGF2 PolyGF2::pow(std::uint64_t e) const {
    if (e == 0)
        return one(k_);
    PolyGF2 out = one(k_);
    bool first = true;
    for (std::uint32_t s = 0; s < 64; ++s) {
        if (!((e >> s) & 1))
            continue;
        const PolyGF2 f = frobenius(s);
        if (first) {
            out = f;
            first = false;
        } else {
            out = out * f;
        }
    }
    return out;
}

PolyGF2 PolyGF2::substituted(const GF2Matrix& m) const {
    if (m.n() != k_)
        throw DimensionError("substitution matrix size does not match the rank");
    if (!m.is_invertible())
        throw DomainError("substitution matrix must be invertible");
    std::vector<PolyGF2> images;
    images.reserve(k_);
    for (std::size_t i = 0; i < k_; ++i)
        images.push_back(linear_form(Character(k_, m.row(i))));
    PolyGF2 out(k_);
    for (const Monomial& t : terms_) {
        PolyGF2 term = one(k_);
        for (std::size_t i = 0; i < k_; ++i)
            if (t.exponent(i) > 0)
                term = term * images[i].pow(t.exponent(i));
        out = out + term;
    }
    return out;
}

std::string PolyGF2::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i)
            out << " + ";
        out << terms_[i].to_string();
    }
    return out.str();
}

// ------------------------------------------------------------ linear forms

PolyGF2 linear_form(const Character& chi) {
    PolyGF2 p(chi.k());
    for (std::size_t i = 0; i < chi.k(); ++i)
        if ((chi.bits() >> i) & 1u)
            p = p + PolyGF2::variable(chi.k(), i);
    return p;
}

std::optional<Character> as_linear_form(const PolyGF2& p) {
    std::uint32_t bits = 0;
    for (const Monomial& m : p.terms()) {
        if (m.degree() != 1)
            return std::nullopt;
        for (std::size_t i = 0; i < p.k(); ++i)
            if (m.exponent(i) == 1)
                bits |= 1u << i;
    }
    if (bits == 0)
        return std::nullopt;
    if (p.terms().size() != std::size_t(std::popcount(bits)))
        return std::nullopt;
    return Character(p.k(), bits);
}

// ---------------------------------------------------------- exact division

namespace {

// Remainder of p modulo a linear form: substitute the pivot variable by
// the sum of the remaining variables of the form.
PolyGF2 linear_remainder(const PolyGF2& p, const Character& chi) {
    std::size_t pivot = 0;
    while (!((chi.bits() >> pivot) & 1u))
        ++pivot;
    PolyGF2 rest = linear_form(Character(chi.k(), chi.bits() & ~(1u << pivot)));
    PolyGF2 out(p.k());
    for (const Monomial& m : p.terms()) {
        const std::uint32_t e = m.exponent(pivot);
        PolyGF2 term = PolyGF2::from_monomial(m.with_exponent(pivot, 0));
        if (e > 0)
            term = term * rest.pow(e);
        out = out + term;
    }
    return out;
}

// Long division by a single divisor under graded-lex.  For one divisor the
// remainder is unique, so the quotient exists iff no leading term ever
// fails to divide; bail out at the first failure.
std::optional<PolyGF2> long_division_exact(const PolyGF2& p, const PolyGF2& d) {
    PolyGF2 q(p.k());
    PolyGF2 r = p;
    const Monomial& lead_d = d.leading_term();
    while (!r.is_zero()) {
        auto t = r.leading_term().divided_by(lead_d);
        if (!t)
            return std::nullopt;
        PolyGF2 tp = PolyGF2::from_monomial(*t);
        q = q + tp;
        r = r + tp * d;
    }
    return q;
}

} // namespace

std::optional<PolyGF2> divide_exact(const PolyGF2& p, const PolyGF2& d) {
    check_same_k(p.k(), d.k(), "exact division");
    if (d.is_zero())
        throw DomainError("division by the zero polynomial");
    if (p.is_zero())
        return PolyGF2::zero(p.k());
    if (auto chi = as_linear_form(d)) {
        if (!linear_remainder(p, *chi).is_zero())
            return std::nullopt;
        return long_division_exact(p, d); // guaranteed to succeed
    }
    return long_division_exact(p, d);
}

// ----------------------------------------------------------------- parsing

namespace {

struct Cursor {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t'))
            ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::uint64_t integer() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw ParseError("expected an integer");
        std::uint64_t v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            if (v > 0xFFFFFFFFull)
                throw ParseError("integer out of range");
            ++pos;
        }
        return v;
    }
};

Monomial parse_term(Cursor& c, std::size_t k) {
    std::vector<std::uint32_t> exps(k, 0);
    bool saw_factor = false;
    for (;;) {
        c.skip_ws();
        if (c.peek() == '1' && !saw_factor) {
            // The constant term; a lone "1" with no variables.
            c.accept('1');
            saw_factor = true;
        } else if (c.peek() == 'a') {
            c.accept('a');
            const std::uint64_t idx = c.integer();
            if (idx < 1 || idx > k)
                throw ParseError("variable index out of range");
            std::uint64_t e = 1;
            if (c.accept('^'))
                e = c.integer();
            exps[idx - 1] += e;
            if (exps[idx - 1] > kMaxExponent)
                throw ParseError("exponent out of range");
            saw_factor = true;
        } else {
            throw ParseError("expected a term");
        }
        if (!c.accept('*'))
            break;
    }
    return Monomial::from_exponents(std::move(exps));
}

} // namespace

PolyGF2 PolyGF2::parse(std::string_view text, std::size_t k) {
    check_rank(k);
    Cursor c{text};
    if (c.done())
        throw ParseError("empty polynomial");
    if (c.peek() == '0') {
        c.accept('0');
        if (!c.done())
            throw ParseError("trailing input after 0");
        return PolyGF2::zero(k);
    }
    std::vector<Monomial> terms;
    terms.push_back(parse_term(c, k));
    while (c.accept('+'))
        terms.push_back(parse_term(c, k));
    if (!c.done())
        throw ParseError("trailing input after polynomial");
    return from_monomials(k, std::move(terms));
}

} // namespace equilocal
