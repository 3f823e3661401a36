#include "equilocal/gf2_matrix.hpp"

namespace equilocal {

GF2Matrix GF2Matrix::identity(std::size_t n) {
    std::vector<std::uint32_t> rows(n);
    for (std::size_t i = 0; i < n; ++i)
        rows[i] = 1u << i;
    return GF2Matrix(std::move(rows));
}

GF2Matrix GF2Matrix::from_rows(std::size_t n, std::vector<std::uint32_t> rows) {
    if (n == 0 || n > 16)
        throw DomainError("GF2Matrix: size must be between 1 and 16");
    if (rows.size() != n)
        throw DomainError("GF2Matrix: wrong number of rows");
    const std::uint32_t mask = (n == 32) ? ~0u : ((1u << n) - 1u);
    for (std::uint32_t r : rows)
        if (r & ~mask)
            throw DomainError("GF2Matrix: row does not fit the matrix size");
    return GF2Matrix(std::move(rows));
}

GF2Matrix GF2Matrix::from_bitstrings(const std::vector<std::string>& rows) {
    if (rows.empty())
        throw DomainError("GF2Matrix: no rows");
    const std::size_t n = rows.size();
    std::vector<std::uint32_t> packed(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n)
            throw DomainError("GF2Matrix: row length does not match the matrix size");
        for (std::size_t j = 0; j < n; ++j) {
            const char c = rows[i][j];
            if (c == '1')
                packed[i] |= 1u << j;
            else if (c != '0')
                throw DomainError("GF2Matrix: rows must consist of 0s and 1s");
        }
    }
    return from_rows(n, std::move(packed));
}

bool GF2Matrix::is_invertible() const {
    std::vector<std::uint32_t> work = rows_;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n(); ++col) {
        std::size_t pivot = rank;
        while (pivot < work.size() && !((work[pivot] >> col) & 1u))
            ++pivot;
        if (pivot == work.size())
            continue;
        std::swap(work[rank], work[pivot]);
        for (std::size_t i = 0; i < work.size(); ++i)
            if (i != rank && ((work[i] >> col) & 1u))
                work[i] ^= work[rank];
        ++rank;
    }
    return rank == n();
}

std::optional<GF2Matrix> GF2Matrix::inverse() const {
    std::vector<std::uint32_t> a = rows_;
    std::vector<std::uint32_t> inv = identity(n()).rows_;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n(); ++col) {
        std::size_t pivot = rank;
        while (pivot < a.size() && !((a[pivot] >> col) & 1u))
            ++pivot;
        if (pivot == a.size())
            return std::nullopt;
        std::swap(a[rank], a[pivot]);
        std::swap(inv[rank], inv[pivot]);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i != rank && ((a[i] >> col) & 1u)) {
                a[i] ^= a[rank];
                inv[i] ^= inv[rank];
            }
        }
        ++rank;
    }
    // Rows of `a` now hold single bits in column order; permute `inv` back.
    std::vector<std::uint32_t> out(n(), 0);
    for (std::size_t i = 0; i < n(); ++i) {
        std::size_t col = 0;
        while (!((a[i] >> col) & 1u))
            ++col;
        out[col] = inv[i];
    }
    return GF2Matrix(std::move(out));
}

std::uint32_t GF2Matrix::map_mask(std::uint32_t chi) const {
    std::uint32_t out = 0;
    for (std::size_t i = 0; i < n(); ++i)
        if ((chi >> i) & 1u)
            out ^= rows_[i];
    return out;
}

} // namespace equilocal
