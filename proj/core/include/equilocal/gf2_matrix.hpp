#ifndef EQUILOCAL_GF2_MATRIX_HPP
#define EQUILOCAL_GF2_MATRIX_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "equilocal/errors.hpp"

namespace equilocal {

// Square matrix over GF(2), at most 16x16, rows packed into machine words.
// Row i describes the image of the variable a_{i+1} under a linear
// substitution: bit j of row i is the coefficient of a_{j+1}.
class GF2Matrix {
public:
    static GF2Matrix identity(std::size_t n);

    // rows[i] is the bit mask of row i; every mask must fit in n bits.
    static GF2Matrix from_rows(std::size_t n, std::vector<std::uint32_t> rows);

    // Rows written as bitstrings, leftmost character = coefficient of a_1.
    // "11,01" over n=2 maps a1 -> a1+a2, a2 -> a2.
    static GF2Matrix from_bitstrings(const std::vector<std::string>& rows);

    std::size_t n() const { return rows_.size(); }
    std::uint32_t row(std::size_t i) const { return rows_[i]; }
    bool bit(std::size_t i, std::size_t j) const { return (rows_[i] >> j) & 1u; }

    bool is_invertible() const;
    std::optional<GF2Matrix> inverse() const;

    // Transpose action on a character mask: chi -> m^T chi, i.e. the xor of
    // the rows selected by the set bits of chi.  This is the relabeling that
    // makes character relabeling commute with the variable substitution.
    std::uint32_t map_mask(std::uint32_t chi) const;

    bool operator==(const GF2Matrix& o) const { return rows_ == o.rows_; }

private:
    explicit GF2Matrix(std::vector<std::uint32_t> rows) : rows_(std::move(rows)) {}
    std::vector<std::uint32_t> rows_;
};

} // namespace equilocal

#endif
