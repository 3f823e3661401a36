#ifndef EQUILOCAL_FIXED_DATA_IO_HPP
#define EQUILOCAL_FIXED_DATA_IO_HPP

#include <string>
#include <string_view>

#include "equilocal/fixed_data.hpp"

namespace equilocal {

// Fixed-data file format:
//   { "k": int, "n": int, "components": [
//       { "dim": int,
//         "normal": { "<bitstring>": int, ... },
//         "char_numbers": [ { "partitions": { "<bitstring>": [int,...] },
//                             "value": 0|1 } ]   (optional)
//       } ] }
// Bitstrings have length k, leftmost bit = generator t_1.  Unknown fields,
// bitstrings of the wrong length and the zero bitstring in "normal" are
// rejected.  "char_numbers" absent means unknown numbers; an empty array
// means they all vanish.
std::string to_json_string(const FixedData& fd, int indent = 2);
FixedData fixed_data_from_json(std::string_view text);

} // namespace equilocal

#endif
