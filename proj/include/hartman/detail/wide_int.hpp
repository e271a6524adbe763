#pragma once

namespace hartman::detail {

// 128-bit intermediate for products and sums of int64 residues.
__extension__ using wide_int = __int128;

}  // namespace hartman::detail
