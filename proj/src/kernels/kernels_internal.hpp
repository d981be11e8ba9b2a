#pragma once

#include "hashpim/kernels.hpp"

namespace hashpim::kernels::detail {

/// Defined in avx2.cpp, which is the only file built with -mavx2.
const KernelTable& avx2_table();

}  // namespace hashpim::kernels::detail
