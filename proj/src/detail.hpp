#pragma once

#include <cstdint>

#include "derinv/ffield.hpp"

namespace derinv::detail {

std::uint64_t splitting_seed(const FpPoly& f);

}  // namespace derinv::detail
