#pragma once

#include "chamberlab/bigint.hpp"

#include <json.hpp>

namespace chamberlab {

/// JSON integer when the value fits in 64 bits, decimal string otherwise.
nlohmann::json json_value(const BigInt& v);
/// Integer when the denominator is 1, "num/den" string otherwise.
nlohmann::json json_value(const BigRational& v);

} // namespace chamberlab
