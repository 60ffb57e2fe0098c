#include "chamberlab/json_util.hpp"

#include <limits>

namespace chamberlab {

nlohmann::json json_value(const BigInt& v)
{
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return v.convert_to<std::int64_t>();
    return to_string(v);
}

nlohmann::json json_value(const BigRational& v)
{
    if (boost::multiprecision::denominator(v) == 1) return json_value(BigInt(boost::multiprecision::numerator(v)));
    return to_string(v);
}

} // namespace chamberlab
