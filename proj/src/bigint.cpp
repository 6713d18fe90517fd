#include "sumset/bigint.hpp"

#include <limits>
#include <stdexcept>

namespace sumset {

BigInt ipow(const BigInt& base, int exp) {
    if (exp < 0) throw std::invalid_argument("ipow: negative exponent");
    return boost::multiprecision::pow(base, static_cast<unsigned>(exp));
}

BigInt iroot_floor(const BigInt& value, int k) {
    if (k < 1) throw std::invalid_argument("iroot_floor: k must be >= 1");
    if (value < 0) throw std::invalid_argument("iroot_floor: negative value");
    if (value == 0) return 0;
    if (k == 1) return value;

    // bracket: 2^ceil((bits)/k) is an upper bound on the root
    const unsigned bits = boost::multiprecision::msb(value) + 1;
    BigInt hi = BigInt(1) << (bits / k + 1);
    BigInt lo = 0;
    while (lo < hi) {
        BigInt mid = (lo + hi + 1) >> 1;
        if (ipow(mid, k) <= value)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

std::size_t to_index(const BigInt& value) {
    if (value < 0 || value > std::numeric_limits<std::size_t>::max())
        throw std::overflow_error("value does not fit in size_t");
    return value.convert_to<std::size_t>();
}

BigInt parse_bigint(const std::string& text) {
    std::size_t start = 0;
    if (!text.empty() && text[0] == '-') start = 1;
    if (start == text.size())
        throw std::invalid_argument("not a decimal integer: '" + text + "'");
    for (std::size_t i = start; i < text.size(); ++i)
        if (text[i] < '0' || text[i] > '9')
            throw std::invalid_argument("not a decimal integer: '" + text + "'");
    return BigInt(text);
}

}  // namespace sumset
