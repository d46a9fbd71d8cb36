#include "zred/integer.hpp"

#include <cctype>

namespace zred {

Integer isqrt(const Integer& n) {
    if (n < 0) throw DomainError("isqrt of a negative integer");
    // boost's sqrt on cpp_int is the exact integer floor
    return boost::multiprecision::sqrt(n);
}

bool is_perfect_square(const Integer& n) {
    if (n < 0) return false;
    Integer r = isqrt(n);
    return r * r == n;
}

Integer floor_div(const Integer& n, const Integer& d) {
    if (d == 0) throw DomainError("division by zero");
    Integer q = n / d;
    Integer r = n - q * d;
    if (r != 0 && ((r < 0) != (d < 0))) --q;
    return q;
}

Integer ceil_div(const Integer& n, const Integer& d) {
    return -floor_div(-n, d);
}

Integer gcd(const Integer& a, const Integer& b) {
    return boost::multiprecision::gcd(a, b);
}

Integer parse_integer(std::string_view text) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }
    if (i == text.size()) throw DomainError("malformed integer: '" + std::string(text) + "'");
    Integer value = 0;
    for (; i < text.size(); ++i) {
        const char c = text[i];
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw DomainError("malformed integer: '" + std::string(text) + "'");
        }
        value = value * 10 + (c - '0');
    }
    return negative ? Integer(-value) : value;
}

std::string to_string(const Integer& n) {
    return n.str();
}

}  // namespace zred
