#include "kwalls/rational.hpp"

#include <charconv>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace kwalls {

namespace {

BigInt floor_div(const BigInt& num, const BigInt& den) {
    BigInt q = num / den;  // truncates toward zero, den > 0
    if (num < 0 && q * den != num) {
        --q;
    }
    return q;
}

std::int64_t narrow(const BigInt& v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
        throw std::overflow_error("rational value does not fit in 64 bits");
    }
    return v.convert_to<std::int64_t>();
}

std::int64_t parse_int(std::string_view text) {
    if (!text.empty() && text.front() == '+') {
        text.remove_prefix(1);
    }
    std::int64_t value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (text.empty() || ec != std::errc() || ptr != last) {
        throw std::invalid_argument("malformed integer '" + std::string(text) + "'");
    }
    return value;
}

}  // namespace

std::int64_t floor_to_int(const Rational& x) {
    return narrow(floor_div(numerator(x), denominator(x)));
}

std::int64_t ceil_to_int(const Rational& x) {
    return -floor_to_int(-x);
}

std::string to_fraction_string(const Rational& x) {
    return numerator(x).str() + "/" + denominator(x).str();
}

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return make_rational(parse_int(text));
    }
    const std::int64_t num = parse_int(text.substr(0, slash));
    const std::int64_t den = parse_int(text.substr(slash + 1));
    if (den == 0) {
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    return make_rational(num, den);
}

double to_double(const Rational& x) {
    return x.convert_to<double>();
}

std::string to_decimal(const Rational& x, int digits) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(digits) << x.convert_to<long double>();
    return os.str();
}

std::string sqrt_decimal(const Rational& x, int digits) {
    if (x < 0) {
        throw std::domain_error("square root of a negative rational");
    }
    std::ostringstream os;
    os << std::fixed << std::setprecision(digits) << std::sqrt(x.convert_to<long double>());
    return os.str();
}

}  // namespace kwalls
