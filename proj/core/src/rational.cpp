#include "icosal/rational.hpp"

#include <stdexcept>

namespace icosal {

Rational parse_rational(std::string_view text) {
    auto fail = [&] { throw std::invalid_argument("bad rational literal: '" + std::string(text) + "'"); };
    std::size_t pos = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
    std::size_t num_begin = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == num_begin) fail();
    BigInt num(std::string(text.substr(0, pos)));
    BigInt den(1);
    if (pos < text.size()) {
        if (text[pos] != '/') fail();
        std::size_t den_begin = ++pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (pos == den_begin || pos != text.size()) fail();
        den = BigInt(std::string(text.substr(den_begin)));
        if (den == 0) fail();
    }
    return Rational(num, den);
}

std::string rational_str(const Rational& value) {
    std::string out = numerator(value).str();
    if (denominator(value) != 1) {
        out += '/';
        out += denominator(value).str();
    }
    return out;
}

double rational_to_double(const Rational& value) {
    return value.convert_to<double>();
}

} // namespace icosal
