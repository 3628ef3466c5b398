#include "qsw/exact.hpp"

namespace qsw {

BigInt parse_bigint(const std::string& text) {
    mpz_class z;
    if (z.set_str(text, 10) != 0)
        throw ParseError("invalid integer literal: '" + text + "'", 0);
    return z;
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_bigint(text));
    BigInt num = parse_bigint(text.substr(0, slash));
    BigInt den = parse_bigint(text.substr(slash + 1));
    return make_rational(num, den);
}

std::string to_string(const BigInt& x) { return x.get_str(); }

std::string to_string(const Rational& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

} // namespace qsw
