#include "fairdiv/rational.hpp"

#include <sstream>

#include "fairdiv/errors.hpp"

namespace fairdiv {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw InputError("empty rational literal");
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(BigInt(text));
        }
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den <= 0) throw InputError("rational denominator must be positive: " + text);
        return Rational(num, den);
    } catch (const std::exception&) {
        throw InputError("malformed rational literal: " + text);
    }
}

std::string format_rational(const Rational& value) {
    std::ostringstream out;
    out << numerator(value);
    if (denominator(value) != 1) out << '/' << denominator(value);
    return out.str();
}

}  // namespace fairdiv
