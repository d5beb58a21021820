#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace rsnd {

// Exact arithmetic everywhere: solver paths never touch floating point.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Accepts "7", "-7" and "p/q" with q > 0 after sign normalization.
inline Rational parse_rational(const std::string& text) {
    auto bad = [&](const char* why) {
        throw std::invalid_argument("bad rational '" + text + "': " + why);
    };
    if (text.empty()) bad("empty");
    auto slash = text.find('/');
    auto check_int = [&](const std::string& part) {
        if (part.empty()) bad("empty component");
        std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (i == part.size()) bad("sign only");
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i]))) bad("not a number");
    };
    if (slash == std::string::npos) {
        check_int(text);
        return Rational(BigInt(text));
    }
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    check_int(num);
    check_int(den);
    BigInt d(den);
    if (d == 0) bad("zero denominator");
    return Rational(BigInt(num), d);
}

inline std::string format_rational(const Rational& r) {
    std::string num = numerator(r).str();
    if (denominator(r) == 1) return num;
    return num + "/" + denominator(r).str();
}

}  // namespace rsnd
