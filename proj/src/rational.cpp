#include "laq/rational.hpp"

#include <cctype>

#include "laq/errors.hpp"

namespace laq {

std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

namespace {

bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_integer_token(text)) throw ParseError("bad rational literal '" + text + "'");
        return Rational(Int(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den))
        throw ParseError("bad rational literal '" + text + "'");
    Int d(den);
    if (d == 0) throw ParseError("zero denominator in '" + text + "'");
    return Rational(Int(num), d);
}

}  // namespace laq
