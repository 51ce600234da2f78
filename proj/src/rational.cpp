#include "cycontext/rational.hpp"

#include <cctype>

namespace cycontext {

namespace {

bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        const std::string num = text.substr(0, slash);
        const std::string den = text.substr(slash + 1);
        if (!is_integer_token(num) || !is_integer_token(den) || den[0] == '-' || den[0] == '+') {
            throw std::invalid_argument("malformed rational '" + text + "'");
        }
        boost::multiprecision::mpz_int n(num), d(den);
        if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
        return Rational(n, d);
    }
    const auto dot = text.find('.');
    if (dot != std::string::npos) {
        const std::string whole = text.substr(0, dot);
        const std::string frac = text.substr(dot + 1);
        const bool neg = !whole.empty() && whole[0] == '-';
        const std::string whole_digits =
            (whole.empty() || whole == "-" || whole == "+") ? "0"
                                                           : (neg || whole[0] == '+' ? whole.substr(1) : whole);
        if (!is_integer_token(whole_digits) || frac.empty() || !is_integer_token(frac) ||
            frac[0] == '-' || frac[0] == '+') {
            throw std::invalid_argument("malformed decimal '" + text + "'");
        }
        boost::multiprecision::mpz_int scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        boost::multiprecision::mpz_int n = boost::multiprecision::mpz_int(whole_digits) * scale +
                                           boost::multiprecision::mpz_int(frac);
        if (neg) n = -n;
        return Rational(n, scale);
    }
    if (!is_integer_token(text)) {
        throw std::invalid_argument("malformed rational '" + text + "'");
    }
    return Rational(boost::multiprecision::mpz_int(text));
}

std::string format_rational(const Rational& value) {
    return numerator(value).str() + "/" + denominator(value).str();
}

}  // namespace cycontext
